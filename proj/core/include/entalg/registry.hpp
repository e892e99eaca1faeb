#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "entalg/comparison.hpp"
#include "entalg/profile.hpp"

namespace entalg {

struct CheckOptions {
  std::size_t n = 10000;
  uint64_t seed = kDefaultSeed;
};

struct CompareOptions {
  std::optional<double> a;   // affine coefficient; defaults to the canonical one
  bool exploration = false;  // permit a outside Xi
};

// Type-erased catalog entry: a constructed structure with its registered
// profile and a JSON element codec, addressable from the command layer.
class Instance {
 public:
  virtual ~Instance() = default;
  virtual const std::string& id() const = 0;
  virtual void set_tolerance(double rel) = 0;
  virtual bool comparable() const = 0;
  virtual bool has_registered_profile() const = 0;
  virtual ComparisonProfile registered_profile() const = 0;
  virtual ComparisonProfile estimated_profile(const BoundsOptions& opt) const = 0;
  // Construction-time axiom suite (additivity, commutativity, zero sets,
  // comparability sign, neutral elements; ring laws when declared).
  virtual std::vector<AxiomReport> self_check(const CheckOptions& opt) const = 0;
  virtual std::vector<AxiomReport> property_suite(const VerifyOptions& opt) const = 0;
  virtual nlohmann::json compare_pairs(const nlohmann::json& pairs,
                                       const CompareOptions& opt) const = 0;
};

// Constructs a catalog instance from {"instance": name, ...parameters}.
std::unique_ptr<Instance> make_instance(const nlohmann::json& spec);

std::vector<std::string> instance_names();

nlohmann::json axiom_reports_to_json(const std::vector<AxiomReport>& reports);

}  // namespace entalg
