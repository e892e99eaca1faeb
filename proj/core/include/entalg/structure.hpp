#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "entalg/errors.hpp"
#include "entalg/numeric.hpp"

namespace entalg {

// Result of the non-interacting merge when the structure does not provide a
// concrete value: the pair lives in the bin outside the carrier and its
// entropy is the sum of the component entropies by construction.
template <typename T>
struct FormalPair {
  T left;
  T right;
};

template <typename T>
using Merged = std::variant<T, FormalPair<T>>;

// An entropy-driven structure over carrier T.
//
//   entropy    [[.]] : T -> [0, inf]   (total)
//   circ       non-interacting merge; empty means "formal pair"
//   dotplus    interacting merge; empty for structures that only carry circ
//   scale      deterministic transformation operator; optional
//
// Values are immutable after construction and safe to share across threads.
template <typename T>
struct EntropyStructure {
  using Element = T;

  std::string name;
  std::function<double(const T&)> entropy;
  std::function<Merged<T>(const T&, const T&)> circ;    // empty => formal
  std::function<T(const T&, const T&)> dotplus;         // empty => not comparable
  std::function<T(const T&, const T&)> scale;           // empty => no ring structure
  std::function<bool(const T&)> is_zero;                // empty => entropy == 0
  std::function<bool(const T&)> is_deterministic;       // empty => no flagged systems
  std::function<T(std::mt19937_64&)> sample;            // empty => finite/exhaustive only
  std::function<std::string(const T&)> label;           // for reports

  // The designated deterministic element (the structure picks one member of
  // G_s when the set has several).
  std::optional<T> deterministic_element;

  // Negation when (G, dotplus) is a group; enables the group-side
  // Cauchy-Schwarz bound.
  std::function<T(const T&)> negation;

  // Entropy-invariant transformations flagged by the instance (section-4
  // checks use these).
  std::vector<T> invariant_elements;

  // Some carriers only admit a one-sided neutral deterministic set; the
  // neutrality check then covers the declared side and verifies idempotence
  // where the instance declares it.
  bool dotplus_left_neutral = true;
  bool dotplus_right_neutral = true;
  bool dotplus_idempotent = false;

  // Structures whose dotplus is defined only between designated classes
  // register the admissible pair sampler here; bound estimation and the
  // property suite then draw pairs from it.
  std::function<std::pair<T, T>(std::mt19937_64&)> sample_pair;

  // dotplus results that cannot be merged again (the merge leaves the
  // carrier) set this to false; composition-based laws are then skipped.
  bool dotplus_composable = true;

  // Bound on n-fold merges (carriers whose elements grow under dotplus).
  int max_nfold = std::numeric_limits<int>::max();

  Tolerance tol;

  bool has_circ() const { return static_cast<bool>(circ); }
  bool has_dotplus() const { return static_cast<bool>(dotplus); }
  bool has_scale() const { return static_cast<bool>(scale); }
  bool has_sampler() const { return static_cast<bool>(sample); }

  double entropy_of(const T& x) const { return entropy(x); }

  bool zero(const T& x) const {
    if (is_zero) return is_zero(x);
    return tol.is_zero(entropy(x), 1.0);
  }

  bool deterministic(const T& x) const {
    if (is_deterministic) return is_deterministic(x);
    return false;
  }

  std::string describe(const T& x) const {
    if (label) return label(x);
    return "<element>";
  }

  // [[x o y]]: concrete when the operator is, additive on the formal pair.
  double circ_entropy(const T& x, const T& y) const {
    if (!circ) return entropy(x) + entropy(y);
    const Merged<T> m = circ(x, y);
    if (std::holds_alternative<T>(m)) return entropy(std::get<T>(m));
    const auto& fp = std::get<FormalPair<T>>(m);
    return entropy(fp.left) + entropy(fp.right);
  }

  // [[x .+ y]]
  double dotplus_entropy(const T& x, const T& y) const {
    if (!dotplus) throw DomainError(name + ": dotplus operator not defined");
    return entropy(dotplus(x, y));
  }

  // m-fold x .+ x .+ ... .+ x (left fold; hemi-associative structures only).
  T nfold(const T& x, int m) const {
    if (m < 1) throw DomainError(name + ": nfold requires m >= 1");
    T acc = x;
    for (int i = 1; i < m; ++i) acc = dotplus(acc, x);
    return acc;
  }

  T draw(std::mt19937_64& rng) const {
    if (!sample) throw DomainError(name + ": no sampler registered");
    return sample(rng);
  }
};

}  // namespace entalg
