#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "entalg/structure.hpp"

namespace entalg {

// Explicit finite carrier with full operation tables; every check over it is
// exhaustive and deterministic. In a circ table the marker cell kFormalCell
// stands for the formal pair (the "*" cell of the JSON schema).
struct FiniteStructure {
  static constexpr int kFormalCell = -1;

  std::vector<std::string> elements;
  std::vector<double> entropy;
  bool has_circ_table = false;  // false => formal merge everywhere
  std::vector<std::vector<int>> circ_table;
  std::vector<std::vector<int>> dotplus_table;
  bool has_scale_table = false;
  std::vector<std::vector<int>> scale_table;
  std::vector<int> zero_indices;
  std::vector<int> deterministic_indices;

  std::size_t size() const { return elements.size(); }

  // Throws ConfigError when table dimensions or index sets are inconsistent.
  void validate() const;

  // View as an entropy structure over element indices. The view references
  // this object; keep it alive.
  EntropyStructure<int> view() const;

  std::vector<int> all_indices() const;

  nlohmann::json to_json() const;
  static FiniteStructure from_json(const nlohmann::json& j);
};

}  // namespace entalg
