#include "entalg/finite_structure.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

namespace entalg {

namespace {

void check_table(const std::vector<std::vector<int>>& t, std::size_t n, const char* name,
                 bool allow_formal) {
  if (t.size() != n) throw ConfigError(std::string(name) + ": row count != element count");
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n)
      throw ConfigError(std::string(name) + ": row " + std::to_string(i) + " has wrong length");
    for (int v : t[i]) {
      const bool ok = (v >= 0 && static_cast<std::size_t>(v) < n) ||
                      (allow_formal && v == FiniteStructure::kFormalCell);
      if (!ok)
        throw ConfigError(std::string(name) + ": cell out of range in row " + std::to_string(i));
    }
  }
}

}  // namespace

void FiniteStructure::validate() const {
  const std::size_t n = elements.size();
  if (n == 0) throw ConfigError("finite structure: empty carrier");
  if (entropy.size() != n) throw ConfigError("finite structure: entropy length mismatch");
  for (double e : entropy)
    if (e < 0.0) throw ConfigError("finite structure: negative entropy");
  if (has_circ_table) check_table(circ_table, n, "circ table", /*allow_formal=*/true);
  if (!dotplus_table.empty()) check_table(dotplus_table, n, "dotplus table", false);
  if (has_scale_table) check_table(scale_table, n, "scale table", false);
  for (int i : zero_indices)
    if (i < 0 || static_cast<std::size_t>(i) >= n)
      throw ConfigError("finite structure: zero index out of range");
  for (int i : deterministic_indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= n)
      throw ConfigError("finite structure: deterministic index out of range");
    if (std::find(zero_indices.begin(), zero_indices.end(), i) == zero_indices.end())
      throw ConfigError("finite structure: deterministic index " + std::to_string(i) +
                        " not in the zero set");
  }
}

EntropyStructure<int> FiniteStructure::view() const {
  validate();
  EntropyStructure<int> s;
  s.name = "finite";
  s.entropy = [this](const int& i) { return entropy.at(i); };
  if (has_circ_table) {
    s.circ = [this](const int& i, const int& j) -> Merged<int> {
      const int cell = circ_table[i][j];
      if (cell == kFormalCell) return FormalPair<int>{i, j};
      return cell;
    };
  }
  if (!dotplus_table.empty()) {
    s.dotplus = [this](const int& i, const int& j) { return dotplus_table[i][j]; };
  }
  if (has_scale_table) {
    s.scale = [this](const int& i, const int& j) { return scale_table[i][j]; };
  }
  s.is_zero = [this](const int& i) {
    return std::find(zero_indices.begin(), zero_indices.end(), i) != zero_indices.end();
  };
  s.is_deterministic = [this](const int& i) {
    return std::find(deterministic_indices.begin(), deterministic_indices.end(), i) !=
           deterministic_indices.end();
  };
  s.label = [this](const int& i) { return elements.at(i); };
  if (!deterministic_indices.empty()) s.deterministic_element = deterministic_indices.front();
  s.sample = [n = size()](std::mt19937_64& rng) {
    return static_cast<int>(rng() % n);
  };
  return s;
}

std::vector<int> FiniteStructure::all_indices() const {
  std::vector<int> idx(size());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

nlohmann::json FiniteStructure::to_json() const {
  nlohmann::json j;
  j["elements"] = elements;
  j["entropy"] = entropy;
  if (has_circ_table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : circ_table) {
      nlohmann::json r = nlohmann::json::array();
      for (int v : row) {
        if (v == kFormalCell)
          r.push_back("*");
        else
          r.push_back(v);
      }
      rows.push_back(std::move(r));
    }
    j["circ"] = std::move(rows);
  } else {
    j["circ"] = "formal";
  }
  j["dotplus"] = dotplus_table;
  if (has_scale_table)
    j["scale"] = scale_table;
  else
    j["scale"] = nullptr;
  j["zero"] = zero_indices;
  j["deterministic"] = deterministic_indices;
  return j;
}

FiniteStructure FiniteStructure::from_json(const nlohmann::json& j) {
  FiniteStructure fs;
  try {
    fs.elements = j.at("elements").get<std::vector<std::string>>();
    fs.entropy = j.at("entropy").get<std::vector<double>>();
    const auto& circ = j.at("circ");
    if (circ.is_string()) {
      if (circ.get<std::string>() != "formal")
        throw ConfigError("field 'circ': expected table or \"formal\"");
      fs.has_circ_table = false;
    } else {
      fs.has_circ_table = true;
      for (const auto& row : circ) {
        std::vector<int> r;
        for (const auto& cell : row) {
          if (cell.is_string()) {
            if (cell.get<std::string>() != "*")
              throw ConfigError("field 'circ': unknown marker cell");
            r.push_back(kFormalCell);
          } else {
            r.push_back(cell.get<int>());
          }
        }
        fs.circ_table.push_back(std::move(r));
      }
    }
    fs.dotplus_table = j.at("dotplus").get<std::vector<std::vector<int>>>();
    if (j.contains("scale") && !j.at("scale").is_null()) {
      fs.has_scale_table = true;
      fs.scale_table = j.at("scale").get<std::vector<std::vector<int>>>();
    }
    fs.zero_indices = j.at("zero").get<std::vector<int>>();
    fs.deterministic_indices = j.at("deterministic").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("finite structure: ") + e.what());
  }
  fs.validate();
  return fs;
}

}  // namespace entalg
