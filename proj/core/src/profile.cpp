#include "entalg/profile.hpp"

#include <nlohmann/json.hpp>

namespace entalg {

XiInterval xi_interval(double m_G, double M_G) {
  if (!(m_G >= 0.0 && m_G <= 1.0)) throw RangeError("xi_interval: m_G outside [0,1]");
  if (!(M_G >= 1.0)) throw RangeError("xi_interval: M_G outside [1,inf]");
  XiInterval xi;
  if (M_G == 1.0) {
    xi.lo = -kInf;
    xi.lo_open = true;
  } else if (std::isinf(M_G)) {
    xi.lo = 0.0;
    xi.lo_open = false;
  } else {
    xi.lo = 1.0 / (1.0 - M_G);
    xi.lo_open = false;
  }
  if (m_G == 1.0) {
    xi.hi = kInf;
    xi.hi_open = true;
  } else {
    xi.hi = 1.0 / (1.0 - m_G);
    xi.hi_open = false;
  }
  return xi;
}

double canonical_coefficient(int sign, double m_G, double M_G) {
  if (sign >= 0) {
    if (M_G == 1.0) return -kInf;
    if (std::isinf(M_G)) return 0.0;
    return 1.0 / (1.0 - M_G);
  }
  if (m_G == 1.0) return kInf;
  return 1.0 / (1.0 - m_G);
}

ComparisonProfile make_profile(double m_G, double M_G, int sign, bool undetermined,
                               std::optional<double> e_entropy) {
  ComparisonProfile p;
  p.m_G = m_G;
  p.M_G = M_G;
  p.xi = xi_interval(m_G, M_G);
  p.sign = sign >= 0 ? +1 : -1;
  p.sign_was_undetermined = undetermined;
  p.a_sigma = canonical_coefficient(p.sign, m_G, M_G);
  p.e_entropy = e_entropy;
  return p;
}

namespace {

nlohmann::json num_or_str(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : "-inf";
}

double parse_num(const nlohmann::json& j, const char* field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw ConfigError(std::string("profile: bad numeric field '") + field + "'");
}

}  // namespace

nlohmann::json to_json(const ComparisonProfile& p) {
  nlohmann::json j;
  j["m_G"] = num_or_str(p.m_G);
  j["M_G"] = num_or_str(p.M_G);
  j["xi"] = nlohmann::json::array({num_or_str(p.xi.lo), num_or_str(p.xi.hi),
                                   p.xi.lo_open ? "open" : "closed",
                                   p.xi.hi_open ? "open" : "closed"});
  j["sign"] = p.sign;
  if (p.sign_was_undetermined) j["sign_undetermined"] = true;
  j["a_sigma"] = num_or_str(p.a_sigma);
  if (p.e_entropy) j["e_entropy"] = *p.e_entropy;
  if (p.provenance == Provenance::kClosedForm) {
    j["provenance"] = "closed_form";
  } else {
    j["provenance"] = {{"estimated", {{"n", p.sample_size}, {"seed", p.seed}}}};
  }
  return j;
}

ComparisonProfile profile_from_json(const nlohmann::json& j) {
  ComparisonProfile p;
  p.m_G = parse_num(j.at("m_G"), "m_G");
  p.M_G = parse_num(j.at("M_G"), "M_G");
  p.sign = j.at("sign").get<int>() >= 0 ? +1 : -1;
  p.sign_was_undetermined = j.value("sign_undetermined", false);
  p.xi = xi_interval(p.m_G, p.M_G);
  p.a_sigma = parse_num(j.at("a_sigma"), "a_sigma");
  if (j.contains("e_entropy")) p.e_entropy = j.at("e_entropy").get<double>();
  if (j.contains("provenance") && j.at("provenance").is_object()) {
    p.provenance = Provenance::kEstimated;
    const auto& est = j.at("provenance").at("estimated");
    p.sample_size = est.value("n", std::size_t{0});
    p.seed = est.value("seed", uint64_t{0});
  }
  return p;
}

}  // namespace entalg
