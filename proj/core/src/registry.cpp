#include "entalg/registry.hpp"

#include <functional>

#include <nlohmann/json.hpp>

#include "entalg/instances/euclidean.hpp"
#include "entalg/instances/lp.hpp"
#include "entalg/instances/mutual_information.hpp"
#include "entalg/instances/poisson.hpp"
#include "entalg/instances/product_space.hpp"
#include "entalg/instances/real_axis.hpp"
#include "entalg/instances/sets.hpp"
#include "entalg/instances/shannon.hpp"
#include "entalg/instances/tichonov.hpp"
#include "entalg/instances/tropical.hpp"
#include "entalg/instances/tsallis.hpp"
#include "entalg/instances/variogram.hpp"

namespace entalg {

namespace {

using nlohmann::json;
using namespace instances;

json report_to_json(const AxiomReport& r) {
  json j;
  j["law"] = r.law;
  if (r.skipped) {
    j["skipped"] = r.skip_reason;
    return j;
  }
  j["pass"] = r.pass;
  j["cases"] = r.cases;
  j["mode"] = to_string(r.mode);
  if (!r.pass) {
    j["counterexample"] = r.counterexample;
    j["detail"] = r.detail;
  } else if (!r.detail.empty()) {
    j["detail"] = r.detail;
  }
  return j;
}

template <typename T>
class TypedInstance final : public Instance {
 public:
  TypedInstance(std::string id, EntropyStructure<T> s, std::optional<ComparisonProfile> profile,
                std::function<T(const json&)> parse, std::function<json(const T&)> dump,
                int undetermined_sign = +1, bool ring_laws_declared = false)
      : id_(std::move(id)),
        s_(std::move(s)),
        profile_(profile),
        parse_(std::move(parse)),
        dump_(std::move(dump)),
        undetermined_sign_(undetermined_sign),
        ring_laws_declared_(ring_laws_declared) {}

  const std::string& id() const override { return id_; }
  void set_tolerance(double rel) override { s_.tol.rel = rel; }
  bool comparable() const override { return s_.has_dotplus(); }
  bool has_registered_profile() const override { return profile_.has_value(); }

  ComparisonProfile registered_profile() const override {
    if (!profile_) throw DomainError(id_ + ": no registered profile");
    return *profile_;
  }

  ComparisonProfile estimated_profile(const BoundsOptions& opt) const override {
    return entalg::estimate_profile(s_, opt, undetermined_sign_);
  }

  std::vector<AxiomReport> self_check(const CheckOptions& opt) const override {
    std::vector<AxiomReport> out;
    const std::vector<T> sample = draw_sample(s_, std::min<std::size_t>(opt.n, 200), opt.seed);
    out.push_back(check_hemi_group(s_, sample));
    out.push_back(check_hemi_commutative(s_, sample));
    out.push_back(check_zero_sets(s_, sample));
    if (s_.has_dotplus()) {
      AxiomReport cmp;
      cmp.law = "comparable_sign";
      cmp.mode = CheckMode::kSampled;
      const std::vector<T> big = draw_sample(s_, opt.n, opt.seed + 1);
      cmp.cases = big.size();
      try {
        const ComparableSign cs = check_comparable(s_, big);
        cmp.detail = cs.undetermined ? "undetermined (resolved " +
                                           std::to_string(undetermined_sign_) + ")"
                                     : std::to_string(cs.sign);
      } catch (const NotComparable& e) {
        cmp.fail_with({e.positive_witness, e.negative_witness}, e.what());
      }
      out.push_back(cmp);
      out.push_back(check_dotplus_neutral(s_, draw_sample(s_, opt.n, opt.seed + 2)));
    } else {
      out.push_back(
          AxiomReport::skipped_report("comparable_sign", "no dotplus operator"));
      out.push_back(AxiomReport::skipped_report("dotplus_neutral", "no dotplus operator"));
    }
    if (s_.has_scale() && ring_laws_declared_) {
      const std::vector<T> small = draw_sample(s_, 24, opt.seed + 3);
      out.push_back(check_hemi_ring(s_, small));
      out.push_back(check_rescaling(s_, small).report);
    }
    return out;
  }

  std::vector<AxiomReport> property_suite(const VerifyOptions& opt) const override {
    if (!comparable()) throw DomainError(id_ + ": not comparable (no dotplus)");
    return verify_scalar_properties(s_, effective_profile(), opt);
  }

  json compare_pairs(const json& pairs, const CompareOptions& opt) const override {
    if (!comparable()) throw DomainError(id_ + ": not comparable (no dotplus)");
    const ComparisonProfile prof = effective_profile();
    json out = json::array();
    for (const auto& pr : pairs) {
      if (!pr.is_array() || pr.size() != 2)
        throw ConfigError(id_ + ": each pair must be a two-element array");
      const T x = parse_(pr[0]);
      const T y = parse_(pr[1]);
      json row;
      row["x"] = dump_(x);
      row["y"] = dump_(y);
      row["entropy_x"] = s_.entropy(x);
      row["entropy_y"] = s_.entropy(y);
      row["entropy_dotplus"] = s_.dotplus_entropy(x, y);
      row["entropy_circ"] = s_.circ_entropy(x, y);
      row["scalar_a"] = scalar_a(s_, prof, x, y);
      const double a_used = opt.a.value_or(
          prof.canonical_defined() ? prof.a_sigma : detail::pick_test_a(prof));
      bool outside = false;
      row["a"] = a_used;
      row["rho"] = rho_checked(s_, prof, a_used, x, y, opt.exploration, &outside);
      if (outside) row["a_outside_xi"] = true;
      if (prof.canonical_defined()) {
        row["scalar"] = canonical_scalar(s_, prof, x, y);
        row["scalar_2"] = canonical_scalar(s_, prof, x, y, ScalarVariant::kHalf);
        row["rho_ca"] = canonical_rho(s_, prof, x, y);
      } else {
        row["scalar"] = nullptr;
        row["scalar_2"] = nullptr;
        row["rho_ca"] = nullptr;
      }
      if (std::isinf(prof.xi.lo) || std::isinf(prof.xi.hi))
        row["rho_infty"] = rho_infty(s_, prof, x, y);
      row["classification"] = to_string(classify_correlation(s_, prof, x, y));
      try {
        row["r"] = correlation_r(s_, prof, x, y);
      } catch (const Error&) {
        row["r"] = nullptr;
      }
      try {
        row["pearson"] = pearson(s_, prof, x, y);
      } catch (const Error&) {
        row["pearson"] = nullptr;
      }
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  ComparisonProfile effective_profile() const {
    if (profile_) return *profile_;
    BoundsOptions opt;
    return entalg::estimate_profile(s_, opt, undetermined_sign_);
  }

  std::string id_;
  EntropyStructure<T> s_;
  std::optional<ComparisonProfile> profile_;
  std::function<T(const json&)> parse_;
  std::function<json(const T&)> dump_;
  int undetermined_sign_;
  bool ring_laws_declared_;
};

Vec parse_vec(const json& j) {
  if (!j.is_array()) throw ConfigError("expected a numeric array element");
  return j.get<Vec>();
}

json dump_vec(const Vec& v) { return json(v); }

std::unique_ptr<Instance> wrap_vec(const std::string& id, EntropyStructure<Vec> s,
                                   std::optional<ComparisonProfile> p, int undet = +1,
                                   bool ring = false) {
  return std::make_unique<TypedInstance<Vec>>(id, std::move(s), p, parse_vec, dump_vec, undet,
                                              ring);
}

AxisDomain domain_from(const json& j) {
  const std::string d = j.value("domain", "full");
  if (d == "full") return AxisDomain::kFull;
  if (d == "nonneg") return AxisDomain::kNonneg;
  throw ConfigError("real_axis: domain must be 'full' or 'nonneg'");
}

AxisPlus plus_from(const json& j) {
  const std::string p = j.value("plus", "add");
  if (p == "add") return AxisPlus::kAdd;
  if (p == "max") return AxisPlus::kMax;
  if (p == "signed_max") return AxisPlus::kSignedMax;
  throw ConfigError("real_axis: plus must be 'add', 'max' or 'signed_max'");
}

}  // namespace

std::unique_ptr<Instance> make_instance(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("instance"))
    throw ConfigError("instance spec: missing 'instance' field");
  const std::string name = spec.at("instance").get<std::string>();

  if (name == "euclidean") {
    auto inst = make_euclidean(spec.value("d", 2));
    return wrap_vec(name, std::move(inst.s), inst.profile);
  }
  if (name == "lp_space") {
    auto inst = make_lp_space(spec.value("d", 2), spec.value("p", 2.0));
    return wrap_vec(name, std::move(inst.s), inst.profile);
  }
  if (name == "variogram") {
    auto inst = make_power_variogram(spec.value("d", 2), spec.value("beta", 1.0));
    return wrap_vec(name, std::move(inst.s), inst.profile);
  }
  if (name == "finite_measure_sets") {
    auto inst = make_finite_measure_sets(spec.at("weights").get<Vec>());
    const std::size_t n = inst.weights.size();
    auto parse = [n](const json& j) {
      SubsetMask m = 0;
      for (const auto& v : j) {
        const int idx = v.get<int>();
        if (idx < 0 || static_cast<std::size_t>(idx) >= n)
          throw ConfigError("finite_measure_sets: element index out of range");
        m |= SubsetMask{1} << idx;
      }
      return m;
    };
    auto dump = [](const SubsetMask& m) {
      json out = json::array();
      for (int i = 0; i < 32; ++i)
        if (m & (SubsetMask{1} << i)) out.push_back(i);
      return out;
    };
    return std::make_unique<TypedInstance<SubsetMask>>(name, std::move(inst.s), inst.profile,
                                                       parse, dump);
  }
  if (name == "real_axis" || name == "gaussian_scale" || name == "frechet_scale" ||
      name == "cauchy_scale") {
    RealAxis inst = name == "gaussian_scale" ? make_gaussian_scale()
                    : name == "frechet_scale"
                        ? make_frechet_scale(spec.value("alpha", 1.0))
                    : name == "cauchy_scale"
                        ? make_cauchy_scale()
                        : make_real_axis(spec.value("alpha", 2.0), domain_from(spec),
                                         plus_from(spec));
    const bool ring = !(inst.plus == AxisPlus::kMax && inst.domain == AxisDomain::kFull);
    const int undet = inst.plus == AxisPlus::kAdd && inst.alpha == 1.0 &&
                              inst.domain == AxisDomain::kFull
                          ? -1
                          : +1;
    auto parse = [](const json& j) { return j.get<double>(); };
    auto dump = [](const double& x) { return json(x); };
    return std::make_unique<TypedInstance<double>>(name, std::move(inst.s), inst.profile, parse,
                                                   dump, undet, ring);
  }
  if (name == "mutual_information") {
    MutualInformation inst;
    if (spec.contains("joint")) {
      JointTable jt{spec.at("joint").get<std::vector<Vec>>()};
      inst = make_mutual_information(jt);
    } else {
      inst = make_mutual_information_space(spec.at("weights").get<Vec>());
    }
    auto parse = [n = inst.atom_weights.size()](const json& j) {
      auto z = j.get<std::vector<int>>();
      if (z.size() != n) throw ConfigError("mutual_information: labelling length mismatch");
      return z;
    };
    auto dump = [](const std::vector<int>& z) { return json(z); };
    return std::make_unique<TypedInstance<std::vector<int>>>(name, std::move(inst.s),
                                                             inst.profile, parse, dump);
  }
  if (name == "shannon_concat") {
    auto inst = make_shannon_concat();
    return wrap_vec(name, std::move(inst.s), std::nullopt);
  }
  if (name == "dependable_shannon" || name == "kl_structure") {
    const std::size_t m = spec.value("alphabet", 3);
    auto parse = [m](const json& j) {
      DependablePair e{j.at("p").get<Vec>(), j.at("q").get<Vec>()};
      if (e.p.size() != m) throw ConfigError("dependable pair: alphabet size mismatch");
      e.validate();
      return e;
    };
    auto dump = [](const DependablePair& e) { return json{{"p", e.p}, {"q", e.q}}; };
    if (name == "dependable_shannon") {
      auto inst = make_dependable_shannon(m);
      return std::make_unique<TypedInstance<DependablePair>>(name, std::move(inst.s),
                                                             inst.profile, parse, dump, -1);
    }
    auto inst = make_kl_structure(m);
    return std::make_unique<TypedInstance<DependablePair>>(name, std::move(inst.s), inst.profile,
                                                           parse, dump, +1);
  }
  if (name == "tsallis" || name == "sharma_mittal") {
    auto inst = make_power_entropy(spec.value("q", 2.0), spec.value("k", 1.0),
                                   name == "sharma_mittal");
    return wrap_vec(name, std::move(inst.s), inst.profile, inst.q > 1.0 ? -1 : +1);
  }
  if (name == "poisson_bivariate") {
    const auto mode = spec.value("mode", "intensity") == std::string("shannon")
                          ? PoissonEntropyMode::kShannon
                          : PoissonEntropyMode::kIntensity;
    auto inst = make_poisson_bivariate(spec.value("a", 1.0), spec.value("b", 1.0), mode);
    auto parse = [](const json& j) { return PoissonSystem{{j.get<double>()}}; };
    auto dump = [](const PoissonSystem& x) {
      if (x.simple()) return json(x.lams[0]);
      return json(x.lams);
    };
    return std::make_unique<TypedInstance<PoissonSystem>>(name, std::move(inst.s), inst.profile,
                                                          parse, dump, -1);
  }
  if (name == "tropical") {
    const auto mode =
        spec.value("mode", "sup") == std::string("inf") ? TropicalMode::kInf : TropicalMode::kSup;
    auto inst = make_tropical(mode, spec.value("grid", 8));
    return wrap_vec(name, std::move(inst.s), inst.profile);
  }
  if (name == "product_space") {
    auto inst = make_product_space(spec.at("weights").get<Vec>());
    const std::size_t n = inst.atom_weights.size();
    auto parse = [n](const json& j) {
      ProductSpace::Cylinder c;
      for (const auto& ev : j) {
        uint32_t mask = 0;
        for (const auto& v : ev) {
          const int idx = v.get<int>();
          if (idx < 0 || static_cast<std::size_t>(idx) >= n)
            throw ConfigError("product_space: atom index out of range");
          mask |= uint32_t{1} << idx;
        }
        c.push_back(mask);
      }
      if (c.empty()) throw ConfigError("product_space: empty cylinder");
      return c;
    };
    auto dump = [](const ProductSpace::Cylinder& c) {
      json out = json::array();
      for (uint32_t mask : c) {
        json ev = json::array();
        for (int i = 0; i < 32; ++i)
          if (mask & (uint32_t{1} << i)) ev.push_back(i);
        out.push_back(std::move(ev));
      }
      return out;
    };
    return std::make_unique<TypedInstance<ProductSpace::Cylinder>>(
        name, std::move(inst.s), std::nullopt, parse, dump);
  }
  if (name == "tichonov") {
    auto inst = make_tichonov_model(spec.at("X").get<std::vector<Vec>>(), spec.at("y").get<Vec>());
    return wrap_vec(name, std::move(inst.s), inst.profile);
  }
  throw ConfigError("unknown instance '" + name + "'");
}

std::vector<std::string> instance_names() {
  return {"euclidean",      "lp_space",        "variogram",       "finite_measure_sets",
          "real_axis",      "gaussian_scale",  "frechet_scale",   "cauchy_scale",
          "mutual_information", "shannon_concat", "dependable_shannon", "kl_structure",
          "tsallis",        "sharma_mittal",   "poisson_bivariate", "tropical",
          "product_space",  "tichonov"};
}

nlohmann::json axiom_reports_to_json(const std::vector<AxiomReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

}  // namespace entalg
