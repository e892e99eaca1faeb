#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "entalg/structure.hpp"

namespace entalg {

enum class CheckMode { kExhaustive, kSampled, kSkipped };

inline const char* to_string(CheckMode m) {
  switch (m) {
    case CheckMode::kExhaustive: return "exhaustive";
    case CheckMode::kSampled: return "sampled";
    case CheckMode::kSkipped: return "skipped";
  }
  return "?";
}

// Outcome of one structural law over a sample. A failing report always
// carries a reproducible counterexample.
struct AxiomReport {
  std::string law;
  bool pass = true;
  bool skipped = false;
  std::string skip_reason;
  std::size_t cases = 0;
  CheckMode mode = CheckMode::kSampled;
  std::vector<std::string> counterexample;  // element labels
  std::string detail;

  static AxiomReport skipped_report(std::string law, std::string reason) {
    AxiomReport r;
    r.law = std::move(law);
    r.skipped = true;
    r.mode = CheckMode::kSkipped;
    r.skip_reason = std::move(reason);
    return r;
  }

  void fail_with(std::vector<std::string> witness, std::string what) {
    if (pass) {
      pass = false;
      counterexample = std::move(witness);
      detail = std::move(what);
    }
  }
};

namespace detail {

inline std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace detail

template <typename T>
std::vector<T> draw_sample(const EntropyStructure<T>& s, std::size_t n, uint64_t seed) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = make_rng(seed, i);
    out.push_back(s.draw(rng));
  }
  return out;
}

// Additivity of the entropy across the non-interacting merge,
// [[x o y]] = [[x]] + [[y]], on all pairs of the sample.
template <typename T>
AxiomReport check_hemi_group(const EntropyStructure<T>& s, const std::vector<T>& sample,
                             CheckMode mode = CheckMode::kSampled) {
  AxiomReport r;
  r.law = "hemi_group_additivity";
  r.mode = mode;
  if (!s.has_circ()) {
    // Formal merge is additive by construction; record the trivial pass.
    r.cases = sample.size() * sample.size();
    r.detail = "formal pair merge; additivity holds by construction";
    return r;
  }
  for (const T& x : sample) {
    for (const T& y : sample) {
      ++r.cases;
      const double lhs = s.circ_entropy(x, y);
      const double rhs = s.entropy(x) + s.entropy(y);
      if (!s.tol.close(lhs, rhs)) {
        r.fail_with({s.describe(x), s.describe(y)},
                    "[[x o y]]=" + detail::num(lhs) + " vs [[x]]+[[y]]=" + detail::num(rhs));
        return r;
      }
    }
  }
  return r;
}

// Hemi-commutativity at the entropy level: [[x o y]] = [[y o x]].
template <typename T>
AxiomReport check_hemi_commutative(const EntropyStructure<T>& s, const std::vector<T>& sample,
                                   CheckMode mode = CheckMode::kSampled) {
  AxiomReport r;
  r.law = "hemi_commutativity";
  r.mode = mode;
  for (const T& x : sample) {
    for (const T& y : sample) {
      ++r.cases;
      const double lhs = s.circ_entropy(x, y);
      const double rhs = s.circ_entropy(y, x);
      if (!s.tol.close(lhs, rhs)) {
        r.fail_with({s.describe(x), s.describe(y)},
                    detail::num(lhs) + " vs " + detail::num(rhs));
        return r;
      }
    }
  }
  return r;
}

struct ComparableSign {
  int sign = 0;  // -1, +1, or 0 for undetermined
  bool undetermined = false;
};

// Sign of x -> [[x .+ x]] - 2 [[x]] over the sample. Throws NotComparable
// with the two witnesses when both strict signs occur.
template <typename T>
ComparableSign check_comparable(const EntropyStructure<T>& s, const std::vector<T>& sample) {
  if (!s.has_dotplus()) throw DomainError(s.name + ": dotplus operator not defined");
  double max_pos = 0.0, max_neg = 0.0;
  std::optional<T> pos_witness, neg_witness;
  for (const T& x : sample) {
    const double e = s.entropy(x);
    const double d = s.dotplus_entropy(x, x) - 2.0 * e;
    const double gap = s.tol.abs + s.tol.rel * std::max(1.0, std::fabs(2.0 * e));
    if (d > gap && d > max_pos) {
      max_pos = d;
      pos_witness = x;
    } else if (d < -gap && -d > max_neg) {
      max_neg = -d;
      neg_witness = x;
    }
  }
  if (pos_witness && neg_witness) {
    throw NotComparable(s.name + ": [[x .+ x]] - 2[[x]] changes sign",
                        s.describe(*pos_witness), s.describe(*neg_witness));
  }
  ComparableSign out;
  if (pos_witness) {
    out.sign = +1;
  } else if (neg_witness) {
    out.sign = -1;
  } else {
    out.sign = 0;
    out.undetermined = true;
  }
  return out;
}

// [[x .+ e]] = [[e .+ x]] = [[x]] for the designated deterministic elements.
// Structures that declare only right-neutral deterministic systems get the
// right identity plus idempotence when flagged.
template <typename T>
AxiomReport check_dotplus_neutral(const EntropyStructure<T>& s, const std::vector<T>& sample,
                                  CheckMode mode = CheckMode::kSampled) {
  AxiomReport r;
  r.law = "dotplus_neutral";
  r.mode = mode;
  if (!s.has_dotplus())
    return AxiomReport::skipped_report(r.law, "no dotplus operator");
  if (!s.deterministic_element)
    return AxiomReport::skipped_report(r.law, "no designated deterministic element");
  const T& eps = *s.deterministic_element;
  for (const T& x : sample) {
    ++r.cases;
    const double e = s.entropy(x);
    if (s.dotplus_right_neutral) {
      const double right = s.dotplus_entropy(x, eps);
      if (!s.tol.close(right, e)) {
        r.fail_with({s.describe(x), s.describe(eps)},
                    "[[x .+ eps]]=" + detail::num(right) + " vs [[x]]=" + detail::num(e));
        return r;
      }
    }
    if (s.dotplus_left_neutral) {
      const double left = s.dotplus_entropy(eps, x);
      if (!s.tol.close(left, e)) {
        r.fail_with({s.describe(eps), s.describe(x)},
                    "[[eps .+ x]]=" + detail::num(left) + " vs [[x]]=" + detail::num(e));
        return r;
      }
    }
    if (s.dotplus_idempotent) {
      const double twice = s.dotplus_entropy(x, x);
      if (!s.tol.close(twice, e)) {
        r.fail_with({s.describe(x)},
                    "[[x .+ x]]=" + detail::num(twice) + " vs [[x]]=" + detail::num(e));
        return r;
      }
    }
  }
  if (!s.dotplus_left_neutral)
    r.detail = "right identity only (left neutrality not declared by the instance)";
  else if (!s.dotplus_right_neutral)
    r.detail = "left identity only (right neutrality not declared by the instance)";
  return r;
}

// G_s subset of G_0 and entropy nonnegative, on the sample.
template <typename T>
AxiomReport check_zero_sets(const EntropyStructure<T>& s, const std::vector<T>& sample,
                            CheckMode mode = CheckMode::kSampled) {
  AxiomReport r;
  r.law = "deterministic_implies_zero";
  r.mode = mode;
  for (const T& x : sample) {
    ++r.cases;
    const double e = s.entropy(x);
    if (e < 0.0) {
      r.fail_with({s.describe(x)}, "negative entropy " + detail::num(e));
      return r;
    }
    if (s.deterministic(x) && !s.zero(x)) {
      r.fail_with({s.describe(x)}, "deterministic element with entropy " + detail::num(e));
      return r;
    }
  }
  if (s.deterministic_element) {
    ++r.cases;
    if (!s.zero(*s.deterministic_element)) {
      r.fail_with({s.describe(*s.deterministic_element)}, "designated element not in G_0");
    }
  }
  return r;
}

// Section-4 laws. Checks each part that the structure supports and reports
// the rest as skipped in `detail`.
template <typename T>
AxiomReport check_hemi_ring(const EntropyStructure<T>& s, const std::vector<T>& sample,
                            CheckMode mode = CheckMode::kSampled) {
  AxiomReport r;
  r.law = "hemi_ring";
  r.mode = mode;
  if (!s.has_scale())
    return AxiomReport::skipped_report(r.law, "no scale operator");
  if (!s.has_dotplus())
    return AxiomReport::skipped_report(r.law, "no dotplus operator");

  auto scale_circ_entropy = [&](const T& k, const T& x, const T& y) {
    // [[k (x o y)]]; with the formal merge, scaling distributes into the
    // components by construction.
    if (s.circ) {
      const Merged<T> m = s.circ(x, y);
      if (std::holds_alternative<T>(m)) return s.entropy(s.scale(k, std::get<T>(m)));
      const auto& fp = std::get<FormalPair<T>>(m);
      return s.entropy(s.scale(k, fp.left)) + s.entropy(s.scale(k, fp.right));
    }
    return s.entropy(s.scale(k, x)) + s.entropy(s.scale(k, y));
  };

  for (const T& k : sample) {
    for (const T& x : sample) {
      for (const T& y : sample) {
        ++r.cases;
        // (i) deterministic transformations distribute over circ.
        const double lhs = scale_circ_entropy(k, x, y);
        const double rhs = s.circ_entropy(s.scale(k, x), s.scale(k, y));
        if (!s.tol.close(lhs, rhs)) {
          r.fail_with({s.describe(k), s.describe(x), s.describe(y)},
                      "[[k(x o y)]]=" + detail::num(lhs) + " vs [[kx o ky]]=" + detail::num(rhs));
          return r;
        }
        // (iii) right hemi-distributivity.
        const double dl = s.entropy(s.scale(s.dotplus(x, y), k));
        const double dr = s.dotplus_entropy(s.scale(x, k), s.scale(y, k));
        if (!s.tol.close(dl, dr)) {
          r.fail_with({s.describe(x), s.describe(y), s.describe(k)},
                      "[[(x .+ y)k]]=" + detail::num(dl) + " vs [[xk .+ yk]]=" + detail::num(dr));
          return r;
        }
      }
    }
  }

  // (ii) deterministic systems absorb under scaling.
  if (s.deterministic_element) {
    const T& eps = *s.deterministic_element;
    for (const T& x : sample) {
      ++r.cases;
      if (!s.zero(s.scale(eps, x)) || !s.zero(s.scale(x, eps))) {
        r.fail_with({s.describe(eps), s.describe(x)}, "eps*x or x*eps left G_s");
        return r;
      }
    }
  }

  // (iv) flagged left entropy-invariant elements.
  for (const T& e : s.invariant_elements) {
    for (const T& x : sample) {
      for (const T& y : sample) {
        ++r.cases;
        const double lhs = s.dotplus_entropy(s.scale(e, x), s.scale(e, y));
        const double rhs = s.dotplus_entropy(x, y);
        if (!s.tol.close(lhs, rhs)) {
          r.fail_with({s.describe(e), s.describe(x), s.describe(y)},
                      "[[ex .+ ey]]=" + detail::num(lhs) + " vs [[x .+ y]]=" + detail::num(rhs));
          return r;
        }
      }
    }
  }
  return r;
}

struct RescalingReport {
  AxiomReport report;
  double c = std::numeric_limits<double>::quiet_NaN();  // global constant, if any
  std::vector<std::pair<std::string, double>> c_per_element;
};

// Left rescalings: [[x v]] = c_x [[v]]; scale invariance: c_x = c [[x]];
// with a left entropy-invariant e present, c = [[e]]^-1.
template <typename T>
RescalingReport check_rescaling(const EntropyStructure<T>& s, const std::vector<T>& sample,
                                CheckMode mode = CheckMode::kSampled) {
  RescalingReport out;
  out.report.law = "rescaling";
  out.report.mode = mode;
  if (!s.has_scale()) {
    out.report = AxiomReport::skipped_report(out.report.law, "no scale operator");
    return out;
  }
  double c_global = std::numeric_limits<double>::quiet_NaN();
  for (const T& x : sample) {
    double c_x = std::numeric_limits<double>::quiet_NaN();
    for (const T& v : sample) {
      const double ev = s.entropy(v);
      if (ev <= s.tol.abs) continue;
      ++out.report.cases;
      const double ratio = s.entropy(s.scale(x, v)) / ev;
      if (std::isnan(c_x)) {
        c_x = ratio;
      } else if (!s.tol.close(ratio, c_x, 1.0)) {
        out.report.fail_with({s.describe(x), s.describe(v)},
                             "c_x not constant: " + detail::num(ratio) + " vs " + detail::num(c_x));
        return out;
      }
    }
    if (std::isnan(c_x)) continue;
    out.c_per_element.emplace_back(s.describe(x), c_x);
    const double ex = s.entropy(x);
    if (ex > s.tol.abs) {
      const double c = c_x / ex;
      if (std::isnan(c_global)) {
        c_global = c;
      } else if (!s.tol.close(c, c_global, 1.0)) {
        out.report.fail_with({s.describe(x)},
                             "scale invariance violated: c=" + detail::num(c) + " vs " +
                                 detail::num(c_global));
        return out;
      }
    }
  }
  out.c = c_global;
  if (!s.invariant_elements.empty() && !std::isnan(c_global)) {
    const double ee = s.entropy(s.invariant_elements.front());
    ++out.report.cases;
    if (!s.tol.close(c_global * ee, 1.0, 1.0)) {
      out.report.fail_with({s.describe(s.invariant_elements.front())},
                           "c != [[e]]^-1: c*[[e]]=" + detail::num(c_global * ee));
    }
  }
  return out;
}

}  // namespace entalg
