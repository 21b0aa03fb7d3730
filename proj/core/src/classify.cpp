#include <stdexcept>

#include "kuniv/classify.hpp"
#include "kuniv/error.hpp"

namespace kuniv {

namespace {

Verdict fire(std::string_view rule_id, Tri status, std::string explanation) {
  const RuleEntry* rule = find_rule(rule_id);
  if (rule == nullptr) throw std::logic_error("rule missing from rulebook");
  return {status, std::string(rule->id), std::string(rule->citation), std::move(explanation)};
}

Verdict unknown(std::string explanation) {
  return {Tri::Unknown, {}, {}, std::move(explanation)};
}

bool finite_complement(const IndexSupport& s) {
  return std::holds_alternative<FullIndexSet>(s) || std::holds_alternative<FiniteComplement>(s);
}

// First unmet hypothesis of the weighted-polynomial characteristic rule, or
// empty when all hold.
std::string wp_missing_hypothesis(const KernelSpec& kernel, const WeightedPolynomial& wp) {
  const auto& w = wp.weight;
  if (!w.positive_everywhere) return "the weight is not declared positive everywhere";
  if (w.log_integral_diverges != Tri::Yes) {
    return "divergence of the weight's log-integral is not certified";
  }
  if (w.bounded_inverse_poly_approx != Tri::Yes) {
    return "bounded polynomial approximation of 1/omega is not certified";
  }
  if (!w.even_nonincreasing) return "the weight is not declared even and non-increasing";
  if (!kernel.summable_feature_bounds()) {
    return "summable sup bounds for sqrt(alpha_n) omega(x) x^n are not certified";
  }
  if (!finite_complement(wp.coeffs.support())) {
    return "Z+ minus supp alpha is not certified finite";
  }
  return {};
}

Verdict base_universal(const KernelSpec& kernel) {
  if (const auto* ti = kernel.get_if<TranslationInvariant>()) {
    const auto& s = ti->spectral.support();
    if (s.has_finite_accumulation_point == Tri::Yes) {
      return fire(rules::kAccumulationPointUniqueness, Tri::Yes,
                  "supp nu has a finite accumulation point, so it is a uniqueness set");
    }
    if (std::holds_alternative<FiniteSet>(s.kind)) {
      return fire(rules::kFiniteSupportSpan, Tri::No,
                  "supp nu is finite, so the sections span a finite-dimensional space");
    }
    if (s.limsup_n_over_lambda_infinite == Tri::Yes) {
      return fire(rules::kLimsupRedheffer, Tri::Yes,
                  "supp nu enumerates as lambda_n with limsup n/|lambda_n| = +inf");
    }
    return unknown(
        "supp nu has no certified finite accumulation point and limsup n/|lambda_n| = +inf "
        "is not certified; the Beurling-Malliavin density is not computed");
  }
  if (const auto* p = kernel.get_if<Polynomial>()) {
    if (!p->coeffs.entire()) {
      return unknown("the generating series of alpha is not certified entire");
    }
    if (p->coeffs(0) == 0.0) {
      return fire(rules::kMuntzConstantTerm, Tri::No, "alpha_0 = 0");
    }
    const Tri even = even_reciprocal_sum_diverges(p->coeffs.support());
    const Tri odd = odd_reciprocal_sum_diverges(p->coeffs.support());
    if (even == Tri::Yes && odd == Tri::Yes) {
      return fire(rules::kMuntzParity, Tri::Yes,
                  "alpha_0 > 0 and sum 1/n diverges over both parities of supp alpha");
    }
    if (even == Tri::No || odd == Tri::No) {
      return fire(rules::kMuntzParity, Tri::No,
                  std::string("sum 1/n converges over the ") + (even == Tri::No ? "even" : "odd") +
                      " members of supp alpha");
    }
    return unknown("divergence of the parity reciprocal sums cannot be decided from the support");
  }
  return unknown("no rule decides universality of this kernel class directly");
}

Verdict base_characteristic(const KernelSpec& kernel) {
  if (const auto* ti = kernel.get_if<TranslationInvariant>()) {
    if (ti->spectral.support().is_full_space()) {
      return fire(rules::kTiCharFullSupport, Tri::Yes, "supp nu = R^d");
    }
    return fire(rules::kTiCharProperSupport, Tri::No, "supp nu is a proper subset of R^d");
  }
  if (const auto* wp = kernel.get_if<WeightedPolynomial>()) {
    const auto missing = wp_missing_hypothesis(kernel, *wp);
    if (missing.empty()) {
      return fire(rules::kWpFiniteComplement, Tri::Yes,
                  "Pollard weight, even and non-increasing, and Z+ minus supp alpha is finite");
    }
    return unknown(missing);
  }
  if (kernel.get_if<Polynomial>() != nullptr) {
    return unknown("polynomial kernel sections do not vanish at infinity");
  }
  return unknown("no rule decides the characteristic property of this kernel class directly");
}

Verdict base_c0(const KernelSpec& kernel) {
  if (const auto* ti = kernel.get_if<TranslationInvariant>()) {
    if (ti->spectral.support().is_full_space()) {
      return fire(rules::kTiC0FullSupport, Tri::Yes, "supp nu = R^d");
    }
    return fire(rules::kTiC0ProperSupport, Tri::No, "supp nu is a proper subset of R^d");
  }
  if (const auto* wp = kernel.get_if<WeightedPolynomial>()) {
    auto missing = wp_missing_hypothesis(kernel, *wp);
    if (missing.empty() && wp->coeffs(0) == 0.0) missing = "alpha_0 = 0";
    if (missing.empty()) {
      return fire(rules::kWpFiniteComplementC0, Tri::Yes,
                  "Pollard weight, even and non-increasing, alpha_0 > 0, and Z+ minus "
                  "supp alpha is finite");
    }
    return unknown(missing);
  }
  if (kernel.get_if<Polynomial>() != nullptr) {
    return unknown("polynomial kernel sections do not vanish at infinity");
  }
  return unknown("no rule decides C0-universality of this kernel class directly");
}

Verdict implied_by_c0(Verdict base, const Verdict& c0, std::string_view upgrade_rule,
                      const char* property) {
  if (c0.status != Tri::Yes) return base;
  if (base.status == Tri::No) {
    throw std::logic_error(std::string("rulebook contradiction: C0-universal yet not ") +
                           property);
  }
  if (base.status == Tri::Unknown) {
    return fire(upgrade_rule, Tri::Yes, "the kernel is C0-universal (" + c0.rule_id + ")");
  }
  return base;
}

}  // namespace

Tri even_reciprocal_sum_diverges(const IndexSupport& support) {
  if (finite_complement(support) || std::holds_alternative<EvenOnly>(support)) return Tri::Yes;
  return Tri::No;  // odd-only, explicit finite, lacunary
}

Tri odd_reciprocal_sum_diverges(const IndexSupport& support) {
  if (finite_complement(support) || std::holds_alternative<OddOnly>(support)) return Tri::Yes;
  return Tri::No;
}

Verdict classify_c0_universal(const KernelSpec& kernel) { return base_c0(kernel); }

Verdict classify_characteristic(const KernelSpec& kernel) {
  return implied_by_c0(base_characteristic(kernel), base_c0(kernel),
                       rules::kC0ImpliesCharacteristic, "characteristic");
}

Verdict classify_universal(const KernelSpec& kernel) {
  return implied_by_c0(base_universal(kernel), base_c0(kernel), rules::kC0ImpliesUniversal,
                       "universal");
}

VerdictTriple classify_all(const KernelSpec& kernel) {
  return {classify_universal(kernel), classify_characteristic(kernel),
          classify_c0_universal(kernel)};
}

MuntzGapReport muntz_gap_analysis(const CoefficientSequence& coeffs, std::size_t horizon) {
  if (horizon < 1) {
    throw Error(ErrorCode::InvalidValue, "classify", "Muntz horizon must be >= 1");
  }
  MuntzGapReport r;
  for (std::size_t n = 1; n <= horizon; ++n) {
    if (!contains(coeffs.support(), n)) continue;
    (n % 2 == 0 ? r.even_partial_sum : r.odd_partial_sum) += 1.0 / static_cast<double>(n);
  }
  r.even_diverges = even_reciprocal_sum_diverges(coeffs.support());
  r.odd_diverges = odd_reciprocal_sum_diverges(coeffs.support());
  return r;
}

}  // namespace kuniv
