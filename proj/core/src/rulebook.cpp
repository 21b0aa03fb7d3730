#include <algorithm>
#include <array>

#include "kuniv/classify.hpp"

namespace kuniv {

namespace {

constexpr std::array kRulebook = {
    RuleEntry{rules::kAccumulationPointUniqueness, Property::Universal, "yes",
              "Uniqueness sets of entire functions: a spectral support with a finite "
              "accumulation point (in particular R^d) is a uniqueness set, so the "
              "completeness radius is infinite and the translation-invariant kernel is "
              "universal."},
    RuleEntry{rules::kLimsupRedheffer, Property::Universal, "yes",
              "Redheffer's completeness-radius lemma: limsup n/|lambda_n| = +inf forces "
              "R(nu) = +inf, and a translation-invariant kernel is universal iff "
              "R(nu) = +inf."},
    RuleEntry{rules::kFiniteSupportSpan, Property::Universal, "no",
              "Finite spectral support: every section lies in the finite-dimensional span of "
              "{cos(t x), sin(t x) : t in supp nu}, which is not dense in C(Z) for infinite "
              "compact Z.",
              true},
    RuleEntry{rules::kTiCharFullSupport, Property::Characteristic, "yes",
              "Spectral characterization of characteristic translation-invariant kernels: "
              "characteristic iff supp nu = R^d."},
    RuleEntry{rules::kTiCharProperSupport, Property::Characteristic, "no",
              "Spectral characterization of characteristic translation-invariant kernels: "
              "a proper support leaves an open gap carrying a bump whose inverse Fourier "
              "transform is a nonzero zero-mass measure annihilating every section."},
    RuleEntry{rules::kTiC0FullSupport, Property::C0Universal, "yes",
              "C0-universality of translation-invariant kernels: C0-universal iff "
              "supp nu = R^d."},
    RuleEntry{rules::kTiC0ProperSupport, Property::C0Universal, "no",
              "C0-universality of translation-invariant kernels: C0-universal iff "
              "supp nu = R^d; a C0-universal kernel is characteristic."},
    RuleEntry{rules::kMuntzParity, Property::Universal, "yes/no",
              "Muntz theorem with the even/odd splitting of C[-1,1]: the polynomial kernel "
              "sum alpha_n x^n y^n (entire generating series) is universal iff alpha_0 > 0 "
              "and sum 1/n diverges over both the even and the odd members of supp alpha."},
    RuleEntry{rules::kMuntzConstantTerm, Property::Universal, "no",
              "Muntz characterization of universal polynomial kernels requires alpha_0 > 0; "
              "with alpha_0 = 0 every section vanishes at the origin."},
    RuleEntry{rules::kWpFiniteComplement, Property::Characteristic, "yes",
              "Weighted polynomial kernels: for an even weight, non-increasing on [0, inf), "
              "satisfying Pollard's three conditions, with summable feature bounds, a finite "
              "complement of supp alpha in Z+ makes K_omega characteristic."},
    RuleEntry{rules::kWpFiniteComplementC0, Property::C0Universal, "yes",
              "Weighted polynomial kernels: under the same hypotheses, alpha_0 > 0 together "
              "with a finite complement of supp alpha makes K_omega C0-universal."},
    RuleEntry{rules::kC0ImpliesUniversal, Property::Universal, "yes",
              "A C0-universal kernel is universal (Urysohn extension of continuous functions "
              "on compacts to C0(X))."},
    RuleEntry{rules::kC0ImpliesCharacteristic, Property::Characteristic, "yes",
              "A C0-universal kernel is characteristic (the annihilating-measure "
              "characterizations of both properties)."},
};

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::Universal: return "universal";
    case Property::Characteristic: return "characteristic";
    case Property::C0Universal: return "c0_universal";
  }
  return "unknown";
}

std::span<const RuleEntry> rulebook() { return kRulebook; }

const RuleEntry* find_rule(std::string_view id) {
  const auto it = std::find_if(kRulebook.begin(), kRulebook.end(),
                               [id](const RuleEntry& e) { return e.id == id; });
  return it == kRulebook.end() ? nullptr : &*it;
}

}  // namespace kuniv
