#pragma once

// Deterministic rule engine deciding universality, characteristic and
// C0-universality of a kernel spec. Every Yes/No verdict names the rule
// that fired; Unknown is returned whenever no rule's hypotheses can be
// certified from the declared spec.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kuniv/kernels.hpp"
#include "kuniv/tristate.hpp"

namespace kuniv {

/// Frozen rule identifiers. Reports refer to rules only through these.
namespace rules {
inline constexpr std::string_view kAccumulationPointUniqueness = "accumulation-point-uniqueness";
inline constexpr std::string_view kLimsupRedheffer = "limsup-redheffer";
inline constexpr std::string_view kFiniteSupportSpan = "finite-support-span";
inline constexpr std::string_view kTiCharFullSupport = "ti-char-full-support";
inline constexpr std::string_view kTiCharProperSupport = "ti-char-proper-support";
inline constexpr std::string_view kTiC0FullSupport = "ti-c0-full-support";
inline constexpr std::string_view kTiC0ProperSupport = "ti-c0-proper-support";
inline constexpr std::string_view kMuntzParity = "muntz-parity";
inline constexpr std::string_view kMuntzConstantTerm = "muntz-constant-term";
inline constexpr std::string_view kWpFiniteComplement = "wp-finite-complement";
inline constexpr std::string_view kWpFiniteComplementC0 = "wp-finite-complement-c0";
inline constexpr std::string_view kC0ImpliesUniversal = "c0-implies-universal";
inline constexpr std::string_view kC0ImpliesCharacteristic = "c0-implies-characteristic";
}  // namespace rules

enum class Property { Universal, Characteristic, C0Universal };

std::string_view to_string(Property p);

struct RuleEntry {
  std::string_view id;
  Property property;
  std::string_view conclusion;  // "yes", "no" or "yes/no"
  std::string_view citation;
  bool derived = false;  // follows from the cited results rather than being stated by them
};

std::span<const RuleEntry> rulebook();

/// nullptr when the id is not in the rulebook.
const RuleEntry* find_rule(std::string_view id);

struct Verdict {
  Tri status = Tri::Unknown;
  std::string rule_id;      // empty for Unknown
  std::string citation;     // empty for Unknown
  std::string explanation;  // always set

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct VerdictTriple {
  Verdict universal;
  Verdict characteristic;
  Verdict c0_universal;

  friend bool operator==(const VerdictTriple&, const VerdictTriple&) = default;
};

Verdict classify_universal(const KernelSpec& kernel);
Verdict classify_characteristic(const KernelSpec& kernel);
Verdict classify_c0_universal(const KernelSpec& kernel);

/// All three verdicts with the implication chain applied once.
VerdictTriple classify_all(const KernelSpec& kernel);

struct PartialIntegral {
  double half_width = 0.0;  // T
  double value = 0.0;       // integral over [-T, T] of log omega / (1 + x^2)
};

struct PollardReport {
  Tri condition1 = Tri::Unknown;  // omega(x) != 0 everywhere
  Tri condition2 = Tri::Unknown;  // log-integral diverges to -inf
  Tri condition3 = Tri::Unknown;  // bounded polynomial approximation of 1/omega
  Tri overall = Tri::Unknown;

  std::vector<PartialIntegral> log_integral_trace;
  std::string witness_family;             // empty when none was declared
  std::vector<double> witness_sup_error;  // sup over the grid of |p_n omega - 1|, n = 0..n_terms
  double witness_bound = 0.0;             // max over n and grid of |p_n omega|
  double witness_half_width = 0.0;        // grid used for the witness check is [-L, L]
};

/// Cross-checks the declared Pollard flags of a weight against numerics on
/// [-window, window]. Throws FlagContradiction when a numeric check refutes
/// a declared flag.
PollardReport check_pollard(const WeightSpec& weight, double window, std::size_t n_terms);

struct MuntzGapReport {
  double even_partial_sum = 0.0;  // sum of 1/n over even n >= 2 in the support, n <= horizon
  double odd_partial_sum = 0.0;   // sum of 1/n over odd n in the support, n <= horizon
  Tri even_diverges = Tri::Unknown;
  Tri odd_diverges = Tri::Unknown;
};

MuntzGapReport muntz_gap_analysis(const CoefficientSequence& coeffs, std::size_t horizon);

/// Divergence of sum 1/n over the even / odd members of a support, decided
/// from the support's kind.
Tri even_reciprocal_sum_diverges(const IndexSupport& support);
Tri odd_reciprocal_sum_diverges(const IndexSupport& support);

}  // namespace kuniv
