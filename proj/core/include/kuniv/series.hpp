#pragma once

// Building blocks of series kernels K(x, y) = sum_n phi_n(x) phi_n(y):
// coefficient sequences over Z+, weights, and explicit feature sequences.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kuniv/tristate.hpp"

namespace kuniv {

inline constexpr std::size_t kDefaultTruncationOrder = 40;

// Subsets of Z+ = {0, 1, 2, ...} on which a coefficient sequence is nonzero.
struct FullIndexSet {
  friend bool operator==(const FullIndexSet&, const FullIndexSet&) = default;
};
struct FiniteComplement {
  std::vector<std::size_t> excluded;
  friend bool operator==(const FiniteComplement&, const FiniteComplement&) = default;
};
struct EvenOnly {
  friend bool operator==(const EvenOnly&, const EvenOnly&) = default;
};
struct OddOnly {
  friend bool operator==(const OddOnly&, const OddOnly&) = default;
};
struct ExplicitIndices {
  std::vector<std::size_t> members;
  friend bool operator==(const ExplicitIndices&, const ExplicitIndices&) = default;
};
/// {base^k : k >= 0}.
struct Lacunary {
  std::size_t base = 2;
  friend bool operator==(const Lacunary&, const Lacunary&) = default;
};

using IndexSupport =
    std::variant<FullIndexSet, FiniteComplement, EvenOnly, OddOnly, ExplicitIndices, Lacunary>;

bool contains(const IndexSupport& support, std::size_t n);
std::string describe(const IndexSupport& support);

/// Members of the support that are <= horizon, ascending.
std::vector<std::size_t> members_up_to(const IndexSupport& support, std::size_t horizon);

enum class CoefficientFamily {
  Exponential,  // alpha_n = scale^n / n!  (entire generating series)
};

std::string family_name(CoefficientFamily family);

/// alpha_n >= 0, exactly zero off the declared support.
class CoefficientSequence {
 public:
  CoefficientSequence(CoefficientFamily family, double scale, IndexSupport support,
                      std::size_t truncation_order = kDefaultTruncationOrder);

  double operator()(std::size_t n) const;
  /// log alpha_n; -inf off the support.
  double log_coefficient(std::size_t n) const;

  CoefficientFamily family() const noexcept { return family_; }
  double scale() const noexcept { return scale_; }
  const IndexSupport& support() const noexcept { return support_; }
  std::size_t truncation_order() const noexcept { return truncation_order_; }

  /// The family's generating series sum alpha_n z^n is entire.
  bool entire() const noexcept { return true; }

  /// Bound on sum_{n > N} alpha_n z^n for z >= 0 (Lagrange remainder).
  double tail_bound(double z) const;

  friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

 private:
  CoefficientFamily family_;
  double scale_;
  IndexSupport support_;
  std::size_t truncation_order_;
};

enum class WeightFamily {
  Gaussian,       // exp(-a x^2)
  ExpAbs,         // exp(-a |x|)
  CompactBump,    // exp(-1 / (1 - (x/a)^2)) on |x| < a
  RationalDecay,  // 1 / (1 + a x^2)
};

std::string family_name(WeightFamily family);

/// Polynomial families p_n offered as witnesses for bounded approximation of
/// 1/omega.
enum class PolyWitness {
  GaussianTaylor,  // p_n(x) = sum_{k<=n} (a x^2)^k / k!
};

std::string family_name(PolyWitness witness);

struct WeightSpec {
  WeightFamily family = WeightFamily::Gaussian;
  double parameter = 1.0;

  bool positive_everywhere = true;
  Tri log_integral_diverges = Tri::Unknown;
  Tri bounded_inverse_poly_approx = Tri::Unknown;
  std::optional<PolyWitness> witness;
  bool even_nonincreasing = true;

  /// Flags as known for the family.
  static WeightSpec standard(WeightFamily family, double parameter = 1.0);

  double operator()(double x) const;
  /// log omega(x); -inf where omega vanishes. Finite far into the tails
  /// where omega itself underflows.
  double log_value(double x) const;

  /// sup_x omega(x) |x|^n; +inf when omega x^n does not vanish at infinity.
  double sup_times_power(std::size_t n) const;
  double log_sup_times_power(std::size_t n) const;

  /// p_n(x) of the declared witness; requires witness.
  double witness_polynomial(std::size_t n, double x) const;

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

struct Feature {
  std::function<double(double)> phi;
  double sup_bound = 0.0;  // |phi(x)| <= sup_bound on the declared domain
};

/// Explicit Hilbert-Schmidt features with a declared certificate for
/// sum lambda_n < inf.
struct FeatureSequence {
  std::string name;
  std::vector<Feature> features;
  bool summable = false;
  double partial_sum = 0.0;  // sum of listed sup bounds
  double tail_bound = 0.0;   // bound on sum_{n > N} lambda_n^2 beyond the listed features
};

}  // namespace kuniv
