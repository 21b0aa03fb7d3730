#pragma once

// Spectral measures of translation-invariant kernels and the symbolic
// description of their supports.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kuniv/measures.hpp"
#include "kuniv/tristate.hpp"

namespace kuniv {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// supp nu = R^d.
struct FullSpace {
  int dimension = 1;
  friend bool operator==(const FullSpace&, const FullSpace&) = default;
};

/// A finite union of closed bounded intervals in R.
struct IntervalUnion {
  std::vector<Interval> intervals;
  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;
};

struct FiniteSet {
  std::vector<double> points;
  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

enum class SequenceKind {
  Linear,    // lambda_n = step * n
  PowerLaw,  // lambda_n = n^exponent, exponent in (0, 1)
  NOverLog,  // lambda_n = n / log(n + 1)
};

/// The symmetric point set {+-lambda_n : n >= 1} of a named sequence.
struct SequenceFamily {
  SequenceKind kind = SequenceKind::NOverLog;
  double parameter = 0.0;  // step for Linear, exponent for PowerLaw

  friend bool operator==(const SequenceFamily&, const SequenceFamily&) = default;
};

using SupportKind = std::variant<FullSpace, IntervalUnion, FiniteSet, SequenceFamily>;

/// lambda_n for n >= 1.
double sequence_term(const SequenceFamily& family, std::size_t n);
std::string sequence_name(SequenceKind kind);

struct SupportDescriptor {
  SupportKind kind = FullSpace{};
  Tri has_finite_accumulation_point = Tri::Unknown;
  Tri limsup_n_over_lambda_infinite = Tri::Unknown;
  bool contains_zero = false;

  /// Flags derived from the kind wherever they are decidable.
  static SupportDescriptor of(SupportKind kind);

  /// Declared flags; throws FlagContradiction when a flag disagrees with
  /// what the kind decides.
  static SupportDescriptor declared(SupportKind kind, Tri accumulation, Tri limsup,
                                    bool contains_zero);

  int dimension() const;
  bool is_full_space() const { return std::holds_alternative<FullSpace>(kind); }

  /// True when the open interval (lo, hi) provably meets the support.
  bool meets_open_interval(double lo, double hi) const;

  friend bool operator==(const SupportDescriptor&, const SupportDescriptor&) = default;
};

/// A finite nonnegative measure nu on R with a symbolic support descriptor.
/// Numeric content (atoms, density) is one-dimensional; the descriptor may
/// describe R^d for symbolic classification.
class SpectralMeasure {
 public:
  /// Throws InvalidValue for negative masses or density values. Symmetry is
  /// recorded, not enforced; kernel evaluation rejects asymmetric measures.
  SpectralMeasure(std::vector<Atom> atoms, std::optional<GriddedDensity> density,
                  SupportDescriptor support);

  const std::vector<Atom>& atoms() const noexcept { return measure_.atoms(); }
  const std::optional<GriddedDensity>& density() const noexcept { return measure_.density(); }
  const SupportDescriptor& support() const noexcept { return support_; }
  const SignedMeasure& as_measure() const noexcept { return measure_; }

  /// Invariant under xi -> -xi at the discretization level.
  bool symmetric() const noexcept { return symmetric_; }

  /// Quadrature nodes with strictly positive weight.
  const std::vector<QuadratureNode>& nodes() const noexcept { return nodes_; }

  double total_mass() const;

  friend bool operator==(const SpectralMeasure& a, const SpectralMeasure& b) {
    return a.measure_ == b.measure_ && a.support_ == b.support_;
  }

 private:
  SignedMeasure measure_;
  SupportDescriptor support_;
  std::vector<QuadratureNode> nodes_;
  bool symmetric_ = false;
};

}  // namespace kuniv
