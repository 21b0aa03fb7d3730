#pragma once

// Finite signed Borel measures on the real line, discretized as point
// masses plus a gridded density integrated by the composite trapezoid rule.

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace kuniv {

/// |mu(X)| below this counts as zero total mass.
inline constexpr double kZeroMassTolerance = 1e-8;
/// Allowed deviation of a probability measure's total mass from 1.
inline constexpr double kProbabilityMassTolerance = 1e-9;
/// Atoms closer than this are merged at construction.
inline constexpr double kAtomMergeTolerance = 1e-12;

struct Atom {
  double location = 0.0;
  double mass = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct GriddedDensity {
  std::vector<double> grid;    // strictly increasing, >= 2 nodes
  std::vector<double> values;  // one per node

  friend bool operator==(const GriddedDensity&, const GriddedDensity&) = default;
};

/// A node of the measure's quadrature: integrating f against the measure is
/// sum(weight * f(location)) over all nodes.
struct QuadratureNode {
  double location = 0.0;
  double weight = 0.0;
};

std::vector<double> trapezoid_weights(std::span<const double> grid);
double trapezoid(std::span<const double> grid, std::span<const double> values);

/// Uniform grid with n >= 2 nodes spanning [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

class SignedMeasure {
 public:
  SignedMeasure() = default;

  /// Atoms are sorted by location and merged when within
  /// kAtomMergeTolerance; throws InvalidValue on a malformed density or
  /// non-finite input.
  explicit SignedMeasure(std::vector<Atom> atoms,
                         std::optional<GriddedDensity> density = std::nullopt);

  static SignedMeasure dirac(double location, double mass = 1.0);
  static SignedMeasure from_density(GriddedDensity density);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::optional<GriddedDensity>& density() const noexcept { return density_; }

  bool has_density() const noexcept { return density_.has_value(); }

  SignedMeasure scaled(double factor) const;
  SignedMeasure negated() const { return scaled(-1.0); }

  /// Atoms followed by density nodes carrying trapezoid weight * value.
  /// Nodes with zero weight are kept so the layout mirrors the storage.
  std::vector<QuadratureNode> quadrature_nodes() const;

  friend bool operator==(const SignedMeasure&, const SignedMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
  std::optional<GriddedDensity> density_;
};

/// A SignedMeasure whose masses and density values are nonnegative and whose
/// total mass is 1 within the given tolerance.
class ProbabilityMeasure {
 public:
  explicit ProbabilityMeasure(SignedMeasure measure,
                              double mass_tolerance = kProbabilityMassTolerance);

  static ProbabilityMeasure dirac(double location);

  const SignedMeasure& measure() const noexcept { return measure_; }

  friend bool operator==(const ProbabilityMeasure&, const ProbabilityMeasure&) = default;

 private:
  SignedMeasure measure_;
};

double total_mass(const SignedMeasure& mu);
double total_variation(const SignedMeasure& mu);

struct JordanPair {
  SignedMeasure positive;
  SignedMeasure negative;
};

/// Atom-wise and node-wise positive/negative parts. Zero-mass atoms are
/// dropped; a density is kept on the same grid in both parts.
JordanPair hahn_jordan(const SignedMeasure& mu);

struct ProbabilityPair {
  double scale = 0.0;  // C = mu+(X)
  ProbabilityMeasure p;
  ProbabilityMeasure q;
};

/// Writes a zero-mass measure as C (P - Q). Throws NonzeroTotalMass when
/// |mu(X)| > kZeroMassTolerance and ZeroMeasure when mu vanishes.
ProbabilityPair to_probability_pair(const SignedMeasure& mu);

/// a - b as a single measure. Densities on different grids are merged onto
/// the union grid by linear interpolation (zero outside each grid).
SignedMeasure difference(const SignedMeasure& a, const SignedMeasure& b);

/// mu_hat(xi) = integral of exp(-i x xi) d mu(x).
std::complex<double> fourier(const SignedMeasure& mu, double xi);

}  // namespace kuniv
