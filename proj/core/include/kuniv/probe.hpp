#pragma once

// Numerical probes: denseness sweeps, witness measures from spectral gaps,
// MMD tables, exponential-system and Muntz approximation sweeps.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kuniv/kernels.hpp"
#include "kuniv/measures.hpp"
#include "kuniv/series.hpp"
#include "kuniv/spectral.hpp"

namespace kuniv {

inline constexpr double kDefaultRidge = 1e-10;
inline constexpr std::size_t kDefaultEvalGrid = 401;
inline constexpr double kDefaultWitnessTruncation = 1200.0;
inline constexpr std::size_t kDefaultWitnessGrid = 24001;
inline constexpr double kPlateauRelativeSpread = 0.05;
inline constexpr double kFloorRelativeTolerance = 0.05;

// Targets are named by a small grammar: "sin(3x)", "cos(x)", "x^2", "x",
// "1", "-0.5", "|x|".
struct Target {
  std::string name;
  std::function<double(double)> f;
};

/// Throws InvalidValue for names outside the grammar.
Target make_target(const std::string& name);

enum class ExpectKind {
  None,
  Converge,    // final sup error <= tolerance
  Plateau,     // plateau rule; optional floor within 5% relative
  LowerBound,  // every recorded error >= tolerance
};

std::string to_string(ExpectKind kind);

struct Expectation {
  ExpectKind kind = ExpectKind::None;
  double tolerance = 1e-3;
  std::optional<double> floor;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct TargetSpec {
  std::string name;
  Expectation expect;

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

struct CurvePoint {
  std::size_t basis_size = 0;
  double sup_error = 0.0;  // running minimum over the nested sequence
  double fit_error = 0.0;  // sup error of this size's own fit
};

struct ErrorCurve {
  std::string target;
  Expectation expect;
  std::vector<CurvePoint> points;
  bool plateau = false;
  bool passed = true;
};

struct MmdRow {
  std::string label;
  std::string expectation;  // "separate", "witness" or "none"
  double mmd2 = 0.0;
  double total_variation = 0.0;
  bool passed = true;
};

struct Residual {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool upper = true;  // value <= threshold when true, value >= threshold otherwise
  bool passed = true;
};

using ParamValue = std::variant<std::int64_t, double, std::string>;

struct Param {
  std::string key;
  ParamValue value;
};

struct ProbeReport {
  std::string kind;
  std::vector<Param> parameters;
  std::vector<ErrorCurve> curves;
  std::vector<MmdRow> mmd_rows;
  std::vector<Residual> residuals;
  bool passed = true;
};

/// Plateau rule: the last three errors lie within 5% relative of each other
/// and all exceed 10 * tolerance.
bool plateaus(const std::vector<CurvePoint>& points, double tolerance);

/// Evaluates the expectation on a finished curve.
bool curve_passes(const ErrorCurve& curve);

struct DensenessProbeConfig {
  double lo = -1.0;
  double hi = 1.0;
  std::vector<TargetSpec> targets;
  std::vector<std::size_t> center_counts{2, 3, 7, 13, 25};
  std::size_t grid = kDefaultEvalGrid;
  double ridge = kDefaultRidge;

  friend bool operator==(const DensenessProbeConfig&, const DensenessProbeConfig&) = default;
};

/// Equispaced nested centers; ridge penalty ridge * c^T G c.
ProbeReport denseness_probe(const KernelSpec& kernel, const DensenessProbeConfig& cfg);

/// Density f(x) = (2 / sqrt(2 pi)) int_a^b phi(xi) cos(x xi) dxi of the even
/// bump phi on a < |xi| < b, sampled on a uniform grid over [-T, T].
SignedMeasure witness_gap_measure(const SpectralMeasure& nu, double a, double b,
                                  double truncation = kDefaultWitnessTruncation,
                                  std::size_t grid_size = kDefaultWitnessGrid);

struct WitnessProbeConfig {
  double gap_lo = 0.25;
  double gap_hi = 0.75;
  double truncation = kDefaultWitnessTruncation;
  std::size_t grid = kDefaultWitnessGrid;
  std::size_t xi_samples = 100;
  std::size_t x_points = 41;
  double x_radius = 5.0;
  double mass_tolerance = 1e-8;
  double fourier_tolerance = 1e-6;
  double embed_tolerance = 1e-6;
  double mmd_tolerance = 1e-8;
  double min_total_variation = 0.1;

  friend bool operator==(const WitnessProbeConfig&, const WitnessProbeConfig&) = default;
};

/// Points sampled uniformly from supp nu: from the declared intervals when
/// the support is an interval union, otherwise from the positive-weight nodes.
std::vector<double> sample_support(const SpectralMeasure& nu, std::size_t count,
                                   std::uint64_t seed);

/// max over xi of |mu_hat(xi)|.
double max_fourier(const SignedMeasure& mu, std::span<const double> xis);

/// max over x of |int K(x, t) dmu(t)|.
double max_embed(const KernelSpec& kernel, const SignedMeasure& mu, std::span<const double> xs);

ProbeReport witness_probe(const KernelSpec& kernel, const WitnessProbeConfig& cfg,
                          std::uint64_t seed);

enum class MmdExpect { Auto, Separate, Witness, None };

struct MmdPair {
  std::string label;
  ProbabilityMeasure p;
  ProbabilityMeasure q;
  MmdExpect expect = MmdExpect::Auto;
};

inline constexpr double kMmdTolerance = 1e-8;
inline constexpr double kMmdNegativeSlack = 1e-10;
inline constexpr double kSeparationTotalVariation = 0.1;

/// Auto resolves to Separate when the kernel is classified characteristic
/// and to None otherwise.
ProbeReport mmd_injectivity_probe(const KernelSpec& kernel, const std::vector<MmdPair>& pairs);

struct ExpProbeConfig {
  std::vector<double> lambdas;
  double radius = 1.0;
  std::vector<TargetSpec> targets;
  std::size_t grid = kDefaultEvalGrid;
  double ridge = kDefaultRidge;

  friend bool operator==(const ExpProbeConfig&, const ExpProbeConfig&) = default;
};

/// Sweeps the prefixes lambda_1..lambda_k of span{1 if lambda = 0; cos, sin}.
ProbeReport exponential_completeness_probe(const ExpProbeConfig& cfg);

struct MuntzProbeConfig {
  IndexSupport support = FullIndexSet{};
  std::size_t horizon = 20;
  std::vector<TargetSpec> targets;
  std::size_t grid = kDefaultEvalGrid;
  double ridge = kDefaultRidge;

  friend bool operator==(const MuntzProbeConfig&, const MuntzProbeConfig&) = default;
};

/// Sweeps span{x^n : n in support, n <= m} on [-1, 1] as m runs over the
/// support members up to the horizon.
ProbeReport muntz_probe(const MuntzProbeConfig& cfg);

/// CSV with columns basis_size,target_name,sup_error.
std::string curves_csv(const ProbeReport& report);

}  // namespace kuniv
