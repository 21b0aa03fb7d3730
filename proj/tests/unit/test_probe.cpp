#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kuniv/error.hpp"
#include "kuniv/fit.hpp"
#include "kuniv/probe.hpp"
#include "oracle_values.hpp"
#include "unit/helpers.hpp"

using namespace kuniv;
using doctest::Approx;
using test::family;

namespace {

TargetSpec target(const char* name, ExpectKind kind = ExpectKind::None, double tol = 1e-3,
                  std::optional<double> floor = std::nullopt) {
  return {name, {kind, tol, floor}};
}

void require_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("no error thrown");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

void check_running_minimum(const ErrorCurve& c) {
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    CHECK(c.points[i].sup_error <= c.points[i].fit_error);
    if (i > 0) CHECK(c.points[i].sup_error <= c.points[i - 1].sup_error);
  }
}

}  // namespace

TEST_CASE("target grammar") {
  CHECK(make_target("sin(3x)").f(0.5) == Approx(std::sin(1.5)));
  CHECK(make_target("cos(2x)").f(1.0) == Approx(std::cos(2.0)));
  CHECK(make_target("x^2").f(-3.0) == Approx(9.0));
  CHECK(make_target("x").f(-0.25) == Approx(-0.25));
  CHECK(make_target("|x|").f(-0.25) == Approx(0.25));
  CHECK(make_target("1").f(7.0) == Approx(1.0));
  require_code(ErrorCode::InvalidValue, [] { make_target("tan(x)"); });
}

TEST_CASE("plateau rule") {
  std::vector<CurvePoint> flat{{2, 0.5, 0.5}, {3, 0.49, 0.49}, {5, 0.49, 0.49}};
  CHECK(plateaus(flat, 1e-3));
  std::vector<CurvePoint> falling{{2, 0.5, 0.5}, {3, 0.1, 0.1}, {5, 0.01, 0.01}};
  CHECK(!plateaus(falling, 1e-3));
}

TEST_CASE("ridge solve") {
  Eigen::MatrixXd a(3, 2);
  a << 1, 0, 0, 1, 1, 1;
  Eigen::VectorXd b(3);
  b << 1, 2, 3;
  const auto c = ridge_solve(a, b, 0.0);
  CHECK(c[0] == Approx(1.0));
  CHECK(c[1] == Approx(2.0));
  Eigen::MatrixXd s(3, 2);
  s << 1, 1, 1, 1, 1, 1;
  require_code(ErrorCode::SingularSystem, [&] { ridge_solve(s, b, 0.0); });
  CHECK(ridge_solve(s, b, 1e-10).allFinite());
}

TEST_CASE("gaussian denseness reaches the oracle threshold") {
  DensenessProbeConfig cfg;
  cfg.targets = {target("sin(3x)", ExpectKind::Converge, oracle::kGaussianSin3xThreshold)};
  const auto r = denseness_probe(family("gaussian-ti"), cfg);
  REQUIRE(r.curves.size() == 1);
  const auto& c = r.curves[0];
  CHECK(r.passed);
  CHECK(c.points.back().basis_size == 25);
  CHECK(c.points.back().sup_error <= oracle::kGaussianSin3xThreshold);
  CHECK(c.points.back().sup_error == Approx(oracle::kGaussianSin3xAt25).epsilon(0.5));
  check_running_minimum(c);
}

TEST_CASE("cosine kernel plateaus at the two-function floor") {
  DensenessProbeConfig cfg;
  cfg.targets = {target("x^2", ExpectKind::Plateau, 1e-3, oracle::kCosineFloorX2)};
  const auto r = denseness_probe(family("cosine-ti"), cfg);
  CHECK(r.passed);
  CHECK(r.curves[0].plateau);
  CHECK(r.curves[0].points.back().sup_error ==
        Approx(oracle::kCosineFloorX2).epsilon(kFloorRelativeTolerance));
}

TEST_CASE("denseness config validation") {
  DensenessProbeConfig cfg;
  cfg.targets = {target("x")};
  cfg.center_counts = {3, 4};  // 2 does not divide 3
  require_code(ErrorCode::InvalidValue, [&] { denseness_probe(family("gaussian-ti"), cfg); });
  cfg.center_counts = {3, 2};
  require_code(ErrorCode::InvalidValue, [&] { denseness_probe(family("gaussian-ti"), cfg); });
  cfg.center_counts = {2, 3};
  cfg.ridge = 0.0;
  require_code(ErrorCode::SingularSystem, [&] { denseness_probe(family("constant-ti"), cfg); });
}

TEST_CASE("witness gap checks") {
  const auto g = family("gaussian-ti");
  const auto& nu = std::get<TranslationInvariant>(g.body()).spectral;
  require_code(ErrorCode::GapIntersectsSupport, [&] { witness_gap_measure(nu, 0.25, 0.75); });
  const auto b = family("bandpass-ti");
  const auto& band = std::get<TranslationInvariant>(b.body()).spectral;
  require_code(ErrorCode::GapContainsZero, [&] { witness_gap_measure(band, 0.0, 0.75); });
  require_code(ErrorCode::InvalidValue, [&] { witness_gap_measure(band, 0.75, 0.25); });
  require_code(ErrorCode::GapIntersectsSupport, [&] { witness_gap_measure(band, 0.5, 1.5); });
}

TEST_CASE("bandpass witness meets its tolerances") {
  const auto r = witness_probe(family("bandpass-ti"), WitnessProbeConfig{}, 7);
  CHECK(r.passed);
  for (const auto& x : r.residuals) {
    CAPTURE(x.name);
    CHECK(x.passed);
  }
  REQUIRE(r.mmd_rows.size() == 1);
  CHECK(r.mmd_rows[0].mmd2 <= 1e-8);
  CHECK(r.mmd_rows[0].total_variation >= 0.1);
}

TEST_CASE("support sampling is seeded and stays in the support") {
  const auto b = family("bandpass-ti");
  const auto& band = std::get<TranslationInvariant>(b.body()).spectral;
  const auto s1 = sample_support(band, 50, 3), s2 = sample_support(band, 50, 3);
  CHECK(s1 == s2);
  CHECK(s1 != sample_support(band, 50, 4));
  for (double xi : s1) {
    CHECK(std::abs(xi) >= 1.0);
    CHECK(std::abs(xi) <= 2.0);
  }
}

TEST_CASE("mmd table") {
  const auto g = family("gaussian-ti");
  const auto p = ProbabilityMeasure::dirac(0.0), q = ProbabilityMeasure::dirac(1.0);
  const auto r = mmd_injectivity_probe(g, {{"a", p, q, MmdExpect::Auto}, {"same", p, p, MmdExpect::None}});
  CHECK(r.passed);
  CHECK(r.mmd_rows[0].expectation == "separate");
  CHECK(r.mmd_rows[0].mmd2 == Approx(oracle::kGaussianMmdDirac01).epsilon(1e-8));
  CHECK(r.mmd_rows[0].total_variation == Approx(2.0));
  CHECK(r.mmd_rows[1].total_variation == 0.0);
  // A non-characteristic kernel cannot separate 0 and 2 pi.
  const auto cos = family("cosine-ti");
  const auto bad = mmd_injectivity_probe(
      cos, {{"b", p, ProbabilityMeasure::dirac(2 * std::numbers::pi), MmdExpect::Separate}});
  CHECK(!bad.passed);
}

TEST_CASE("exponential completeness") {
  ExpProbeConfig one;
  one.lambdas = {0.0};
  one.targets = {target("1", ExpectKind::Converge, 1e-12)};
  CHECK(exponential_completeness_probe(one).passed);

  ExpProbeConfig nlog;
  for (int n = 1; n <= 60; ++n) nlog.lambdas.push_back(n / std::log(n + 1.0));
  nlog.lambdas.insert(nlog.lambdas.begin(), 0.0);
  nlog.radius = 3.0;
  nlog.targets = {target("x^2", ExpectKind::Converge, oracle::kNlogExpThreshold)};
  const auto r = exponential_completeness_probe(nlog);
  CHECK(r.passed);
  check_running_minimum(r.curves[0]);

  ExpProbeConfig dup;
  dup.lambdas = {1.0, 1.0};
  dup.targets = {target("x")};
  require_code(ErrorCode::InvalidValue, [&] { exponential_completeness_probe(dup); });
}

TEST_CASE("muntz probes") {
  MuntzProbeConfig even;
  even.support = EvenOnly{};
  even.horizon = 40;
  even.targets = {target("x", ExpectKind::LowerBound, 1 - 1e-9)};
  const auto e = muntz_probe(even);
  CHECK(e.passed);
  for (const auto& p : e.curves[0].points) CHECK(p.sup_error >= 1 - 1e-9);

  MuntzProbeConfig full;
  full.targets = {target("cos(2x)", ExpectKind::Converge, oracle::kMuntzFullThreshold)};
  CHECK(muntz_probe(full).passed);

  MuntzProbeConfig lac;
  lac.support = Lacunary{2};
  lac.horizon = 64;
  lac.targets = {target("x^3", ExpectKind::Plateau, 1e-3, oracle::kMuntzLacunaryX3Floor)};
  const auto l = muntz_probe(lac);
  CHECK(l.passed);
  CHECK(l.curves[0].points.back().sup_error ==
        Approx(oracle::kMuntzLacunaryX3Floor).epsilon(kFloorRelativeTolerance));
}

TEST_CASE("curve csv") {
  MuntzProbeConfig even;
  even.support = EvenOnly{};
  even.horizon = 8;
  even.targets = {target("x")};
  const auto csv = curves_csv(muntz_probe(even));
  CHECK(csv.rfind("basis_size,target_name,sup_error\n", 0) == 0);
  CHECK(csv.find(",x,1\n") != std::string::npos);
}
