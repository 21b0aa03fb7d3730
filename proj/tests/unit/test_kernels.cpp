#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "kuniv/error.hpp"
#include "kuniv/kernels.hpp"
#include "oracle_values.hpp"
#include "unit/helpers.hpp"

using namespace kuniv;
using doctest::Approx;
using test::family;

namespace {

std::vector<KernelSpec> bundled_kernels() {
  std::vector<KernelSpec> ks;
  for (const auto& f : kernel_families()) ks.push_back(build_kernel(f.name, {}));
  return ks;
}

double min_eigenvalue(const Eigen::MatrixXd& g) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("gaussian kernel against its closed form") {
  const auto k = family("gaussian-ti");
  CHECK(eval(k, 0.0, 1.0) == Approx(oracle::kGaussianK01).epsilon(1e-10));
  for (double s : {0.0, 0.3, 1.7, 4.0}) {
    CHECK(std::abs(eval(k, s, 0.0) - std::exp(-s * s / 2)) < 1e-8);
  }
}

TEST_CASE("simple spectral kernels") {
  CHECK(eval(family("constant-ti"), 2.0, -5.0) == Approx(1.0));
  CHECK(eval(family("cosine-ti"), 0.0, std::numbers::pi) == Approx(-1.0));
  const auto sinc = family("sinc-ti", {{"grid", std::int64_t{4001}}});
  CHECK(eval(sinc, 1.0, 0.0) == Approx(2 * std::sin(1.0)).epsilon(1e-6));
}

TEST_CASE("asymmetric spectral measure is rejected") {
  try {
    const KernelSpec k(TranslationInvariant{
        SpectralMeasure({{1.0, 1.0}}, std::nullopt, SupportDescriptor::of(FiniteSet{{1.0}}))});
    eval(k, 0.0, 1.0);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AsymmetricSpectralMeasure);
  }
}

TEST_CASE("gaussian gram eigenvalues") {
  const std::vector<double> pts{0.0, 1.0, 2.0};
  const auto g = gram(family("gaussian-ti"), pts);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(es.eigenvalues()[i] - oracle::kGaussianGramEig[i]) < 1e-6);
}

TEST_CASE("duplicate gram points are rejected") {
  const std::vector<double> pts{0.0, 1.0, 0.0};
  try {
    gram(family("gaussian-ti"), pts);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicatePoints);
  }
}

TEST_CASE("gram matrices are symmetric and positive semidefinite") {
  std::mt19937_64 rng(21);
  const auto kernels = bundled_kernels();
  for (const auto& k : kernels) {
    CAPTURE(k.label());
    for (int trial = 0; trial < 4; ++trial) {
      const auto pts = test::random_points(rng, 12, k.is_series() ? 1.5 : 4.0);
      const auto g = gram(k, pts);
      CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
      CHECK(min_eigenvalue(g) >= -1e-8 * g.trace());
    }
  }
}

TEST_CASE("translation invariance") {
  std::mt19937_64 rng(22);
  for (const auto& k : bundled_kernels()) {
    if (k.is_series()) continue;
    CAPTURE(k.label());
    const auto xs = test::random_points(rng, 8, 3.0);
    for (double x : xs) {
      for (double y : xs) {
        CHECK(std::abs(eval(k, x + 0.75, y + 0.75) - eval(k, x, y)) < 1e-10);
      }
    }
  }
}

TEST_CASE("polynomial kernel and its features") {
  const auto k = family("polynomial");
  CHECK(eval(k, 1.0, 1.0) == Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(eval(k, 0.5, -2.0) == Approx(std::exp(-1.0)).epsilon(1e-12));
  const auto phi = feature_embed(k, SignedMeasure::dirac(1.0));
  REQUIRE(phi.size() == k.truncation_order() + 1);
  for (std::size_t n = 0; n < phi.size(); ++n) CHECK(phi[n] == Approx(k.feature(n, 1.0)));
  const auto zero = feature_embed(k, SignedMeasure());
  for (double v : zero) CHECK(v == 0.0);
}

TEST_CASE("series tail bound is reported") {
  const auto v = eval_with_tail(family("polynomial", {{"truncation", std::int64_t{10}}}), 1.0, 1.0);
  CHECK(v.tail_bound > 0.0);
  CHECK(std::abs(v.value - std::exp(1.0)) <= v.tail_bound);
}

TEST_CASE("feature embedding needs a series kernel") {
  try {
    feature_embed(family("gaussian-ti"), SignedMeasure::dirac(0.0));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSeriesKernel);
  }
}

TEST_CASE("embedding of atoms") {
  const auto k = family("gaussian-ti");
  const SignedMeasure mu({{0.0, 1.0}, {1.0, -1.0}});
  CHECK(embed(k, mu, 0.0) == Approx(oracle::kGaussianEmbedDiff).epsilon(1e-8));
  CHECK(embed(k, SignedMeasure(), 0.3) == 0.0);
}

TEST_CASE("embed_many agrees with embed") {
  std::mt19937_64 rng(23);
  const auto xs = test::random_points(rng, 9, 3.0);
  for (const auto& k : bundled_kernels()) {
    CAPTURE(k.label());
    const auto mu = test::random_measure(rng, true);
    const auto many = embed_many(k, mu, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(std::abs(many[i] - embed(k, mu, xs[i])) <= 1e-9 * (1.0 + std::abs(many[i])));
    }
  }
}

TEST_CASE("series embedding matches its feature expansion") {
  std::mt19937_64 rng(24);
  for (const char* name : {"polynomial", "weighted-polynomial", "cosine-series-hs"}) {
    const auto k = family(name);
    const auto mu = test::random_measure(rng, false);
    const auto phi = feature_embed(k, mu);
    for (double x : {-0.8, 0.1, 0.9}) {
      double s = 0.0;
      for (std::size_t n = 0; n < phi.size(); ++n) s += phi[n] * k.feature(n, x);
      CHECK(s == Approx(embed(k, mu, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("mmd between diracs") {
  const auto k = family("gaussian-ti");
  const auto p = ProbabilityMeasure::dirac(0.0), q = ProbabilityMeasure::dirac(1.0);
  CHECK(mmd2(k, p, q) == Approx(oracle::kGaussianMmdDirac01).epsilon(1e-8));
  CHECK(mmd2(k, p, p) == Approx(0.0));
  // Cosine kernel cannot tell 0 from 2 pi.
  CHECK(std::abs(mmd2(family("cosine-ti"), p, ProbabilityMeasure::dirac(2 * std::numbers::pi))) < 1e-12);
}

TEST_CASE("mmd is symmetric and matches the direct quadratic form") {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> u(-2.0, 2.0), w(0.1, 1.0);
  for (const auto& k : bundled_kernels()) {
    CAPTURE(k.label());
    const double a = w(rng), b = w(rng);
    const ProbabilityMeasure p(SignedMeasure({{u(rng), a / (a + b)}, {u(rng), b / (a + b)}}));
    const ProbabilityMeasure q = ProbabilityMeasure::dirac(u(rng));
    const double pq = mmd2(k, p, q);
    CHECK(pq == Approx(mmd2(k, q, p)).epsilon(1e-10));
    CHECK(pq >= -1e-10);
    const auto nodes = difference(p.measure(), q.measure()).quadrature_nodes();
    CHECK(quadratic_form(k, nodes) == Approx(quadratic_form_direct(k, nodes)).epsilon(1e-8));
  }
}
