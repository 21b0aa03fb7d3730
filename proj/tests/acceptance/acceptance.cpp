// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "kuniv/classify.hpp"
#include "kuniv/config.hpp"
#include "kuniv/error.hpp"
#include "kuniv/families.hpp"
#include "kuniv/kernels.hpp"
#include "kuniv/probe.hpp"
#include "kuniv/runner.hpp"
#include "oracle_values.hpp"
#include "random_specs.hpp"

using namespace kuniv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string tri(Tri t) { return std::string(to_string(t)); }

const SpectralMeasure& spectral(const KernelSpec& k) {
  return std::get<TranslationInvariant>(k.body()).spectral;
}

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  auto check = [&](const std::string& name, Tri got, Tri want) {
    o.require(got == want, name + "=" + tri(got));
  };
  const auto g = classify_all(build_kernel("gaussian-ti", {}));
  check("gaussian.universal", g.universal.status, Tri::Yes);
  check("gaussian.characteristic", g.characteristic.status, Tri::Yes);
  check("gaussian.c0", g.c0_universal.status, Tri::Yes);
  const auto s = classify_all(build_kernel("sinc-ti", {}));
  check("sinc.universal", s.universal.status, Tri::Yes);
  check("sinc.characteristic", s.characteristic.status, Tri::No);
  check("sinc.c0", s.c0_universal.status, Tri::No);
  const auto c = classify_all(build_kernel("cosine-ti", {}));
  check("cosine.universal", c.universal.status, Tri::No);
  check("cosine.characteristic", c.characteristic.status, Tri::No);
  check("cosine.c0", c.c0_universal.status, Tri::No);
  check("nlog.universal", classify_universal(build_kernel("nlog-ti", {})).status, Tri::Yes);
  check("polynomial.universal", classify_universal(build_kernel("polynomial", {})).status, Tri::Yes);
  check("even.universal",
        classify_universal(build_kernel("polynomial", {{"support", std::string("even")}})).status,
        Tri::No);
  const auto w = classify_all(build_kernel(
      "weighted-polynomial",
      {{"support", std::string("finite-complement")}, {"indices", std::vector<double>{3}}}));
  check("weighted.characteristic", w.characteristic.status, Tri::Yes);
  check("weighted.c0", w.c0_universal.status, Tri::Yes);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < 1.0, "took " + num(secs) + " s");
  if (o.pass) o.detail = "7 kernels match, " + num(secs) + " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  int emitted = 0;
  int attempts = 0;
  while (emitted < 60 && attempts < 1000) {
    ++attempts;
    const auto k = test::random_spec(rng);
    if (!k) continue;
    VerdictTriple t;
    try {
      t = classify_all(*k);
    } catch (const Error&) {
      continue;
    }
    ++emitted;
    if (t.c0_universal.status == Tri::Yes) {
      o.require(t.characteristic.status == Tri::Yes, k->label() + ": c0 without characteristic");
      o.require(t.universal.status == Tri::Yes, k->label() + ": c0 without universal");
    }
    if (!k->is_series()) {
      o.require(t.characteristic.status == t.c0_universal.status,
                k->label() + ": characteristic != c0");
    }
  }
  o.require(emitted >= 50, "only " + std::to_string(emitted) + " specs emitted");
  if (o.pass) o.detail = std::to_string(emitted) + " random specs";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto k = build_kernel("bandpass-ti", {});
  WitnessProbeConfig cfg;  // gap (0.25, 0.75), 100 xi samples, 41 x-points
  const auto r = witness_probe(k, cfg, kDefaultSeed);
  for (const auto& x : r.residuals) {
    o.require(x.passed, x.name + "=" + num(x.value));
  }
  o.require(!r.mmd_rows.empty() && r.mmd_rows[0].mmd2 <= 1e-8, "mmd2 above 1e-8");
  o.require(!r.mmd_rows.empty() && r.mmd_rows[0].total_variation >= 0.1, "TV below 0.1");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < 30.0, "took " + num(secs) + " s");
  if (o.pass) {
    for (const auto& x : r.residuals) o.detail += x.name + "=" + num(x.value) + " ";
    o.detail += num(secs) + " s";
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  auto t0 = Clock::now();
  DensenessProbeConfig g;
  g.targets = {{"sin(3x)", {ExpectKind::Converge, oracle::kGaussianSin3xThreshold, {}}}};
  const auto rg = denseness_probe(build_kernel("gaussian-ti", {}), g);
  const double eg = rg.curves[0].points.back().sup_error;
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(rg.curves[0].points.back().basis_size == 25, "gaussian sweep did not reach 25 centers");
  o.require(eg <= 1e-3, "gaussian error " + num(eg));
  o.require(secs < 10.0, "gaussian took " + num(secs) + " s");

  t0 = Clock::now();
  DensenessProbeConfig c;
  c.targets = {{"x^2", {ExpectKind::Plateau, 1e-3, oracle::kCosineFloorX2}}};
  const auto rc = denseness_probe(build_kernel("cosine-ti", {}), c);
  const double ec = rc.curves[0].points.back().sup_error;
  const double rel = std::abs(ec - oracle::kCosineFloorX2) / oracle::kCosineFloorX2;
  const double csecs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(rc.curves[0].plateau, "cosine curve does not plateau");
  o.require(rel <= 0.05, "cosine floor off by " + num(rel));
  o.require(csecs < 10.0, "cosine took " + num(csecs) + " s");
  if (o.pass) {
    o.detail = "gaussian " + num(eg) + " (" + num(secs) + " s), cosine floor " + num(ec) +
               " rel " + num(rel) + " (" + num(csecs) + " s)";
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  MuntzProbeConfig cfg;
  cfg.support = EvenOnly{};
  cfg.horizon = 60;
  cfg.targets = {{"x", {ExpectKind::LowerBound, 1 - 1e-9, {}}}};
  const auto r = muntz_probe(cfg);
  double lowest = INFINITY;
  for (const auto& p : r.curves[0].points) {
    lowest = std::min(lowest, p.sup_error);
    o.require(p.sup_error >= 1 - 1e-9,
              "horizon " + std::to_string(p.basis_size) + " error " + num(p.sup_error));
  }
  if (o.pass) {
    o.detail = std::to_string(r.curves[0].points.size()) + " horizons, min error " + num(lowest);
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed + 6);
  std::vector<KernelSpec> kernels;
  for (const auto& f : kernel_families()) kernels.push_back(build_kernel(f.name, {}));
  double worst_eig = 0.0;
  double worst_ti = 0.0;
  for (int set = 0; set < 50; ++set) {
    const auto& k = kernels[set % kernels.size()];
    const int n = std::uniform_int_distribution<int>(2, 50)(rng);
    std::uniform_real_distribution<double> u(k.is_series() ? -1.5 : -5.0, k.is_series() ? 1.5 : 5.0);
    std::vector<double> pts;
    for (int i = 0; i < n; ++i) pts.push_back(u(rng));
    const Eigen::MatrixXd gm = gram(k, pts);
    o.require((gm - gm.transpose()).cwiseAbs().maxCoeff() == 0.0, k.label() + ": gram asymmetric");
    const double lam = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gm).eigenvalues().minCoeff();
    const double rel = lam / gm.trace();
    worst_eig = std::min(worst_eig, rel);
    o.require(rel >= -1e-8, k.label() + ": min eigenvalue " + num(lam));
    if (!k.is_series()) {
      const double shift = u(rng);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          worst_ti = std::max(worst_ti, std::abs(eval(k, pts[i] + shift, pts[j] + shift) - gm(i, j)));
        }
      }
    }
  }
  o.require(worst_ti <= 1e-10, "translation residual " + num(worst_ti));

  const auto fine = build_kernel("gaussian-ti", {{"window", 12.0}, {"grid", std::int64_t{4001}}});
  double worst_bochner = 0.0;
  for (double s = -6.0; s <= 6.0; s += 0.05) {
    worst_bochner = std::max(worst_bochner, std::abs(eval(fine, s, 0.0) - std::exp(-s * s / 2)));
  }
  o.require(worst_bochner <= 1e-8, "bochner residual " + num(worst_bochner));
  if (o.pass) {
    o.detail = "min eig/trace " + num(worst_eig) + ", translation " + num(worst_ti) +
               ", bochner " + num(worst_bochner);
  }
  return o;
}

SignedMeasure random_measure(std::mt19937_64& rng, bool density) {
  std::uniform_real_distribution<double> loc(-4.0, 4.0), m(-1.0, 1.0);
  std::vector<Atom> atoms;
  const int n = std::uniform_int_distribution<int>(1, 8)(rng);
  for (int i = 0; i < n; ++i) atoms.push_back({loc(rng), m(rng)});
  if (!density) return SignedMeasure(std::move(atoms));
  GriddedDensity d{uniform_grid(-2.0, 2.0, 161), {}};
  const double a = m(rng), c = m(rng);
  for (double x : d.grid) d.values.push_back(a * std::cos(3 * x) + c * x);
  return SignedMeasure(std::move(atoms), std::move(d));
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed + 7);
  double worst_recon = 0.0;
  double worst_min = 0.0;
  double worst_dirac = 0.0;
  double worst_round = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = random_measure(rng, trial % 2 == 1);
    const auto jp = hahn_jordan(mu);
    const auto back = difference(jp.positive, jp.negative);
    worst_recon = std::max(worst_recon, total_variation(difference(back, mu)));
    // Minimality: |mu| = mu+ + mu-, and the parts never overlap.
    worst_min = std::max(worst_min, std::abs(total_mass(jp.positive) + total_mass(jp.negative) -
                                             total_variation(mu)));
    for (const auto& a : jp.positive.atoms()) {
      for (const auto& b : jp.negative.atoms()) o.require(a.location != b.location, "atoms overlap");
    }
    if (const auto& dp = jp.positive.density()) {
      const auto& dn = *jp.negative.density();
      for (std::size_t i = 0; i < dp->values.size(); ++i) {
        o.require(dp->values[i] * dn.values[i] == 0.0, "densities overlap");
      }
    }

    std::uniform_real_distribution<double> u(-10.0, 10.0);
    const double a = u(rng), xi = u(rng);
    worst_dirac = std::max(worst_dirac,
                           std::abs(fourier(SignedMeasure::dirac(a), xi) - std::polar(1.0, -a * xi)));

    std::vector<Atom> zero = mu.atoms();
    double s = 0.0;
    for (const auto& x : zero) s += x.mass;
    zero.push_back({20.0, -s});
    const SignedMeasure z(zero);
    if (total_variation(z) == 0.0) continue;
    const auto pp = to_probability_pair(z);
    const auto rebuilt = difference(pp.p.measure(), pp.q.measure()).scaled(pp.scale);
    worst_round = std::max(worst_round, total_variation(difference(rebuilt, z)) / total_variation(z));
  }
  o.require(worst_recon <= 1e-12, "reconstruction " + num(worst_recon));
  o.require(worst_min <= 1e-12, "minimality " + num(worst_min));
  o.require(worst_dirac <= 1e-14, "dirac transform " + num(worst_dirac));
  o.require(worst_round <= 1e-12, "round trip " + num(worst_round));
  if (o.pass) {
    o.detail = "reconstruction " + num(worst_recon) + ", dirac " + num(worst_dirac) +
               ", round trip " + num(worst_round);
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto k = build_kernel("bandpass-ti", {});
  const auto& nu = spectral(k);
  const auto xis = sample_support(nu, 100, kDefaultSeed);
  std::vector<double> xs = uniform_grid(-5.0, 5.0, 41);

  std::vector<std::pair<std::string, SignedMeasure>> measures;
  measures.emplace_back("witness", witness_gap_measure(nu, 0.25, 0.75));
  std::mt19937_64 rng(kDefaultSeed + 8);
  for (int i = 0; i < 20; ++i) {
    measures.emplace_back("control-" + std::to_string(i), random_measure(rng, i % 2 == 1));
  }
  int small = 0;
  for (const auto& [name, mu] : measures) {
    const double f = max_fourier(mu, xis);
    const double e = max_embed(k, mu, xs);
    const bool fourier_small = f <= 1e-6;
    small += fourier_small;
    o.require(fourier_small == (e <= 1e-5),
              name + ": max|mu^|=" + num(f) + " but max|embed|=" + num(e));
    if (f > 1e-2) o.require(e > 1e-3, name + ": embed " + num(e) + " with max|mu^|=" + num(f));
  }
  o.require(small >= 1, "no measure annihilated the spectrum");
  if (o.pass) {
    o.detail = std::to_string(measures.size()) + " measures, " + std::to_string(small) +
               " with vanishing transform";
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(KUNIV_CONFIG_DIR)) {
    if (e.path().extension() == ".yaml") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::size_t files = 0;
  for (const auto& p : paths) {
    const auto cfg = load_config(p.string());
    const auto a = run(cfg);
    const auto b = run(cfg);
    const bool same = a.files.size() == b.files.size() &&
                      std::equal(a.files.begin(), a.files.end(), b.files.begin(),
                                 [](const OutputFile& x, const OutputFile& y) {
                                   return x.name == y.name && x.content == y.content;
                                 });
    o.require(same, p.filename().string() + " differs between runs");
    files += a.files.size();
  }
  o.require(!paths.empty(), "no bundled configs");
  if (o.pass) {
    o.detail = std::to_string(paths.size()) + " configs, " + std::to_string(files) +
               " files byte-identical";
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s: %s %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
