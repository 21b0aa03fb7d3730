#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "kuniv/error.hpp"
#include "kuniv/probe.hpp"

namespace kuniv {

namespace {

constexpr std::size_t kBumpNodes = 4001;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double bump(double xi, double a, double b) {
  const double u = (2.0 * std::abs(xi) - (a + b)) / (b - a);
  return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
}

bool nodes_meet(const SpectralMeasure& nu, double a, double b) {
  return std::any_of(nu.nodes().begin(), nu.nodes().end(), [&](const QuadratureNode& n) {
    const double t = std::abs(n.location);
    return n.weight > 0.0 && a < t && t < b;
  });
}

}  // namespace

SignedMeasure witness_gap_measure(const SpectralMeasure& nu, double a, double b,
                                  double truncation, std::size_t grid_size) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw Error(ErrorCode::InvalidValue, "probe", "gap needs finite a < b");
  }
  if (!(a > 0.0)) {
    throw Error(ErrorCode::GapContainsZero, "probe",
                "gap must satisfy 0 < a < b so that the bump vanishes near 0");
  }
  if (!(truncation > 0.0) || !std::isfinite(truncation) || grid_size < 2) {
    throw Error(ErrorCode::InvalidValue, "probe", "witness needs truncation > 0 and grid >= 2");
  }
  const auto& s = nu.support();
  if (s.meets_open_interval(a, b) || s.meets_open_interval(-b, -a) || nodes_meet(nu, a, b)) {
    throw Error(ErrorCode::GapIntersectsSupport, "probe",
                "gap (" + std::to_string(a) + ", " + std::to_string(b) +
                    ") or its mirror meets supp nu");
  }

  const auto xi = uniform_grid(a, b, kBumpNodes);
  const auto w = trapezoid_weights(xi);
  std::vector<double> phi_w(xi.size());
  for (std::size_t j = 0; j < xi.size(); ++j) phi_w[j] = bump(xi[j], a, b) * w[j];

  const auto xs = uniform_grid(-truncation, truncation, grid_size);
  std::vector<double> values(xs.size());
  const double scale = 2.0 / std::sqrt(2.0 * std::numbers::pi);
  // f is even: fill the upper half and mirror.
  for (std::size_t k = xs.size() / 2; k < xs.size(); ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
      if (phi_w[j] != 0.0) sum += phi_w[j] * std::cos(xs[k] * xi[j]);
    }
    values[k] = scale * sum;
    values[xs.size() - 1 - k] = values[k];
  }
  return SignedMeasure::from_density({xs, values});
}

std::vector<double> sample_support(const SpectralMeasure& nu, std::size_t count,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(count);
  if (const auto* u = std::get_if<IntervalUnion>(&nu.support().kind)) {
    double total = 0.0;
    for (const auto& iv : u->intervals) total += iv.hi - iv.lo;
    if (total > 0.0) {
      for (std::size_t i = 0; i < count; ++i) {
        double r = uniform01(rng) * total;
        for (const auto& iv : u->intervals) {
          const double len = iv.hi - iv.lo;
          if (r <= len || &iv == &u->intervals.back()) {
            out.push_back(iv.lo + std::min(r, len));
            break;
          }
          r -= len;
        }
      }
      return out;
    }
  }
  const auto& nodes = nu.nodes();
  if (nodes.empty()) return out;
  for (std::size_t i = 0; i < count; ++i) {
    auto k = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(nodes.size()));
    out.push_back(nodes[std::min(k, nodes.size() - 1)].location);
  }
  return out;
}

double max_fourier(const SignedMeasure& mu, std::span<const double> xis) {
  double m = 0.0;
  for (double xi : xis) m = std::max(m, std::abs(fourier(mu, xi)));
  return m;
}

double max_embed(const KernelSpec& kernel, const SignedMeasure& mu, std::span<const double> xs) {
  double m = 0.0;
  for (double v : embed_many(kernel, mu, xs)) m = std::max(m, std::abs(v));
  return m;
}

ProbeReport witness_probe(const KernelSpec& kernel, const WitnessProbeConfig& cfg,
                          std::uint64_t seed) {
  const auto* ti = kernel.get_if<TranslationInvariant>();
  if (ti == nullptr) {
    throw Error(ErrorCode::InvalidValue, "probe",
                "witness probe requires a translation-invariant kernel");
  }
  if (cfg.x_points < 1 || !(cfg.x_radius >= 0.0)) {
    throw Error(ErrorCode::InvalidValue, "probe", "witness probe needs x_points >= 1");
  }
  const auto& nu = ti->spectral;
  const SignedMeasure mu = witness_gap_measure(nu, cfg.gap_lo, cfg.gap_hi, cfg.truncation, cfg.grid);

  ProbeReport report;
  report.kind = "witness";
  report.parameters = {{"gap_lo", cfg.gap_lo},
                       {"gap_hi", cfg.gap_hi},
                       {"truncation", cfg.truncation},
                       {"grid", static_cast<std::int64_t>(cfg.grid)},
                       {"xi_samples", static_cast<std::int64_t>(cfg.xi_samples)},
                       {"x_points", static_cast<std::int64_t>(cfg.x_points)},
                       {"x_radius", cfg.x_radius},
                       {"seed", static_cast<std::int64_t>(seed)}};

  auto add = [&report](std::string name, double value, double threshold, bool upper) {
    const bool ok = upper ? value <= threshold : value >= threshold;
    report.residuals.push_back({std::move(name), value, threshold, upper, ok});
    report.passed = report.passed && ok;
  };

  const double mass = total_mass(mu);
  add("total_mass", std::abs(mass), cfg.mass_tolerance, true);
  const auto xis = sample_support(nu, cfg.xi_samples, seed);
  add("max_fourier_on_support", max_fourier(mu, xis), cfg.fourier_tolerance, true);
  const auto xs = cfg.x_points == 1 ? std::vector<double>{0.0}
                                    : uniform_grid(-cfg.x_radius, cfg.x_radius, cfg.x_points);
  add("max_embed", max_embed(kernel, mu, xs), cfg.embed_tolerance, true);

  if (std::abs(mass) <= kZeroMassTolerance && total_variation(mu) > 0.0) {
    const auto pair = to_probability_pair(mu);
    const double d = mmd2(kernel, pair.p, pair.q);
    const double tv = total_variation(difference(pair.p.measure(), pair.q.measure()));
    add("pair_mmd2", d, cfg.mmd_tolerance, true);
    add("pair_total_variation", tv, cfg.min_total_variation, false);
    report.mmd_rows.push_back({"witness-pair", "witness", d, tv,
                               d <= cfg.mmd_tolerance && tv >= cfg.min_total_variation});
  } else {
    const double inf = std::numeric_limits<double>::infinity();
    add("pair_mmd2", inf, cfg.mmd_tolerance, true);
    add("pair_total_variation", 0.0, cfg.min_total_variation, false);
  }
  return report;
}

}  // namespace kuniv
