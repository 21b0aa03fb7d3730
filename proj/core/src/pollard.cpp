#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "kuniv/classify.hpp"
#include "kuniv/error.hpp"

namespace kuniv {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kPositivityGrid = 4001;
constexpr std::size_t kWitnessGrid = 801;
constexpr double kWitnessTolerance = 1e-2;

[[noreturn]] void contradiction(const std::string& message) {
  throw Error(ErrorCode::FlagContradiction, "classify", message);
}

bool vanishes_on(const WeightSpec& w, double lo, double hi) {
  for (double x : uniform_grid(lo, hi, 257)) {
    if (w.log_value(x) == kNegInf) return true;
  }
  return false;
}

// Integral of log omega / (1 + x^2) over [lo, hi]; -inf if omega vanishes there.
double log_piece(const WeightSpec& w, double lo, double hi) {
  if (vanishes_on(w, lo, hi)) return kNegInf;
  auto f = [&w](double x) { return w.log_value(x) / (1.0 + x * x); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12);
}

enum class Trend { Diverging, Converging, Inconclusive };

// Decrements between consecutive decades: unbounded-looking decrease keeps
// the decrement from shrinking, a convergent integral shrinks it geometrically.
Trend classify_trend(const std::vector<PartialIntegral>& trace) {
  if (trace.size() < 3) return Trend::Inconclusive;
  if (trace.back().value == kNegInf) return Trend::Diverging;
  const std::size_t k = trace.size() - 1;
  const double d_last = trace[k - 1].value - trace[k].value;
  const double d_prev = trace[k - 2].value - trace[k - 1].value;
  if (!(d_last > 0.0) || !(d_prev > 0.0)) return Trend::Inconclusive;
  const double ratio = d_last / d_prev;
  if (ratio >= 0.5) return Trend::Diverging;
  if (ratio <= 0.25) return Trend::Converging;
  return Trend::Inconclusive;
}

Tri combine(Tri a, Tri b, Tri c) {
  if (a == Tri::Yes && b == Tri::Yes && c == Tri::Yes) return Tri::Yes;
  if (a == Tri::No || b == Tri::No || c == Tri::No) return Tri::No;
  return Tri::Unknown;
}

}  // namespace

PollardReport check_pollard(const WeightSpec& weight, double window, std::size_t n_terms) {
  if (!(window > 0.0) || !std::isfinite(window)) {
    throw Error(ErrorCode::InvalidValue, "classify", "Pollard window must be > 0");
  }
  PollardReport r;

  // Condition 1: declared flag, refuted by any zero on the grid.
  if (weight.positive_everywhere) {
    for (double x : uniform_grid(-window, window, kPositivityGrid)) {
      if (weight.log_value(x) == kNegInf) {
        contradiction("weight declared positive everywhere but omega(" + std::to_string(x) +
                      ") = 0");
      }
    }
    r.condition1 = Tri::Yes;
  } else {
    r.condition1 = Tri::No;
  }

  // Condition 2: partial integrals over [-T, T] for T = 1, 10, 100, ... <= window.
  double lo_sum = 0.0;
  double hi_sum = 0.0;
  double prev = 0.0;
  for (double t = 1.0; t <= window * (1.0 + 1e-12); t *= 10.0) {
    lo_sum += log_piece(weight, -t, -prev);
    hi_sum += log_piece(weight, prev, t);
    r.log_integral_trace.push_back({t, lo_sum + hi_sum});
    prev = t;
  }
  const Trend trend = classify_trend(r.log_integral_trace);
  if (weight.log_integral_diverges == Tri::Yes && trend == Trend::Converging) {
    contradiction("log-integral declared divergent but partial integrals converge");
  }
  if (weight.log_integral_diverges == Tri::No && trend == Trend::Diverging) {
    contradiction("log-integral declared convergent but partial integrals keep decreasing");
  }
  r.condition2 = weight.log_integral_diverges;

  // Condition 3: the witness p_n omega must approach 1 uniformly with a uniform bound.
  r.condition3 = weight.bounded_inverse_poly_approx;
  if (weight.witness) {
    if (n_terms < 4) {
      throw Error(ErrorCode::InvalidValue, "classify", "Pollard witness check needs n_terms >= 4");
    }
    r.witness_family = family_name(*weight.witness);
    // p_n omega ~ 1 on a * x^2 <= n / 4, where the Taylor tail is negligible.
    r.witness_half_width =
        std::min(window, std::sqrt(static_cast<double>(n_terms) / (4.0 * weight.parameter)));
    const auto xs = uniform_grid(-r.witness_half_width, r.witness_half_width, kWitnessGrid);
    for (std::size_t n = 0; n <= n_terms; ++n) {
      double err = 0.0;
      for (double x : xs) {
        const double v = std::exp(std::log(weight.witness_polynomial(n, x)) + weight.log_value(x));
        err = std::max(err, std::abs(v - 1.0));
        r.witness_bound = std::max(r.witness_bound, std::abs(v));
      }
      r.witness_sup_error.push_back(err);
    }
    if (weight.bounded_inverse_poly_approx == Tri::Yes) {
      const auto& e = r.witness_sup_error;
      bool monotone = true;
      for (std::size_t n = 1; n < e.size(); ++n) monotone = monotone && e[n] <= e[n - 1] + 1e-12;
      if (!std::isfinite(r.witness_bound) || !monotone || e.back() > kWitnessTolerance) {
        contradiction("declared witness p_n omega does not converge uniformly to 1");
      }
    }
  }

  r.overall = combine(r.condition1, r.condition2, r.condition3);
  return r;
}

}  // namespace kuniv
