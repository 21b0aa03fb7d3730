#include "kuniv/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kuniv/error.hpp"

namespace kuniv {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidValue, "kernels", message);
}

bool is_power_of(std::size_t n, std::size_t base) {
  if (n == 0) return false;
  while (n % base == 0) n /= base;
  return n == 1;
}

}  // namespace

bool contains(const IndexSupport& support, std::size_t n) {
  return std::visit(
      [n](const auto& s) -> bool {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, FullIndexSet>) {
          return true;
        } else if constexpr (std::is_same_v<S, FiniteComplement>) {
          return std::find(s.excluded.begin(), s.excluded.end(), n) == s.excluded.end();
        } else if constexpr (std::is_same_v<S, EvenOnly>) {
          return n % 2 == 0;
        } else if constexpr (std::is_same_v<S, OddOnly>) {
          return n % 2 == 1;
        } else if constexpr (std::is_same_v<S, ExplicitIndices>) {
          return std::find(s.members.begin(), s.members.end(), n) != s.members.end();
        } else {
          return is_power_of(n, s.base);
        }
      },
      support);
}

std::string describe(const IndexSupport& support) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        auto list = [](const std::vector<std::size_t>& v) {
          std::string out = "{";
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i]);
          }
          return out + "}";
        };
        if constexpr (std::is_same_v<S, FullIndexSet>) {
          return "full";
        } else if constexpr (std::is_same_v<S, FiniteComplement>) {
          return "finite-complement" + list(s.excluded);
        } else if constexpr (std::is_same_v<S, EvenOnly>) {
          return "even-only";
        } else if constexpr (std::is_same_v<S, OddOnly>) {
          return "odd-only";
        } else if constexpr (std::is_same_v<S, ExplicitIndices>) {
          return "explicit" + list(s.members);
        } else {
          return "lacunary(" + std::to_string(s.base) + "^k)";
        }
      },
      support);
}

std::vector<std::size_t> members_up_to(const IndexSupport& support, std::size_t horizon) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (contains(support, n)) out.push_back(n);
  }
  return out;
}

std::string family_name(CoefficientFamily family) {
  switch (family) {
    case CoefficientFamily::Exponential: return "exponential";
  }
  return "unknown";
}

CoefficientSequence::CoefficientSequence(CoefficientFamily family, double scale,
                                         IndexSupport support, std::size_t truncation_order)
    : family_(family), scale_(scale), support_(std::move(support)),
      truncation_order_(truncation_order) {
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) invalid("coefficient scale must be > 0");
  if (const auto* lac = std::get_if<Lacunary>(&support_); lac && lac->base < 2) {
    invalid("lacunary base must be >= 2");
  }
}

double CoefficientSequence::operator()(std::size_t n) const {
  return std::exp(log_coefficient(n));
}

double CoefficientSequence::log_coefficient(std::size_t n) const {
  if (!contains(support_, n)) return -std::numeric_limits<double>::infinity();
  const double x = static_cast<double>(n);
  return x * std::log(scale_) - std::lgamma(x + 1.0);
}

double CoefficientSequence::tail_bound(double z) const {
  const double w = scale_ * std::abs(z);
  if (w == 0.0) return 0.0;
  const double m = static_cast<double>(truncation_order_ + 1);
  return std::exp(m * std::log(w) - std::lgamma(m + 1.0) + w);
}

std::string family_name(WeightFamily family) {
  switch (family) {
    case WeightFamily::Gaussian: return "gaussian";
    case WeightFamily::ExpAbs: return "exp-abs";
    case WeightFamily::CompactBump: return "compact-bump";
    case WeightFamily::RationalDecay: return "rational-decay";
  }
  return "unknown";
}

std::string family_name(PolyWitness witness) {
  switch (witness) {
    case PolyWitness::GaussianTaylor: return "gaussian-taylor";
  }
  return "unknown";
}

WeightSpec WeightSpec::standard(WeightFamily family, double parameter) {
  if (!(parameter > 0.0)) invalid("weight parameter must be > 0");
  WeightSpec w;
  w.family = family;
  w.parameter = parameter;
  w.even_nonincreasing = true;
  switch (family) {
    case WeightFamily::Gaussian:
      w.positive_everywhere = true;
      w.log_integral_diverges = Tri::Yes;
      w.bounded_inverse_poly_approx = Tri::Yes;
      w.witness = PolyWitness::GaussianTaylor;
      break;
    case WeightFamily::ExpAbs:
      w.positive_everywhere = true;
      w.log_integral_diverges = Tri::Yes;
      w.bounded_inverse_poly_approx = Tri::Unknown;
      break;
    case WeightFamily::CompactBump:
      w.positive_everywhere = false;
      w.log_integral_diverges = Tri::Yes;
      w.bounded_inverse_poly_approx = Tri::Unknown;
      break;
    case WeightFamily::RationalDecay:
      w.positive_everywhere = true;
      w.log_integral_diverges = Tri::No;
      w.bounded_inverse_poly_approx = Tri::Unknown;
      break;
  }
  return w;
}

double WeightSpec::operator()(double x) const {
  const double a = parameter;
  switch (family) {
    case WeightFamily::Gaussian: return std::exp(-a * x * x);
    case WeightFamily::ExpAbs: return std::exp(-a * std::abs(x));
    case WeightFamily::CompactBump: {
      const double u = x / a;
      return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
    }
    case WeightFamily::RationalDecay: return 1.0 / (1.0 + a * x * x);
  }
  return 0.0;
}

double WeightSpec::log_value(double x) const {
  const double a = parameter;
  switch (family) {
    case WeightFamily::Gaussian: return -a * x * x;
    case WeightFamily::ExpAbs: return -a * std::abs(x);
    case WeightFamily::CompactBump: {
      const double u = x / a;
      return std::abs(u) < 1.0 ? -1.0 / (1.0 - u * u)
                               : -std::numeric_limits<double>::infinity();
    }
    case WeightFamily::RationalDecay: return -std::log1p(a * x * x);
  }
  return -std::numeric_limits<double>::infinity();
}

double WeightSpec::sup_times_power(std::size_t n) const {
  return std::exp(log_sup_times_power(n));
}

double WeightSpec::log_sup_times_power(std::size_t n) const {
  const double a = parameter;
  const double m = static_cast<double>(n);
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (family) {
    case WeightFamily::Gaussian:
      if (n == 0) return 0.0;
      return 0.5 * m * std::log(m / (2.0 * a * std::exp(1.0)));
    case WeightFamily::ExpAbs:
      if (n == 0) return 0.0;
      return m * std::log(m / (a * std::exp(1.0)));
    case WeightFamily::CompactBump: {
      if (n == 0) return -1.0;
      // Maximize (n/2) log u - 1/(1-u) over u = (x/a)^2 in (0, 1).
      double lo = 0.0;
      double hi = 1.0;
      for (int it = 0; it < 200; ++it) {
        const double u = 0.5 * (lo + hi);
        const double slope = 0.5 * m / u - 1.0 / ((1.0 - u) * (1.0 - u));
        (slope > 0.0 ? lo : hi) = u;
      }
      const double u = 0.5 * (lo + hi);
      return m * std::log(a) + 0.5 * m * std::log(u) - 1.0 / (1.0 - u);
    }
    case WeightFamily::RationalDecay:
      if (n == 0) return 0.0;
      if (n == 1) return std::log(0.5 / std::sqrt(a));
      return inf;
  }
  return inf;
}

double WeightSpec::witness_polynomial(std::size_t n, double x) const {
  if (!witness) invalid("weight declares no witness polynomial family");
  const double z = parameter * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    term *= z / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

}  // namespace kuniv
