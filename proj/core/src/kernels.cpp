#include "kuniv/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "kuniv/error.hpp"

namespace kuniv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kTailTermsMax = 4000;

[[noreturn]] void not_series() {
  throw Error(ErrorCode::NotSeriesKernel, "kernels",
              "operation requires a series kernel (Hilbert-Schmidt or polynomial)");
}

const SpectralMeasure& checked_spectral(const TranslationInvariant& ti) {
  if (!ti.spectral.symmetric()) {
    throw Error(ErrorCode::AsymmetricSpectralMeasure, "kernels",
                "spectral measure is not symmetric under negation; kernel would be complex");
  }
  if (ti.spectral.support().dimension() != 1) {
    throw Error(ErrorCode::InvalidValue, "kernels",
                "numeric evaluation is limited to one dimension");
  }
  return ti.spectral;
}

double cosine_sum(const SpectralMeasure& nu, double s) {
  double sum = 0.0;
  for (const auto& node : nu.nodes()) sum += node.weight * std::cos(s * node.location);
  return sum;
}

// log lambda_n^2 for a weighted polynomial feature.
double log_bound_sq(const WeightedPolynomial& wp, std::size_t n) {
  const double la = wp.coeffs.log_coefficient(n);
  if (la == -kInf) return -kInf;
  return la + 2.0 * wp.weight.log_sup_times_power(n);
}

bool weighted_summable(const WeightedPolynomial& wp) {
  switch (wp.weight.family) {
    case WeightFamily::Gaussian:
      // lambda_n^2 ~ (s / 2a)^n / sqrt(2 pi n)
      return wp.coeffs.scale() < 2.0 * wp.weight.parameter;
    case WeightFamily::CompactBump:
      return true;
    case WeightFamily::ExpAbs:
    case WeightFamily::RationalDecay:
      return false;
  }
  return false;
}

double weighted_tail(const WeightedPolynomial& wp) {
  const std::size_t n0 = wp.coeffs.truncation_order() + 1;
  double sum = 0.0;
  for (std::size_t n = n0; n < n0 + kTailTermsMax; ++n) {
    const double term = std::exp(log_bound_sq(wp, n));
    sum += term;
    if (n > n0 + 16 && term <= 1e-18 * std::max(sum, 1e-300)) break;
  }
  return sum;
}

}  // namespace

KernelSpec::KernelSpec(Body body, std::string label)
    : body_(std::move(body)), label_(std::move(label)) {
  std::visit(
      [this](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, TranslationInvariant>) {
          summable_ = false;
          uniform_tail_ = 0.0;
        } else if constexpr (std::is_same_v<K, HilbertSchmidt>) {
          if (k.features.features.empty()) {
            throw Error(ErrorCode::InvalidValue, "kernels", "feature sequence is empty");
          }
          summable_ = k.features.summable;
          uniform_tail_ = k.features.tail_bound;
        } else if constexpr (std::is_same_v<K, Polynomial>) {
          summable_ = false;
          uniform_tail_ = kInf;
        } else {
          summable_ = weighted_summable(k);
          uniform_tail_ = summable_ ? weighted_tail(k) : kInf;
        }
      },
      body_);
}

std::string KernelSpec::kind_name() const {
  switch (body_.index()) {
    case 0: return "translation-invariant";
    case 1: return "hilbert-schmidt";
    case 2: return "polynomial";
    default: return "weighted-polynomial";
  }
}

std::size_t KernelSpec::truncation_order() const {
  if (const auto* hs = get_if<HilbertSchmidt>()) return hs->features.features.size() - 1;
  if (const auto* p = get_if<Polynomial>()) return p->coeffs.truncation_order();
  if (const auto* wp = get_if<WeightedPolynomial>()) return wp->coeffs.truncation_order();
  not_series();
}

double KernelSpec::feature(std::size_t n, double x) const {
  if (const auto* hs = get_if<HilbertSchmidt>()) {
    if (n >= hs->features.features.size()) return 0.0;
    return hs->features.features[n].phi(x);
  }
  if (const auto* p = get_if<Polynomial>()) {
    const double a = p->coeffs(n);
    return a == 0.0 ? 0.0 : std::sqrt(a) * std::pow(x, static_cast<double>(n));
  }
  if (const auto* wp = get_if<WeightedPolynomial>()) {
    const double a = wp->coeffs(n);
    if (a == 0.0) return 0.0;
    const double w = wp->weight(x);
    return w == 0.0 ? 0.0 : std::sqrt(a) * w * std::pow(x, static_cast<double>(n));
  }
  not_series();
}

double KernelSpec::feature_sup_bound(std::size_t n) const {
  if (const auto* hs = get_if<HilbertSchmidt>()) {
    return n < hs->features.features.size() ? hs->features.features[n].sup_bound : 0.0;
  }
  if (const auto* p = get_if<Polynomial>()) {
    const double a = p->coeffs(n);
    if (a == 0.0) return 0.0;
    return n == 0 ? std::sqrt(a) : kInf;
  }
  if (const auto* wp = get_if<WeightedPolynomial>()) {
    const double l = log_bound_sq(*wp, n);
    return l == -kInf ? 0.0 : std::exp(0.5 * l);
  }
  not_series();
}

bool KernelSpec::summable_feature_bounds() const { return summable_; }

double KernelSpec::uniform_tail_bound() const { return uniform_tail_; }

SeriesValue eval_with_tail(const KernelSpec& kernel, double x, double y) {
  if (const auto* ti = kernel.get_if<TranslationInvariant>()) {
    return {cosine_sum(checked_spectral(*ti), x - y), 0.0};
  }
  const std::size_t n_max = kernel.truncation_order();
  double sum = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) sum += kernel.feature(n, x) * kernel.feature(n, y);

  double tail = kernel.uniform_tail_bound();
  if (const auto* p = kernel.get_if<Polynomial>()) {
    tail = p->coeffs.tail_bound(x * y);
  } else if (const auto* wp = kernel.get_if<WeightedPolynomial>()) {
    tail = std::min(tail, wp->weight(x) * wp->weight(y) * wp->coeffs.tail_bound(x * y));
  }
  return {sum, tail};
}

double eval(const KernelSpec& kernel, double x, double y) {
  return eval_with_tail(kernel, x, y).value;
}

Eigen::MatrixXd gram(const KernelSpec& kernel, std::span<const double> points) {
  std::vector<double> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DuplicatePoints, "kernels", "Gram points must be pairwise distinct");
  }
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j; k < n; ++k) {
      const double v = eval(kernel, points[static_cast<std::size_t>(j)],
                            points[static_cast<std::size_t>(k)]);
      g(j, k) = v;
      g(k, j) = v;
    }
  }
  return g;
}

Eigen::MatrixXd cross_gram(const KernelSpec& kernel, std::span<const double> xs,
                           std::span<const double> ys) {
  Eigen::MatrixXd g(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t k = 0; k < ys.size(); ++k) {
      g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = eval(kernel, xs[j], ys[k]);
    }
  }
  return g;
}

double embed(const KernelSpec& kernel, const SignedMeasure& mu, double x) {
  double sum = 0.0;
  for (const auto& node : mu.quadrature_nodes()) {
    if (node.weight == 0.0) continue;
    sum += node.weight * eval(kernel, x, node.location);
  }
  return sum;
}

std::vector<double> embed_many(const KernelSpec& kernel, const SignedMeasure& mu,
                               std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  const auto* ti = kernel.get_if<TranslationInvariant>();
  if (ti == nullptr) {
    for (double x : xs) out.push_back(embed(kernel, mu, x));
    return out;
  }
  const auto& nu = checked_spectral(*ti);
  std::vector<std::complex<double>> mu_hat;
  mu_hat.reserve(nu.nodes().size());
  for (const auto& s : nu.nodes()) mu_hat.push_back(fourier(mu, s.location));
  for (double x : xs) {
    double sum = 0.0;
    for (std::size_t j = 0; j < mu_hat.size(); ++j) {
      const auto& s = nu.nodes()[j];
      sum += s.weight * (std::polar(1.0, x * s.location) * mu_hat[j]).real();
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<double> feature_embed(const KernelSpec& kernel, const SignedMeasure& mu) {
  if (!kernel.is_series()) not_series();
  const std::size_t n_max = kernel.truncation_order();
  const auto nodes = mu.quadrature_nodes();
  std::vector<double> out(n_max + 1, 0.0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    double sum = 0.0;
    for (const auto& node : nodes) {
      if (node.weight == 0.0) continue;
      sum += node.weight * kernel.feature(n, node.location);
    }
    out[n] = sum;
  }
  return out;
}

double quadratic_form(const KernelSpec& kernel, std::span<const QuadratureNode> nodes) {
  if (const auto* ti = kernel.get_if<TranslationInvariant>()) {
    const auto& nu = checked_spectral(*ti);
    double sum = 0.0;
    for (const auto& s : nu.nodes()) {
      std::complex<double> z{0.0, 0.0};
      for (const auto& node : nodes) {
        if (node.weight != 0.0) z += node.weight * std::polar(1.0, node.location * s.location);
      }
      sum += s.weight * std::norm(z);
    }
    return sum;
  }
  const std::size_t n_max = kernel.truncation_order();
  double sum = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    double m = 0.0;
    for (const auto& node : nodes) {
      if (node.weight != 0.0) m += node.weight * kernel.feature(n, node.location);
    }
    sum += m * m;
  }
  return sum;
}

double quadratic_form_direct(const KernelSpec& kernel, std::span<const QuadratureNode> nodes) {
  double sum = 0.0;
  for (const auto& a : nodes) {
    if (a.weight == 0.0) continue;
    double row = 0.0;
    for (const auto& b : nodes) {
      if (b.weight != 0.0) row += b.weight * eval(kernel, a.location, b.location);
    }
    sum += a.weight * row;
  }
  return sum;
}

double mmd2(const KernelSpec& kernel, const ProbabilityMeasure& p, const ProbabilityMeasure& q) {
  auto nodes = p.measure().quadrature_nodes();
  for (auto node : q.measure().quadrature_nodes()) {
    node.weight = -node.weight;
    nodes.push_back(node);
  }
  return quadratic_form(kernel, nodes);
}

}  // namespace kuniv
