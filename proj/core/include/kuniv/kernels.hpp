#pragma once

#include <Eigen/Core>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kuniv/measures.hpp"
#include "kuniv/series.hpp"
#include "kuniv/spectral.hpp"

namespace kuniv {

/// K(x, y) = integral of exp(i (x - y) xi) d nu(xi).
struct TranslationInvariant {
  SpectralMeasure spectral;
};

/// K(x, y) = sum_n phi_n(x) phi_n(y) with explicit features.
struct HilbertSchmidt {
  FeatureSequence features;
};

/// K(x, y) = sum_n alpha_n x^n y^n.
struct Polynomial {
  CoefficientSequence coeffs;
};

/// K(x, y) = sum_n alpha_n omega(x) x^n omega(y) y^n.
struct WeightedPolynomial {
  CoefficientSequence coeffs;
  WeightSpec weight;
};

class KernelSpec {
 public:
  using Body = std::variant<TranslationInvariant, HilbertSchmidt, Polynomial, WeightedPolynomial>;

  explicit KernelSpec(Body body, std::string label = {});

  const Body& body() const noexcept { return body_; }
  const std::string& label() const noexcept { return label_; }

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&body_);
  }

  bool is_series() const noexcept { return !std::holds_alternative<TranslationInvariant>(body_); }
  std::string kind_name() const;

  // Series kernels only (NotSeriesKernel otherwise). Features are indexed
  // 0..truncation_order().
  std::size_t truncation_order() const;
  double feature(std::size_t n, double x) const;

  /// lambda_n with |phi_n| <= lambda_n on R (+inf when no finite bound).
  double feature_sup_bound(std::size_t n) const;

  /// sum_n lambda_n < inf, as certified by the kernel's family.
  bool summable_feature_bounds() const;

  /// sum_{n > N} lambda_n^2, the uniform truncation error of eval.
  double uniform_tail_bound() const;

 private:
  Body body_;
  std::string label_;
  double uniform_tail_ = 0.0;
  bool summable_ = false;
};

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;  // 0 for translation-invariant kernels
};

/// Throws AsymmetricSpectralMeasure for a translation-invariant kernel whose
/// spectral measure is not symmetric.
double eval(const KernelSpec& kernel, double x, double y);
SeriesValue eval_with_tail(const KernelSpec& kernel, double x, double y);

/// Symmetric Gram matrix; throws DuplicatePoints when two points coincide.
Eigen::MatrixXd gram(const KernelSpec& kernel, std::span<const double> points);

/// K(x_j, y_k) for all j, k.
Eigen::MatrixXd cross_gram(const KernelSpec& kernel, std::span<const double> xs,
                           std::span<const double> ys);

/// integral of K(x, t) d mu(t).
double embed(const KernelSpec& kernel, const SignedMeasure& mu, double x);

/// embed at several points. Translation-invariant kernels go through
/// sum_j c_j Re(exp(i x xi_j) mu_hat(xi_j)) over the spectral nodes.
std::vector<double> embed_many(const KernelSpec& kernel, const SignedMeasure& mu,
                               std::span<const double> xs);

/// (integral of phi_n d mu) for n = 0..N; throws NotSeriesKernel for
/// translation-invariant kernels.
std::vector<double> feature_embed(const KernelSpec& kernel, const SignedMeasure& mu);

/// Squared RKHS distance between the kernel mean embeddings of P and Q.
double mmd2(const KernelSpec& kernel, const ProbabilityMeasure& p, const ProbabilityMeasure& q);

/// integral of integral K(x, t) d mu(x) d mu(t) over a node list.
/// Translation-invariant kernels use the spectral factorization
/// sum_j c_j |sum_i w_i exp(i t_i xi_j)|^2, series kernels the feature
/// factorization; both are exact rewrites of the double sum.
double quadratic_form(const KernelSpec& kernel, std::span<const QuadratureNode> nodes);

/// Plain double sum over all node pairs; O(n^2) kernel evaluations.
double quadratic_form_direct(const KernelSpec& kernel, std::span<const QuadratureNode> nodes);

}  // namespace kuniv
