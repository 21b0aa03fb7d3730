#include "kuniv/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "kuniv/error.hpp"

namespace kuniv {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr std::size_t kMaxSequenceScan = 10'000'000;

bool close(double a, double b) {
  return std::abs(a - b) <= kSymmetryTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

struct DerivedFlags {
  Tri accumulation = Tri::Unknown;
  Tri limsup = Tri::Unknown;
  std::optional<bool> contains_zero;
};

DerivedFlags derive(const SupportKind& kind) {
  DerivedFlags f;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, FullSpace>) {
          if (k.dimension < 1) {
            throw Error(ErrorCode::InvalidValue, "kernels", "full-space dimension must be >= 1");
          }
          f.accumulation = Tri::Yes;
          f.limsup = Tri::Yes;
          f.contains_zero = true;
        } else if constexpr (std::is_same_v<K, IntervalUnion>) {
          if (k.intervals.empty()) {
            throw Error(ErrorCode::InvalidValue, "kernels", "interval union is empty");
          }
          bool interior = false;
          bool zero = false;
          for (const auto& iv : k.intervals) {
            if (!(iv.lo <= iv.hi)) {
              throw Error(ErrorCode::InvalidValue, "kernels", "interval with lo > hi");
            }
            interior = interior || iv.lo < iv.hi;
            zero = zero || (iv.lo <= 0.0 && 0.0 <= iv.hi);
          }
          f.accumulation = tri_from_bool(interior);
          f.contains_zero = zero;
        } else if constexpr (std::is_same_v<K, FiniteSet>) {
          f.accumulation = Tri::No;
          f.limsup = Tri::No;
          f.contains_zero = std::any_of(k.points.begin(), k.points.end(),
                                        [](double p) { return p == 0.0; });
        } else {
          switch (k.kind) {
            case SequenceKind::Linear:
              if (!(k.parameter > 0.0)) {
                throw Error(ErrorCode::InvalidValue, "kernels", "linear sequence step must be > 0");
              }
              f.limsup = Tri::No;
              break;
            case SequenceKind::PowerLaw:
              if (!(k.parameter > 0.0 && k.parameter < 1.0)) {
                throw Error(ErrorCode::InvalidValue, "kernels",
                            "power-law exponent must lie in (0, 1)");
              }
              f.limsup = Tri::Yes;
              break;
            case SequenceKind::NOverLog:
              f.limsup = Tri::Yes;
              break;
          }
          f.accumulation = Tri::No;
          f.contains_zero = false;
        }
      },
      kind);
  return f;
}

void check_flag(const char* name, Tri derived, Tri declared) {
  if (derived != Tri::Unknown && declared != Tri::Unknown && derived != declared) {
    throw Error(ErrorCode::FlagContradiction, "kernels",
                std::string("declared ") + name + " = " + std::string(to_string(declared)) +
                    " contradicts the support kind (" + std::string(to_string(derived)) + ")");
  }
}

}  // namespace

double sequence_term(const SequenceFamily& family, std::size_t n) {
  const double x = static_cast<double>(n);
  switch (family.kind) {
    case SequenceKind::Linear: return family.parameter * x;
    case SequenceKind::PowerLaw: return std::pow(x, family.parameter);
    case SequenceKind::NOverLog: return x / std::log(x + 1.0);
  }
  return x;
}

std::string sequence_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Linear: return "linear";
    case SequenceKind::PowerLaw: return "power-law";
    case SequenceKind::NOverLog: return "n-over-log";
  }
  return "unknown";
}

SupportDescriptor SupportDescriptor::of(SupportKind kind) {
  const auto f = derive(kind);
  SupportDescriptor d;
  d.kind = std::move(kind);
  d.has_finite_accumulation_point = f.accumulation;
  d.limsup_n_over_lambda_infinite = f.limsup;
  d.contains_zero = f.contains_zero.value_or(false);
  return d;
}

SupportDescriptor SupportDescriptor::declared(SupportKind kind, Tri accumulation, Tri limsup,
                                              bool contains_zero) {
  const auto f = derive(kind);
  check_flag("has_finite_accumulation_point", f.accumulation, accumulation);
  check_flag("limsup_n_over_lambda_infinite", f.limsup, limsup);
  if (f.contains_zero && *f.contains_zero != contains_zero) {
    throw Error(ErrorCode::FlagContradiction, "kernels",
                "declared contains_zero contradicts the support kind");
  }
  SupportDescriptor d;
  d.kind = std::move(kind);
  d.has_finite_accumulation_point = f.accumulation != Tri::Unknown ? f.accumulation : accumulation;
  d.limsup_n_over_lambda_infinite = f.limsup != Tri::Unknown ? f.limsup : limsup;
  d.contains_zero = contains_zero;
  return d;
}

int SupportDescriptor::dimension() const {
  if (const auto* fs = std::get_if<FullSpace>(&kind)) return fs->dimension;
  return 1;
}

bool SupportDescriptor::meets_open_interval(double lo, double hi) const {
  return std::visit(
      [&](const auto& k) -> bool {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, FullSpace>) {
          return lo < hi;
        } else if constexpr (std::is_same_v<K, IntervalUnion>) {
          return std::any_of(k.intervals.begin(), k.intervals.end(),
                             [&](const Interval& iv) { return iv.lo < hi && iv.hi > lo; });
        } else if constexpr (std::is_same_v<K, FiniteSet>) {
          return std::any_of(k.points.begin(), k.points.end(),
                             [&](double p) { return lo < p && p < hi; });
        } else {
          // Members are +-lambda_n with lambda_n increasing in n.
          const double reach = std::max(std::abs(lo), std::abs(hi));
          for (std::size_t n = 1; n < kMaxSequenceScan; ++n) {
            const double l = sequence_term(k, n);
            if ((lo < l && l < hi) || (lo < -l && -l < hi)) return true;
            if (l >= reach) return false;
          }
          return true;
        }
      },
      kind);
}

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms, std::optional<GriddedDensity> density,
                                 SupportDescriptor support)
    : measure_(std::move(atoms), std::move(density)), support_(std::move(support)) {
  for (const auto& a : measure_.atoms()) {
    if (a.mass < 0.0) {
      throw Error(ErrorCode::InvalidValue, "kernels", "spectral measure has a negative atom");
    }
  }
  if (const auto& d = measure_.density()) {
    for (double v : d->values) {
      if (v < 0.0) {
        throw Error(ErrorCode::InvalidValue, "kernels",
                    "spectral density has a negative value");
      }
    }
  }

  const auto& at = measure_.atoms();
  symmetric_ = true;
  for (std::size_t i = 0, j = at.size(); i < at.size() && symmetric_; ++i) {
    --j;
    symmetric_ = close(at[i].location, -at[j].location) && close(at[i].mass, at[j].mass);
  }
  if (const auto& d = measure_.density(); d && symmetric_) {
    const std::size_t n = d->grid.size();
    for (std::size_t i = 0; i < n && symmetric_; ++i) {
      symmetric_ = close(d->grid[i], -d->grid[n - 1 - i]) &&
                   close(d->values[i], d->values[n - 1 - i]);
    }
  }

  for (const auto& node : measure_.quadrature_nodes()) {
    if (node.weight > 0.0) nodes_.push_back(node);
  }
}

double SpectralMeasure::total_mass() const { return kuniv::total_mass(measure_); }

}  // namespace kuniv
