#include "kuniv/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kuniv/error.hpp"

namespace kuniv {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidValue, "measures", message);
}

void validate_density(const GriddedDensity& d) {
  if (d.grid.size() < 2) invalid("density grid needs at least 2 nodes");
  if (d.values.size() != d.grid.size()) {
    invalid("density has " + std::to_string(d.values.size()) + " values for " +
            std::to_string(d.grid.size()) + " grid nodes");
  }
  for (std::size_t i = 0; i < d.grid.size(); ++i) {
    if (!std::isfinite(d.grid[i]) || !std::isfinite(d.values[i])) {
      invalid("density contains a non-finite entry at node " + std::to_string(i));
    }
    if (i > 0 && !(d.grid[i] > d.grid[i - 1])) {
      invalid("density grid is not strictly increasing at node " + std::to_string(i));
    }
  }
}

std::vector<Atom> normalize_atoms(std::vector<Atom> atoms) {
  for (const auto& a : atoms) {
    if (!std::isfinite(a.location) || !std::isfinite(a.mass)) {
      invalid("atom with non-finite location or mass");
    }
  }
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& l, const Atom& r) { return l.location < r.location; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!merged.empty() &&
        std::abs(a.location - merged.back().location) <= kAtomMergeTolerance) {
      merged.back().mass += a.mass;
    } else {
      merged.push_back(a);
    }
  }
  return merged;
}

double interpolate(const GriddedDensity& d, double x) {
  if (x < d.grid.front() || x > d.grid.back()) return 0.0;
  auto it = std::lower_bound(d.grid.begin(), d.grid.end(), x);
  auto i = static_cast<std::size_t>(it - d.grid.begin());
  if (d.grid[i] == x) return d.values[i];
  const double t = (x - d.grid[i - 1]) / (d.grid[i] - d.grid[i - 1]);
  return (1.0 - t) * d.values[i - 1] + t * d.values[i];
}

}  // namespace

std::vector<double> trapezoid_weights(std::span<const double> grid) {
  std::vector<double> w(grid.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double half = 0.5 * (grid[i + 1] - grid[i]);
    w[i] += half;
    w[i + 1] += half;
  }
  return w;
}

double trapezoid(std::span<const double> grid, std::span<const double> values) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    sum += 0.5 * (grid[i + 1] - grid[i]) * (values[i] + values[i + 1]);
  }
  return sum;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2 || !(hi > lo)) invalid("uniform grid needs n >= 2 and lo < hi");
  std::vector<double> g(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

SignedMeasure::SignedMeasure(std::vector<Atom> atoms, std::optional<GriddedDensity> density)
    : atoms_(normalize_atoms(std::move(atoms))), density_(std::move(density)) {
  if (density_) validate_density(*density_);
}

SignedMeasure SignedMeasure::dirac(double location, double mass) {
  return SignedMeasure({Atom{location, mass}});
}

SignedMeasure SignedMeasure::from_density(GriddedDensity density) {
  return SignedMeasure({}, std::move(density));
}

SignedMeasure SignedMeasure::scaled(double factor) const {
  SignedMeasure out = *this;
  for (auto& a : out.atoms_) a.mass *= factor;
  if (out.density_) {
    for (auto& v : out.density_->values) v *= factor;
  }
  return out;
}

std::vector<QuadratureNode> SignedMeasure::quadrature_nodes() const {
  std::vector<QuadratureNode> nodes;
  nodes.reserve(atoms_.size() + (density_ ? density_->grid.size() : 0));
  for (const auto& a : atoms_) nodes.push_back({a.location, a.mass});
  if (density_) {
    const auto w = trapezoid_weights(density_->grid);
    for (std::size_t i = 0; i < w.size(); ++i) {
      nodes.push_back({density_->grid[i], w[i] * density_->values[i]});
    }
  }
  return nodes;
}

ProbabilityMeasure::ProbabilityMeasure(SignedMeasure measure, double mass_tolerance)
    : measure_(std::move(measure)) {
  for (const auto& a : measure_.atoms()) {
    if (a.mass < 0.0) invalid("probability measure has a negative atom mass");
  }
  if (measure_.density()) {
    for (double v : measure_.density()->values) {
      if (v < 0.0) invalid("probability measure has a negative density value");
    }
  }
  const double m = total_mass(measure_);
  if (std::abs(m - 1.0) > mass_tolerance) {
    invalid("probability measure has total mass " + std::to_string(m));
  }
}

ProbabilityMeasure ProbabilityMeasure::dirac(double location) {
  return ProbabilityMeasure(SignedMeasure::dirac(location, 1.0));
}

double total_mass(const SignedMeasure& mu) {
  double sum = 0.0;
  for (const auto& a : mu.atoms()) sum += a.mass;
  if (mu.density()) sum += trapezoid(mu.density()->grid, mu.density()->values);
  return sum;
}

double total_variation(const SignedMeasure& mu) {
  double sum = 0.0;
  for (const auto& a : mu.atoms()) sum += std::abs(a.mass);
  if (const auto& d = mu.density()) {
    std::vector<double> abs_values(d->values.size());
    std::transform(d->values.begin(), d->values.end(), abs_values.begin(),
                   [](double v) { return std::abs(v); });
    sum += trapezoid(d->grid, abs_values);
  }
  return sum;
}

JordanPair hahn_jordan(const SignedMeasure& mu) {
  std::vector<Atom> pos;
  std::vector<Atom> neg;
  for (const auto& a : mu.atoms()) {
    if (a.mass > 0.0) pos.push_back(a);
    if (a.mass < 0.0) neg.push_back({a.location, -a.mass});
  }
  std::optional<GriddedDensity> dpos;
  std::optional<GriddedDensity> dneg;
  if (const auto& d = mu.density()) {
    dpos = GriddedDensity{d->grid, std::vector<double>(d->values.size())};
    dneg = GriddedDensity{d->grid, std::vector<double>(d->values.size())};
    for (std::size_t i = 0; i < d->values.size(); ++i) {
      const double v = d->values[i];
      dpos->values[i] = v > 0.0 ? v : 0.0;
      dneg->values[i] = v < 0.0 ? -v : 0.0;
    }
  }
  return {SignedMeasure(std::move(pos), std::move(dpos)),
          SignedMeasure(std::move(neg), std::move(dneg))};
}

ProbabilityPair to_probability_pair(const SignedMeasure& mu) {
  if (total_variation(mu) == 0.0) {
    throw Error(ErrorCode::ZeroMeasure, "measures", "measure has zero total variation");
  }
  const double m = total_mass(mu);
  if (std::abs(m) > kZeroMassTolerance) {
    throw Error(ErrorCode::NonzeroTotalMass, "measures",
                "total mass " + std::to_string(m) + " exceeds tolerance");
  }
  auto [pos, neg] = hahn_jordan(mu);
  const double c = total_mass(pos);
  // mu-(X) = C - mu(X), so Q's mass can miss 1 by |mu(X)| / C.
  const double q_tolerance =
      std::max(kProbabilityMassTolerance, 2.0 * kZeroMassTolerance / c);
  return {c, ProbabilityMeasure(pos.scaled(1.0 / c)),
          ProbabilityMeasure(neg.scaled(1.0 / c), q_tolerance)};
}

SignedMeasure difference(const SignedMeasure& a, const SignedMeasure& b) {
  std::vector<Atom> atoms = a.atoms();
  for (const auto& atom : b.atoms()) atoms.push_back({atom.location, -atom.mass});

  const auto& da = a.density();
  const auto& db = b.density();
  std::optional<GriddedDensity> density;
  if (da && db) {
    if (da->grid == db->grid) {
      density = GriddedDensity{da->grid, da->values};
      for (std::size_t i = 0; i < db->values.size(); ++i) density->values[i] -= db->values[i];
    } else {
      std::vector<double> grid;
      std::merge(da->grid.begin(), da->grid.end(), db->grid.begin(), db->grid.end(),
                 std::back_inserter(grid));
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      std::vector<double> values(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = interpolate(*da, grid[i]) - interpolate(*db, grid[i]);
      }
      density = GriddedDensity{std::move(grid), std::move(values)};
    }
  } else if (da) {
    density = *da;
  } else if (db) {
    density = GriddedDensity{db->grid, db->values};
    for (auto& v : density->values) v = -v;
  }
  return SignedMeasure(std::move(atoms), std::move(density));
}

std::complex<double> fourier(const SignedMeasure& mu, double xi) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& a : mu.atoms()) {
    sum += a.mass * std::polar(1.0, -a.location * xi);
  }
  if (const auto& d = mu.density()) {
    const auto w = trapezoid_weights(d->grid);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (d->values[i] == 0.0) continue;
      sum += (w[i] * d->values[i]) * std::polar(1.0, -d->grid[i] * xi);
    }
  }
  return sum;
}

}  // namespace kuniv
