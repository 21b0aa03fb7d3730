#pragma once

// Seeded generators shared by the unit tests.

#include <cmath>
#include <random>
#include <vector>

#include "kuniv/families.hpp"
#include "kuniv/measures.hpp"

namespace kuniv::test {

inline std::vector<Atom> random_atoms(std::mt19937_64& rng, int count, double radius) {
  std::uniform_real_distribution<double> loc(-radius, radius), mass(-1.0, 1.0);
  std::vector<Atom> atoms;
  for (int i = 0; i < count; ++i) atoms.push_back({loc(rng), mass(rng)});
  return atoms;
}

// Mixed measure: random atoms plus a smooth signed density on [-2, 2].
inline SignedMeasure random_measure(std::mt19937_64& rng, bool with_density) {
  std::uniform_int_distribution<int> n(1, 6);
  auto atoms = random_atoms(rng, n(rng), 3.0);
  if (!with_density) return SignedMeasure(std::move(atoms));
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  const double a = c(rng), b = c(rng), shift = c(rng);
  GriddedDensity d{uniform_grid(-2.0, 2.0, 201), {}};
  for (double x : d.grid) d.values.push_back(a * std::exp(-(x - shift) * (x - shift)) + b * x);
  return SignedMeasure(std::move(atoms), std::move(d));
}

inline std::vector<double> random_points(std::mt19937_64& rng, int count, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(u(rng));
  return xs;
}

inline KernelSpec family(const char* name, FamilyParams params = {}) {
  return build_kernel(name, params);
}

}  // namespace kuniv::test
