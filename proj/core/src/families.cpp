#include "kuniv/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kuniv/error.hpp"

namespace kuniv {

namespace {

using L = std::vector<double>;

const std::vector<FamilyInfo>& registry() {
  static const std::vector<FamilyInfo> families = {
      {"gaussian-ti", "K(x, y) = exp(-(x - y)^2 / (2 sigma^2)), nu Gaussian on R",
       {{"bandwidth", ParamType::Number, 1.0, "sigma"},
        {"window", ParamType::Number, 10.0, "spectral grid covers |xi| <= window / sigma"},
        {"grid", ParamType::Integer, std::int64_t{801}, "spectral grid nodes"}}},
      {"sinc-ti", "nu = height * Lebesgue on [-c, c]; K(s) = 2 height sin(c s) / s",
       {{"half_width", ParamType::Number, 1.0, "c"},
        {"height", ParamType::Number, 1.0, "density value"},
        {"grid", ParamType::Integer, std::int64_t{801}, "spectral grid nodes"}}},
      {"bandpass-ti", "nu = density 1 on [lo, hi] and its mirror, zero in between",
       {{"lo", ParamType::Number, 1.0, "inner edge"},
        {"hi", ParamType::Number, 2.0, "outer edge"},
        {"step", ParamType::Number, 0.01, "spectral grid step over [-hi, hi]"}}},
      {"cosine-ti", "nu = (delta_w + delta_-w) / 2; K(x, y) = cos(w (x - y))",
       {{"frequency", ParamType::Number, 1.0, "w"}}},
      {"constant-ti", "nu = delta_0; K = 1", {}},
      {"finite-ti", "atoms at +-frequencies with half the listed mass on each side",
       {{"frequencies", ParamType::NumberList, L{1.0}, "nonnegative, distinct"},
        {"masses", ParamType::NumberList, L{1.0}, "positive, one per frequency"}}},
      {"nlog-ti", "atoms at +-n / log(n + 1) with mass 1 / (2 n^2 log(n + 1))",
       {{"terms", ParamType::Integer, std::int64_t{200}, "atoms per side"}}},
      {"powerlaw-ti", "atoms at +-n^p, 0 < p < 1, mass 1 / (2 n^2)",
       {{"exponent", ParamType::Number, 0.5, "p"},
        {"terms", ParamType::Integer, std::int64_t{200}, "atoms per side"}}},
      {"lattice-ti", "atoms at +-step * n, n >= 1, mass 1 / (2 n^2)",
       {{"step", ParamType::Number, 1.0, "lattice step"},
        {"terms", ParamType::Integer, std::int64_t{200}, "atoms per side"}}},
      {"polynomial", "K(x, y) = sum alpha_n x^n y^n, alpha_n = s^n / n! on the support",
       {{"scale", ParamType::Number, 1.0, "s"},
        {"support", ParamType::Text, std::string("full"),
         "full | even | odd | lacunary | explicit | finite-complement"},
        {"indices", ParamType::NumberList, L{}, "members (explicit) or exclusions"},
        {"base", ParamType::Integer, std::int64_t{2}, "lacunary base"},
        {"truncation", ParamType::Integer, std::int64_t{40}, "truncation order N"}}},
      {"weighted-polynomial", "K(x, y) = sum alpha_n omega(x) x^n omega(y) y^n",
       {{"scale", ParamType::Number, 1.0, "s"},
        {"support", ParamType::Text, std::string("full"),
         "full | even | odd | lacunary | explicit | finite-complement"},
        {"indices", ParamType::NumberList, L{}, "members (explicit) or exclusions"},
        {"base", ParamType::Integer, std::int64_t{2}, "lacunary base"},
        {"truncation", ParamType::Integer, std::int64_t{40}, "truncation order N"},
        {"weight", ParamType::Text, std::string("gaussian"),
         "gaussian | exp-abs | compact-bump | rational-decay"},
        {"weight_parameter", ParamType::Number, 1.0, "a"},
        {"positive_everywhere", ParamType::Text, std::string("auto"), "auto | yes | no"},
        {"log_integral_diverges", ParamType::Text, std::string("auto"),
         "auto | yes | no | unknown"},
        {"bounded_inverse_poly_approx", ParamType::Text, std::string("auto"),
         "auto | yes | no | unknown"},
        {"even_nonincreasing", ParamType::Text, std::string("auto"), "auto | yes | no"}}},
      {"cosine-series-hs",
       "features r^n cos(n x), r^n sin(n x), n = 0..terms; K(x, y) = sum r^(2n) cos(n (x - y))",
       {{"ratio", ParamType::Number, 0.5, "r in (0, 1)"},
        {"terms", ParamType::Integer, std::int64_t{20}, "highest harmonic"}}},
  };
  return families;
}

[[noreturn]] void bad(std::string_view param, const std::string& message) {
  throw ConfigError(ErrorCode::InvalidValue, "kernel." + std::string(param), message);
}

class Reader {
 public:
  explicit Reader(const FamilyParams& p) : p_(p) {}

  double number(std::string_view key) const { return std::get<double>(p_.at(std::string(key))); }
  double positive(std::string_view key) const {
    const double v = number(key);
    if (!(v > 0.0) || !std::isfinite(v)) bad(key, "must be finite and > 0");
    return v;
  }
  std::int64_t integer(std::string_view key, std::int64_t min) const {
    const auto v = std::get<std::int64_t>(p_.at(std::string(key)));
    if (v < min) bad(key, "must be >= " + std::to_string(min));
    return v;
  }
  std::size_t count(std::string_view key, std::int64_t min) const {
    return static_cast<std::size_t>(integer(key, min));
  }
  const std::string& text(std::string_view key) const {
    return std::get<std::string>(p_.at(std::string(key)));
  }
  const std::vector<double>& list(std::string_view key) const {
    return std::get<std::vector<double>>(p_.at(std::string(key)));
  }

 private:
  const FamilyParams& p_;
};

std::vector<std::size_t> index_list(const Reader& r) {
  std::vector<std::size_t> out;
  for (double v : r.list("indices")) {
    if (!(v >= 0.0) || v != std::floor(v)) bad("indices", "entries must be integers >= 0");
    out.push_back(static_cast<std::size_t>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexSupport index_support(const Reader& r) {
  const auto& s = r.text("support");
  if (s == "full") return FullIndexSet{};
  if (s == "even") return EvenOnly{};
  if (s == "odd") return OddOnly{};
  if (s == "lacunary") return Lacunary{r.count("base", 2)};
  if (s == "explicit") return ExplicitIndices{index_list(r)};
  if (s == "finite-complement") return FiniteComplement{index_list(r)};
  bad("support", "unknown support '" + s + "'");
}

CoefficientSequence coefficients(const Reader& r) {
  return CoefficientSequence(CoefficientFamily::Exponential, r.positive("scale"), index_support(r),
                             r.count("truncation", 0));
}

TranslationInvariant gridded(const std::vector<double>& grid, const std::vector<double>& values,
                             SupportKind kind) {
  return {SpectralMeasure({}, GriddedDensity{grid, values}, SupportDescriptor::of(std::move(kind)))};
}

TranslationInvariant symmetric_atoms(const std::vector<double>& locations,
                                     const std::vector<double>& masses, SupportKind kind) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < locations.size(); ++i) {
    if (locations[i] == 0.0) {
      atoms.push_back({0.0, masses[i]});
    } else {
      atoms.push_back({locations[i], 0.5 * masses[i]});
      atoms.push_back({-locations[i], 0.5 * masses[i]});
    }
  }
  return {SpectralMeasure(std::move(atoms), std::nullopt, SupportDescriptor::of(std::move(kind)))};
}

TranslationInvariant sequence_atoms(SequenceFamily family, std::size_t terms,
                                    double (*mass)(double n)) {
  std::vector<double> loc;
  std::vector<double> m;
  for (std::size_t n = 1; n <= terms; ++n) {
    loc.push_back(sequence_term(family, n));
    m.push_back(mass(static_cast<double>(n)));
  }
  return symmetric_atoms(loc, m, family);
}

Tri tri_flag(const Reader& r, std::string_view key, Tri fallback) {
  const auto& v = r.text(key);
  if (v == "auto") return fallback;
  if (v == "yes") return Tri::Yes;
  if (v == "no") return Tri::No;
  if (v == "unknown") return Tri::Unknown;
  bad(key, "expected auto, yes, no or unknown");
}

bool bool_flag(const Reader& r, std::string_view key, bool fallback) {
  const Tri t = tri_flag(r, key, tri_from_bool(fallback));
  if (t == Tri::Unknown) bad(key, "expected auto, yes or no");
  return t == Tri::Yes;
}

WeightFamily weight_family(const Reader& r) {
  const auto& w = r.text("weight");
  if (w == "gaussian") return WeightFamily::Gaussian;
  if (w == "exp-abs") return WeightFamily::ExpAbs;
  if (w == "compact-bump") return WeightFamily::CompactBump;
  if (w == "rational-decay") return WeightFamily::RationalDecay;
  bad("weight", "unknown weight '" + w + "'");
}

KernelSpec::Body build_body(std::string_view family, const Reader& r) {
  if (family == "gaussian-ti") {
    const double sigma = r.positive("bandwidth");
    const double reach = r.positive("window") / sigma;
    const auto grid = uniform_grid(-reach, reach, r.count("grid", 3));
    std::vector<double> values;
    for (double xi : grid) {
      values.push_back(sigma / std::sqrt(2.0 * std::numbers::pi) *
                       std::exp(-0.5 * sigma * sigma * xi * xi));
    }
    return gridded(grid, values, FullSpace{1});
  }
  if (family == "sinc-ti") {
    const double c = r.positive("half_width");
    const double h = r.positive("height");
    const auto grid = uniform_grid(-c, c, r.count("grid", 2));
    return gridded(grid, std::vector<double>(grid.size(), h), IntervalUnion{{{-c, c}}});
  }
  if (family == "bandpass-ti") {
    const double lo = r.positive("lo");
    const double hi = r.positive("hi");
    if (!(lo < hi)) bad("hi", "must exceed lo");
    const double step = r.positive("step");
    const auto n = static_cast<std::size_t>(std::llround(2.0 * hi / step)) + 1;
    if (n < 5) bad("step", "too coarse for the band");
    const auto grid = uniform_grid(-hi, hi, n);
    std::vector<double> values;
    const double eps = 1e-9 * step;
    for (double xi : grid) values.push_back(std::abs(xi) >= lo - eps ? 1.0 : 0.0);
    return gridded(grid, values, IntervalUnion{{{-hi, -lo}, {lo, hi}}});
  }
  if (family == "cosine-ti") {
    const double w = r.positive("frequency");
    return symmetric_atoms({w}, {1.0}, FiniteSet{{-w, w}});
  }
  if (family == "constant-ti") {
    return symmetric_atoms({0.0}, {1.0}, FiniteSet{{0.0}});
  }
  if (family == "finite-ti") {
    const auto& f = r.list("frequencies");
    const auto& m = r.list("masses");
    if (f.empty()) bad("frequencies", "must not be empty");
    if (m.size() != f.size()) bad("masses", "needs one mass per frequency");
    std::vector<double> points;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!(f[i] >= 0.0) || !std::isfinite(f[i])) bad("frequencies", "entries must be >= 0");
      if (!(m[i] > 0.0) || !std::isfinite(m[i])) bad("masses", "entries must be > 0");
      points.push_back(f[i]);
      if (f[i] != 0.0) points.push_back(-f[i]);
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
      bad("frequencies", "entries must be distinct");
    }
    return symmetric_atoms(f, m, FiniteSet{points});
  }
  if (family == "nlog-ti") {
    return sequence_atoms({SequenceKind::NOverLog, 0.0}, r.count("terms", 1),
                          [](double n) { return 1.0 / (n * n * std::log(n + 1.0)); });
  }
  if (family == "powerlaw-ti") {
    const double p = r.positive("exponent");
    if (!(p < 1.0)) bad("exponent", "must lie in (0, 1)");
    return sequence_atoms({SequenceKind::PowerLaw, p}, r.count("terms", 1),
                          [](double n) { return 1.0 / (n * n); });
  }
  if (family == "lattice-ti") {
    return sequence_atoms({SequenceKind::Linear, r.positive("step")}, r.count("terms", 1),
                          [](double n) { return 1.0 / (n * n); });
  }
  if (family == "polynomial") {
    return Polynomial{coefficients(r)};
  }
  if (family == "weighted-polynomial") {
    WeightSpec w = WeightSpec::standard(weight_family(r), r.positive("weight_parameter"));
    w.positive_everywhere = bool_flag(r, "positive_everywhere", w.positive_everywhere);
    w.log_integral_diverges = tri_flag(r, "log_integral_diverges", w.log_integral_diverges);
    w.bounded_inverse_poly_approx =
        tri_flag(r, "bounded_inverse_poly_approx", w.bounded_inverse_poly_approx);
    w.even_nonincreasing = bool_flag(r, "even_nonincreasing", w.even_nonincreasing);
    return WeightedPolynomial{coefficients(r), w};
  }
  if (family == "cosine-series-hs") {
    const double ratio = r.positive("ratio");
    if (!(ratio < 1.0)) bad("ratio", "must lie in (0, 1)");
    const std::size_t terms = r.count("terms", 0);
    FeatureSequence fs;
    fs.name = "cosine-series";
    fs.summable = true;
    for (std::size_t n = 0; n <= terms; ++n) {
      const double lambda = std::pow(ratio, static_cast<double>(n));
      const double k = static_cast<double>(n);
      fs.features.push_back({[lambda, k](double x) { return lambda * std::cos(k * x); }, lambda});
      if (n > 0) {
        fs.features.push_back({[lambda, k](double x) { return lambda * std::sin(k * x); }, lambda});
      }
      fs.partial_sum += (n > 0 ? 2.0 : 1.0) * lambda;
    }
    const double r2 = ratio * ratio;
    fs.tail_bound = 2.0 * std::pow(r2, static_cast<double>(terms + 1)) / (1.0 - r2);
    return HilbertSchmidt{std::move(fs)};
  }
  throw Error(ErrorCode::UnknownFamily, "cli", "unknown kernel family '" + std::string(family) + "'");
}

}  // namespace

std::span<const FamilyInfo> kernel_families() { return registry(); }

const FamilyInfo* find_family(std::string_view name) {
  const auto& r = registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const FamilyInfo& f) { return f.name == name; });
  return it == r.end() ? nullptr : &*it;
}

FamilyParams complete_params(std::string_view family, const FamilyParams& given) {
  const FamilyInfo* info = find_family(family);
  if (info == nullptr) {
    throw ConfigError(ErrorCode::UnknownFamily, "kernel.family",
                      "unknown kernel family '" + std::string(family) + "'");
  }
  FamilyParams out;
  for (const auto& def : info->params) out[std::string(def.name)] = def.default_value;
  for (const auto& [key, value] : given) {
    const auto def = std::find_if(info->params.begin(), info->params.end(),
                                  [&](const ParamDef& d) { return d.name == key; });
    if (def == info->params.end()) {
      bad(key, "unknown parameter for family '" + std::string(family) + "'");
    }
    FamilyParam v = value;
    if (def->type == ParamType::Number && std::holds_alternative<std::int64_t>(v)) {
      v = static_cast<double>(std::get<std::int64_t>(v));
    }
    if (v.index() != def->default_value.index()) bad(key, "wrong value type");
    out[key] = std::move(v);
  }
  // Range checks live in the builder.
  (void)build_body(family, Reader(out));
  return out;
}

KernelSpec build_kernel(std::string_view family, const FamilyParams& params) {
  const FamilyParams full = complete_params(family, params);
  return KernelSpec(build_body(family, Reader(full)), std::string(family));
}

}  // namespace kuniv
