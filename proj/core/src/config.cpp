#include "kuniv/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "kuniv/error.hpp"

namespace kuniv {

namespace {

using Keys = std::initializer_list<std::string_view>;

[[noreturn]] void fail(ErrorCode code, const YAML::Node& node, const std::string& path,
                       const std::string& message) {
  const auto mark = node.Mark();
  if (mark.line >= 0) throw ConfigError(code, path, message, mark.line + 1, mark.column + 1);
  throw ConfigError(code, path, message);
}

[[noreturn]] void invalid(const YAML::Node& node, const std::string& path,
                          const std::string& message) {
  fail(ErrorCode::InvalidValue, node, path, message);
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void require_map(const YAML::Node& node, const std::string& path) {
  if (!node.IsMap()) invalid(node, path, "expected a mapping");
}

void check_keys(const YAML::Node& map, const std::string& path, Keys allowed) {
  require_map(map, path);
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      invalid(kv.first, join(path, key), "unknown key");
    }
  }
}

double number(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) invalid(n, path, "expected a number");
  double v = 0.0;
  try {
    v = n.as<double>();
  } catch (const YAML::Exception&) {
    invalid(n, path, "expected a number, got '" + n.Scalar() + "'");
  }
  if (!std::isfinite(v)) invalid(n, path, "must be finite");
  return v;
}

double positive(const YAML::Node& n, const std::string& path) {
  const double v = number(n, path);
  if (!(v > 0.0)) invalid(n, path, "must be > 0");
  return v;
}

double nonnegative(const YAML::Node& n, const std::string& path) {
  const double v = number(n, path);
  if (!(v >= 0.0)) invalid(n, path, "must be >= 0");
  return v;
}

std::size_t count(const YAML::Node& n, const std::string& path, std::size_t min) {
  if (!n.IsScalar()) invalid(n, path, "expected an integer");
  long long v = 0;
  try {
    v = n.as<long long>();
  } catch (const YAML::Exception&) {
    invalid(n, path, "expected an integer, got '" + n.Scalar() + "'");
  }
  if (v < static_cast<long long>(min)) invalid(n, path, "must be >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

std::string text(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) invalid(n, path, "expected a string");
  return n.Scalar();
}

std::vector<double> numbers(const YAML::Node& n, const std::string& path) {
  if (!n.IsSequence()) invalid(n, path, "expected a list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    out.push_back(number(n[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::pair<double, double> interval(const YAML::Node& n, const std::string& path) {
  const auto v = numbers(n, path);
  if (v.size() != 2) invalid(n, path, "expected [lo, hi]");
  if (!(v[0] < v[1])) invalid(n, path, "needs lo < hi");
  return {v[0], v[1]};
}

std::vector<Atom> atoms(const YAML::Node& n, const std::string& path) {
  if (!n.IsSequence()) invalid(n, path, "expected a list of [location, mass] pairs");
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    const auto v = numbers(n[i], p);
    if (v.size() != 2) invalid(n[i], p, "expected [location, mass]");
    out.push_back({v[0], v[1]});
  }
  return out;
}

ExpectKind expect_kind(const YAML::Node& n, const std::string& path) {
  const auto s = text(n, path);
  for (auto k : {ExpectKind::None, ExpectKind::Converge, ExpectKind::Plateau,
                 ExpectKind::LowerBound}) {
    if (to_string(k) == s) return k;
  }
  invalid(n, path, "expected none, converge, plateau or lower-bound");
}

std::vector<TargetSpec> targets(const YAML::Node& n, const std::string& path) {
  if (!n.IsSequence()) invalid(n, path, "expected a list of targets");
  std::vector<TargetSpec> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    const auto& t = n[i];
    TargetSpec spec;
    if (t.IsScalar()) {
      spec.name = t.Scalar();
    } else {
      check_keys(t, p, {"name", "expect", "tolerance", "floor"});
      if (!t["name"]) invalid(t, join(p, "name"), "missing");
      spec.name = text(t["name"], join(p, "name"));
      if (t["expect"]) spec.expect.kind = expect_kind(t["expect"], join(p, "expect"));
      if (t["tolerance"]) spec.expect.tolerance = positive(t["tolerance"], join(p, "tolerance"));
      if (t["floor"]) spec.expect.floor = positive(t["floor"], join(p, "floor"));
    }
    try {
      (void)make_target(spec.name);
    } catch (const Error& e) {
      invalid(t, p, e.detail());
    }
    out.push_back(std::move(spec));
  }
  if (out.empty()) invalid(n, path, "needs at least one target");
  return out;
}

// Kernel parameters keep their YAML scalar type: integers, numbers, strings, lists.
FamilyParam family_param(const YAML::Node& n, const std::string& path) {
  static const std::regex integer(R"(^[-+]?[0-9]+$)");
  if (n.IsSequence()) return numbers(n, path);
  if (!n.IsScalar()) invalid(n, path, "expected a scalar or a list");
  const auto& s = n.Scalar();
  if (std::regex_match(s, integer)) return static_cast<std::int64_t>(n.as<long long>());
  try {
    const double v = n.as<double>();
    if (std::isfinite(v)) return v;
  } catch (const YAML::Exception&) {
  }
  return s;
}

void parse_kernel(const YAML::Node& n, RunConfig& cfg) {
  require_map(n, "kernel");
  if (!n["family"]) invalid(n, "kernel.family", "missing");
  cfg.family = text(n["family"], "kernel.family");
  if (find_family(cfg.family) == nullptr) {
    fail(ErrorCode::UnknownFamily, n["family"], "kernel.family",
         "unknown kernel family '" + cfg.family + "'");
  }
  FamilyParams given;
  for (const auto& kv : n) {
    const auto key = kv.first.as<std::string>();
    if (key == "family") continue;
    given[key] = family_param(kv.second, "kernel." + key);
  }
  try {
    cfg.kernel_params = complete_params(cfg.family, given);
  } catch (const ConfigError& e) {
    const auto key = e.field_path().substr(std::string("kernel.").size());
    if (n[key]) fail(e.code(), n[key], e.field_path(), e.detail());
    throw;
  }
}

Action action(const YAML::Node& n, const std::string& path) {
  const auto s = text(n, path);
  for (auto a : {Action::Classify, Action::ProbeDense, Action::ProbeWitness, Action::ProbeMmd,
                 Action::ProbeExp, Action::ProbeMuntz}) {
    if (to_string(a) == s) return a;
  }
  invalid(n, path,
          "unknown action '" + s +
              "' (classify, probe-dense, probe-witness, probe-mmd, probe-exp, probe-muntz)");
}

void parse_classify(const YAML::Node& n, ClassifySection& c) {
  check_keys(n, "classify", {"pollard_window", "pollard_terms", "muntz_horizon"});
  if (n["pollard_window"]) c.pollard_window = positive(n["pollard_window"], "classify.pollard_window");
  if (n["pollard_terms"]) c.pollard_terms = count(n["pollard_terms"], "classify.pollard_terms", 4);
  if (n["muntz_horizon"]) c.muntz_horizon = count(n["muntz_horizon"], "classify.muntz_horizon", 1);
}

void parse_dense(const YAML::Node& n, DensenessProbeConfig& d) {
  const std::string p = "probe-dense";
  check_keys(n, p, {"interval", "targets", "center_counts", "grid", "ridge"});
  if (n["interval"]) std::tie(d.lo, d.hi) = interval(n["interval"], p + ".interval");
  if (n["targets"]) d.targets = targets(n["targets"], p + ".targets");
  if (n["center_counts"]) {
    const auto& cc = n["center_counts"];
    if (!cc.IsSequence() || cc.size() == 0) invalid(cc, p + ".center_counts", "expected a list");
    d.center_counts.clear();
    for (std::size_t i = 0; i < cc.size(); ++i) {
      const auto path = p + ".center_counts[" + std::to_string(i) + "]";
      const std::size_t c = count(cc[i], path, 2);
      if (!d.center_counts.empty()) {
        const std::size_t prev = d.center_counts.back();
        if (c <= prev) invalid(cc[i], path, "counts must be strictly increasing");
        if ((c - 1) % (prev - 1) != 0) {
          invalid(cc[i], path, "counts must nest: (n_k - 1) must divide (n_{k+1} - 1)");
        }
      }
      d.center_counts.push_back(c);
    }
  }
  if (n["grid"]) d.grid = count(n["grid"], p + ".grid", 2);
  if (n["ridge"]) d.ridge = nonnegative(n["ridge"], p + ".ridge");
}

void parse_witness(const YAML::Node& n, WitnessProbeConfig& w) {
  const std::string p = "probe-witness";
  check_keys(n, p,
             {"gap", "truncation", "grid", "xi_samples", "x_points", "x_radius", "mass_tolerance",
              "fourier_tolerance", "embed_tolerance", "mmd_tolerance", "min_total_variation"});
  if (n["gap"]) std::tie(w.gap_lo, w.gap_hi) = interval(n["gap"], p + ".gap");
  if (n["truncation"]) w.truncation = positive(n["truncation"], p + ".truncation");
  if (n["grid"]) w.grid = count(n["grid"], p + ".grid", 2);
  if (n["xi_samples"]) w.xi_samples = count(n["xi_samples"], p + ".xi_samples", 1);
  if (n["x_points"]) w.x_points = count(n["x_points"], p + ".x_points", 1);
  if (n["x_radius"]) w.x_radius = nonnegative(n["x_radius"], p + ".x_radius");
  if (n["mass_tolerance"]) w.mass_tolerance = positive(n["mass_tolerance"], p + ".mass_tolerance");
  if (n["fourier_tolerance"]) {
    w.fourier_tolerance = positive(n["fourier_tolerance"], p + ".fourier_tolerance");
  }
  if (n["embed_tolerance"]) w.embed_tolerance = positive(n["embed_tolerance"], p + ".embed_tolerance");
  if (n["mmd_tolerance"]) w.mmd_tolerance = positive(n["mmd_tolerance"], p + ".mmd_tolerance");
  if (n["min_total_variation"]) {
    w.min_total_variation = nonnegative(n["min_total_variation"], p + ".min_total_variation");
  }
}

MmdExpect mmd_expect(const YAML::Node& n, const std::string& path) {
  const auto s = text(n, path);
  if (s == "auto") return MmdExpect::Auto;
  if (s == "separate") return MmdExpect::Separate;
  if (s == "witness") return MmdExpect::Witness;
  if (s == "none") return MmdExpect::None;
  invalid(n, path, "expected auto, separate, witness or none");
}

void check_probability(const YAML::Node& n, const std::string& path, const std::vector<Atom>& a) {
  try {
    ProbabilityMeasure pm{SignedMeasure(a)};
    (void)pm;
  } catch (const Error& e) {
    invalid(n, path, e.detail());
  }
}

void parse_mmd(const YAML::Node& n, MmdSection& m) {
  const std::string p = "probe-mmd";
  check_keys(n, p, {"pairs"});
  if (!n["pairs"]) return;
  const auto& pairs = n["pairs"];
  if (!pairs.IsSequence()) invalid(pairs, p + ".pairs", "expected a list");
  m.pairs.clear();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto path = p + ".pairs[" + std::to_string(i) + "]";
    const auto& e = pairs[i];
    check_keys(e, path, {"label", "p", "q", "witness", "expect"});
    MmdPairSpec spec;
    spec.label = e["label"] ? text(e["label"], join(path, "label")) : "pair-" + std::to_string(i);
    if (e["witness"]) {
      const auto w = text(e["witness"], join(path, "witness"));
      if (w != "true" && w != "false") invalid(e["witness"], join(path, "witness"), "expected true or false");
      spec.witness = w == "true";
    }
    if (!spec.witness) {
      if (!e["p"] || !e["q"]) invalid(e, path, "needs p and q atoms (or witness: true)");
      spec.p = atoms(e["p"], join(path, "p"));
      spec.q = atoms(e["q"], join(path, "q"));
      check_probability(e["p"], join(path, "p"), spec.p);
      check_probability(e["q"], join(path, "q"), spec.q);
    } else if (e["p"] || e["q"]) {
      invalid(e, path, "witness pairs take no p or q");
    }
    if (e["expect"]) spec.expect = mmd_expect(e["expect"], join(path, "expect"));
    m.pairs.push_back(std::move(spec));
  }
}

void parse_exp(const YAML::Node& n, ExpSection& x) {
  const std::string p = "probe-exp";
  check_keys(n, p, {"lambdas", "sequence", "radius", "targets", "grid", "ridge"});
  if (n["lambdas"] && n["sequence"]) invalid(n, p, "give either lambdas or sequence");
  if (n["lambdas"]) {
    x.lambdas = numbers(n["lambdas"], p + ".lambdas");
    auto sorted = x.lambdas;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      invalid(n["lambdas"], p + ".lambdas", "must be non-empty and pairwise distinct");
    }
  }
  if (n["sequence"]) {
    const auto& s = n["sequence"];
    const auto sp = p + ".sequence";
    check_keys(s, sp, {"kind", "parameter", "terms"});
    if (!s["kind"]) invalid(s, sp + ".kind", "missing");
    x.sequence = text(s["kind"], sp + ".kind");
    if (x.sequence != "nlog" && x.sequence != "powerlaw" && x.sequence != "linear") {
      invalid(s["kind"], sp + ".kind", "expected nlog, powerlaw or linear");
    }
    if (s["parameter"]) x.sequence_parameter = positive(s["parameter"], sp + ".parameter");
    if (x.sequence != "nlog" && x.sequence_parameter <= 0.0) {
      invalid(s, sp + ".parameter", "required for " + x.sequence);
    }
    if (x.sequence == "powerlaw" && !(x.sequence_parameter < 1.0)) {
      invalid(s["parameter"], sp + ".parameter", "exponent must lie in (0, 1)");
    }
    if (!s["terms"]) invalid(s, sp + ".terms", "missing");
    x.terms = count(s["terms"], sp + ".terms", 1);
  }
  if (n["radius"]) x.radius = positive(n["radius"], p + ".radius");
  if (n["targets"]) x.targets = targets(n["targets"], p + ".targets");
  if (n["grid"]) x.grid = count(n["grid"], p + ".grid", 2);
  if (n["ridge"]) x.ridge = nonnegative(n["ridge"], p + ".ridge");
}

void parse_muntz(const YAML::Node& n, MuntzProbeConfig& m) {
  const std::string p = "probe-muntz";
  check_keys(n, p, {"support", "indices", "base", "horizon", "targets", "grid", "ridge"});
  FamilyParams params{{"support", std::string("full")},
                      {"indices", std::vector<double>{}},
                      {"base", std::int64_t{2}}};
  if (n["support"]) params["support"] = text(n["support"], p + ".support");
  if (n["indices"]) params["indices"] = numbers(n["indices"], p + ".indices");
  if (n["base"]) params["base"] = static_cast<std::int64_t>(count(n["base"], p + ".base", 2));
  // Reuse the polynomial family's support grammar.
  try {
    const auto full = complete_params("polynomial", params);
    const auto k = build_kernel("polynomial", full);
    m.support = k.get_if<Polynomial>()->coeffs.support();
  } catch (const ConfigError& e) {
    const auto key = e.field_path().substr(std::string("kernel.").size());
    fail(e.code(), n[key] ? n[key] : n, p + "." + key, e.detail());
  }
  if (n["horizon"]) m.horizon = count(n["horizon"], p + ".horizon", 1);
  if (n["targets"]) m.targets = targets(n["targets"], p + ".targets");
  if (n["grid"]) m.grid = count(n["grid"], p + ".grid", 2);
  if (n["ridge"]) m.ridge = nonnegative(n["ridge"], p + ".ridge");
}

void require_targets(const YAML::Node& root, const char* section, bool empty) {
  if (empty) invalid(root[section] ? root[section] : root, std::string(section) + ".targets", "missing");
}

}  // namespace

std::string to_string(Action action) {
  switch (action) {
    case Action::Classify: return "classify";
    case Action::ProbeDense: return "probe-dense";
    case Action::ProbeWitness: return "probe-witness";
    case Action::ProbeMmd: return "probe-mmd";
    case Action::ProbeExp: return "probe-exp";
    case Action::ProbeMuntz: return "probe-muntz";
  }
  return "classify";
}

ExpProbeConfig resolve(const ExpSection& s) {
  ExpProbeConfig c{s.lambdas, s.radius, s.targets, s.grid, s.ridge};
  if (!s.sequence.empty()) {
    SequenceFamily f;
    if (s.sequence == "nlog") f = {SequenceKind::NOverLog, 0.0};
    if (s.sequence == "powerlaw") f = {SequenceKind::PowerLaw, s.sequence_parameter};
    if (s.sequence == "linear") f = {SequenceKind::Linear, s.sequence_parameter};
    c.lambdas.clear();
    for (std::size_t n = 1; n <= s.terms; ++n) c.lambdas.push_back(sequence_term(f, n));
  }
  return c;
}

RunConfig parse_config(const std::string& content) {
  YAML::Node root;
  try {
    root = YAML::Load(content);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(ErrorCode::ParseError, "", e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root.IsMap()) {
    throw ConfigError(ErrorCode::ParseError, "", "config must be a mapping", 1, 1);
  }
  check_keys(root, "",
             {"kernel", "actions", "seed", "output", "classify", "probe-dense", "probe-witness",
              "probe-mmd", "probe-exp", "probe-muntz"});

  RunConfig cfg;
  if (!root["kernel"]) invalid(root, "kernel", "missing");
  parse_kernel(root["kernel"], cfg);

  if (!root["actions"]) invalid(root, "actions", "missing");
  const auto& acts = root["actions"];
  if (!acts.IsSequence() || acts.size() == 0) invalid(acts, "actions", "expected a non-empty list");
  for (std::size_t i = 0; i < acts.size(); ++i) {
    cfg.actions.push_back(action(acts[i], "actions[" + std::to_string(i) + "]"));
  }

  if (root["seed"]) {
    const auto& s = root["seed"];
    try {
      cfg.seed = s.as<std::uint64_t>();
    } catch (const YAML::Exception&) {
      invalid(s, "seed", "expected a non-negative integer");
    }
  }
  if (root["output"]) {
    const auto& o = root["output"];
    check_keys(o, "output", {"dir", "prefix"});
    if (o["dir"]) cfg.output_dir = text(o["dir"], "output.dir");
    if (o["prefix"]) cfg.output_prefix = text(o["prefix"], "output.prefix");
    if (cfg.output_prefix.empty() ||
        cfg.output_prefix.find_first_of("/\\") != std::string::npos) {
      invalid(o["prefix"], "output.prefix", "must be a plain non-empty file name prefix");
    }
  }
  if (root["classify"]) parse_classify(root["classify"], cfg.classify);
  if (root["probe-dense"]) parse_dense(root["probe-dense"], cfg.dense);
  if (root["probe-witness"]) parse_witness(root["probe-witness"], cfg.witness);
  if (root["probe-mmd"]) parse_mmd(root["probe-mmd"], cfg.mmd);
  if (root["probe-exp"]) parse_exp(root["probe-exp"], cfg.exp);
  if (root["probe-muntz"]) parse_muntz(root["probe-muntz"], cfg.muntz);

  const auto has = [&](Action a) {
    return std::find(cfg.actions.begin(), cfg.actions.end(), a) != cfg.actions.end();
  };
  if (has(Action::ProbeDense)) require_targets(root, "probe-dense", cfg.dense.targets.empty());
  if (has(Action::ProbeMuntz)) require_targets(root, "probe-muntz", cfg.muntz.targets.empty());
  if (has(Action::ProbeExp)) {
    require_targets(root, "probe-exp", cfg.exp.targets.empty());
    if (cfg.exp.lambdas.empty() && cfg.exp.sequence.empty()) {
      invalid(root["probe-exp"] ? root["probe-exp"] : root, "probe-exp.lambdas",
              "missing (give lambdas or sequence)");
    }
  }
  if (has(Action::ProbeMmd) && cfg.mmd.pairs.empty()) {
    invalid(root["probe-mmd"] ? root["probe-mmd"] : root, "probe-mmd.pairs", "missing");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cli", "cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

void emit_param(YAML::Emitter& out, const FamilyParam& v) {
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::vector<double>>) {
          out << YAML::Flow << YAML::BeginSeq;
          for (double d : x) out << d;
          out << YAML::EndSeq;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          out << static_cast<long long>(x);
        } else {
          out << x;
        }
      },
      v);
}

void emit_pair(YAML::Emitter& out, double a, double b) {
  out << YAML::Flow << YAML::BeginSeq << a << b << YAML::EndSeq;
}

void emit_targets(YAML::Emitter& out, const std::vector<TargetSpec>& targets) {
  out << YAML::Key << "targets" << YAML::Value << YAML::BeginSeq;
  for (const auto& t : targets) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << t.name;
    out << YAML::Key << "expect" << YAML::Value << to_string(t.expect.kind);
    out << YAML::Key << "tolerance" << YAML::Value << t.expect.tolerance;
    if (t.expect.floor) out << YAML::Key << "floor" << YAML::Value << *t.expect.floor;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
}

void emit_atoms(YAML::Emitter& out, const char* key, const std::vector<Atom>& atoms) {
  out << YAML::Key << key << YAML::Value << YAML::BeginSeq;
  for (const auto& a : atoms) emit_pair(out, a.location, a.mass);
  out << YAML::EndSeq;
}

std::string mmd_expect_name(MmdExpect e) {
  switch (e) {
    case MmdExpect::Auto: return "auto";
    case MmdExpect::Separate: return "separate";
    case MmdExpect::Witness: return "witness";
    case MmdExpect::None: return "none";
  }
  return "auto";
}

void emit_support(YAML::Emitter& out, const IndexSupport& s) {
  std::string name = "full";
  std::vector<double> indices;
  std::size_t base = 2;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, FiniteComplement>) {
          name = "finite-complement";
          indices.assign(k.excluded.begin(), k.excluded.end());
        } else if constexpr (std::is_same_v<K, EvenOnly>) {
          name = "even";
        } else if constexpr (std::is_same_v<K, OddOnly>) {
          name = "odd";
        } else if constexpr (std::is_same_v<K, ExplicitIndices>) {
          name = "explicit";
          indices.assign(k.members.begin(), k.members.end());
        } else if constexpr (std::is_same_v<K, Lacunary>) {
          name = "lacunary";
          base = k.base;
        }
      },
      s);
  out << YAML::Key << "support" << YAML::Value << name;
  out << YAML::Key << "indices" << YAML::Value;
  emit_param(out, indices);
  out << YAML::Key << "base" << YAML::Value << static_cast<long long>(base);
}

}  // namespace

std::string to_yaml(const RunConfig& cfg) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;

  out << YAML::Key << "kernel" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "family" << YAML::Value << cfg.family;
  for (const auto& [k, v] : cfg.kernel_params) {
    out << YAML::Key << k << YAML::Value;
    emit_param(out, v);
  }
  out << YAML::EndMap;

  out << YAML::Key << "actions" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (auto a : cfg.actions) out << to_string(a);
  out << YAML::EndSeq;
  out << YAML::Key << "seed" << YAML::Value << static_cast<unsigned long long>(cfg.seed);

  out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
  if (!cfg.output_dir.empty()) {
    out << YAML::Key << "dir" << YAML::Value << YAML::DoubleQuoted << cfg.output_dir;
  }
  out << YAML::Key << "prefix" << YAML::Value << YAML::DoubleQuoted << cfg.output_prefix;
  out << YAML::EndMap;

  const auto& c = cfg.classify;
  out << YAML::Key << "classify" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "pollard_window" << YAML::Value << c.pollard_window;
  out << YAML::Key << "pollard_terms" << YAML::Value << static_cast<long long>(c.pollard_terms);
  out << YAML::Key << "muntz_horizon" << YAML::Value << static_cast<long long>(c.muntz_horizon);
  out << YAML::EndMap;

  const auto& d = cfg.dense;
  out << YAML::Key << "probe-dense" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "interval" << YAML::Value;
  emit_pair(out, d.lo, d.hi);
  if (!d.targets.empty()) emit_targets(out, d.targets);
  out << YAML::Key << "center_counts" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (auto n : d.center_counts) out << static_cast<long long>(n);
  out << YAML::EndSeq;
  out << YAML::Key << "grid" << YAML::Value << static_cast<long long>(d.grid);
  out << YAML::Key << "ridge" << YAML::Value << d.ridge;
  out << YAML::EndMap;

  const auto& w = cfg.witness;
  out << YAML::Key << "probe-witness" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "gap" << YAML::Value;
  emit_pair(out, w.gap_lo, w.gap_hi);
  out << YAML::Key << "truncation" << YAML::Value << w.truncation;
  out << YAML::Key << "grid" << YAML::Value << static_cast<long long>(w.grid);
  out << YAML::Key << "xi_samples" << YAML::Value << static_cast<long long>(w.xi_samples);
  out << YAML::Key << "x_points" << YAML::Value << static_cast<long long>(w.x_points);
  out << YAML::Key << "x_radius" << YAML::Value << w.x_radius;
  out << YAML::Key << "mass_tolerance" << YAML::Value << w.mass_tolerance;
  out << YAML::Key << "fourier_tolerance" << YAML::Value << w.fourier_tolerance;
  out << YAML::Key << "embed_tolerance" << YAML::Value << w.embed_tolerance;
  out << YAML::Key << "mmd_tolerance" << YAML::Value << w.mmd_tolerance;
  out << YAML::Key << "min_total_variation" << YAML::Value << w.min_total_variation;
  out << YAML::EndMap;

  if (!cfg.mmd.pairs.empty()) {
    out << YAML::Key << "probe-mmd" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "pairs" << YAML::Value << YAML::BeginSeq;
    for (const auto& p : cfg.mmd.pairs) {
      out << YAML::BeginMap;
      out << YAML::Key << "label" << YAML::Value << YAML::DoubleQuoted << p.label;
      if (p.witness) {
        out << YAML::Key << "witness" << YAML::Value << "true";
      } else {
        emit_atoms(out, "p", p.p);
        emit_atoms(out, "q", p.q);
      }
      out << YAML::Key << "expect" << YAML::Value << mmd_expect_name(p.expect);
      out << YAML::EndMap;
    }
    out << YAML::EndSeq << YAML::EndMap;
  }

  const auto& x = cfg.exp;
  out << YAML::Key << "probe-exp" << YAML::Value << YAML::BeginMap;
  if (!x.sequence.empty()) {
    out << YAML::Key << "sequence" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << x.sequence;
    if (x.sequence_parameter > 0.0) {
      out << YAML::Key << "parameter" << YAML::Value << x.sequence_parameter;
    }
    out << YAML::Key << "terms" << YAML::Value << static_cast<long long>(x.terms);
    out << YAML::EndMap;
  } else if (!x.lambdas.empty()) {
    out << YAML::Key << "lambdas" << YAML::Value;
    emit_param(out, x.lambdas);
  }
  out << YAML::Key << "radius" << YAML::Value << x.radius;
  if (!x.targets.empty()) emit_targets(out, x.targets);
  out << YAML::Key << "grid" << YAML::Value << static_cast<long long>(x.grid);
  out << YAML::Key << "ridge" << YAML::Value << x.ridge;
  out << YAML::EndMap;

  const auto& m = cfg.muntz;
  out << YAML::Key << "probe-muntz" << YAML::Value << YAML::BeginMap;
  emit_support(out, m.support);
  out << YAML::Key << "horizon" << YAML::Value << static_cast<long long>(m.horizon);
  if (!m.targets.empty()) emit_targets(out, m.targets);
  out << YAML::Key << "grid" << YAML::Value << static_cast<long long>(m.grid);
  out << YAML::Key << "ridge" << YAML::Value << m.ridge;
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace kuniv
