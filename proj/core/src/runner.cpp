#include "kuniv/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "kuniv/error.hpp"
#include "report_json.hpp"

namespace kuniv {

namespace {

constexpr const char* kToolVersion = "0.3.0";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool is_probe(Action a) { return a != Action::Classify; }

struct Context {
  const RunConfig& cfg;
  const KernelSpec& kernel;
  std::uint64_t seed;
  RunResult& result;
  std::map<std::string, int> csv_names;
};

Json run_classify(Context& ctx, bool& passed) {
  Json j;
  const VerdictTriple t = classify_all(ctx.kernel);
  j["verdicts"] = to_json(t);
  if (const auto* wp = ctx.kernel.get_if<WeightedPolynomial>()) {
    j["pollard"] = to_json(check_pollard(wp->weight, ctx.cfg.classify.pollard_window,
                                         ctx.cfg.classify.pollard_terms));
  }
  const CoefficientSequence* coeffs = nullptr;
  if (const auto* p = ctx.kernel.get_if<Polynomial>()) coeffs = &p->coeffs;
  if (const auto* wp = ctx.kernel.get_if<WeightedPolynomial>()) coeffs = &wp->coeffs;
  if (coeffs != nullptr) {
    j["muntz"] = to_json(muntz_gap_analysis(*coeffs, ctx.cfg.classify.muntz_horizon));
  }
  passed = true;
  ctx.result.summary.push_back("classify: universal=" +
                               std::string(to_string(t.universal.status)) +
                               " characteristic=" + std::string(to_string(t.characteristic.status)) +
                               " c0_universal=" + std::string(to_string(t.c0_universal.status)));
  return j;
}

std::vector<MmdPair> mmd_pairs(const Context& ctx) {
  std::vector<MmdPair> pairs;
  for (const auto& spec : ctx.cfg.mmd.pairs) {
    if (spec.witness) {
      const auto* ti = ctx.kernel.get_if<TranslationInvariant>();
      if (ti == nullptr) {
        throw Error(ErrorCode::InvalidValue, "probe",
                    "witness pairs require a translation-invariant kernel");
      }
      const auto& w = ctx.cfg.witness;
      const auto mu = witness_gap_measure(ti->spectral, w.gap_lo, w.gap_hi, w.truncation, w.grid);
      auto pq = to_probability_pair(mu);
      pairs.push_back({spec.label, std::move(pq.p), std::move(pq.q), spec.expect});
    } else {
      pairs.push_back({spec.label, ProbabilityMeasure(SignedMeasure(spec.p)),
                       ProbabilityMeasure(SignedMeasure(spec.q)), spec.expect});
    }
  }
  return pairs;
}

ProbeReport run_probe(Context& ctx, Action a) {
  switch (a) {
    case Action::ProbeDense: return denseness_probe(ctx.kernel, ctx.cfg.dense);
    case Action::ProbeWitness: return witness_probe(ctx.kernel, ctx.cfg.witness, ctx.seed);
    case Action::ProbeMmd: return mmd_injectivity_probe(ctx.kernel, mmd_pairs(ctx));
    case Action::ProbeExp: return exponential_completeness_probe(resolve(ctx.cfg.exp));
    case Action::ProbeMuntz: return muntz_probe(ctx.cfg.muntz);
    case Action::Classify: break;
  }
  throw Error(ErrorCode::InvalidValue, "cli", "not a probe action");
}

std::string summarize(const std::string& action, const ProbeReport& r) {
  std::string line = action + ": " + (r.passed ? "PASS" : "FAIL");
  for (const auto& c : r.curves) {
    line += " " + c.target + "=" + fmt(c.points.empty() ? 0.0 : c.points.back().sup_error) +
            (c.passed ? "" : "(fail)");
  }
  for (const auto& m : r.mmd_rows) {
    line += " " + m.label + ":mmd2=" + fmt(m.mmd2) + (m.passed ? "" : "(fail)");
  }
  for (const auto& x : r.residuals) {
    line += " " + x.name + "=" + fmt(x.value) + (x.passed ? "" : "(fail)");
  }
  return line;
}

Json run_action(Context& ctx, Action a, bool& passed) {
  Json j;
  j["action"] = to_string(a);
  if (a == Action::Classify) {
    Json body = run_classify(ctx, passed);
    for (auto& [k, v] : body.items()) j[k] = v;
  } else {
    const ProbeReport r = run_probe(ctx, a);
    passed = r.passed;
    j["report"] = to_json(r);
    if (!r.curves.empty()) {
      std::string name = ctx.cfg.output_prefix + "-" + to_string(a);
      const int n = ++ctx.csv_names[name];
      if (n > 1) name += "-" + std::to_string(n);
      name += ".csv";
      ctx.result.files.push_back({name, curves_csv(r)});
      j["csv"] = name;
    }
    ctx.result.summary.push_back(summarize(to_string(a), r));
  }
  j["passed"] = passed;
  return j;
}

}  // namespace

RunResult run(const RunConfig& input, const RunOptions& options) {
  RunConfig cfg = input;
  if (options.seed) cfg.seed = *options.seed;
  if (options.grid) cfg.dense.grid = cfg.exp.grid = cfg.muntz.grid = *options.grid;

  RunResult result;
  Json doc;
  doc["schema"] = kReportSchema;
  doc["tool_version"] = kToolVersion;
  doc["mode"] = options.mode == RunMode::Classify ? "classify"
                : options.mode == RunMode::Probe  ? "probe"
                                                  : "report";
  doc["seed"] = cfg.seed;
  doc["kernel"] = {{"family", cfg.family}, {"params", to_json(cfg.kernel_params)}};

  std::vector<Action> actions;
  if (options.mode == RunMode::Classify) {
    actions = {Action::Classify};
  } else {
    for (auto a : cfg.actions) {
      if (options.mode == RunMode::Report || is_probe(a)) actions.push_back(a);
    }
  }

  Json done = Json::array();
  bool all_passed = true;
  try {
    const KernelSpec kernel = build_kernel(cfg.family, cfg.kernel_params);
    doc["kernel"]["kind"] = kernel.kind_name();
    Context ctx{cfg, kernel, cfg.seed, result, {}};
    for (auto a : actions) {
      bool passed = true;
      done.push_back(run_action(ctx, a, passed));
      all_passed = all_passed && passed;
    }
    result.exit_code = all_passed ? kExitOk : kExitThreshold;
  } catch (const Error& e) {
    result.exit_code = kExitError;
    result.error = e.what();
    doc["error"] = {{"code", std::string(to_string(e.code()))},
                    {"module", e.module()},
                    {"message", e.what()}};
    result.summary.push_back(std::string("error: ") + e.what());
  }
  doc["actions"] = std::move(done);
  doc["passed"] = result.exit_code == kExitOk;
  doc["exit_code"] = result.exit_code;
  result.files.insert(result.files.begin(), {cfg.output_prefix + ".json", doc.dump(2) + "\n"});
  return result;
}

void write_outputs(const RunResult& result, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cli", "cannot create output directory '" + dir + "'");
  for (const auto& f : result.files) {
    const auto path = std::filesystem::path(dir) / f.name;
    std::ofstream out(path, std::ios::binary);
    out << f.content;
    if (!out) throw Error(ErrorCode::Io, "cli", "cannot write '" + path.string() + "'");
  }
}

}  // namespace kuniv
