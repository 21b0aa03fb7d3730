// kuniv: classify kernels and run universality probes from a YAML config.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "kuniv/error.hpp"
#include "kuniv/runner.hpp"

namespace {

constexpr const char* kOutEnv = "KUNIV_OUT_DIR";
constexpr const char* kDefaultOut = "kuniv-out";

struct Shared {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> grid;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Shared& s) {
  cmd->add_option("config", s.config, "YAML run configuration")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", s.out, "output directory (default: $KUNIV_OUT_DIR, the config's "
                                  "output.dir, or kuniv-out)");
  cmd->add_option("--seed", s.seed, "override the config seed");
  cmd->add_option("--grid", s.grid, "override the evaluation grid of sweep probes")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  cmd->add_flag("--quiet", s.quiet, "suppress the summary on stdout");
}

int execute(const Shared& s, kuniv::RunMode mode) {
  kuniv::RunConfig cfg;
  try {
    cfg = kuniv::load_config(s.config);
  } catch (const kuniv::Error& e) {
    std::cerr << "kuniv: " << s.config << ": " << e.what() << "\n";
    return kuniv::kExitError;
  }
  std::string dir = s.out;
  if (dir.empty()) {
    if (const char* env = std::getenv(kOutEnv); env != nullptr && *env != '\0') dir = env;
  }
  if (dir.empty()) dir = cfg.output_dir.empty() ? kDefaultOut : cfg.output_dir;

  const auto result = kuniv::run(cfg, {mode, s.seed, s.grid});
  try {
    kuniv::write_outputs(result, dir);
  } catch (const kuniv::Error& e) {
    std::cerr << "kuniv: " << e.what() << "\n";
    return kuniv::kExitError;
  }
  if (!s.quiet) {
    for (const auto& line : result.summary) std::cout << line << "\n";
    std::cout << "wrote " << result.files.size() << " file(s) to " << dir << "\n";
  }
  if (!result.error.empty()) std::cerr << "kuniv: " << result.error << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel universality classifier and numerical probes"};
  app.require_subcommand(1);
  Shared shared;

  auto* classify = app.add_subcommand("classify", "classify the configured kernel");
  auto* probe = app.add_subcommand("probe", "run the configured probe actions");
  auto* report = app.add_subcommand("report", "run every configured action in order");
  for (auto* cmd : {classify, probe, report}) add_common(cmd, shared);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kuniv::kExitError;
  }

  if (*classify) return execute(shared, kuniv::RunMode::Classify);
  if (*probe) return execute(shared, kuniv::RunMode::Probe);
  return execute(shared, kuniv::RunMode::Report);
}
