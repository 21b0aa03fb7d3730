#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kuniv/config.hpp"
#include "kuniv/error.hpp"
#include "kuniv/runner.hpp"

using namespace kuniv;

namespace {

std::vector<std::string> bundled_configs() {
  std::vector<std::string> paths;
  for (const auto& e : std::filesystem::directory_iterator(KUNIV_CONFIG_DIR)) {
    if (e.path().extension() == ".yaml") paths.push_back(e.path().string());
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

ConfigError config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("config accepted");
  return ConfigError(ErrorCode::InvalidValue, "", "");
}

std::string file(const RunResult& r, const std::string& name) {
  for (const auto& f : r.files) {
    if (f.name == name) return f.content;
  }
  return {};
}

}  // namespace

TEST_CASE("minimal config takes defaults") {
  const auto cfg = parse_config("kernel:\n  family: gaussian-ti\nactions: [classify]\n");
  CHECK(cfg.family == "gaussian-ti");
  CHECK(cfg.seed == kDefaultSeed);
  CHECK(cfg.output_prefix == "report");
  CHECK(std::get<double>(cfg.kernel_params.at("bandwidth")) == 1.0);
  CHECK(cfg.dense.ridge == kDefaultRidge);
}

TEST_CASE("config errors name the field") {
  const auto unknown = config_error("kernel:\n  family: nope\nactions: [classify]\n");
  CHECK(unknown.code() == ErrorCode::UnknownFamily);
  CHECK(unknown.field_path() == "kernel.family");

  const auto ridge = config_error(
      "kernel:\n  family: gaussian-ti\nactions: [probe-dense]\nprobe-dense:\n  ridge: -1\n"
      "  targets:\n    - name: x\n");
  CHECK(ridge.code() == ErrorCode::InvalidValue);
  CHECK(ridge.field_path() == "probe-dense.ridge");
  REQUIRE(ridge.line());
  CHECK(*ridge.line() == 5);

  const auto key = config_error("kernel:\n  family: gaussian-ti\nactions: [classify]\nbogus: 1\n");
  CHECK(key.code() == ErrorCode::InvalidValue);
  CHECK(key.field_path() == "bogus");

  const auto param = config_error("kernel:\n  family: gaussian-ti\n  bandwidth: -2\nactions: [classify]\n");
  CHECK(param.field_path() == "kernel.bandwidth");

  const auto parse = config_error("kernel: [unclosed\n");
  CHECK(parse.code() == ErrorCode::ParseError);
  CHECK(parse.line().has_value());

  const auto targets = config_error("kernel:\n  family: gaussian-ti\nactions: [probe-dense]\n");
  CHECK(targets.code() == ErrorCode::InvalidValue);
}

TEST_CASE("bundled configs round-trip through yaml") {
  const auto paths = bundled_configs();
  REQUIRE(paths.size() >= 9);
  for (const auto& p : paths) {
    CAPTURE(p);
    const auto cfg = load_config(p);
    const auto text = to_yaml(cfg);
    CHECK(parse_config(text) == cfg);
    CHECK(to_yaml(parse_config(text)) == text);
  }
}

TEST_CASE("classify run writes verdicts") {
  const auto cfg = parse_config("kernel:\n  family: cosine-ti\nactions: [classify]\n");
  const auto r = run(cfg, {RunMode::Classify, {}, {}});
  CHECK(r.exit_code == kExitOk);
  REQUIRE(r.files.size() == 1);
  const auto json = file(r, "report.json");
  CHECK(json.find("\"schema\": \"kuniv-report/1\"") != std::string::npos);
  CHECK(json.find("\"status\": \"no\"") != std::string::npos);
}

TEST_CASE("threshold failure exits 2 and errors exit 1") {
  const auto miss = parse_config(
      "kernel:\n  family: gaussian-ti\nactions: [probe-dense]\nprobe-dense:\n"
      "  center_counts: [2, 3]\n  targets:\n    - name: x\n      expect: converge\n"
      "      tolerance: 1.0e-14\n");
  const auto r = run(miss);
  CHECK(r.exit_code == kExitThreshold);
  CHECK(!file(r, "report-probe-dense.csv").empty());

  const auto err = load_config(std::string(KUNIV_CONFIG_DIR) + "/gaussian-witness-error.yaml");
  const auto e = run(err);
  CHECK(e.exit_code == kExitError);
  CHECK(e.error.find("meets supp nu") != std::string::npos);
  CHECK(file(e, err.output_prefix + ".json").find("GapIntersectsSupport") != std::string::npos);
}

TEST_CASE("probe mode skips classification and grid override applies") {
  auto cfg = load_config(std::string(KUNIV_CONFIG_DIR) + "/polynomial-even.yaml");
  const auto r = run(cfg, {RunMode::Probe, {}, std::size_t{101}});
  CHECK(r.exit_code == kExitOk);
  const auto json = file(r, "report.json");
  CHECK(json.find("\"action\": \"classify\"") == std::string::npos);
  CHECK(json.find("101") != std::string::npos);
}

TEST_CASE("runs are deterministic and written verbatim") {
  const auto cfg = load_config(std::string(KUNIV_CONFIG_DIR) + "/cosine.yaml");
  const auto a = run(cfg), b = run(cfg);
  REQUIRE(a.files.size() == b.files.size());
  for (std::size_t i = 0; i < a.files.size(); ++i) CHECK(a.files[i].content == b.files[i].content);

  const auto dir = std::filesystem::temp_directory_path() / "kuniv-unit-cli";
  std::filesystem::remove_all(dir);
  write_outputs(a, dir.string());
  for (const auto& f : a.files) {
    std::ifstream in(dir / f.name, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == f.content);
  }
  std::filesystem::remove_all(dir);
}
