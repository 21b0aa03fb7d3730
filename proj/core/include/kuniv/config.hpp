#pragma once

// YAML run configuration: one kernel, a list of actions, probe sections.

#include <cstdint>
#include <string>
#include <vector>

#include "kuniv/families.hpp"
#include "kuniv/probe.hpp"

namespace kuniv {

inline constexpr std::uint64_t kDefaultSeed = 20240521;

enum class Action { Classify, ProbeDense, ProbeWitness, ProbeMmd, ProbeExp, ProbeMuntz };

std::string to_string(Action action);

struct ClassifySection {
  double pollard_window = 1000.0;
  std::size_t pollard_terms = 60;
  std::size_t muntz_horizon = 1000;

  friend bool operator==(const ClassifySection&, const ClassifySection&) = default;
};

struct MmdPairSpec {
  std::string label;
  std::vector<Atom> p;  // ignored for witness pairs
  std::vector<Atom> q;
  bool witness = false;  // pair built from the probe-witness section's gap
  MmdExpect expect = MmdExpect::Auto;

  friend bool operator==(const MmdPairSpec&, const MmdPairSpec&) = default;
};

struct MmdSection {
  std::vector<MmdPairSpec> pairs;

  friend bool operator==(const MmdSection&, const MmdSection&) = default;
};

/// Frequencies are either listed or generated from a named sequence.
struct ExpSection {
  std::vector<double> lambdas;
  std::string sequence;  // empty, "nlog", "powerlaw" or "linear"
  double sequence_parameter = 0.0;
  std::size_t terms = 0;
  double radius = 1.0;
  std::vector<TargetSpec> targets;
  std::size_t grid = kDefaultEvalGrid;
  double ridge = kDefaultRidge;

  friend bool operator==(const ExpSection&, const ExpSection&) = default;
};

/// Frequencies of an exp section, generated if a sequence is named.
ExpProbeConfig resolve(const ExpSection& section);

struct RunConfig {
  std::string family;
  FamilyParams kernel_params;  // completed with defaults
  std::vector<Action> actions;
  std::uint64_t seed = kDefaultSeed;
  std::string output_dir;  // empty: decided by the caller
  std::string output_prefix = "report";

  ClassifySection classify;
  DensenessProbeConfig dense;
  WitnessProbeConfig witness;
  MmdSection mmd;
  ExpSection exp;
  MuntzProbeConfig muntz;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ConfigError: ParseError (with line/column) for malformed YAML,
/// UnknownFamily, InvalidValue with the field path for bad or unknown keys.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Serializes every field, defaults included; parse_config inverts it.
std::string to_yaml(const RunConfig& cfg);

}  // namespace kuniv
