#include <algorithm>
#include <cmath>
#include <set>

#include "kuniv/classify.hpp"
#include "kuniv/error.hpp"
#include "kuniv/fit.hpp"
#include "kuniv/probe.hpp"

namespace kuniv {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidValue, "probe", message);
}

struct Stage {
  std::size_t basis_size = 0;
  Eigen::MatrixXd design;  // grid x basis
  std::optional<Eigen::MatrixXd> penalty;
};

void check_common(std::size_t grid, double ridge, const std::vector<TargetSpec>& targets) {
  if (grid < 2) invalid("evaluation grid needs at least 2 points");
  if (!(ridge >= 0.0) || !std::isfinite(ridge)) invalid("ridge must be finite and >= 0");
  if (targets.empty()) invalid("at least one target is required");
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

ErrorCurve sweep(const TargetSpec& spec, const std::vector<double>& grid,
                 const std::vector<Stage>& stages, double ridge) {
  const Target target = make_target(spec.name);
  Eigen::VectorXd f(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) f(static_cast<Eigen::Index>(i)) = target.f(grid[i]);

  ErrorCurve curve{spec.name, spec.expect, {}, false, true};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& stage : stages) {
    const Eigen::VectorXd c = ridge_solve(stage.design, f, ridge, stage.penalty);
    const double err = (stage.design * c - f).lpNorm<Eigen::Infinity>();
    best = std::min(best, err);
    curve.points.push_back({stage.basis_size, best, err});
  }
  curve.plateau = plateaus(curve.points, spec.expect.tolerance);
  curve.passed = curve_passes(curve);
  return curve;
}

ProbeReport run_sweeps(ProbeReport report, const std::vector<TargetSpec>& targets,
                       const std::vector<double>& grid, const std::vector<Stage>& stages,
                       double ridge) {
  for (const auto& t : targets) {
    report.curves.push_back(sweep(t, grid, stages, ridge));
    report.passed = report.passed && report.curves.back().passed;
  }
  return report;
}

}  // namespace

ProbeReport denseness_probe(const KernelSpec& kernel, const DensenessProbeConfig& cfg) {
  if (!(cfg.lo < cfg.hi)) invalid("denseness interval needs lo < hi");
  check_common(cfg.grid, cfg.ridge, cfg.targets);
  if (cfg.center_counts.empty()) invalid("center_counts is empty");
  for (std::size_t k = 0; k < cfg.center_counts.size(); ++k) {
    const std::size_t n = cfg.center_counts[k];
    if (n < 2) invalid("center counts must be >= 2");
    if (k > 0) {
      const std::size_t prev = cfg.center_counts[k - 1];
      if (n <= prev) invalid("center_counts must be strictly increasing");
      if ((n - 1) % (prev - 1) != 0) {
        invalid("center_counts must give nested equispaced centers: (n_k - 1) must divide "
                "(n_{k+1} - 1)");
      }
    }
  }

  const auto grid = uniform_grid(cfg.lo, cfg.hi, cfg.grid);
  std::vector<Stage> stages;
  for (std::size_t n : cfg.center_counts) {
    const auto centers = uniform_grid(cfg.lo, cfg.hi, n);
    stages.push_back({n, cross_gram(kernel, grid, centers), gram(kernel, centers)});
  }

  ProbeReport report;
  report.kind = "denseness";
  report.parameters = {{"kernel", kernel.kind_name()},
                       {"interval_lo", cfg.lo},
                       {"interval_hi", cfg.hi},
                       {"center_counts", join_counts(cfg.center_counts)},
                       {"grid", static_cast<std::int64_t>(cfg.grid)},
                       {"ridge", cfg.ridge},
                       {"penalty", std::string("rkhs-norm")}};
  return run_sweeps(std::move(report), cfg.targets, grid, stages, cfg.ridge);
}

ProbeReport mmd_injectivity_probe(const KernelSpec& kernel, const std::vector<MmdPair>& pairs) {
  ProbeReport report;
  report.kind = "mmd";
  const Tri characteristic = classify_characteristic(kernel).status;
  report.parameters = {{"kernel", kernel.kind_name()},
                       {"characteristic", std::string(to_string(characteristic))},
                       {"mmd_tolerance", kMmdTolerance},
                       {"separation_total_variation", kSeparationTotalVariation}};
  for (const auto& pair : pairs) {
    MmdExpect expect = pair.expect;
    if (expect == MmdExpect::Auto) {
      expect = characteristic == Tri::Yes ? MmdExpect::Separate : MmdExpect::None;
    }
    MmdRow row;
    row.label = pair.label;
    row.mmd2 = mmd2(kernel, pair.p, pair.q);
    row.total_variation = total_variation(difference(pair.p.measure(), pair.q.measure()));
    row.passed = row.mmd2 >= -kMmdNegativeSlack;
    switch (expect) {
      case MmdExpect::Separate:
        row.expectation = "separate";
        if (row.total_variation > kSeparationTotalVariation) {
          row.passed = row.passed && row.mmd2 > kMmdTolerance;
        }
        break;
      case MmdExpect::Witness:
        row.expectation = "witness";
        row.passed = row.passed && row.mmd2 <= kMmdTolerance &&
                     row.total_variation >= kSeparationTotalVariation;
        break;
      default:
        row.expectation = "none";
        break;
    }
    report.passed = report.passed && row.passed;
    report.mmd_rows.push_back(std::move(row));
  }
  return report;
}

ProbeReport exponential_completeness_probe(const ExpProbeConfig& cfg) {
  if (!(cfg.radius > 0.0) || !std::isfinite(cfg.radius)) invalid("radius must be > 0");
  check_common(cfg.grid, cfg.ridge, cfg.targets);
  if (cfg.lambdas.empty()) invalid("lambdas is empty");
  if (std::set<double>(cfg.lambdas.begin(), cfg.lambdas.end()).size() != cfg.lambdas.size()) {
    invalid("lambdas must be pairwise distinct");
  }

  const auto grid = uniform_grid(-cfg.radius, cfg.radius, cfg.grid);
  const auto rows = static_cast<Eigen::Index>(grid.size());
  std::vector<Eigen::VectorXd> columns;
  std::vector<Stage> stages;
  for (double lambda : cfg.lambdas) {
    Eigen::VectorXd c(rows);
    if (lambda == 0.0) {
      c.setOnes();
      columns.push_back(c);
    } else {
      Eigen::VectorXd s(rows);
      for (Eigen::Index i = 0; i < rows; ++i) {
        c(i) = std::cos(lambda * grid[static_cast<std::size_t>(i)]);
        s(i) = std::sin(lambda * grid[static_cast<std::size_t>(i)]);
      }
      columns.push_back(c);
      columns.push_back(s);
    }
    Eigen::MatrixXd a(rows, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = columns[j];
    stages.push_back({columns.size(), std::move(a), std::nullopt});
  }

  ProbeReport report;
  report.kind = "exponential";
  report.parameters = {{"lambda_count", static_cast<std::int64_t>(cfg.lambdas.size())},
                       {"radius", cfg.radius},
                       {"grid", static_cast<std::int64_t>(cfg.grid)},
                       {"ridge", cfg.ridge},
                       {"penalty", std::string("euclidean")}};
  return run_sweeps(std::move(report), cfg.targets, grid, stages, cfg.ridge);
}

ProbeReport muntz_probe(const MuntzProbeConfig& cfg) {
  if (cfg.horizon < 1) invalid("horizon must be >= 1");
  check_common(cfg.grid, cfg.ridge, cfg.targets);
  const auto members = members_up_to(cfg.support, cfg.horizon);
  if (members.empty()) invalid("support has no members up to the horizon");

  const auto grid = uniform_grid(-1.0, 1.0, cfg.grid);
  const auto rows = static_cast<Eigen::Index>(grid.size());
  std::vector<Stage> stages;
  Eigen::MatrixXd a(rows, 0);
  for (std::size_t n : members) {
    a.conservativeResize(Eigen::NoChange, a.cols() + 1);
    for (Eigen::Index i = 0; i < rows; ++i) {
      a(i, a.cols() - 1) = std::pow(grid[static_cast<std::size_t>(i)], static_cast<double>(n));
    }
    stages.push_back({static_cast<std::size_t>(a.cols()), a, std::nullopt});
  }

  ProbeReport report;
  report.kind = "muntz";
  report.parameters = {{"support", describe(cfg.support)},
                       {"horizon", static_cast<std::int64_t>(cfg.horizon)},
                       {"grid", static_cast<std::int64_t>(cfg.grid)},
                       {"ridge", cfg.ridge},
                       {"penalty", std::string("euclidean")}};
  return run_sweeps(std::move(report), cfg.targets, grid, stages, cfg.ridge);
}

}  // namespace kuniv
