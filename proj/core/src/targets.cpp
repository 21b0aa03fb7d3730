#include <algorithm>
#include <cmath>
#include <cstdio>
#include <regex>

#include "kuniv/error.hpp"
#include "kuniv/probe.hpp"

namespace kuniv {

namespace {

std::optional<double> parse_number(const std::string& text) {
  static const std::regex number(R"(^[-+]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][-+]?[0-9]+)?$)");
  if (!std::regex_match(text, number)) return std::nullopt;
  return std::stod(text);
}

}  // namespace

Target make_target(const std::string& name) {
  static const std::regex trig(R"(^(sin|cos)\(([-+]?[0-9.eE+-]*)x\)$)");
  static const std::regex power(R"(^x\^([0-9]+)$)");
  std::smatch m;
  if (std::regex_match(name, m, trig)) {
    const std::string k_text = m[2].str();
    double k = 1.0;
    if (!k_text.empty() && k_text != "+" && k_text != "-") {
      const auto parsed = parse_number(k_text);
      if (!parsed) throw Error(ErrorCode::InvalidValue, "probe", "bad target frequency: " + name);
      k = *parsed;
    } else if (k_text == "-") {
      k = -1.0;
    }
    if (m[1] == "sin") return {name, [k](double x) { return std::sin(k * x); }};
    return {name, [k](double x) { return std::cos(k * x); }};
  }
  if (std::regex_match(name, m, power)) {
    const double p = std::stod(m[1].str());
    return {name, [p](double x) { return std::pow(x, p); }};
  }
  if (name == "x") return {name, [](double x) { return x; }};
  if (name == "|x|") return {name, [](double x) { return std::abs(x); }};
  if (const auto c = parse_number(name)) {
    return {name, [v = *c](double) { return v; }};
  }
  throw Error(ErrorCode::InvalidValue, "probe", "unknown target: " + name);
}

std::string to_string(ExpectKind kind) {
  switch (kind) {
    case ExpectKind::None: return "none";
    case ExpectKind::Converge: return "converge";
    case ExpectKind::Plateau: return "plateau";
    case ExpectKind::LowerBound: return "lower-bound";
  }
  return "none";
}

bool plateaus(const std::vector<CurvePoint>& points, double tolerance) {
  if (points.size() < 3) return false;
  double lo = points.back().sup_error;
  double hi = lo;
  for (auto it = points.end() - 3; it != points.end(); ++it) {
    if (!(it->sup_error > 10.0 * tolerance)) return false;
    lo = std::min(lo, it->sup_error);
    hi = std::max(hi, it->sup_error);
  }
  return (hi - lo) < kPlateauRelativeSpread * hi;
}

bool curve_passes(const ErrorCurve& curve) {
  if (curve.points.empty()) return false;
  const double last = curve.points.back().sup_error;
  switch (curve.expect.kind) {
    case ExpectKind::None:
      return true;
    case ExpectKind::Converge:
      return last <= curve.expect.tolerance;
    case ExpectKind::Plateau:
      if (!curve.plateau) return false;
      if (curve.expect.floor) {
        return std::abs(last - *curve.expect.floor) <=
               kFloorRelativeTolerance * std::abs(*curve.expect.floor);
      }
      return true;
    case ExpectKind::LowerBound:
      return std::all_of(curve.points.begin(), curve.points.end(), [&](const CurvePoint& p) {
        return p.sup_error >= curve.expect.tolerance;
      });
  }
  return false;
}

std::string curves_csv(const ProbeReport& report) {
  std::string out = "basis_size,target_name,sup_error\n";
  char buf[64];
  for (const auto& curve : report.curves) {
    for (const auto& p : curve.points) {
      std::snprintf(buf, sizeof buf, "%.17g", p.sup_error);
      out += std::to_string(p.basis_size) + "," + curve.target + "," + buf + "\n";
    }
  }
  return out;
}

}  // namespace kuniv
