#include <cmath>

#include "report_json.hpp"

namespace kuniv {

namespace {

// JSON has no infinities; they are written as null.
Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json tri(Tri t) { return std::string(to_string(t)); }

}  // namespace

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = tri(v.status);
  j["rule_id"] = v.rule_id.empty() ? Json(nullptr) : Json(v.rule_id);
  j["citation"] = v.citation.empty() ? Json(nullptr) : Json(v.citation);
  j["explanation"] = v.explanation;
  return j;
}

Json to_json(const VerdictTriple& t) {
  Json j;
  j["universal"] = to_json(t.universal);
  j["characteristic"] = to_json(t.characteristic);
  j["c0_universal"] = to_json(t.c0_universal);
  return j;
}

Json to_json(const PollardReport& r) {
  Json j;
  j["condition1"] = tri(r.condition1);
  j["condition2"] = tri(r.condition2);
  j["condition3"] = tri(r.condition3);
  j["overall"] = tri(r.overall);
  Json trace = Json::array();
  for (const auto& p : r.log_integral_trace) {
    trace.push_back({{"half_width", p.half_width}, {"value", num(p.value)}});
  }
  j["log_integral_trace"] = std::move(trace);
  j["witness_family"] = r.witness_family.empty() ? Json(nullptr) : Json(r.witness_family);
  if (!r.witness_family.empty()) {
    j["witness_half_width"] = r.witness_half_width;
    j["witness_bound"] = num(r.witness_bound);
    j["witness_final_sup_error"] =
        r.witness_sup_error.empty() ? Json(nullptr) : num(r.witness_sup_error.back());
  }
  return j;
}

Json to_json(const MuntzGapReport& r) {
  Json j;
  j["even_partial_sum"] = r.even_partial_sum;
  j["odd_partial_sum"] = r.odd_partial_sum;
  j["even_diverges"] = tri(r.even_diverges);
  j["odd_diverges"] = tri(r.odd_diverges);
  return j;
}

Json to_json(const ProbeReport& r) {
  Json j;
  j["kind"] = r.kind;
  Json params = Json::object();
  for (const auto& p : r.parameters) {
    std::visit([&](const auto& v) { params[p.key] = v; }, p.value);
  }
  j["parameters"] = std::move(params);
  Json curves = Json::array();
  for (const auto& c : r.curves) {
    Json cj;
    cj["target"] = c.target;
    cj["expect"] = to_string(c.expect.kind);
    cj["tolerance"] = c.expect.tolerance;
    cj["floor"] = c.expect.floor ? Json(*c.expect.floor) : Json(nullptr);
    Json pts = Json::array();
    for (const auto& p : c.points) {
      pts.push_back({{"basis_size", p.basis_size},
                     {"sup_error", num(p.sup_error)},
                     {"fit_error", num(p.fit_error)}});
    }
    cj["points"] = std::move(pts);
    cj["plateau"] = c.plateau;
    cj["passed"] = c.passed;
    curves.push_back(std::move(cj));
  }
  j["curves"] = std::move(curves);
  Json rows = Json::array();
  for (const auto& m : r.mmd_rows) {
    rows.push_back({{"label", m.label},
                    {"expectation", m.expectation},
                    {"mmd2", num(m.mmd2)},
                    {"total_variation", num(m.total_variation)},
                    {"passed", m.passed}});
  }
  j["mmd_rows"] = std::move(rows);
  Json res = Json::array();
  for (const auto& x : r.residuals) {
    res.push_back({{"name", x.name},
                   {"value", num(x.value)},
                   {"comparison", x.upper ? "<=" : ">="},
                   {"threshold", x.threshold},
                   {"passed", x.passed}});
  }
  j["residuals"] = std::move(res);
  j["passed"] = r.passed;
  return j;
}

Json to_json(const FamilyParams& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) {
    std::visit([&](const auto& x) { j[k] = x; }, v);
  }
  return j;
}

}  // namespace kuniv
