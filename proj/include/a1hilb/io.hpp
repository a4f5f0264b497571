// JSON forms of decompositions, charts and verification reports.  Rationals
// are written as "p/q" strings so files stay exact and diffable.
#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "a1hilb/geom/decomposition.hpp"
#include "a1hilb/ghilb/chart.hpp"
#include "a1hilb/ghilb/verify.hpp"

namespace a1hilb {

using json = nlohmann::json;

inline constexpr const char* kFanSchema = "a1hilb-fan/1";
inline constexpr const char* kReportSchema = "a1hilb-report/1";

inline json to_json_value(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline RatVec rat_vec_from_json(const json& a) {
  RatVec v;
  for (const auto& x : a) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

inline json fan_to_json(const Decomposition& d) {
  json j;
  j["schema"] = kFanSchema;
  j["name"] = d.name;
  j["n"] = d.n;
  j["vertices"] = json::array();
  for (const auto& v : d.vertices) j["vertices"].push_back(to_json_value(v));
  j["cells"] = d.cells;
  return j;
}

/// Reads a fan file; the result is put in canonical order.
inline Decomposition fan_from_json(const json& j) {
  if (j.value("schema", "") != kFanSchema) throw std::invalid_argument("fan file: missing or unknown schema tag");
  const int n = j.at("n").get<int>();
  std::vector<RatVec> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(rat_vec_from_json(v));
  std::vector<Cell> cells;
  for (const auto& c : j.at("cells")) {
    std::vector<RatVec> pts;
    for (const auto& i : c) pts.push_back(verts.at(i.get<std::size_t>()));
    cells.emplace_back(pts);
  }
  return Decomposition::from_cells(n, j.value("name", ""), cells);
}

inline json monos_to_json(const std::vector<Mono>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_string(m));
  return a;
}

inline json polys_to_json(const std::vector<Poly>& ps, const MonomialOrder& ord) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p, ord));
  return a;
}

inline json point_to_json(const Chart& chart, const ChartPoint& p) {
  json o = json::object();
  for (std::size_t i = 0; i < chart.coords.size(); ++i) o[chart.coords[i].symbol] = to_string(p.values.at(i));
  return o;
}

inline json chart_to_json(const Chart& c) {
  json j;
  j["name"] = c.name;
  j["family"] = c.family;
  j["cell"] = json::array();
  for (const auto& v : c.cell.vertices) j["cell"].push_back(to_json_value(v));
  j["coordinates"] = json::array();
  for (const auto& k : c.coords) j["coordinates"].push_back({{"label", k.label}, {"symbol", k.symbol}, {"monomial", to_string(k.mono)}});
  j["weight"] = json::array();
  for (const auto& w : c.weight) j["weight"].push_back(w.get_str());
  j["relations"] = json::array();
  for (const auto& b : c.relations.binomials)
    j["relations"].push_back({{"plus", b.plus}, {"minus", b.minus}, {"equation", to_string(b, c.symbols())}});
  return j;
}

inline json report_to_json(const Chart& c, const ChartReport& r) {
  json j = chart_to_json(c);
  j["staircase"] = monos_to_json(r.staircase);
  if (!r.staircase_note.empty()) {
    j["staircase_note"] = r.staircase_note;
    j["staircase_listed"] = monos_to_json(c.staircase_listed);
  }
  j["points"] = json::array();
  for (const auto& p : r.points) {
    json e{{"kind", p.sample.kind},
           {"values", point_to_json(c, p.sample.point)},
           {"reduced_basis", p.reduced},
           {"initial_ideal", p.initial},
           {"staircase", p.staircase},
           {"g_regular", p.regular}};
    if (!p.error.empty()) e["error"] = p.error;
    j["points"].push_back(e);
  }
  j["ok"] = r.ok();
  return j;
}

/// "p/q,p/q,..." in coordinate order.
inline ChartPoint parse_point(const Chart& chart, const std::string& text) {
  ChartPoint p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    p.values.push_back(parse_rational(text.substr(start, end - start)));
    start = end + 1;
  }
  if (p.values.size() != chart.coords.size())
    throw std::invalid_argument("point for " + chart.name + " needs " + std::to_string(chart.coords.size()) +
                                " values, got " + std::to_string(p.values.size()));
  return p;
}

}  // namespace a1hilb
