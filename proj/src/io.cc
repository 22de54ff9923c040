// Copyright 2026 The SwissCheese Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swisscheese/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "swisscheese/error.h"

namespace swisscheese {
namespace {

using nlohmann::json;

// Shortest-safe round-trip form: 17 significant digits, always carrying a
// decimal point or exponent so that parsers keep the value a double.
std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string DiskJson(const Disk& d) {
  return "{\"cx\": " + FormatDouble(d.cx) + ", \"cy\": " + FormatDouble(d.cy) +
         ", \"r\": " + FormatDouble(d.r) + "}";
}

[[noreturn]] void SchemaViolation(const std::string& field) {
  throw CheeseError(ErrorCode::kSchemaViolation,
                    "schema-violation(" + field + ")");
}

void RejectUnknown(const json& obj, std::initializer_list<std::string_view> keys,
                   const std::string& prefix) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (std::string_view k : keys) known = known || key == k;
    if (!known) SchemaViolation(prefix + key);
  }
}

double Number(const json& obj, const char* key, const std::string& prefix) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) SchemaViolation(prefix + key);
  return it->get<double>();
}

Disk ParseDisk(const json& j, const std::string& path, std::size_t index) {
  if (!j.is_object()) SchemaViolation(path);
  RejectUnknown(j, {"cx", "cy", "r"}, path + ".");
  Disk d{Number(j, "cx", path + "."), Number(j, "cy", path + "."),
         Number(j, "r", path + ".")};
  if (d.r < 0.0) {
    throw CheeseError(ErrorCode::kNegativeRadius,
                      "negative-radius(" + std::to_string(index) + ")");
  }
  return d;
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CheeseError(ErrorCode::kMalformedJson,
                      std::string("malformed-json: ") + e.what());
  }
}

}  // namespace

std::string SaveCheese(const AbstractSwissCheese& a) {
  std::string out = "{\n  \"format_version\": " +
                    std::to_string(kFormatVersion) + ",\n";
  if (!a.name().empty()) out += "  \"name\": " + json(a.name()).dump() + ",\n";
  out += "  \"outer\": " + DiskJson(a.outer()) + ",\n  \"holes\": [";
  const auto holes = a.holes();
  for (std::size_t i = 0; i < holes.size(); ++i) {
    out += i == 0 ? "\n    " : ",\n    ";
    out += DiskJson(holes[i]);
  }
  out += holes.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

AbstractSwissCheese LoadCheese(std::string_view text) {
  const json doc = Parse(text);
  if (!doc.is_object()) SchemaViolation("document");
  RejectUnknown(doc, {"format_version", "name", "outer", "holes"}, "");
  if (!doc.contains("outer")) SchemaViolation("outer");
  if (doc.contains("format_version")) {
    const json& v = doc["format_version"];
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
      SchemaViolation("format_version");
    }
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) SchemaViolation("name");
    name = doc["name"].get<std::string>();
  }
  const Disk outer = ParseDisk(doc["outer"], "outer", 0);
  std::vector<Disk> holes;
  if (doc.contains("holes")) {
    const json& hs = doc["holes"];
    if (!hs.is_array()) SchemaViolation("holes");
    holes.reserve(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
      holes.push_back(
          ParseDisk(hs[i], "holes[" + std::to_string(i) + "]", i + 1));
    }
  }
  return AbstractSwissCheese(outer, std::move(holes), std::move(name));
}

std::vector<RegionPair> LoadRegions(std::string_view text) {
  const json doc = Parse(text);
  if (!doc.is_object()) SchemaViolation("document");
  RejectUnknown(doc, {"format_version", "regions"}, "");
  if (!doc.contains("regions") || !doc["regions"].is_array()) {
    SchemaViolation("regions");
  }
  std::vector<RegionPair> out;
  for (std::size_t i = 0; i < doc["regions"].size(); ++i) {
    const json& r = doc["regions"][i];
    const std::string p = "regions[" + std::to_string(i) + "].";
    if (!r.is_object()) SchemaViolation(p.substr(0, p.size() - 1));
    RejectUnknown(r, {"cx", "cy", "inner", "outer", "margin"}, p);
    RegionPair k{{Number(r, "cx", p), Number(r, "cy", p)},
                 Number(r, "inner", p),
                 Number(r, "outer", p),
                 Number(r, "margin", p)};
    k.Validate();
    out.push_back(k);
  }
  return out;
}

std::string SaveRegions(std::span<const RegionPair> regions) {
  std::string out = "{\n  \"format_version\": 1,\n  \"regions\": [";
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const RegionPair& k = regions[i];
    out += i == 0 ? "\n    " : ",\n    ";
    out += "{\"cx\": " + FormatDouble(k.center.x) +
           ", \"cy\": " + FormatDouble(k.center.y) +
           ", \"inner\": " + FormatDouble(k.inner) +
           ", \"outer\": " + FormatDouble(k.outer) +
           ", \"margin\": " + FormatDouble(k.margin) + "}";
  }
  out += regions.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

json ToJson(const CheeseReport& r) {
  return json{{"delta1", r.delta1},
              {"delta2", r.delta2},
              {"delta_ann", r.delta_ann},
              {"rho", r.rho},
              {"mu", r.mu},
              {"rho_ann", r.rho_ann},
              {"radius_log_sum", r.radius_log_sum},
              {"classical", r.classical},
              {"semiclassical", r.semiclassical},
              {"annular", r.annular},
              {"redundancy_free", r.redundancy_free},
              {"error_pair_count", r.error_pair_count},
              {"hole_count", r.hole_count}};
}

json ToJson(const TransformTrace& t) {
  json steps = json::array();
  for (const TransformStep& s : t.steps) {
    steps.push_back({{"iteration", s.iteration},
                     {"kind", std::string(StepKindName(s.kind))},
                     {"indices", s.indices},
                     {"gain", s.gain},
                     {"delta_before", s.delta_before},
                     {"delta_after", s.delta_after}});
  }
  return json{{"functional", t.functional},
              {"iterations", t.iterations},
              {"steps", std::move(steps)},
              {"input_report", ToJson(t.input_report)},
              {"output_report", ToJson(t.output_report)}};
}

json ToJson(const AdmissibilityReport& r) {
  json regions = json::array();
  for (const auto& x : r.regions) {
    regions.push_back({{"rho_u", x.rho_u},
                       {"half_margin", x.half_margin},
                       {"budget_ok", x.budget_ok},
                       {"closure_inside", x.closure_inside}});
  }
  return json{{"regions", std::move(regions)},
              {"overlapping", r.overlapping},
              {"error_set_covered", r.error_set_covered},
              {"admissible", r.admissible}};
}

json ToJson(const ControlReport& r) {
  json regions = json::array();
  for (const auto& x : r.regions) {
    regions.push_back({{"rho_before", x.rho_before},
                       {"rho_after", x.rho_after},
                       {"ok", x.ok}});
  }
  return json{{"lost_holes", r.lost_holes},
              {"regions", std::move(regions)},
              {"survivors_ok", r.survivors_ok},
              {"regions_ok", r.regions_ok},
              {"passed", r.passed}};
}

json ToJson(const MorrisReport& r) {
  json levels = json::array();
  for (const MorrisLevel& lv : r.per_level) {
    levels.push_back({{"n", lv.n},
                      {"ring_budget", lv.ring_budget},
                      {"ar_A", lv.ar_a},
                      {"ar_B", lv.ar_b},
                      {"rho_U", lv.rho_u},
                      {"rho_U_assembled", lv.rho_u_raw},
                      {"rho_U_final", lv.rho_u_after},
                      {"M_n", lv.m_n},
                      {"admissible", lv.admissible},
                      {"inequality_holds", lv.inequality_holds},
                      {"top_level", lv.top_level}});
  }
  return json{{"C", r.C},
              {"level_count", r.level_count},
              {"per_level", std::move(levels)},
              {"weighted_sum", r.weighted_sum},
              {"weighted_sum_compensated", r.weighted_sum_compensated},
              {"within_bound", r.within_bound},
              {"circle_in_set", r.circle_in_set},
              {"final_classical", r.final_classical},
              {"regions_disjoint", r.regions_disjoint}};
}

json ToJson(const WermerResult& w, bool with_disks) {
  json out{{"N", w.n},
           {"grid_disk_count", w.grid_disks.size()},
           {"grid_radius", w.grid_disks.empty() ? 0.0 : w.grid_disks[0].r},
           {"min_sum1", w.min_sum1},
           {"max_sum2", w.max_sum2},
           {"samples_evaluated", w.samples_evaluated},
           {"radius_sum", w.radius_sum},
           {"area_bound", w.area_bound}};
  if (with_disks) {
    json disks = json::array();
    for (const Disk& d : w.grid_disks) {
      disks.push_back({{"cx", d.cx}, {"cy", d.cy}, {"r", d.r}});
    }
    out["grid_disks"] = std::move(disks);
  }
  return out;
}

void ValidateTraceJson(const json& t, double slack) {
  if (!t.is_object()) SchemaViolation("trace");
  RejectUnknown(t,
                {"functional", "iterations", "steps", "input_report",
                 "output_report"},
                "");
  if (!t.contains("functional") || !t["functional"].is_string()) {
    SchemaViolation("functional");
  }
  const std::string f = t["functional"].get<std::string>();
  if (f != "delta1" && f != "delta_ann") SchemaViolation("functional");
  if (!t.contains("iterations") || !t["iterations"].is_number_integer()) {
    SchemaViolation("iterations");
  }
  for (const char* key : {"input_report", "output_report"}) {
    if (!t.contains(key) || !t[key].is_object()) SchemaViolation(key);
  }
  if (!t.contains("steps") || !t["steps"].is_array()) SchemaViolation("steps");
  const std::set<std::string> kinds{"COMBINE", "PULL_IN", "DISCARD", "NONE"};
  double previous = 0.0;
  for (std::size_t i = 0; i < t["steps"].size(); ++i) {
    const json& s = t["steps"][i];
    const std::string p = "steps[" + std::to_string(i) + "].";
    if (!s.is_object()) SchemaViolation(p);
    RejectUnknown(s,
                  {"iteration", "kind", "indices", "gain", "delta_before",
                   "delta_after"},
                  p);
    if (!s.contains("kind") || !s["kind"].is_string() ||
        !kinds.contains(s["kind"].get<std::string>())) {
      SchemaViolation(p + "kind");
    }
    if (!s.contains("indices") || !s["indices"].is_array()) {
      SchemaViolation(p + "indices");
    }
    const std::size_t want = s["kind"] == "COMBINE" ? 2 : 1;
    if (s["indices"].size() != want) SchemaViolation(p + "indices");
    if (!s.contains("iteration") || !s["iteration"].is_number_integer()) {
      SchemaViolation(p + "iteration");
    }
    const double before = Number(s, "delta_before", p);
    const double after = Number(s, "delta_after", p);
    const double gain = Number(s, "gain", p);
    if (after < before - slack || std::abs(gain - (after - before)) > 1e-9) {
      throw CheeseError(ErrorCode::kControlContractFailed,
                        "trace step " + std::to_string(i) + " decreases");
    }
    if (i > 0 && std::abs(before - previous) > slack) {
      throw CheeseError(ErrorCode::kControlContractFailed,
                        "trace step " + std::to_string(i) + " does not chain");
    }
    previous = after;
  }
}

void RenderOptions::Validate() const {
  if (width_px < 16 || !(margin_fraction >= 0.0) || !(margin_fraction < 0.5) ||
      !(stroke_width >= 0.0)) {
    throw CheeseError(ErrorCode::kInvalidParameter, "invalid render options");
  }
}

std::string RenderSvg(const AbstractSwissCheese& a, const RenderOptions& opts) {
  opts.Validate();
  const Disk& o = a.outer();
  const double side = o.r > 0.0 ? 2.0 * o.r : 2.0;
  const double view = side / (1.0 - 2.0 * opts.margin_fraction);
  const double x0 = o.cx - view / 2.0;
  const double y0 = -o.cy - view / 2.0;
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return std::string(buf);
  };
  // Scale the stroke from pixels to user units.
  const double stroke = opts.stroke_width * view / opts.width_px;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width_px
      << "\" height=\"" << opts.width_px << "\" viewBox=\"" << num(x0) << ' '
      << num(y0) << ' ' << num(view) << ' ' << num(view) << "\">\n";
  svg << "  <rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\""
      << num(view) << "\" height=\"" << num(view) << "\" fill=\"white\"/>\n";
  svg << "  <circle cx=\"" << num(o.cx) << "\" cy=\"" << num(-o.cy)
      << "\" r=\"" << num(o.r) << "\" fill=\"#f2c84b\" stroke=\"black\" "
      << "stroke-width=\"" << num(stroke) << "\"/>\n";
  for (std::size_t n = 1; n < a.size(); ++n) {
    const Disk& h = a.disk(n);
    if (!(h.r > 0.0)) continue;
    svg << "  <circle cx=\"" << num(h.cx) << "\" cy=\"" << num(-h.cy)
        << "\" r=\"" << num(h.r) << "\" fill=\"white\" stroke=\"black\" "
        << "stroke-width=\"" << num(stroke) << "\"/>\n";
  }
  if (opts.show_indices) {
    const double font = view / 40.0;
    for (std::size_t n = 1; n < a.size(); ++n) {
      const Disk& h = a.disk(n);
      if (!(h.r > 0.0)) continue;
      svg << "  <text x=\"" << num(h.cx) << "\" y=\"" << num(-h.cy)
          << "\" font-size=\"" << num(font)
          << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << n
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheeseError(ErrorCode::kIo, "cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CheeseError(ErrorCode::kIo, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw CheeseError(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace swisscheese
