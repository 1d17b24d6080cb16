#include "lebgeo/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace lebgeo::io {

std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const NodeSet1D<double>& ns) {
  json j;
  j["degree"] = ns.degree;
  j["family"] = family_name(ns.family);
  j["nodes"] = std::vector<double>(ns.nodes.data(), ns.nodes.data() + ns.count());
  return j;
}

NodeSet1D<double> node_set1d_from_json(const json& j) {
  NodeSet1D<double> ns;
  ns.degree = j.at("degree").get<int>();
  ns.family = family_from_name(j.at("family").get<std::string>());
  auto vals = j.at("nodes").get<std::vector<double>>();
  ns.nodes.resize(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) ns.nodes[i] = vals[i];
  detail::check_valid(ns);
  return ns;
}

json to_json_extended(const NodeSet1D<BigFloat>& ns, int bits) {
  json j;
  j["degree"] = ns.degree;
  j["family"] = family_name(ns.family);
  j["precision_bits"] = bits;
  std::vector<std::string> nodes;
  nodes.reserve(ns.count());
  int digits = std::max(17, bits / 3);
  for (int i = 0; i < ns.count(); ++i) nodes.push_back(ns.nodes[i].str(digits));
  j["nodes"] = nodes;
  return j;
}

json to_json(const NodeSet2D& ns) {
  json j;
  j["degree"] = ns.degree;
  j["family"] = family2d_name(ns.family);
  j["parity"] = ns.parity;
  json pts = json::array();
  for (int i = 0; i < ns.count(); ++i) pts.push_back({ns.points(i, 0), ns.points(i, 1)});
  j["points"] = pts;
  return j;
}

NodeSet2D node_set2d_from_json(const json& j) {
  NodeSet2D ns;
  ns.degree = j.at("degree").get<int>();
  ns.family = family2d_from_name(j.at("family").get<std::string>());
  ns.parity = j.value("parity", 1);
  const auto& pts = j.at("points");
  ns.points.resize(pts.size(), 2);
  for (size_t i = 0; i < pts.size(); ++i) {
    ns.points(i, 0) = pts[i][0].get<double>();
    ns.points(i, 1) = pts[i][1].get<double>();
  }
  return ns;
}

json to_json(const MaxSet& ms) {
  json j;
  j["constant"] = ms.constant;
  j["points"] = ms.points;
  j["tolerance"] = ms.tolerance;
  json per = json::array();
  for (auto& im : ms.per_interval)
    per.push_back({{"interval", im.interval}, {"location", im.location}, {"value", im.value}});
  j["per_interval"] = per;
  return j;
}

MaxSet max_set_from_json(const json& j) {
  MaxSet ms;
  ms.constant = j.at("constant").get<double>();
  ms.points = j.at("points").get<std::vector<double>>();
  ms.tolerance = j.at("tolerance").get<double>();
  for (auto& e : j.at("per_interval"))
    ms.per_interval.push_back(
        {e.at("interval").get<int>(), e.at("location").get<double>(), e.at("value").get<double>()});
  return ms;
}

json to_json(const BoundaryExclusionReport& r) {
  return json{{"hypothesis_met_left", r.hypothesis_met_left},
              {"hypothesis_met_right", r.hypothesis_met_right},
              {"endpoint_excluded_left", r.endpoint_excluded_left},
              {"endpoint_excluded_right", r.endpoint_excluded_right},
              {"lambda_at_minus1", r.lambda_at_minus1},
              {"lambda_at_plus1", r.lambda_at_plus1},
              {"constant", r.constant},
              {"gap_requirement", r.gap_requirement}};
}

BoundaryExclusionReport boundary_report_from_json(const json& j) {
  BoundaryExclusionReport r;
  r.hypothesis_met_left = j.at("hypothesis_met_left").get<bool>();
  r.hypothesis_met_right = j.at("hypothesis_met_right").get<bool>();
  r.endpoint_excluded_left = j.at("endpoint_excluded_left").get<bool>();
  r.endpoint_excluded_right = j.at("endpoint_excluded_right").get<bool>();
  r.lambda_at_minus1 = j.at("lambda_at_minus1").get<double>();
  r.lambda_at_plus1 = j.at("lambda_at_plus1").get<double>();
  r.constant = j.at("constant").get<double>();
  r.gap_requirement = j.at("gap_requirement").get<double>();
  return r;
}

json to_json(const MinDegreeResult& r, NodeFamily family, int m) {
  json j;
  j["family"] = family_name(family);
  j["m"] = m;
  if (r.min_degree)
    j["min_degree"] = *r.min_degree;
  else
    j["min_degree"] = nullptr;
  j["n_max"] = r.n_max;
  j["bits_used"] = r.bits_used;
  json dec = json::array();
  for (auto& d : r.decisions)
    dec.push_back({{"interval", d.interval}, {"convex", d.convex}, {"bits", d.bits_used}});
  j["decisions"] = dec;
  return j;
}

MinDegreeResult min_degree_from_json(const json& j) {
  MinDegreeResult r;
  if (!j.at("min_degree").is_null()) r.min_degree = j.at("min_degree").get<int>();
  r.n_max = j.at("n_max").get<int>();
  r.bits_used = j.at("bits_used").get<int>();
  for (auto& d : j.at("decisions"))
    r.decisions.push_back(
        {d.at("interval").get<int>(), d.at("convex").get<bool>(), d.at("bits").get<int>()});
  return r;
}

json to_json(const ZeroCurve& zc) {
  json j;
  j["node"] = {zc.node_x, zc.node_y};
  j["node_index"] = zc.node_index;
  j["grid_res"] = zc.grid_resolution;
  json lines = json::array();
  for (auto& line : zc.polylines) {
    json l = json::array();
    for (auto& p : line) l.push_back({p[0], p[1]});
    lines.push_back(l);
  }
  j["polylines"] = lines;
  return j;
}

ZeroCurve zero_curve_from_json(const json& j) {
  ZeroCurve zc;
  zc.node_x = j.at("node")[0].get<double>();
  zc.node_y = j.at("node")[1].get<double>();
  zc.node_index = j.value("node_index", 0);
  zc.grid_resolution = j.value("grid_res", 0);
  for (auto& line : j.at("polylines")) {
    std::vector<std::array<double, 2>> pts;
    for (auto& p : line) pts.push_back({p[0].get<double>(), p[1].get<double>()});
    zc.polylines.push_back(std::move(pts));
  }
  return zc;
}

json to_json(const LocalMaxRecord& r) {
  const char* cls = r.cls == MaxClass::interior ? "interior"
                    : r.cls == MaxClass::edge   ? "edge"
                                                : "corner";
  return json{{"x", r.x},           {"y", r.y},
              {"value", r.value},   {"class", cls},
              {"basin_id", r.basin_id}, {"refined", r.refined}};
}

json to_json(const MaximaCount& c, const LowerBoundCheck& lb) {
  json j;
  j["interior"] = c.interior;
  j["total"] = c.total;
  j["grid_res"] = c.grid_res;
  j["stable"] = c.stable;
  json recs = json::array();
  for (auto& r : c.records) recs.push_back(to_json(r));
  j["records"] = recs;
  j["bounds_check"] = {{"interior_ok", lb.interior_ok},
                       {"total_ok", lb.total_ok},
                       {"interior_bound", lb.interior_bound},
                       {"total_bound", lb.total_bound}};
  return j;
}

MaximaCount maxima_count_from_json(const json& j) {
  MaximaCount c;
  c.interior = j.at("interior").get<int>();
  c.total = j.at("total").get<int>();
  c.grid_res = j.at("grid_res").get<int>();
  c.stable = j.at("stable").get<bool>();
  for (auto& e : j.at("records")) {
    LocalMaxRecord r;
    r.x = e.at("x").get<double>();
    r.y = e.at("y").get<double>();
    r.value = e.at("value").get<double>();
    std::string cls = e.at("class").get<std::string>();
    r.cls = cls == "interior" ? MaxClass::interior
            : cls == "edge"   ? MaxClass::edge
                              : MaxClass::corner;
    r.basin_id = e.at("basin_id").get<int>();
    r.refined = e.at("refined").get<bool>();
    c.records.push_back(r);
  }
  return c;
}

void write_samples_csv(std::ostream& os, const std::vector<std::pair<double, double>>& rows) {
  os << "x,lambda\n";
  for (auto& [x, l] : rows) os << format_full(x) << ',' << format_full(l) << '\n';
}

std::vector<std::pair<double, double>> read_samples_csv(std::istream& is) {
  std::vector<std::pair<double, double>> rows;
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

void write_surface_csv(std::ostream& os, const std::vector<std::array<double, 3>>& rows) {
  os << "x,y,lambda\n";
  for (auto& r : rows)
    os << format_full(r[0]) << ',' << format_full(r[1]) << ',' << format_full(r[2]) << '\n';
}

std::vector<std::array<double, 3>> read_surface_csv(std::istream& is) {
  std::vector<std::array<double, 3>> rows;
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
    rows.push_back({std::stod(line.substr(0, c1)), std::stod(line.substr(c1 + 1, c2 - c1 - 1)),
                    std::stod(line.substr(c2 + 1))});
  }
  return rows;
}

}  // namespace lebgeo::io
