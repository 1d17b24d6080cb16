#pragma once

#include <json.hpp>
#include <iosfwd>
#include <string>
#include <vector>

#include "lebgeo/convexity1d.hpp"
#include "lebgeo/extrema1d.hpp"
#include "lebgeo/lebesgue2d.hpp"
#include "lebgeo/maxima2d.hpp"
#include "lebgeo/nodes1d.hpp"
#include "lebgeo/nodes2d.hpp"

namespace lebgeo::io {

using nlohmann::json;

json to_json(const NodeSet1D<double>& ns);
NodeSet1D<double> node_set1d_from_json(const json& j);

/// Node-set JSON with nodes as decimal strings at ~bits/3 significant digits.
json to_json_extended(const NodeSet1D<BigFloat>& ns, int bits);

json to_json(const NodeSet2D& ns);
NodeSet2D node_set2d_from_json(const json& j);

json to_json(const MaxSet& ms);
MaxSet max_set_from_json(const json& j);

json to_json(const BoundaryExclusionReport& r);
BoundaryExclusionReport boundary_report_from_json(const json& j);

json to_json(const MinDegreeResult& r, NodeFamily family, int m);
MinDegreeResult min_degree_from_json(const json& j);

json to_json(const ZeroCurve& zc);
ZeroCurve zero_curve_from_json(const json& j);

json to_json(const MaximaCount& c, const LowerBoundCheck& lb);
MaximaCount maxima_count_from_json(const json& j);

json to_json(const LocalMaxRecord& r);

// CSV: header `x,lambda`, one full-precision row per grid point
void write_samples_csv(std::ostream& os, const std::vector<std::pair<double, double>>& rows);
std::vector<std::pair<double, double>> read_samples_csv(std::istream& is);

// CSV: header `x,y,lambda`, row-major over the grid
void write_surface_csv(std::ostream& os, const std::vector<std::array<double, 3>>& rows);
std::vector<std::array<double, 3>> read_surface_csv(std::istream& is);

std::string format_full(double v);

}  // namespace lebgeo::io
