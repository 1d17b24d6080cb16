#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lebgeo/io.hpp"

using namespace lebgeo;
using nlohmann::json;

#ifndef LEBGEO_CLI
#define LEBGEO_CLI "./lebgeo"
#endif

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(LEBGEO_CLI) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("json round trips") {
  SUBCASE("1d node set") {
    auto ns = chebyshev1(7);
    auto back = io::node_set1d_from_json(io::to_json(ns));
    CHECK(back.degree == 7);
    CHECK(back.family == NodeFamily::chebyshev1);
    for (int j = 0; j <= 7; ++j) CHECK(back.nodes[j] == ns.nodes[j]);
  }
  SUBCASE("2d node set") {
    auto ns = padua(5);
    auto back = io::node_set2d_from_json(io::to_json(ns));
    CHECK(back.degree == 5);
    CHECK(back.parity == 1);
    CHECK(back.points == ns.points);
  }
  SUBCASE("max set") {
    auto ms = max_set(chebyshev_lobatto(7));
    auto back = io::max_set_from_json(io::to_json(ms));
    CHECK(back.constant == ms.constant);
    CHECK(back.points == ms.points);
    REQUIRE(back.per_interval.size() == ms.per_interval.size());
    for (size_t i = 0; i < ms.per_interval.size(); ++i) {
      CHECK(back.per_interval[i].location == ms.per_interval[i].location);
      CHECK(back.per_interval[i].value == ms.per_interval[i].value);
    }
  }
  SUBCASE("boundary report") {
    auto r = boundary_exclusion_check(chebyshev2(12));
    auto back = io::boundary_report_from_json(io::to_json(r));
    CHECK(back.constant == r.constant);
    CHECK(back.endpoint_excluded_right == r.endpoint_excluded_right);
    CHECK(back.gap_requirement == r.gap_requirement);
  }
  SUBCASE("convexity result") {
    auto r = min_degree_for_convexity(NodeFamily::chebyshev2, 2, PrecisionContext{256}, 30);
    auto back = io::min_degree_from_json(io::to_json(r, NodeFamily::chebyshev2, 2));
    CHECK(back.min_degree == r.min_degree);
    CHECK(back.bits_used == r.bits_used);
    REQUIRE(back.decisions.size() == r.decisions.size());
    for (size_t i = 0; i < r.decisions.size(); ++i)
      CHECK(back.decisions[i].convex == r.decisions[i].convex);
  }
  SUBCASE("maxima count") {
    auto c = count_maxima(NodeFamily2D::padua, 3, 160);
    auto back = io::maxima_count_from_json(io::to_json(c, lower_bound_check(3, c)));
    CHECK(back.interior == c.interior);
    CHECK(back.total == c.total);
    CHECK(back.stable == c.stable);
    REQUIRE(back.records.size() == c.records.size());
    for (size_t i = 0; i < c.records.size(); ++i) {
      CHECK(back.records[i].x == c.records[i].x);
      CHECK(back.records[i].value == c.records[i].value);
      CHECK(back.records[i].cls == c.records[i].cls);
    }
  }
  SUBCASE("zero curve") {
    CardinalEvaluator ce(padua(3));
    auto zc = zero_curves(ce, 2, 128);
    auto back = io::zero_curve_from_json(io::to_json(zc));
    CHECK(back.node_x == zc.node_x);
    REQUIRE(back.polylines.size() == zc.polylines.size());
    for (size_t i = 0; i < zc.polylines.size(); ++i)
      CHECK(back.polylines[i] == zc.polylines[i]);
  }
}

TEST_CASE("csv round trips") {
  SUBCASE("samples") {
    Lebesgue1D<double> L(chebyshev1(6));
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(-1.0 + 0.02 * i);
    auto rows = L.sample(grid);
    std::stringstream ss;
    io::write_samples_csv(ss, rows);
    auto back = io::read_samples_csv(ss);
    REQUIRE(back.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      CHECK(back[i].first == rows[i].first);
      CHECK(back[i].second == rows[i].second);
    }
  }
  SUBCASE("surface") {
    std::vector<std::array<double, 3>> rows = {{-1, -1, 2.25}, {0.125, -0.5, 1.0 / 3.0}};
    std::stringstream ss;
    io::write_surface_csv(ss, rows);
    auto back = io::read_surface_csv(ss);
    REQUIRE(back.size() == 2);
    CHECK(back[1][2] == rows[1][2]);
  }
}

TEST_CASE("cli behaviour") {
  SUBCASE("exit codes") {
    CHECK(run_cli("definitely-not-a-command") == 2);
    CHECK(run_cli("maxset --family chebyshev1 --degree 10") == 0);
    CHECK(run_cli("maxset --family custom") == 1);  // custom needs --values
    CHECK(run_cli("reproduce --table 1") == 0);
  }
  SUBCASE("deterministic output modulo the generated stamp") {
    std::string f1 = "/tmp/lebgeo_t1.json", f2 = "/tmp/lebgeo_t2.json";
    REQUIRE(run_cli("maxset --family lobatto --degree 9 --output " + f1) == 0);
    REQUIRE(run_cli("maxset --family lobatto --degree 9 --output " + f2) == 0);
    json a = json::parse(slurp(f1)), b = json::parse(slurp(f2));
    a["meta"].erase("generated");
    b["meta"].erase("generated");
    CHECK(a.dump() == b.dump());
    std::remove(f1.c_str());
    std::remove(f2.c_str());
  }
  SUBCASE("emitted node sets read back through the library") {
    std::string f = "/tmp/lebgeo_nodes.json";
    REQUIRE(run_cli("nodes --family chebyshev2 --degree 12 --output " + f) == 0);
    auto ns = io::node_set1d_from_json(json::parse(slurp(f)));
    CHECK(ns.degree == 12);
    auto want = chebyshev2(12);
    for (int j = 0; j <= 12; ++j) CHECK(ns.nodes[j] == want.nodes[j]);
    std::remove(f.c_str());

    std::string f2 = "/tmp/lebgeo_nodes2.json";
    REQUIRE(run_cli("nodes2d --family padua --degree 4 --output " + f2) == 0);
    auto ns2 = io::node_set2d_from_json(json::parse(slurp(f2)));
    CHECK(ns2.count() == 15);
    CHECK(unisolvence_check(ns2).determinant_nonzero);
    std::remove(f2.c_str());
  }
  SUBCASE("eval emits readable csv") {
    std::string f = "/tmp/lebgeo_eval.csv";
    REQUIRE(run_cli("eval --family chebyshev1 --degree 5 --grid-size 50 --output " + f) == 0);
    std::ifstream is(f);
    auto rows = io::read_samples_csv(is);
    CHECK(rows.size() == 51);
    CHECK(rows.front().first == -1.0);
    CHECK(rows.back().first == 1.0);
    for (auto& [x, l] : rows) CHECK(l >= 1.0 - 1e-12);
    std::remove(f.c_str());
  }
  SUBCASE("convexity subcommand reports the reference row") {
    std::string f = "/tmp/lebgeo_conv.json";
    REQUIRE(run_cli("convexity --family chebyshev2 --m 1 --output " + f) == 0);
    json j = json::parse(slurp(f));
    CHECK(j.at("min_degree").get<int>() == 8);
    std::remove(f.c_str());
  }
  SUBCASE("maxima2d subcommand") {
    std::string f = "/tmp/lebgeo_mx.json";
    REQUIRE(run_cli("maxima2d --family padua --degree 4 --output " + f) == 0);
    json j = json::parse(slurp(f));
    CHECK(j.at("interior").get<int>() == 13);
    CHECK(j.at("total").get<int>() == 27);
    CHECK(j.at("stable").get<bool>());
    CHECK(j.at("bounds_check").at("interior_ok").get<bool>());
    std::remove(f.c_str());
  }
  SUBCASE("check-theorem subcommand") {
    std::string f = "/tmp/lebgeo_thm.json";
    REQUIRE(run_cli("check-theorem --family chebyshev1 --degree 20 --output " + f) == 0);
    auto r = io::boundary_report_from_json(json::parse(slurp(f)));
    CHECK_FALSE(r.hypothesis_met_right);
    CHECK_FALSE(r.endpoint_excluded_right);
    std::remove(f.c_str());
    // scaling inside the separation bound flips both flags
    int n = 20;
    char buf[160];
    std::snprintf(buf, sizeof buf, "check-theorem --family lobatto --degree 20 --scale %.17g",
                  1.0 - separation_bound_a(n) / (n * n));
    REQUIRE(run_cli(std::string(buf) + " --output " + f) == 0);
    auto r2 = io::boundary_report_from_json(json::parse(slurp(f)));
    CHECK(r2.hypothesis_met_right);
    CHECK(r2.endpoint_excluded_right);
    std::remove(f.c_str());
  }
  SUBCASE("surface2d and curves subcommands") {
    std::string f = "/tmp/lebgeo_surf.csv";
    REQUIRE(run_cli("surface2d --family padua --degree 2 --res 48 --output " + f) == 0);
    std::ifstream is(f);
    auto rows = io::read_surface_csv(is);
    CHECK(rows.size() == 49u * 49u);
    for (auto& r : rows) CHECK(r[2] >= 1.0 - 1e-12);
    std::remove(f.c_str());

    std::string f2 = "/tmp/lebgeo_curve.json";
    REQUIRE(run_cli("curves --family padua --degree 2 --res 96 --node-index 0 --output " + f2) ==
            0);
    auto zc = io::zero_curve_from_json(json::parse(slurp(f2)));
    CHECK(!zc.polylines.empty());
    std::remove(f2.c_str());
  }
}
