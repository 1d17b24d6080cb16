#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "lebgeo/nodes2d.hpp"

using namespace lebgeo;

TEST_CASE("padua cardinality and membership") {
  CHECK(padua(1).count() == 3);
  CHECK(padua(4).count() == 15);
  for (int n = 1; n <= 60; ++n) CHECK(padua(n).count() == (n + 1) * (n + 2) / 2);

  // the degree-4 family contains (cos(2pi/5), cos(3pi/4))
  auto p4 = padua(4);
  double ax = std::cos(2 * M_PI / 5), ay = std::cos(3 * M_PI / 4);
  bool found = false;
  for (int i = 0; i < p4.count(); ++i)
    if (std::abs(p4.points(i, 0) - ax) < 1e-15 && std::abs(p4.points(i, 1) - ay) < 1e-15)
      found = true;
  CHECK(found);
  CHECK(p4.parity == 1);

  // every coordinate lies on one of the two generating grids
  for (int n : {3, 7, 12}) {
    auto p = padua(n);
    std::set<long long> xs, ys;
    for (int k = 0; k <= n + 1; ++k)
      xs.insert(llround(std::cos(k * M_PI / (n + 1)) * 1e12));
    for (int j = 0; j <= n; ++j) ys.insert(llround(std::cos(j * M_PI / n) * 1e12));
    for (int i = 0; i < p.count(); ++i) {
      CHECK(xs.count(llround(p.points(i, 0) * 1e12)) == 1);
      CHECK(ys.count(llround(p.points(i, 1) * 1e12)) == 1);
    }
  }
  CHECK_THROWS_AS(padua(0), invalid_degree);
}

TEST_CASE("morrow-patterson points") {
  auto mp3 = morrow_patterson(3);
  CHECK(mp3.count() == 10);
  for (int i = 0; i < mp3.count(); ++i) {
    CHECK(std::abs(mp3.points(i, 0)) < 1.0);
    CHECK(std::abs(mp3.points(i, 1)) < 1.0);
  }
  CHECK(morrow_patterson(5).count() == 21);
  for (int n = 1; n <= 60; ++n) CHECK(morrow_patterson(n).count() == (n + 1) * (n + 2) / 2);

  // equals the interior of the degree-(n+2) padua family, coordinatewise
  for (int n : {1, 2, 3, 4, 5, 8, 13, 20, 40}) {
    auto mp = morrow_patterson(n);
    auto big = padua(n + 2);
    std::vector<std::pair<double, double>> interior;
    for (int i = 0; i < big.count(); ++i)
      if (std::abs(big.points(i, 0)) < 1 - 1e-12 && std::abs(big.points(i, 1)) < 1 - 1e-12)
        interior.emplace_back(big.points(i, 0), big.points(i, 1));
    REQUIRE(interior.size() == size_t(mp.count()));
    for (int i = 0; i < mp.count(); ++i) {
      CHECK(mp.points(i, 0) == doctest::Approx(interior[i].first).epsilon(1e-14));
      CHECK(mp.points(i, 1) == doctest::Approx(interior[i].second).epsilon(1e-14));
    }
  }
}

TEST_CASE("unisolvence") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(unisolvence_check(padua(n)).determinant_nonzero);
    CHECK(unisolvence_check(morrow_patterson(n)).determinant_nonzero);
  }
  // a duplicated point is rejected up front
  auto p = padua(3);
  auto pts = p.points;
  pts.row(1) = pts.row(0);
  CHECK_THROWS_AS(custom_nodes2d(pts, 3), not_unisolvent);
  // wrong cardinality
  CHECK_THROWS_AS(custom_nodes2d(p.points.topRows(9), 3), invalid_input);
}
