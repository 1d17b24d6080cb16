#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lebgeo/extrema1d.hpp"
#include "lebgeo/nodes1d.hpp"
#include "lebgeo/precision.hpp"

using namespace lebgeo;

TEST_CASE("equidistant nodes") {
  auto ns = equidistant(2);
  CHECK(ns.nodes[0] == -1.0);
  CHECK(ns.nodes[1] == 0.0);
  CHECK(ns.nodes[2] == 1.0);
  auto ns4 = equidistant(4);
  CHECK(ns4.nodes[1] == -0.5);
  CHECK(ns4.nodes[3] == 0.5);
  auto ns1 = equidistant(1);
  CHECK(ns1.nodes[0] == -1.0);
  CHECK(ns1.nodes[1] == 1.0);
  CHECK_THROWS_AS(equidistant(0), invalid_degree);
}

TEST_CASE("chebyshev first kind") {
  auto ns = chebyshev1(1);
  CHECK(ns.nodes[0] == doctest::Approx(-std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(ns.nodes[1] == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(chebyshev1(0).nodes[0] == doctest::Approx(0.0).epsilon(1e-16));
  // first node at degree 9, checked against a 50-digit evaluation of the
  // closed form
  ScopedPrecision guard(256);
  BigFloat ref = -cos(pi_value<BigFloat>() / 20);
  CHECK(chebyshev1(9).nodes[0] ==
        doctest::Approx(static_cast<double>(ref)).epsilon(1e-15));
  CHECK(chebyshev1(9).nodes[0] == doctest::Approx(-0.987688).epsilon(1e-6));
}

TEST_CASE("chebyshev second kind") {
  auto ns = chebyshev2(1);
  CHECK(ns.nodes[0] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(ns.nodes[1] == doctest::Approx(0.5).epsilon(1e-15));
  auto ns2 = chebyshev2(2);
  CHECK(ns2.nodes[0] == doctest::Approx(-std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(ns2.nodes[1] == doctest::Approx(0.0).epsilon(1e-16));
  for (int n : {5, 20, 100}) {
    auto s = chebyshev2(n);
    CHECK(1.0 + s.nodes[0] ==
          doctest::Approx(1.0 - std::cos(M_PI / (n + 2))).epsilon(1e-13));
    CHECK(s.nodes[0] > -1.0);
    CHECK(s.nodes[n] < 1.0);
  }
}

TEST_CASE("chebyshev-lobatto") {
  auto ns = chebyshev_lobatto(2);
  CHECK(ns.nodes[0] == -1.0);
  CHECK(ns.nodes[1] == doctest::Approx(0.0).epsilon(1e-16));
  CHECK(ns.nodes[2] == 1.0);
  auto ns3 = chebyshev_lobatto(3);
  CHECK(ns3.nodes[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(ns3.nodes[2] == doctest::Approx(0.5).epsilon(1e-15));
  auto ns4 = chebyshev_lobatto(4);
  CHECK(ns4.nodes[1] == doctest::Approx(-std::sqrt(2.0) / 2).epsilon(1e-15));
}

TEST_CASE("extended chebyshev") {
  auto ns1 = extended_chebyshev(1);
  CHECK(ns1.nodes[0] == -1.0);
  CHECK(ns1.nodes[1] == 1.0);
  auto ns3 = extended_chebyshev(3);
  CHECK(ns3.nodes[1] ==
        doctest::Approx(-std::cos(3 * M_PI / 8) / std::cos(M_PI / 8)).epsilon(1e-15));
  CHECK(ns3.nodes[1] == doctest::Approx(-0.414214).epsilon(1e-6));
  for (int n : {1, 2, 7, 40, 333}) {
    auto s = extended_chebyshev(n);
    CHECK(s.nodes[0] == -1.0);
    CHECK(s.nodes[n] == 1.0);
  }
  CHECK_THROWS_AS(extended_chebyshev(0), invalid_degree);
}

TEST_CASE("custom nodes") {
  auto ns = custom_nodes<double>({-1, -0.4, 0, 0.4, 1});
  CHECK(ns.degree == 4);
  CHECK(ns.family == NodeFamily::custom);
  CHECK_THROWS_AS(custom_nodes<double>({0, 0}), not_unisolvent);
  CHECK_THROWS_AS(custom_nodes<double>({1.5}), domain_violation);
  CHECK_THROWS_AS(custom_nodes<double>({}), invalid_input);
}

TEST_CASE("perturb") {
  auto ns = chebyshev1(9);
  SUBCASE("zero shifts keep the set") {
    auto q = perturb(ns, std::map<int, double>{});
    for (int j = 0; j <= 9; ++j) CHECK(q.nodes[j] == ns.nodes[j]);
    CHECK(q.family == NodeFamily::custom);
  }
  SUBCASE("two central nodes moved outward by 0.05") {
    auto q = perturb(ns, {{4, -0.05}, {5, 0.05}});
    CHECK(q.degree == 9);
    for (int j = 1; j <= 9; ++j) CHECK(q.nodes[j - 1] < q.nodes[j]);
  }
  SUBCASE("hundred-node set, central shift 0.001") {
    auto big = chebyshev1(99);
    auto q = perturb(big, {{49, -0.001}, {50, 0.001}});
    CHECK(q.count() == 100);
  }
  SUBCASE("ordering violation rejected") {
    CHECK_THROWS_AS(perturb(ns, {{0, 5.0}}), domain_violation);
    CHECK_THROWS_AS(perturb(ns, {{4, 0.5}}), not_unisolvent);
  }
  SUBCASE("negated shifts recover the set exactly") {
    // dyadic nodes and shifts so the round trip is exact in binary
    auto base = custom_nodes<double>({-1, -0.5, -0.125, 0.25, 0.75});
    std::map<int, double> s{{1, 0.125}, {3, -0.0625}};
    std::map<int, double> neg;
    for (auto& [i, v] : s) neg[i] = -v;
    auto back = perturb(perturb(base, s), neg);
    for (int j = 0; j < base.count(); ++j) CHECK(back.nodes[j] == base.nodes[j]);
  }
}

TEST_CASE("scale") {
  auto ns = chebyshev_lobatto(4);
  auto same = scale(ns, 1.0);
  for (int j = 0; j <= 4; ++j) CHECK(same.nodes[j] == ns.nodes[j]);
  auto shrunk = scale(ns, 0.99);
  CHECK(shrunk.nodes[0] == -0.99);
  CHECK(shrunk.nodes[4] == 0.99);
  CHECK(shrunk.family == NodeFamily::custom);
  // the factor from the endpoint-separation bound keeps nodes inside
  int n = 10;
  double c = 1.0 - separation_bound_a(n) / (n * n);
  auto s = scale(chebyshev_lobatto(n), c);
  CHECK(s.nodes[0] == -c);
  CHECK(s.nodes[n] == c);
  CHECK_THROWS_AS(scale(ns, 0.0), invalid_input);
  CHECK_THROWS_AS(scale(ns, 1.5), invalid_input);
}

TEST_CASE("generators produce strictly increasing sequences") {
  for (int n : {1, 2, 3, 7, 19, 64, 257, 1000, 2000}) {
    for (NodeFamily f : {NodeFamily::equidistant, NodeFamily::chebyshev1, NodeFamily::chebyshev2,
                         NodeFamily::lobatto, NodeFamily::extended}) {
      auto ns = make_family<double>(f, n);
      REQUIRE(ns.count() == n + 1);
      for (int j = 1; j <= n; ++j) {
        REQUIRE(ns.nodes[j - 1] < ns.nodes[j]);
        REQUIRE(ns.nodes[j] <= 1.0);
      }
      REQUIRE(ns.nodes[0] >= -1.0);
    }
  }
}

TEST_CASE("chebyshev families are symmetric") {
  for (int n : {1, 4, 9, 40, 99}) {
    for (NodeFamily f : {NodeFamily::chebyshev1, NodeFamily::chebyshev2}) {
      auto ns = make_family<double>(f, n);
      for (int j = 0; j <= n; ++j)
        CHECK(ns.nodes[j] == doctest::Approx(-ns.nodes[n - j]).epsilon(1e-15));
    }
  }
}
