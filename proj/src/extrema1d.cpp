#include "lebgeo/extrema1d.hpp"

#include <algorithm>
#include <cmath>

#include "lebgeo/pieces.hpp"

namespace lebgeo {

namespace {

constexpr double kLocationTol = 1e-13;

// dense-scan fallback when the derivative bracket is ambiguous
IntervalMax scan_then_golden(const Lebesgue1D<double>& L, int k, double a, double b) {
  const int kScan = 10000;
  double bestx = a, bestv = -1;
  for (int i = 1; i < kScan; ++i) {
    double x = a + (b - a) * i / kScan;
    double v = L.lebesgue(x);
    if (v > bestv) {
      bestv = v;
      bestx = x;
    }
  }
  double lo = std::max(a, bestx - (b - a) / kScan), hi = std::min(b, bestx + (b - a) / kScan);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
  double fc = L.lebesgue(c), fd = L.lebesgue(d);
  while (hi - lo > kLocationTol) {
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + phi * (hi - lo);
      fd = L.lebesgue(d);
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = hi - phi * (hi - lo);
      fc = L.lebesgue(c);
    }
  }
  double x = 0.5 * (lo + hi);
  return {k, x, L.lebesgue(x)};
}

}  // namespace

IntervalMax interval_max(const Lebesgue1D<double>& L, int k) {
  const auto& ns = L.node_set();
  if (ns.degree < 1 || k < 1 || k > ns.degree) throw invalid_input("interval index out of range");
  const double a = ns.nodes[k - 1], b = ns.nodes[k];
  // unimodality check: the signed piece must leave the left node rising and
  // reach the right node falling
  auto dl = piece_derivative_at_node(ns, L.weights(), k, NodeSide::left, 1);
  auto dr = piece_derivative_at_node(ns, L.weights(), k, NodeSide::right, 1);
  Eigen::ArrayXi sigma = piece_sign_vector(ns.degree, k);
  if (!(dl.value > 0) || !(dr.value < 0)) return scan_then_golden(L, k, a, b);
  // bisection on the sign of the piece derivative; endpoint signs are known
  // analytically, interior evaluations are stable
  double lo = a, hi = b;
  while (hi - lo > kLocationTol) {
    double mid = 0.5 * (lo + hi);
    if (L.piece_derivative(mid, sigma) > 0)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  return {k, x, L.lebesgue(x)};
}

double lebesgue_constant(const Lebesgue1D<double>& L) {
  const auto& ns = L.node_set();
  if (ns.degree == 0) return 1.0;
  double best = 1.0;
  for (int k = 1; k <= ns.degree; ++k) best = std::max(best, interval_max(L, k).value);
  // the boundary pieces are monotone, so their maxima sit at the endpoints
  if (ns.nodes[0] > -1.0) best = std::max(best, L.lebesgue(-1.0));
  if (ns.nodes[ns.degree] < 1.0) best = std::max(best, L.lebesgue(1.0));
  return best;
}

double lebesgue_constant(const NodeSet1D<double>& ns) {
  return lebesgue_constant(Lebesgue1D<double>(ns));
}

MaxSet max_set(const NodeSet1D<double>& ns, double tol) {
  if (ns.degree < 1)
    throw domain_violation("degree-0 Lebesgue function is constant; its max set is not discrete");
  if (!(tol > 0)) throw invalid_input("max-set tolerance must be positive");
  Lebesgue1D<double> L(ns);
  MaxSet ms;
  ms.tolerance = tol;
  std::vector<std::pair<double, double>> candidates;
  for (int k = 1; k <= ns.degree; ++k) {
    IntervalMax im = interval_max(L, k);
    ms.per_interval.push_back(im);
    candidates.emplace_back(im.location, im.value);
  }
  if (ns.nodes[0] > -1.0) candidates.emplace_back(-1.0, L.lebesgue(-1.0));
  if (ns.nodes[ns.degree] < 1.0) candidates.emplace_back(1.0, L.lebesgue(1.0));
  double constant = 1.0;
  for (auto& c : candidates) constant = std::max(constant, c.second);
  ms.constant = constant;
  for (auto& c : candidates)
    if (c.second >= (1.0 - tol) * constant) ms.points.push_back(c.first);
  std::sort(ms.points.begin(), ms.points.end());
  return ms;
}

double separation_bound_a(int n) {
  if (n <= 1) throw out_of_domain("a(n) requires n > 1");
  return std::log(2.0 - 1.0 / (2.0 / M_PI * std::log(n + 1.0) + 0.5212));
}

double degree_threshold_N(double b) {
  static const double lo = std::log(2.0 - 1.0 / (2.0 / M_PI * std::log(3.0) + 0.5212));
  if (b < lo || b >= std::log(2.0)) throw out_of_domain("N(b) requires b in [a(2), log 2)");
  return std::exp(M_PI / 2.0 * (1.0 / (2.0 - std::exp(b)) - 0.5212)) - 1.0;
}

double brutman_lower_bound(int n) {
  if (n < 1) throw out_of_domain("bound requires n >= 1");
  return 0.5212 + 2.0 / M_PI * std::log(n + 1.0);
}

BoundaryExclusionReport boundary_exclusion_check(const NodeSet1D<double>& ns) {
  const int n = ns.degree;
  if (n <= 1) throw out_of_domain("boundary exclusion requires degree > 1");
  Lebesgue1D<double> L(ns);
  BoundaryExclusionReport r;
  r.gap_requirement = separation_bound_a(n) / (double(n) * n);
  r.hypothesis_met_left = ns.nodes[0] <= -(1.0 - r.gap_requirement);
  r.hypothesis_met_right = ns.nodes[n] >= 1.0 - r.gap_requirement;
  r.lambda_at_minus1 = L.lebesgue(-1.0);
  r.lambda_at_plus1 = L.lebesgue(1.0);
  r.constant = lebesgue_constant(L);
  const double margin = 1e-12 * r.constant;
  r.endpoint_excluded_left = r.lambda_at_minus1 < r.constant - margin;
  r.endpoint_excluded_right = r.lambda_at_plus1 < r.constant - margin;
  return r;
}

RescalingReport rescaling_invariance_check(const NodeSet1D<double>& ns, double c) {
  const int n = ns.degree;
  if (std::abs(ns.nodes[0] + 1.0) > 1e-15 || std::abs(ns.nodes[n] - 1.0) > 1e-15)
    throw invalid_input("rescaling check requires a node set containing both endpoints");
  double cmin = 1.0 - separation_bound_a(n) / (double(n) * n);
  if (c < cmin || c > 1.0) throw invalid_input("scale factor outside [1 - a(n)/n^2, 1]");
  RescalingReport r;
  r.factor = c;
  r.constant_original = lebesgue_constant(ns);
  r.constant_scaled = lebesgue_constant(scale(ns, c));
  r.relative_difference =
      std::abs(r.constant_original - r.constant_scaled) / r.constant_original;
  return r;
}

}  // namespace lebgeo
