#pragma once

#include <vector>

#include "lebgeo/barycentric.hpp"
#include "lebgeo/nodes1d.hpp"

namespace lebgeo {

struct IntervalMax {
  int interval = 0;  // piece index k, 1-based
  double location = 0;
  double value = 1;
};

/// The set A of global maximizers of the Lebesgue function, with the constant.
struct MaxSet {
  double constant = 1;
  std::vector<double> points;
  std::vector<IntervalMax> per_interval;
  double tolerance = 1e-10;
};

/// Unique interior maximizer of lambda on [x_k, x_{k+1}], located to 1e-13.
IntervalMax interval_max(const Lebesgue1D<double>& L, int k);

double lebesgue_constant(const Lebesgue1D<double>& L);
double lebesgue_constant(const NodeSet1D<double>& ns);

MaxSet max_set(const NodeSet1D<double>& ns, double tol = 1e-10);

/// a(n) = log[2 - ((2/pi) log(n+1) + 0.5212)^{-1}]; increasing, limit log 2.
double separation_bound_a(int n);

/// Inverse of a: N(b) = exp[(pi/2)(1/(2-e^b) - 0.5212)] - 1.
double degree_threshold_N(double b);

/// 0.5212 + (2/pi) log(n+1), a lower bound for every Lebesgue constant.
double brutman_lower_bound(int n);

struct BoundaryExclusionReport {
  bool hypothesis_met_left = false;
  bool hypothesis_met_right = false;
  bool endpoint_excluded_left = false;
  bool endpoint_excluded_right = false;
  double lambda_at_minus1 = 0;
  double lambda_at_plus1 = 0;
  double constant = 0;
  double gap_requirement = 0;  // a(n)/n^2
};

/// Tests the endpoint-separation hypothesis x_{n+1} >= 1 - a(n)/n^2 (and its
/// mirror) against the numerically observed exclusion lambda(+-1) < Lambda.
BoundaryExclusionReport boundary_exclusion_check(const NodeSet1D<double>& ns);

struct RescalingReport {
  double constant_original = 0;
  double constant_scaled = 0;
  double relative_difference = 0;
  double factor = 1;
};

/// Scaling a set containing the endpoints by c in [1 - a(n)/n^2, 1) must leave
/// the Lebesgue constant unchanged.
RescalingReport rescaling_invariance_check(const NodeSet1D<double>& ns, double c);

}  // namespace lebgeo
