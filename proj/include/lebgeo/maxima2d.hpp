#pragma once

#include <vector>

#include "lebgeo/lebesgue2d.hpp"

namespace lebgeo {

enum class MaxClass { interior, edge, corner };

enum class BoundaryConvention { edge_restricted, full_neighborhood };

/// A refined local maximum of the 2D Lebesgue function.
struct LocalMaxRecord {
  double x = 0, y = 0;
  double value = 1;
  MaxClass cls = MaxClass::interior;
  int basin_id = 0;
  bool refined = true;
};

struct MaximaOptions {
  double refine_tol = 1e-9;
  double dedupe_radius = 1e-6;
  BoundaryConvention convention = BoundaryConvention::edge_restricted;
  int threads = 1;
};

/// Detect and refine all strict local maxima at the given base resolution.
/// Interior candidates come from grid dominance, from lambda maxima along the
/// cardinal zero curves, and from ring reseeding around accepted maxima; each
/// candidate is polished to a certified maximum of its sign-frozen polynomial
/// piece and then checked for local maximality across nearby zero curves.
std::vector<LocalMaxRecord> local_maxima(const CardinalEvaluator& ce, int grid_res,
                                         const MaximaOptions& opt = {});

struct MaximaCount {
  int interior = 0;
  int total = 0;
  int grid_res = 0;
  bool stable = false;
  std::vector<LocalMaxRecord> records;
};

/// Counts at grid_res, accepted only when a grid doubling reproduces them;
/// one further doubling is attempted before reporting instability.
MaximaCount count_maxima(NodeFamily2D family, int n, int grid_res, const MaximaOptions& opt = {});
MaximaCount count_maxima(const CardinalEvaluator& ce, int grid_res, const MaximaOptions& opt = {});

struct LowerBoundCheck {
  bool interior_ok = false;
  bool total_ok = false;
  int interior_bound = 0;
  int total_bound = 0;
};

/// interior >= n(n-1)/2 and total >= (n+1)(n+2)/2.
LowerBoundCheck lower_bound_check(int n, const MaximaCount& counts);

struct ExcessCluster {
  std::vector<LocalMaxRecord> members;
  int cardinal_index = -1;        // zero curve the cluster straddles
  double curve_distance = 0;      // largest member distance to that curve
};

/// Clusters of maxima within mutual distance 0.1 that sit near (< 0.05) a
/// cardinal zero curve: the mechanism that creates counts above the bounds.
std::vector<ExcessCluster> excess_maxima_report(const CardinalEvaluator& ce,
                                                const std::vector<LocalMaxRecord>& records,
                                                int grid_res);

}  // namespace lebgeo
