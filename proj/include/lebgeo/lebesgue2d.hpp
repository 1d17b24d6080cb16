#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "lebgeo/chebbasis.hpp"
#include "lebgeo/nodes2d.hpp"

namespace lebgeo {

/// All cardinal-function values at a query point through one factorization of
/// the Vandermonde matrix; point evaluations are independent and read-only.
class CardinalEvaluator {
 public:
  explicit CardinalEvaluator(NodeSet2D ns);

  const NodeSet2D& node_set() const { return ns_; }
  int size() const { return N_; }
  int degree() const { return ns_.degree; }
  double condition_estimate() const { return rcond_inv_; }

  /// Cardinal values at (x,y); the delta vector exactly at a node.
  Eigen::VectorXd cardinals(double x, double y) const;

  /// Values plus first and second derivative vectors of every cardinal.
  struct Jet {
    Eigen::VectorXd v, dx, dy, dxx, dxy, dyy;
  };
  void cardinals_jet(double x, double y, Jet& jet) const;

  double lebesgue(double x, double y) const { return cardinals(x, y).cwiseAbs().sum(); }

  /// Batched cardinal values: one column per query point.
  Eigen::MatrixXd cardinals_batch(const Eigen::Matrix<double, Eigen::Dynamic, 2>& pts,
                                  int threads = 1) const;

  /// Batched Lebesgue-function values.
  Eigen::VectorXd lebesgue_batch(const Eigen::Matrix<double, Eigen::Dynamic, 2>& pts,
                                 int threads = 1) const;

 private:
  NodeSet2D ns_;
  int N_;
  Eigen::MatrixXd coeff_;  // inverse-transposed Vandermonde: l(q) = coeff_ * phi(q)
  double rcond_inv_ = 0;
};

struct Lambda2Estimate {
  double value = 1;
  double x = 0, y = 0;
  int grid_res = 0;
};

/// Lower bound on the 2D Lebesgue constant from a uniform grid (boundary
/// included) tightened by local ascent from the best cell.
Lambda2Estimate lebesgue_constant2(const CardinalEvaluator& ce, int grid_res, int threads = 1);

/// Polyline approximation of a cardinal function's zero set.
struct ZeroCurve {
  int node_index = 0;
  double node_x = 0, node_y = 0;
  std::vector<std::vector<std::array<double, 2>>> polylines;
  int grid_resolution = 0;
};

/// Marching squares on the cardinal's sign over the grid, with bisection root
/// refinement along sign-change edges.
ZeroCurve zero_curves(const CardinalEvaluator& ce, int node_index, int grid_res);

}  // namespace lebgeo
