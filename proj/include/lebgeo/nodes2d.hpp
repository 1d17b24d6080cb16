#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "lebgeo/errors.hpp"

namespace lebgeo {

enum class NodeFamily2D { padua, morrow_patterson, custom };

inline const char* family2d_name(NodeFamily2D f) {
  switch (f) {
    case NodeFamily2D::padua: return "padua";
    case NodeFamily2D::morrow_patterson: return "morrow_patterson";
    default: return "custom";
  }
}

NodeFamily2D family2d_from_name(const std::string& s);

/// Unisolvent point family on the square; cardinality (n+1)(n+2)/2.
struct NodeSet2D {
  Eigen::Matrix<double, Eigen::Dynamic, 2> points;
  int degree = 0;
  NodeFamily2D family = NodeFamily2D::custom;
  int parity = 1;

  int count() const { return static_cast<int>(points.rows()); }
};

/// Padua points of degree n: interleaved Chebyshev-Lobatto subgrids
/// (cos(k pi/(n+1)), cos(j pi/n)) with j+k odd.
NodeSet2D padua(int n);

/// Morrow-Patterson points of degree n: the interior points of the
/// degree-(n+2) Padua family, generated directly on their own grids.
NodeSet2D morrow_patterson(int n);

NodeSet2D custom_nodes2d(Eigen::Matrix<double, Eigen::Dynamic, 2> pts, int degree);

struct UnisolvenceReport {
  bool determinant_nonzero = false;
  double condition_estimate = 0;
};

/// Rank/conditioning of the Vandermonde matrix in the total-degree product
/// Chebyshev basis.
UnisolvenceReport unisolvence_check(const NodeSet2D& ns);

}  // namespace lebgeo
