#pragma once

#include <Eigen/Core>

#include "lebgeo/barycentric.hpp"
#include "lebgeo/nodes1d.hpp"

namespace lebgeo {

/// Sign vector of the fundamental polynomials on one open subinterval.
/// Piece index k: 0 is [-1,x_1), k in 1..n is (x_k, x_{k+1}), n+1 is (x_{n+1},1].
struct PieceInfo {
  int interval_index = 0;
  Eigen::ArrayXi signs;
};

/// Signs are exact by parity: on (x_k, x_{k+1}) the sign of l_j is determined
/// by how many nodes lie to the right of the interval and of j.
inline Eigen::ArrayXi piece_sign_vector(int degree, int k) {
  const int m = degree + 1;
  Eigen::ArrayXi sigma(m);
  for (int j = 1; j <= m; ++j) {
    int e = k + (j > k ? 1 : 0) + j;
    sigma[j - 1] = (e % 2 == 0) ? 1 : -1;
  }
  return sigma;
}

template <typename Scalar>
PieceInfo piece_signs(const NodeSet1D<Scalar>& ns, int k) {
  if (k < 0 || k > ns.degree + 1) throw invalid_input("piece index out of range");
  return PieceInfo{k, piece_sign_vector(ns.degree, k)};
}

/// Row i of the first/second differentiation matrix of the nodal basis
/// (Welfert recursion on barycentric weights). Applied to nodal values it
/// yields the derivative of the interpolant at node i.
template <typename Scalar>
void differentiation_rows(const NodeSet1D<Scalar>& ns,
                          const Eigen::Array<Scalar, Eigen::Dynamic, 1>& w, int i,
                          Eigen::Array<Scalar, Eigen::Dynamic, 1>& d1,
                          Eigen::Array<Scalar, Eigen::Dynamic, 1>& d2) {
  const int m = ns.count();
  d1.resize(m);
  d2.resize(m);
  Scalar d1ii(0);
  for (int j = 0; j < m; ++j) {
    if (j == i) continue;
    d1[j] = (w[j] / w[i]) / (ns.nodes[i] - ns.nodes[j]);
    d1ii -= d1[j];
  }
  d1[i] = d1ii;
  Scalar d2ii(0);
  for (int j = 0; j < m; ++j) {
    if (j == i) continue;
    d2[j] = Scalar(2) * ((w[j] / w[i]) * d1ii - d1[j]) / (ns.nodes[i] - ns.nodes[j]);
    d2ii -= d2[j];
  }
  d2[i] = d2ii;
}

enum class NodeSide { left, right };

/// Derivative of the degree-n piece polynomial at one of its nodes, together
/// with the magnitude of the largest term in the sum (for sign margins).
template <typename Scalar>
struct NodalDerivative {
  Scalar value;
  Scalar term_scale;
};

template <typename Scalar>
NodalDerivative<Scalar> piece_derivative_at_node(const NodeSet1D<Scalar>& ns,
                                                 const Eigen::Array<Scalar, Eigen::Dynamic, 1>& w,
                                                 int k, NodeSide side, int order) {
  if (k < 1 || k > ns.degree) throw invalid_input("interior piece index required");
  const int i = (side == NodeSide::right) ? k : k - 1;  // 0-based node index
  Eigen::ArrayXi sigma = piece_sign_vector(ns.degree, k);
  Eigen::Array<Scalar, Eigen::Dynamic, 1> d1, d2;
  differentiation_rows(ns, w, i, d1, d2);
  const auto& row = (order == 1) ? d1 : d2;
  Scalar sum(0), scale(0);
  for (int j = 0; j < ns.count(); ++j) {
    Scalar term = row[j] * Scalar(sigma[j]);
    sum += term;
    using std::abs;
    Scalar a = abs(term);
    if (a > scale) scale = a;
  }
  return {sum, scale};
}

/// Exact second derivative of the signed piece at the node on the given side.
template <typename Scalar>
Scalar piece_second_derivative_at_node(const NodeSet1D<Scalar>& ns, int k, NodeSide side) {
  auto w = barycentric_weights(ns);
  return piece_derivative_at_node(ns, w, k, side, 2).value;
}

}  // namespace lebgeo
