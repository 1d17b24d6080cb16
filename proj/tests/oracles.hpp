// Test-only oracles, independent of the library's evaluation paths.
#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "lebgeo/chebbasis.hpp"
#include "lebgeo/nodes1d.hpp"
#include "lebgeo/nodes2d.hpp"
#include "lebgeo/pieces.hpp"
#include "lebgeo/precision.hpp"

namespace oracle {

// Lagrange basis by the raw product formula.
template <typename Scalar>
std::vector<Scalar> product_basis(const lebgeo::NodeSet1D<Scalar>& ns, Scalar x) {
  const int m = ns.count();
  std::vector<Scalar> out(m);
  for (int j = 0; j < m; ++j) {
    Scalar p(1);
    for (int k = 0; k < m; ++k)
      if (k != j) p *= (x - ns.nodes[k]) / (ns.nodes[j] - ns.nodes[k]);
    out[j] = p;
  }
  return out;
}

template <typename Scalar>
Scalar product_lebesgue(const lebgeo::NodeSet1D<Scalar>& ns, Scalar x) {
  Scalar s(0);
  using std::abs;
  for (Scalar v : product_basis(ns, x)) s += abs(v);
  return s;
}

// Brute-force maximum of lambda over [a,b] on a dense grid.
template <typename F>
std::pair<double, double> dense_grid_max(F&& lam, double a, double b, long points) {
  double bestx = a, bestv = -1;
  for (long i = 0; i <= points; ++i) {
    double x = a + (b - a) * i / points;
    double v = lam(x);
    if (v > bestv) {
      bestv = v;
      bestx = x;
    }
  }
  return {bestx, bestv};
}

// 2D cardinals straight from the definition: ratio of Vandermonde
// determinants with one point swapped for the query.
inline Eigen::VectorXd det_ratio_cardinals(const lebgeo::NodeSet2D& ns, double x, double y) {
  const int N = ns.count();
  Eigen::MatrixXd V(N, N);
  Eigen::VectorXd row(N);
  for (int i = 0; i < N; ++i) {
    lebgeo::basis_eval(ns.degree, ns.points(i, 0), ns.points(i, 1), row);
    V.row(i) = row.transpose();
  }
  double dV = V.fullPivLu().determinant();
  Eigen::VectorXd q(N), out(N);
  lebgeo::basis_eval(ns.degree, x, y, q);
  for (int j = 0; j < N; ++j) {
    Eigen::MatrixXd Vj = V;
    Vj.row(j) = q.transpose();
    out[j] = Vj.fullPivLu().determinant() / dV;
  }
  return out;
}

// Random strictly increasing node set in [-1,1] with a safe minimum gap.
inline lebgeo::NodeSet1D<double> random_node_set(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> v;
  while (true) {
    v.clear();
    for (int i = 0; i <= n; ++i) v.push_back(U(rng));
    std::sort(v.begin(), v.end());
    double mingap = 2.0;
    for (int i = 0; i < n; ++i) mingap = std::min(mingap, v[i + 1] - v[i]);
    if (mingap > 1e-4 / (n + 1)) break;
  }
  return lebgeo::custom_nodes(v);
}

// Central finite difference of the signed piece's second derivative at a node,
// in extended precision (the evaluation route the tables were built with).
inline lebgeo::BigFloat fd_piece_second_derivative(const lebgeo::NodeSet1D<double>& ns, int k,
                                                   lebgeo::NodeSide side, int bits) {
  using lebgeo::BigFloat;
  lebgeo::ScopedPrecision guard(bits);
  lebgeo::NodeSet1D<BigFloat> big = ns.family == lebgeo::NodeFamily::custom
                                        ? [&] {
                                            lebgeo::NodeSet1D<BigFloat> b;
                                            b.degree = ns.degree;
                                            b.family = lebgeo::NodeFamily::custom;
                                            b.nodes.resize(ns.count());
                                            for (int i = 0; i < ns.count(); ++i)
                                              b.nodes[i] = BigFloat(ns.nodes[i]);
                                            return b;
                                          }()
                                        : lebgeo::make_family<BigFloat>(ns.family, ns.degree);
  lebgeo::Lebesgue1D<BigFloat> L(big);
  Eigen::ArrayXi sigma = lebgeo::piece_sign_vector(ns.degree, k);
  const int i = (side == lebgeo::NodeSide::right) ? k : k - 1;
  BigFloat x0 = big.nodes[i];
  BigFloat h = pow(BigFloat(2), -bits / 3);
  BigFloat f0 = L.piece_value(x0, sigma);
  BigFloat fp = L.piece_value(x0 + h, sigma);
  BigFloat fm = L.piece_value(x0 - h, sigma);
  return (fp - 2 * f0 + fm) / (h * h);
}

}  // namespace oracle
