#include "lebgeo/nodes2d.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include "lebgeo/chebbasis.hpp"

namespace lebgeo {

namespace {

NodeSet2D from_grid(int n, int kmax, int jmax, double kdiv, double jdiv, NodeFamily2D fam,
                    int kmin = 0, int jmin = 0) {
  std::vector<std::pair<double, double>> pts;
  for (int k = kmin; k <= kmax; ++k)
    for (int j = jmin; j <= jmax; ++j)
      if ((j + k) % 2 == 1) pts.emplace_back(std::cos(k * M_PI / kdiv), std::cos(j * M_PI / jdiv));
  std::sort(pts.begin(), pts.end());
  NodeSet2D ns;
  ns.degree = n;
  ns.family = fam;
  ns.parity = 1;
  ns.points.resize(pts.size(), 2);
  for (size_t i = 0; i < pts.size(); ++i) {
    ns.points(i, 0) = pts[i].first;
    ns.points(i, 1) = pts[i].second;
  }
  return ns;
}

}  // namespace

NodeFamily2D family2d_from_name(const std::string& s) {
  if (s == "padua") return NodeFamily2D::padua;
  if (s == "morrow_patterson" || s == "mp") return NodeFamily2D::morrow_patterson;
  if (s == "custom") return NodeFamily2D::custom;
  throw invalid_input("unknown 2d node family: " + s);
}

NodeSet2D padua(int n) {
  if (n < 1) throw invalid_degree("padua requires degree >= 1");
  NodeSet2D ns = from_grid(n, n + 1, n, n + 1.0, n, NodeFamily2D::padua);
  if (ns.count() != basis_dimension(n)) throw std::logic_error("padua cardinality mismatch");
  // larger degrees are re-validated by the evaluator factorization on use
  if (n <= 32 && !unisolvence_check(ns).determinant_nonzero)
    throw std::logic_error("padua construction not unisolvent");
  return ns;
}

NodeSet2D morrow_patterson(int n) {
  if (n < 1) throw invalid_degree("morrow_patterson requires degree >= 1");
  // the interior points of the degree-(n+2) Padua family, on their own grids
  NodeSet2D ns =
      from_grid(n, n + 2, n + 1, n + 3.0, n + 2.0, NodeFamily2D::morrow_patterson, 1, 1);
  if (ns.count() != basis_dimension(n))
    throw std::logic_error("morrow_patterson cardinality mismatch");
  if (n <= 32 && !unisolvence_check(ns).determinant_nonzero)
    throw std::logic_error("morrow_patterson construction not unisolvent");
  return ns;
}

NodeSet2D custom_nodes2d(Eigen::Matrix<double, Eigen::Dynamic, 2> pts, int degree) {
  NodeSet2D ns;
  ns.degree = degree;
  ns.family = NodeFamily2D::custom;
  ns.points = std::move(pts);
  if (ns.count() != basis_dimension(degree))
    throw invalid_input("point count must equal (n+1)(n+2)/2");
  for (int i = 0; i < ns.count(); ++i) {
    if (std::abs(ns.points(i, 0)) > 1 || std::abs(ns.points(i, 1)) > 1)
      throw domain_violation("point outside the square");
    for (int j = i + 1; j < ns.count(); ++j)
      if (ns.points.row(i) == ns.points.row(j)) throw not_unisolvent("duplicate point");
  }
  return ns;
}

UnisolvenceReport unisolvence_check(const NodeSet2D& ns) {
  const int N = ns.count();
  if (N != basis_dimension(ns.degree))
    throw invalid_input("cardinality does not match the polynomial space dimension");
  Eigen::MatrixXd V(N, N);
  Eigen::VectorXd row(N);
  for (int i = 0; i < N; ++i) {
    basis_eval(ns.degree, ns.points(i, 0), ns.points(i, 1), row);
    V.row(i) = row.transpose();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(V);
  UnisolvenceReport r;
  const auto& R = qr.matrixR();
  double rmax = std::abs(R(0, 0)), rmin = std::abs(R(N - 1, N - 1));
  r.determinant_nonzero = qr.rank() == N && rmin > 0;
  r.condition_estimate = rmin > 0 ? rmax / rmin : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace lebgeo
