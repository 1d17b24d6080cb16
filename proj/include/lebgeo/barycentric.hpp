#pragma once

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "lebgeo/nodes1d.hpp"

namespace lebgeo {

/// Barycentric weights for a node set, up to a common factor. Closed forms for
/// the Chebyshev-type families, capacity-scaled products otherwise.
template <typename Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, 1> barycentric_weights(const NodeSet1D<Scalar>& ns) {
  const int m = ns.count();
  Eigen::Array<Scalar, Eigen::Dynamic, 1> w(m);
  const Scalar pi = pi_value<Scalar>();
  const int n = ns.degree;
  switch (ns.family) {
    case NodeFamily::chebyshev1:
    case NodeFamily::extended:
      // uniform rescaling of the nodes leaves relative weights unchanged
      for (int j = 1; j <= m; ++j)
        w[j - 1] = (j % 2 ? Scalar(-1) : Scalar(1)) * sin(Scalar(2 * j - 1) * pi / (2 * n + 2));
      return w;
    case NodeFamily::chebyshev2:
      for (int j = 1; j <= m; ++j) {
        Scalar s = sin(Scalar(j) * pi / (n + 2));
        w[j - 1] = (j % 2 ? Scalar(-1) : Scalar(1)) * s * s;
      }
      return w;
    case NodeFamily::lobatto:
      for (int j = 1; j <= m; ++j) {
        w[j - 1] = (j % 2 ? Scalar(-1) : Scalar(1));
        if (j == 1 || j == m) w[j - 1] /= Scalar(2);
      }
      return w;
    default: {
      // differences scaled by the interval capacity to keep products in range
      for (int j = 0; j < m; ++j) {
        Scalar p(1);
        for (int k = 0; k < m; ++k)
          if (k != j) p *= Scalar(2) * (ns.nodes[j] - ns.nodes[k]);
        w[j] = Scalar(1) / p;
      }
      return w;
    }
  }
}

/// Second-form barycentric evaluator for the Lagrange basis, the Lebesgue
/// function, and the signed polynomial pieces on one node set.
template <typename Scalar>
class Lebesgue1D {
 public:
  explicit Lebesgue1D(NodeSet1D<Scalar> ns)
      : ns_(std::move(ns)), w_(barycentric_weights(ns_)) {}

  const NodeSet1D<Scalar>& node_set() const { return ns_; }
  const Eigen::Array<Scalar, Eigen::Dynamic, 1>& weights() const { return w_; }

  /// Index of a node within 4 ulp of x, or -1.
  int node_near(Scalar x) const {
    for (int j = 0; j < ns_.count(); ++j) {
      using std::abs;
      Scalar tol = 4 * eps_ * (abs(ns_.nodes[j]) + eps_);
      if (abs(x - ns_.nodes[j]) <= tol) return j;
    }
    return -1;
  }

  /// All fundamental polynomial values at x; the j-th unit vector at node j.
  Eigen::Array<Scalar, Eigen::Dynamic, 1> basis(Scalar x) const {
    const int m = ns_.count();
    Eigen::Array<Scalar, Eigen::Dynamic, 1> out(m);
    int snap = node_near(x);
    if (snap >= 0) {
      out.setZero();
      out[snap] = Scalar(1);
      return out;
    }
    Scalar den(0);
    for (int j = 0; j < m; ++j) {
      out[j] = w_[j] / (x - ns_.nodes[j]);
      den += out[j];
    }
    return out / den;
  }

  Scalar lebesgue(Scalar x) const {
    const int m = ns_.count();
    if (node_near(x) >= 0) return Scalar(1);
    Scalar num(0), den(0);
    for (int j = 0; j < m; ++j) {
      using std::abs;
      Scalar q = w_[j] / (x - ns_.nodes[j]);
      num += abs(q);
      den += q;
    }
    using std::abs;
    return num / abs(den);
  }

  /// Value of the signed combination sum_j sigma_j l_j at x (off-node form).
  Scalar piece_value(Scalar x, const Eigen::ArrayXi& sigma) const {
    const int m = ns_.count();
    int snap = node_near(x);
    if (snap >= 0) return Scalar(sigma[snap]);
    Scalar num(0), den(0);
    for (int j = 0; j < m; ++j) {
      Scalar q = w_[j] / (x - ns_.nodes[j]);
      num += q * Scalar(sigma[j]);
      den += q;
    }
    return num / den;
  }

  /// Derivative of the signed combination at x strictly between nodes.
  Scalar piece_derivative(Scalar x, const Eigen::ArrayXi& sigma) const {
    const int m = ns_.count();
    Scalar num(0), den(0), dnum(0), dden(0);
    for (int j = 0; j < m; ++j) {
      Scalar d = x - ns_.nodes[j];
      Scalar q = w_[j] / d;
      num += q * Scalar(sigma[j]);
      den += q;
      dnum -= q / d * Scalar(sigma[j]);
      dden -= q / d;
    }
    return (dnum * den - num * dden) / (den * den);
  }

  /// Pairs (x, lambda(x)) over a grid; plumbing for plot export.
  std::vector<std::pair<Scalar, Scalar>> sample(const std::vector<Scalar>& grid) const {
    std::vector<std::pair<Scalar, Scalar>> out;
    out.reserve(grid.size());
    for (Scalar x : grid) out.emplace_back(x, lebesgue(x));
    return out;
  }

 private:
  NodeSet1D<Scalar> ns_;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> w_;
  Scalar eps_ = Eigen::NumTraits<Scalar>::epsilon();
};

}  // namespace lebgeo
