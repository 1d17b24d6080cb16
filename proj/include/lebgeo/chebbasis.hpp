#pragma once

#include <Eigen/Core>
#include <vector>

namespace lebgeo {

/// Chebyshev values T_0..T_n at x, with first and second derivatives on demand.
inline void chebyshev_values(int n, double x, std::vector<double>& T) {
  T.resize(n + 1);
  T[0] = 1;
  if (n >= 1) T[1] = x;
  for (int d = 2; d <= n; ++d) T[d] = 2 * x * T[d - 1] - T[d - 2];
}

inline void chebyshev_values_d2(int n, double x, std::vector<double>& T, std::vector<double>& T1,
                                std::vector<double>& T2) {
  T.resize(n + 1);
  T1.resize(n + 1);
  T2.resize(n + 1);
  T[0] = 1;
  T1[0] = 0;
  T2[0] = 0;
  if (n >= 1) {
    T[1] = x;
    T1[1] = 1;
    T2[1] = 0;
  }
  for (int d = 2; d <= n; ++d) {
    T[d] = 2 * x * T[d - 1] - T[d - 2];
    T1[d] = 2 * T[d - 1] + 2 * x * T1[d - 1] - T1[d - 2];
    T2[d] = 4 * T1[d - 1] + 2 * x * T2[d - 1] - T2[d - 2];
  }
}

/// Product Chebyshev basis T_a(x) T_b(y), a+b <= n, in graded order with a
/// descending within each total degree. Dimension (n+1)(n+2)/2.
inline int basis_dimension(int n) { return (n + 1) * (n + 2) / 2; }

inline void basis_eval(int n, double x, double y, Eigen::Ref<Eigen::VectorXd> out) {
  thread_local std::vector<double> Tx, Ty;
  chebyshev_values(n, x, Tx);
  chebyshev_values(n, y, Ty);
  int c = 0;
  for (int d = 0; d <= n; ++d)
    for (int a = d; a >= 0; --a) out[c++] = Tx[a] * Ty[d - a];
}

struct BasisJet {
  Eigen::VectorXd v, dx, dy, dxx, dxy, dyy;
};

inline void basis_eval_jet(int n, double x, double y, BasisJet& jet) {
  thread_local std::vector<double> Tx, Tx1, Tx2, Ty, Ty1, Ty2;
  chebyshev_values_d2(n, x, Tx, Tx1, Tx2);
  chebyshev_values_d2(n, y, Ty, Ty1, Ty2);
  const int N = basis_dimension(n);
  jet.v.resize(N);
  jet.dx.resize(N);
  jet.dy.resize(N);
  jet.dxx.resize(N);
  jet.dxy.resize(N);
  jet.dyy.resize(N);
  int c = 0;
  for (int d = 0; d <= n; ++d)
    for (int a = d; a >= 0; --a) {
      int b = d - a;
      jet.v[c] = Tx[a] * Ty[b];
      jet.dx[c] = Tx1[a] * Ty[b];
      jet.dy[c] = Tx[a] * Ty1[b];
      jet.dxx[c] = Tx2[a] * Ty[b];
      jet.dxy[c] = Tx1[a] * Ty1[b];
      jet.dyy[c] = Tx[a] * Ty2[b];
      ++c;
    }
}

}  // namespace lebgeo
