#include "lebgeo/lebesgue2d.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <array>
#include <unordered_map>
#include <cmath>
#include <thread>

namespace lebgeo {

CardinalEvaluator::CardinalEvaluator(NodeSet2D ns) : ns_(std::move(ns)), N_(ns_.count()) {
  if (N_ != basis_dimension(ns_.degree))
    throw invalid_input("cardinality does not match the polynomial space dimension");
  Eigen::MatrixXd V(N_, N_);
  Eigen::VectorXd row(N_);
  for (int i = 0; i < N_; ++i) {
    basis_eval(ns_.degree, ns_.points(i, 0), ns_.points(i, 1), row);
    V.row(i) = row.transpose();
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(V);
  double rc = lu.rcond();
  if (!(rc > 0) || !std::isfinite(rc)) throw not_unisolvent("Vandermonde matrix is singular");
  rcond_inv_ = 1.0 / rc;
  coeff_ = lu.inverse().transpose();
}

Eigen::VectorXd CardinalEvaluator::cardinals(double x, double y) const {
  // exact-node queries short-circuit to the delta vector: the cardinal
  // property holds by definition and avoids benign 0/0 noise
  for (int i = 0; i < N_; ++i)
    if (std::abs(x - ns_.points(i, 0)) < 1e-14 && std::abs(y - ns_.points(i, 1)) < 1e-14) {
      Eigen::VectorXd d = Eigen::VectorXd::Zero(N_);
      d[i] = 1.0;
      return d;
    }
  Eigen::VectorXd phi(N_);
  basis_eval(ns_.degree, x, y, phi);
  return coeff_ * phi;
}

void CardinalEvaluator::cardinals_jet(double x, double y, Jet& jet) const {
  thread_local BasisJet basis;
  basis_eval_jet(ns_.degree, x, y, basis);
  jet.v.noalias() = coeff_ * basis.v;
  jet.dx.noalias() = coeff_ * basis.dx;
  jet.dy.noalias() = coeff_ * basis.dy;
  jet.dxx.noalias() = coeff_ * basis.dxx;
  jet.dxy.noalias() = coeff_ * basis.dxy;
  jet.dyy.noalias() = coeff_ * basis.dyy;
}

Eigen::MatrixXd CardinalEvaluator::cardinals_batch(
    const Eigen::Matrix<double, Eigen::Dynamic, 2>& pts, int threads) const {
  const Eigen::Index M = pts.rows();
  Eigen::MatrixXd out(N_, M);
  auto work = [&](Eigen::Index lo, Eigen::Index hi) {
    const Eigen::Index chunk = 4096;
    Eigen::MatrixXd phi(N_, std::min(chunk, hi - lo));
    Eigen::VectorXd col(N_);
    for (Eigen::Index s = lo; s < hi; s += chunk) {
      Eigen::Index m = std::min(chunk, hi - s);
      if (phi.cols() != m) phi.resize(N_, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        basis_eval(ns_.degree, pts(s + i, 0), pts(s + i, 1), col);
        phi.col(i) = col;
      }
      out.middleCols(s, m).noalias() = coeff_ * phi;
    }
  };
  if (threads <= 1 || M < 4096) {
    work(0, M);
    return out;
  }
  std::vector<std::thread> pool;
  Eigen::Index per = (M + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    Eigen::Index lo = t * per, hi = std::min(M, lo + per);
    if (lo < hi) pool.emplace_back(work, lo, hi);
  }
  for (auto& th : pool) th.join();
  return out;
}

Eigen::VectorXd CardinalEvaluator::lebesgue_batch(
    const Eigen::Matrix<double, Eigen::Dynamic, 2>& pts, int threads) const {
  const Eigen::Index M = pts.rows();
  Eigen::VectorXd out(M);
  auto work = [&](Eigen::Index lo, Eigen::Index hi) {
    const Eigen::Index chunk = 4096;
    Eigen::MatrixXd phi(N_, std::min(chunk, hi - lo)), card;
    Eigen::VectorXd col(N_);
    for (Eigen::Index s = lo; s < hi; s += chunk) {
      Eigen::Index m = std::min(chunk, hi - s);
      if (phi.cols() != m) phi.resize(N_, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        basis_eval(ns_.degree, pts(s + i, 0), pts(s + i, 1), col);
        phi.col(i) = col;
      }
      card.noalias() = coeff_ * phi;
      for (Eigen::Index i = 0; i < m; ++i) out[s + i] = card.col(i).cwiseAbs().sum();
    }
  };
  if (threads <= 1 || M < 8192) {
    work(0, M);
    return out;
  }
  std::vector<std::thread> pool;
  Eigen::Index per = (M + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    Eigen::Index lo = t * per, hi = std::min(M, lo + per);
    if (lo < hi) pool.emplace_back(work, lo, hi);
  }
  for (auto& th : pool) th.join();
  return out;
}

Lambda2Estimate lebesgue_constant2(const CardinalEvaluator& ce, int grid_res, int threads) {
  const int minimum = 16 * (ce.degree() + 1);
  if (grid_res < minimum) throw invalid_input("grid_res below 16(n+1)");
  const int G = grid_res + 1;
  Eigen::Matrix<double, Eigen::Dynamic, 2> pts(static_cast<Eigen::Index>(G) * G, 2);
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      pts(static_cast<Eigen::Index>(i) * G + j, 0) = -1.0 + 2.0 * i / grid_res;
      pts(static_cast<Eigen::Index>(i) * G + j, 1) = -1.0 + 2.0 * j / grid_res;
    }
  Eigen::VectorXd vals = ce.lebesgue_batch(pts, threads);
  Eigen::Index best;
  vals.maxCoeff(&best);
  Lambda2Estimate est;
  est.grid_res = grid_res;
  est.x = pts(best, 0);
  est.y = pts(best, 1);
  est.value = vals[best];
  // local ascent from the best cell, clipped to the closed square
  double h = 2.0 / grid_res;
  while (h > 1e-12) {
    bool moved = false;
    static const double dx[8] = {1, -1, 0, 0, 1, 1, -1, -1},
                        dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    for (int d = 0; d < 8; ++d) {
      double nx = std::clamp(est.x + h * dx[d], -1.0, 1.0);
      double ny = std::clamp(est.y + h * dy[d], -1.0, 1.0);
      double nv = ce.lebesgue(nx, ny);
      if (nv > est.value) {
        est.x = nx;
        est.y = ny;
        est.value = nv;
        moved = true;
        break;
      }
    }
    if (!moved) h *= 0.5;
  }
  return est;
}

namespace {

// root of the cardinal along the segment between two grid points, by bisection
std::array<double, 2> edge_root(const CardinalEvaluator& ce, int node, double x0, double y0,
                                double v0, double x1, double y1) {
  if (v0 == 0) return {x0, y0};
  for (int it = 0; it < 60; ++it) {
    double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
    double vm = ce.cardinals(xm, ym)[node];
    if (std::abs(x1 - x0) + std::abs(y1 - y0) < 1e-10) return {xm, ym};
    if ((v0 < 0) == (vm < 0)) {
      x0 = xm;
      y0 = ym;
      v0 = vm;
    } else {
      x1 = xm;
      y1 = ym;
    }
  }
  return {0.5 * (x0 + x1), 0.5 * (y0 + y1)};
}

}  // namespace

ZeroCurve zero_curves(const CardinalEvaluator& ce, int node_index, int grid_res) {
  if (node_index < 0 || node_index >= ce.size()) throw invalid_input("node index out of range");
  const int G = grid_res + 1;
  ZeroCurve zc;
  zc.node_index = node_index;
  zc.node_x = ce.node_set().points(node_index, 0);
  zc.node_y = ce.node_set().points(node_index, 1);
  zc.grid_resolution = grid_res;

  auto coord = [&](int i) { return -1.0 + 2.0 * i / grid_res; };
  Eigen::Matrix<double, Eigen::Dynamic, 2> pts(static_cast<Eigen::Index>(G) * G, 2);
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      pts(static_cast<Eigen::Index>(i) * G + j, 0) = coord(i);
      pts(static_cast<Eigen::Index>(i) * G + j, 1) = coord(j);
    }
  Eigen::MatrixXd cards = ce.cardinals_batch(pts);
  auto val = [&](int i, int j) { return cards(node_index, static_cast<Eigen::Index>(i) * G + j); };

  // refined crossing points keyed by grid edge; vertical edges first
  auto vkey = [&](int i, int j) { return (static_cast<long>(i) * G + j) * 2; };
  auto hkey = [&](int i, int j) { return (static_cast<long>(i) * G + j) * 2 + 1; };
  std::unordered_map<long, std::array<double, 2>> roots;
  for (int i = 0; i < G; ++i)
    for (int j = 0; j + 1 < G; ++j) {
      double a = val(i, j), b = val(i, j + 1);
      if (a == 0 || (a < 0) != (b < 0))
        roots[vkey(i, j)] = edge_root(ce, node_index, coord(i), coord(j), a, coord(i),
                                      coord(j + 1));
    }
  for (int i = 0; i + 1 < G; ++i)
    for (int j = 0; j < G; ++j) {
      double a = val(i, j), b = val(i + 1, j);
      if (a == 0 || (a < 0) != (b < 0))
        roots[hkey(i, j)] = edge_root(ce, node_index, coord(i), coord(j), a, coord(i + 1),
                                      coord(j));
    }

  // per-cell segments between crossed edges; the rare 4-crossing cell is split
  // using the sign at the cell center
  std::unordered_map<long, std::vector<long>> adj;  // edge key -> neighbor edge keys
  auto link = [&](long a, long b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int i = 0; i + 1 < G; ++i)
    for (int j = 0; j + 1 < G; ++j) {
      long e[4] = {vkey(i, j), hkey(i, j + 1), vkey(i + 1, j), hkey(i, j)};  // W N E S
      bool has[4];
      int cnt = 0;
      for (int t = 0; t < 4; ++t) {
        has[t] = roots.count(e[t]) > 0;
        cnt += has[t];
      }
      if (cnt == 2) {
        long a = -1, b = -1;
        for (int t = 0; t < 4; ++t)
          if (has[t]) (a < 0 ? a : b) = e[t];
        link(a, b);
      } else if (cnt == 4) {
        double cx = 0.5 * (coord(i) + coord(i + 1)), cy = 0.5 * (coord(j) + coord(j + 1));
        double center = ce.cardinals(cx, cy)[node_index];
        bool swcorner = val(i, j) < 0;
        if ((center < 0) == swcorner) {
          link(e[0], e[1]);  // W-N
          link(e[2], e[3]);  // E-S
        } else {
          link(e[0], e[3]);  // W-S
          link(e[1], e[2]);  // N-E
        }
      }
    }

  // walk chains
  std::unordered_map<long, bool> used;
  for (auto& [key, nbrs] : adj) {
    if (used[key] || nbrs.size() != 1) continue;  // start at open ends first
    std::vector<std::array<double, 2>> line;
    long cur = key, prev = -1;
    while (cur >= 0 && !used[cur]) {
      used[cur] = true;
      line.push_back(roots[cur]);
      long next = -1;
      for (long nb : adj[cur])
        if (nb != prev && !used[nb]) next = nb;
      prev = cur;
      cur = next;
    }
    if (line.size() >= 2) zc.polylines.push_back(std::move(line));
  }
  for (auto& [key, nbrs] : adj) {  // remaining closed loops
    if (used[key]) continue;
    std::vector<std::array<double, 2>> line;
    long cur = key, prev = -1;
    while (cur >= 0 && !used[cur]) {
      used[cur] = true;
      line.push_back(roots[cur]);
      long next = -1;
      for (long nb : adj[cur])
        if (nb != prev && !used[nb]) next = nb;
      prev = cur;
      cur = next;
    }
    if (line.size() >= 2) {
      line.push_back(line.front());  // close the loop
      zc.polylines.push_back(std::move(line));
    }
  }
  return zc;
}

}  // namespace lebgeo
