#include "lebgeo/maxima2d.hpp"

#include <algorithm>
#include <cmath>

namespace lebgeo {

namespace {

struct Workspace {
  const CardinalEvaluator& ce;
  double cell;
  CardinalEvaluator::Jet jet;

  double lam(double x, double y) { return ce.lebesgue(x, y); }
};

// --- sign-frozen Newton ascent -------------------------------------------
//
// Within one sign cell lambda coincides with the polynomial sum_A s_A l_A, so
// gradients and Hessians are exact; the sign vector is re-read every step.

bool newton_interior(Workspace& w, double& x, double& y, double& v, double tol) {
  const double maxstep = 1.5 * w.cell;
  for (int it = 0; it < 80; ++it) {
    if (std::abs(x) >= 1 || std::abs(y) >= 1) return false;
    w.ce.cardinals_jet(x, y, w.jet);
    Eigen::ArrayXd s = w.jet.v.array().unaryExpr([](double t) { return t >= 0 ? 1.0 : -1.0; });
    double gx = (s * w.jet.dx.array()).sum(), gy = (s * w.jet.dy.array()).sum();
    double hxx = (s * w.jet.dxx.array()).sum(), hxy = (s * w.jet.dxy.array()).sum(),
           hyy = (s * w.jet.dyy.array()).sum();
    double det = hxx * hyy - hxy * hxy;
    double sx, sy;
    if (det > 0 && hxx < 0) {
      sx = -(hyy * gx - hxy * gy) / det;
      sy = -(-hxy * gx + hxx * gy) / det;
    } else {
      double gn = std::hypot(gx, gy);
      if (gn < 1e-14) return false;
      sx = gx / gn * 0.5 * maxstep;
      sy = gy / gn * 0.5 * maxstep;
    }
    double sn = std::hypot(sx, sy);
    if (sn > maxstep) {
      sx *= maxstep / sn;
      sy *= maxstep / sn;
    }
    x += sx;
    y += sy;
    if (sn < std::min(tol, 1e-12)) break;
  }
  if (std::abs(x) >= 1 - 1e-9 || std::abs(y) >= 1 - 1e-9) return false;

  // certificate: stationary point of the active piece with negative-definite
  // Hessian, by margins relative to the term scales
  w.ce.cardinals_jet(x, y, w.jet);
  Eigen::ArrayXd s = w.jet.v.array().unaryExpr([](double t) { return t >= 0 ? 1.0 : -1.0; });
  double gx = (s * w.jet.dx.array()).sum(), gy = (s * w.jet.dy.array()).sum();
  double hxx = (s * w.jet.dxx.array()).sum(), hxy = (s * w.jet.dxy.array()).sum(),
         hyy = (s * w.jet.dyy.array()).sum();
  double det = hxx * hyy - hxy * hxy;
  double hscale = w.jet.dxx.cwiseAbs().sum() + w.jet.dyy.cwiseAbs().sum() +
                  w.jet.dxy.cwiseAbs().sum();
  double gscale = w.jet.dx.cwiseAbs().sum() + w.jet.dy.cwiseAbs().sum();
  if (!(det > 0 && hxx < -1e-10 * hscale)) return false;
  if (std::hypot(gx, gy) > 1e-9 * std::max(1.0, gscale)) return false;
  v = w.jet.v.cwiseAbs().sum();

  // local maximality of lambda itself: along the normal of every nearby zero
  // curve, lambda must not rise above v without first dipping below it
  const double eps = 1e-11 * std::max(1.0, v);
  for (int a = 0; a < w.ce.size(); ++a) {
    double gn = std::hypot(w.jet.dx[a], w.jet.dy[a]);
    if (gn < 1e-14) continue;
    double dist = std::abs(w.jet.v[a]) / gn;
    if (dist > 2e-3) continue;
    double nx = w.jet.dx[a] / gn, ny = w.jet.dy[a] / gn;
    for (int sgn : {-1, 1}) {
      double delta = std::max(1e-6, dist / 4), lo = v;
      for (double t = delta; t <= 8e-3; t += delta) {
        double px = x + sgn * t * nx, py = y + sgn * t * ny;
        if (std::abs(px) > 1 || std::abs(py) > 1) break;
        double pv = w.lam(px, py);
        lo = std::min(lo, pv);
        if (lo < v - eps) break;
        if (pv > v + eps) return false;
      }
    }
  }
  for (double r : {1e-5, 1e-4})
    for (int a = 0; a < 16; ++a) {
      double px = x + r * std::cos(a * M_PI / 8), py = y + r * std::sin(a * M_PI / 8);
      if (std::abs(px) > 1 || std::abs(py) > 1) continue;
      if (w.lam(px, py) > v) return false;
    }
  return true;
}

// pattern-search fallback for seeds Newton cannot certify
bool pattern_interior(Workspace& w, double& x, double& y, double& v, double tol, bool& refined) {
  v = w.lam(x, y);
  double h = w.cell / 8;
  int guard = 0;
  refined = true;
  while (h > tol) {
    if (++guard > 200000) {
      refined = false;
      break;
    }
    static const double dx[8] = {1, -1, 0, 0, 1, 1, -1, -1},
                        dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    bool moved = false;
    for (int d = 0; d < 8; ++d) {
      double nx = std::clamp(x + h * dx[d], -1.0, 1.0), ny = std::clamp(y + h * dy[d], -1.0, 1.0);
      double nv = w.lam(nx, ny);
      if (nv > v) {
        x = nx;
        y = ny;
        v = nv;
        moved = true;
        break;
      }
    }
    if (!moved) h *= 0.5;
  }
  return std::abs(x) < 1 - 1e-9 && std::abs(y) < 1 - 1e-9;
}

// 1D analogue along an edge (axis 0: vary x at y=fix, axis 1: vary y at x=fix)
bool newton_edge(Workspace& w, int axis, double fix, double& t, double& v, double tol) {
  const double maxstep = 1.5 * w.cell;
  for (int it = 0; it < 80; ++it) {
    if (std::abs(t) >= 1) return false;
    double x = axis == 0 ? t : fix, y = axis == 0 ? fix : t;
    w.ce.cardinals_jet(x, y, w.jet);
    Eigen::ArrayXd s = w.jet.v.array().unaryExpr([](double t) { return t >= 0 ? 1.0 : -1.0; });
    double g = (s * (axis == 0 ? w.jet.dx : w.jet.dy).array()).sum();
    double h = (s * (axis == 0 ? w.jet.dxx : w.jet.dyy).array()).sum();
    double step;
    if (h < 0)
      step = -g / h;
    else {
      if (std::abs(g) < 1e-14) return false;
      step = std::copysign(0.5 * maxstep, g);
    }
    step = std::clamp(step, -maxstep, maxstep);
    t += step;
    if (std::abs(step) < std::min(tol, 1e-12)) break;
  }
  if (std::abs(t) >= 1 - 1e-9) return false;
  double x = axis == 0 ? t : fix, y = axis == 0 ? fix : t;
  w.ce.cardinals_jet(x, y, w.jet);
  Eigen::ArrayXd s = w.jet.v.array().unaryExpr([](double t) { return t >= 0 ? 1.0 : -1.0; });
  double g = (s * (axis == 0 ? w.jet.dx : w.jet.dy).array()).sum();
  double h = (s * (axis == 0 ? w.jet.dxx : w.jet.dyy).array()).sum();
  double hscale = (axis == 0 ? w.jet.dxx : w.jet.dyy).cwiseAbs().sum();
  double gscale = (axis == 0 ? w.jet.dx : w.jet.dy).cwiseAbs().sum();
  if (!(h < -1e-10 * hscale)) return false;
  if (std::abs(g) > 1e-9 * std::max(1.0, gscale)) return false;
  v = w.jet.v.cwiseAbs().sum();
  const double eps = 1e-11 * std::max(1.0, v);
  auto f = [&](double u) { return axis == 0 ? w.lam(u, fix) : w.lam(fix, u); };
  for (int sgn : {-1, 1}) {
    double lo = v;
    for (double d = 1e-6; d <= 8e-3; d += 1e-6) {
      double u = t + sgn * d;
      if (std::abs(u) > 1) break;
      double pv = f(u);
      lo = std::min(lo, pv);
      if (lo < v - eps) break;
      if (pv > v + eps) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<LocalMaxRecord> local_maxima(const CardinalEvaluator& ce, int grid_res,
                                         const MaximaOptions& opt) {
  const int minimum = 40 * (ce.degree() + 1);
  if (grid_res < minimum) throw invalid_input("grid_res below 40(n+1)");
  const int G = grid_res + 1;
  const double cell = 2.0 / grid_res;
  const int N = ce.size();
  Workspace w{ce, cell, {}};

  // one streaming pass: lambda grid plus per-cardinal crossing clouds
  Eigen::MatrixXd L(G, G);
  std::vector<std::vector<std::array<double, 2>>> crossings(N);
  {
    auto coord = [&](int i) { return -1.0 + 2.0 * i / grid_res; };
    Eigen::Matrix<double, Eigen::Dynamic, 2> rowpts(G, 2);
    Eigen::MatrixXd prev, cur;
    for (int i = 0; i < G; ++i) {
      for (int j = 0; j < G; ++j) {
        rowpts(j, 0) = coord(i);
        rowpts(j, 1) = coord(j);
      }
      cur = ce.cardinals_batch(rowpts, opt.threads);
      for (int j = 0; j < G; ++j) L(i, j) = cur.col(j).cwiseAbs().sum();
      for (int j = 0; j + 1 < G; ++j)
        for (int a = 0; a < N; ++a) {
          double v0 = cur(a, j), v1 = cur(a, j + 1);
          if (v0 == 0 || (v0 < 0) != (v1 < 0)) {
            double t = v0 / (v0 - v1);
            crossings[a].push_back({coord(i), coord(j) + t * cell});
          }
        }
      if (i > 0)
        for (int j = 0; j < G; ++j)
          for (int a = 0; a < N; ++a) {
            double v0 = prev(a, j), v1 = cur(a, j);
            if (v0 == 0 || (v0 < 0) != (v1 < 0)) {
              double t = v0 / (v0 - v1);
              crossings[a].push_back({coord(i - 1) + t * cell, coord(j)});
            }
          }
      prev.swap(cur);
    }
  }

  std::vector<LocalMaxRecord> interior;
  auto add_interior = [&](double x, double y, double v, bool refined) {
    if (v <= 1.0 + 1e-9) return false;
    for (auto& r : interior)
      if (std::hypot(x - r.x, y - r.y) < opt.dedupe_radius) return false;
    interior.push_back({x, y, v, MaxClass::interior, 0, refined});
    return true;
  };
  auto try_seed = [&](double x, double y, bool allow_fallback) {
    double v;
    double x0 = x, y0 = y;
    if (newton_interior(w, x, y, v, opt.refine_tol)) return add_interior(x, y, v, true);
    if (allow_fallback) {
      bool refined = true;
      x = x0;
      y = y0;
      if (pattern_interior(w, x, y, v, opt.refine_tol, refined)) {
        double vx = x, vy = y, vv;
        // try to certify the pattern-search point; otherwise keep it flagged
        if (newton_interior(w, vx, vy, vv, opt.refine_tol)) return add_interior(vx, vy, vv, true);
        if (!refined) return add_interior(x, y, v, false);
      }
    }
    return false;
  };

  // seeds 1: weak grid dominance (ties survive symmetry lines)
  for (int i = 1; i < G - 1; ++i)
    for (int j = 1; j < G - 1; ++j) {
      double v = L(i, j);
      bool mx = true;
      for (int di = -1; di <= 1 && mx; ++di)
        for (int dj = -1; dj <= 1 && mx; ++dj)
          if (di || dj) mx = v >= L(i + di, j + dj);
      if (mx) try_seed(-1.0 + 2.0 * i / grid_res, -1.0 + 2.0 * j / grid_res, true);
    }

  // seeds 2: lambda maxima along each cardinal's zero curve, offset to both
  // sides of the curve (the knife-ridge maxima live there)
  for (int a = 0; a < N; ++a) {
    auto& cr = crossings[a];
    const size_t M = cr.size();
    if (M < 3) continue;
    std::sort(cr.begin(), cr.end(),
              [](const auto& p, const auto& q) { return p[0] != q[0] ? p[0] < q[0] : p[1] < q[1]; });
    std::vector<double> lv(M);
    for (size_t i = 0; i < M; ++i) lv[i] = w.lam(cr[i][0], cr[i][1]);
    const double R = 2.5 * cell;
    for (size_t i = 0; i < M; ++i) {
      bool top = true;
      for (size_t j = i; j-- > 0 && cr[i][0] - cr[j][0] <= R;)
        if (std::abs(cr[j][1] - cr[i][1]) <= R && lv[j] > lv[i]) {
          top = false;
          break;
        }
      if (top)
        for (size_t j = i + 1; j < M && cr[j][0] - cr[i][0] <= R; ++j)
          if (std::abs(cr[j][1] - cr[i][1]) <= R && lv[j] > lv[i]) {
            top = false;
            break;
          }
      if (!top) continue;
      double tx = 0, ty = 0, bestd = 1e9;
      auto consider = [&](size_t j) {
        double d = std::hypot(cr[j][0] - cr[i][0], cr[j][1] - cr[i][1]);
        if (d > 1e-12 && d < bestd) {
          bestd = d;
          tx = cr[j][0] - cr[i][0];
          ty = cr[j][1] - cr[i][1];
        }
      };
      for (size_t j = i; j-- > 0 && cr[i][0] - cr[j][0] <= R;) consider(j);
      for (size_t j = i + 1; j < M && cr[j][0] - cr[i][0] <= R; ++j) consider(j);
      double nt = std::hypot(tx, ty);
      double nx = nt > 1e-12 ? -ty / nt : 1.0, ny = nt > 1e-12 ? tx / nt : 0.0;
      for (double off : {0.3 * cell, cell})
        for (int sgn : {-1, 1}) {
          double x = cr[i][0] + sgn * off * nx, y = cr[i][1] + sgn * off * ny;
          if (std::abs(x) >= 1 || std::abs(y) >= 1) continue;
          try_seed(x, y, false);
        }
    }
  }

  // seeds 3: ring reseeding around accepted maxima, to a fixpoint; radii are
  // absolute up to the excess-cluster scale so partners across narrow dips and
  // nearby isolated domes are both reached
  {
    const double radii[] = {0.5 * cell, cell, 0.005, 0.01, 0.02, 0.035, 0.05, 0.075, 0.1};
    size_t done = 0;
    for (int round = 0; round < 8; ++round) {
      size_t end = interior.size();
      if (done >= end) break;
      for (size_t idx = done; idx < end; ++idx) {
        LocalMaxRecord r = interior[idx];
        for (double rad : radii)
          for (int a = 0; a < 16; ++a) {
            double x = r.x + rad * std::cos(a * M_PI / 8), y = r.y + rad * std::sin(a * M_PI / 8);
            if (std::abs(x) >= 1 || std::abs(y) >= 1) continue;
            try_seed(x, y, false);
          }
      }
      done = end;
    }
  }

  std::vector<LocalMaxRecord> out = interior;

  // edges: weak 1D grid maxima plus the midpoints of every piece cut out by
  // the cardinal roots along the edge, then 1D ring reseeding
  for (int e = 0; e < 4; ++e) {
    const int axis = (e < 2) ? 0 : 1;
    const double fix = (e % 2 == 0) ? -1.0 : 1.0;
    std::vector<double> el(G);
    for (int i = 0; i < G; ++i) {
      if (axis == 0)
        el[i] = (e % 2 == 0) ? L(i, 0) : L(i, G - 1);
      else
        el[i] = (e % 2 == 0) ? L(0, i) : L(G - 1, i);
    }
    std::vector<std::pair<double, double>> em;
    auto add_edge = [&](double t, double v) {
      if (v <= 1.0 + 1e-9) return false;
      if (std::abs(t) >= 1 - 1e-9) return false;
      for (auto& o : em)
        if (std::abs(o.first - t) < opt.dedupe_radius) return false;
      em.emplace_back(t, v);
      return true;
    };
    auto try_edge = [&](double t) {
      double v;
      if (newton_edge(w, axis, fix, t, v, opt.refine_tol)) return add_edge(t, v);
      return false;
    };
    for (int i = 1; i < G - 1; ++i)
      if (el[i] >= el[i - 1] && el[i] >= el[i + 1]) try_edge(-1.0 + 2.0 * i / grid_res);
    {
      std::vector<double> bps{-1.0, 1.0};
      Eigen::Matrix<double, Eigen::Dynamic, 2> epts(G, 2);
      for (int i = 0; i < G; ++i) {
        double t = -1.0 + 2.0 * i / grid_res;
        epts(i, 0) = axis == 0 ? t : fix;
        epts(i, 1) = axis == 0 ? fix : t;
      }
      Eigen::MatrixXd ec = ce.cardinals_batch(epts, opt.threads);
      for (int i = 0; i + 1 < G; ++i)
        for (int a = 0; a < N; ++a) {
          double v0 = ec(a, i), v1 = ec(a, i + 1);
          if (v0 == 0 || (v0 < 0) != (v1 < 0))
            bps.push_back(-1.0 + 2.0 * i / grid_res + v0 / (v0 - v1) * cell);
        }
      std::sort(bps.begin(), bps.end());
      for (size_t i = 0; i + 1 < bps.size(); ++i)
        if (bps[i + 1] - bps[i] > 1e-9) try_edge(0.5 * (bps[i] + bps[i + 1]));
    }
    {
      const double radii[] = {0.5 * cell, cell, 0.005, 0.01, 0.02, 0.035, 0.05, 0.075, 0.1};
      size_t done = 0;
      for (int round = 0; round < 8; ++round) {
        size_t end = em.size();
        if (done >= end) break;
        for (size_t idx = done; idx < end; ++idx) {
          double t0 = em[idx].first;
          for (double rad : radii)
            for (int sgn : {-1, 1}) {
              double t = t0 + sgn * rad;
              if (std::abs(t) < 1) try_edge(t);
            }
        }
        done = end;
      }
    }
    for (auto& m : em) {
      double x = axis == 0 ? m.first : fix, y = axis == 0 ? fix : m.first;
      bool dup = false;
      for (auto& r : out)
        if (std::hypot(x - r.x, y - r.y) < opt.dedupe_radius) dup = true;
      if (!dup) out.push_back({x, y, m.second, MaxClass::edge, 0, true});
    }
  }

  // corners: strict one-sided dominance along both adjacent edges (flat
  // plateau germs do not count); the full-neighborhood convention adds
  // quarter-disk probes
  for (double cx : {-1.0, 1.0})
    for (double cy : {-1.0, 1.0}) {
      double v = w.lam(cx, cy);
      if (v <= 1.0 + 1e-9) continue;
      bool strict = true;
      for (double h : {1e-4, 1e-3}) {
        if (v - w.lam(cx - std::copysign(h, cx), cy) <= 1e-11 * std::max(1.0, v)) strict = false;
        if (v - w.lam(cx, cy - std::copysign(h, cy)) <= 1e-11 * std::max(1.0, v)) strict = false;
      }
      if (opt.convention == BoundaryConvention::full_neighborhood) {
        bool weak = true;
        for (double h : {1e-4, 1e-3})
          for (int q = 0; q < 5; ++q) {
            double px = cx - std::copysign(h * q / 4.0, cx), py = cy - std::copysign(h, cy);
            if (w.lam(px, py) > v + 1e-11 * std::max(1.0, v)) weak = false;
          }
        if (weak) out.push_back({cx, cy, v, MaxClass::corner, 0, true});
      } else if (strict) {
        out.push_back({cx, cy, v, MaxClass::corner, 0, true});
      }
    }

  // no maximum may coincide with a node (nodes are the minima)
  const auto& P = ce.node_set().points;
  std::erase_if(out, [&](const LocalMaxRecord& r) {
    for (int i = 0; i < P.rows(); ++i)
      if (std::hypot(r.x - P(i, 0), r.y - P(i, 1)) < 1e-6) return true;
    return false;
  });

  std::sort(out.begin(), out.end(), [](const LocalMaxRecord& a, const LocalMaxRecord& b) {
    if (a.cls != b.cls) return static_cast<int>(a.cls) < static_cast<int>(b.cls);
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  for (size_t i = 0; i < out.size(); ++i) out[i].basin_id = static_cast<int>(i);
  return out;
}

MaximaCount count_maxima(const CardinalEvaluator& ce, int grid_res, const MaximaOptions& opt) {
  auto tally = [&](int g) {
    auto rec = local_maxima(ce, g, opt);
    MaximaCount c;
    c.grid_res = g;
    c.records = std::move(rec);
    for (auto& r : c.records) {
      ++c.total;
      if (r.cls == MaxClass::interior) ++c.interior;
    }
    return c;
  };
  MaximaCount a = tally(grid_res);
  MaximaCount b = tally(2 * grid_res);
  if (a.interior == b.interior && a.total == b.total) {
    a.stable = true;
    return a;
  }
  MaximaCount c = tally(4 * grid_res);
  if (b.interior == c.interior && b.total == c.total) {
    b.stable = true;
    return b;
  }
  throw unstable_count({b.interior, b.total}, {c.interior, c.total});
}

MaximaCount count_maxima(NodeFamily2D family, int n, int grid_res, const MaximaOptions& opt) {
  if (n < 2) throw invalid_degree("count_maxima requires degree >= 2");
  NodeSet2D ns = family == NodeFamily2D::padua ? padua(n) : morrow_patterson(n);
  CardinalEvaluator ce(ns);
  return count_maxima(ce, grid_res, opt);
}

LowerBoundCheck lower_bound_check(int n, const MaximaCount& counts) {
  LowerBoundCheck r;
  r.interior_bound = n * (n - 1) / 2;
  r.total_bound = (n + 1) * (n + 2) / 2;
  r.interior_ok = counts.interior >= r.interior_bound;
  r.total_ok = counts.total >= r.total_bound;
  return r;
}

std::vector<ExcessCluster> excess_maxima_report(const CardinalEvaluator& ce,
                                                const std::vector<LocalMaxRecord>& records,
                                                int grid_res) {
  // cluster by mutual distance < 0.1
  const double cluster_radius = 0.1, curve_tol = 0.05;
  std::vector<int> comp(records.size(), -1);
  int ncomp = 0;
  for (size_t i = 0; i < records.size(); ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<size_t> stack{i};
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t v = 0; v < records.size(); ++v)
        if (comp[v] < 0 &&
            std::hypot(records[u].x - records[v].x, records[u].y - records[v].y) < cluster_radius) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  std::vector<ExcessCluster> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<LocalMaxRecord> members;
    for (size_t i = 0; i < records.size(); ++i)
      if (comp[i] == c) members.push_back(records[i]);
    if (members.size() < 2) continue;
    // the straddled curve: the cardinal smallest at the cluster midpoint
    double mx = 0, my = 0;
    for (auto& m : members) {
      mx += m.x;
      my += m.y;
    }
    mx /= members.size();
    my /= members.size();
    Eigen::VectorXd card = ce.cardinals(mx, my);
    int amin;
    card.cwiseAbs().minCoeff(&amin);
    ZeroCurve zc = zero_curves(ce, amin, grid_res);
    double worst = 0;
    for (auto& m : members) {
      double best = 1e9;
      for (auto& line : zc.polylines)
        for (auto& p : line) best = std::min(best, std::hypot(m.x - p[0], m.y - p[1]));
      worst = std::max(worst, best);
    }
    if (worst < curve_tol) out.push_back({std::move(members), amin, worst});
  }
  return out;
}

}  // namespace lebgeo
