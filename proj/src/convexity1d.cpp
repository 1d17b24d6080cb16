#include "lebgeo/convexity1d.hpp"

#include <boost/multiprecision/eigen.hpp>

#include "lebgeo/barycentric.hpp"

namespace lebgeo {

namespace {

NodeSet1D<BigFloat> promote(const NodeSet1D<double>& ns) {
  NodeSet1D<BigFloat> big;
  big.degree = ns.degree;
  big.family = NodeFamily::custom;
  big.nodes.resize(ns.count());
  for (int j = 0; j < ns.count(); ++j) big.nodes[j] = BigFloat(ns.nodes[j]);
  return big;
}

// sign of the piece's second derivative at the node, or 0 if below the margin
int decide_at_bits(const NodeSet1D<double>& ns, int k, NodeSide side, int bits) {
  ScopedPrecision guard(bits);
  NodeSet1D<BigFloat> big = ns.family == NodeFamily::custom
                                ? promote(ns)
                                : make_family<BigFloat>(ns.family, ns.degree);
  auto w = barycentric_weights(big);
  auto d = piece_derivative_at_node(big, w, k, side, 2);
  PrecisionContext here{bits};
  BigFloat margin = BigFloat(here.decision_margin()) * d.term_scale;
  if (d.value > margin) return 1;
  if (d.value < -margin) return -1;
  return 0;
}

ConvexityDecision decide(const NodeSet1D<double>& ns, int k, PrecisionContext ctx, NodeSide side,
                         int bits_cap) {
  if (ctx.mantissa_bits <= 0) ctx = PrecisionContext::for_degree(ns.degree);
  for (int bits = ctx.mantissa_bits; bits <= bits_cap; bits *= 2) {
    int s = decide_at_bits(ns, k, side, bits);
    if (s > 0) return {Convexity::convex, bits};
    if (s < 0) return {Convexity::not_convex, bits};
  }
  return {Convexity::undecided, bits_cap};
}

}  // namespace

ConvexityDecision convex_near_node(const NodeSet1D<double>& ns, int k, PrecisionContext ctx,
                                   NodeSide side, int bits_cap) {
  if (k < 1 || k > ns.degree) throw invalid_input("piece index out of range");
  return decide(ns, k, ctx, side, bits_cap);
}

ConvexityProfile convexity_profile(const NodeSet1D<double>& ns, PrecisionContext ctx) {
  if (ns.degree < 1) throw invalid_degree("profile requires degree >= 1");
  ConvexityProfile p;
  p.degree = ns.degree;
  p.family = ns.family;
  p.near_right.resize(ns.degree);
  p.near_left.resize(ns.degree);
  for (int k = 1; k <= ns.degree; ++k) {
    auto r = decide(ns, k, ctx, NodeSide::right, kPrecisionCapBits);
    auto l = decide(ns, k, ctx, NodeSide::left, kPrecisionCapBits);
    p.near_right[k - 1] = r.result;
    p.near_left[k - 1] = l.result;
    p.bits_used = std::max({p.bits_used, r.bits_used, l.bits_used});
  }
  return p;
}

MinDegreeResult min_degree_for_convexity(NodeFamily family, int m, PrecisionContext ctx,
                                         int n_max) {
  if (m < 1) throw invalid_input("m must be >= 1");
  if (family == NodeFamily::custom) throw invalid_input("family generator required");
  MinDegreeResult res;
  res.n_max = n_max;
  for (int n = std::max(2, m); n <= n_max; ++n) {
    NodeSet1D<double> ns = make_family<double>(family, n);
    std::vector<MinDegreeDecision> here;
    bool all = true;
    // the outermost requested interval flips last; test it first
    for (int k = m; k >= 1; --k) {
      auto d = decide(ns, k, ctx, NodeSide::right, kPrecisionCapBits);
      if (d.result == Convexity::undecided) throw needs_more_precision(n, k, d.bits_used);
      res.bits_used = std::max(res.bits_used, d.bits_used);
      here.push_back({k, d.result == Convexity::convex, d.bits_used});
      if (d.result != Convexity::convex) {
        all = false;
        break;
      }
    }
    if (all) {
      res.min_degree = n;
      std::reverse(here.begin(), here.end());
      res.decisions = std::move(here);
      return res;
    }
  }
  return res;
}

}  // namespace lebgeo
