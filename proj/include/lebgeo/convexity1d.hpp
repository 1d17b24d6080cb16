#pragma once

#include <optional>
#include <vector>

#include "lebgeo/nodes1d.hpp"
#include "lebgeo/pieces.hpp"
#include "lebgeo/precision.hpp"

namespace lebgeo {

enum class Convexity { convex, not_convex, undecided };

struct ConvexityDecision {
  Convexity result = Convexity::undecided;
  int bits_used = 0;
};

constexpr int kPrecisionCapBits = 4096;

/// Is the Lebesgue function convex on a one-sided neighborhood of the node of
/// piece k (right node by default)? Decided by the sign of the piece's second
/// derivative at the node, escalating precision until the margin is met.
ConvexityDecision convex_near_node(const NodeSet1D<double>& ns, int k, PrecisionContext ctx,
                                   NodeSide side = NodeSide::right,
                                   int bits_cap = kPrecisionCapBits);

struct ConvexityProfile {
  int degree = 0;
  NodeFamily family = NodeFamily::custom;
  std::vector<Convexity> near_right;  // entry k-1 for piece k at node x_{k+1}
  std::vector<Convexity> near_left;   // entry k-1 for piece k at node x_k
  int bits_used = 0;
};

ConvexityProfile convexity_profile(const NodeSet1D<double>& ns, PrecisionContext ctx);

struct MinDegreeDecision {
  int interval = 0;
  bool convex = false;
  int bits_used = 0;
};

struct MinDegreeResult {
  std::optional<int> min_degree;
  int n_max = 0;
  int bits_used = 0;                        // largest escalation seen
  std::vector<MinDegreeDecision> decisions;  // per-interval flags at the found degree
};

/// Smallest degree n <= n_max such that pieces k = 1..m are all convex near
/// their right node. Scans degrees one by one; no bisection.
MinDegreeResult min_degree_for_convexity(NodeFamily family, int m, PrecisionContext ctx,
                                         int n_max);

}  // namespace lebgeo
