#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <map>
#include <string>

#include "lebgeo/errors.hpp"
#include "lebgeo/scalar.hpp"

namespace lebgeo {

enum class NodeFamily { equidistant, chebyshev1, chebyshev2, lobatto, extended, custom };

inline const char* family_name(NodeFamily f) {
  switch (f) {
    case NodeFamily::equidistant: return "equidistant";
    case NodeFamily::chebyshev1: return "chebyshev1";
    case NodeFamily::chebyshev2: return "chebyshev2";
    case NodeFamily::lobatto: return "lobatto";
    case NodeFamily::extended: return "extended";
    default: return "custom";
  }
}

inline NodeFamily family_from_name(const std::string& s) {
  if (s == "equidistant") return NodeFamily::equidistant;
  if (s == "chebyshev1") return NodeFamily::chebyshev1;
  if (s == "chebyshev2") return NodeFamily::chebyshev2;
  if (s == "lobatto" || s == "chebyshev_lobatto") return NodeFamily::lobatto;
  if (s == "extended" || s == "extended_chebyshev") return NodeFamily::extended;
  if (s == "custom") return NodeFamily::custom;
  throw invalid_input("unknown node family: " + s);
}

/// Strictly increasing interpolation nodes in [-1,1]; degree n carries n+1 nodes.
template <typename Scalar>
struct NodeSet1D {
  Eigen::Array<Scalar, Eigen::Dynamic, 1> nodes;
  int degree = 0;
  NodeFamily family = NodeFamily::custom;

  int count() const { return static_cast<int>(nodes.size()); }
};

namespace detail {

template <typename Scalar>
void check_valid(const NodeSet1D<Scalar>& ns) {
  if (ns.count() != ns.degree + 1)
    throw invalid_input("node count does not match degree + 1");
  for (int j = 0; j < ns.count(); ++j) {
    if (ns.nodes[j] < Scalar(-1) || ns.nodes[j] > Scalar(1))
      throw domain_violation("node outside [-1,1]");
    if (j > 0 && !(ns.nodes[j - 1] < ns.nodes[j]))
      throw not_unisolvent("nodes not strictly increasing");
  }
}

}  // namespace detail

template <typename Scalar = double>
NodeSet1D<Scalar> equidistant(int n) {
  if (n < 1) throw invalid_degree("equidistant requires degree >= 1");
  NodeSet1D<Scalar> ns;
  ns.degree = n;
  ns.family = NodeFamily::equidistant;
  ns.nodes.resize(n + 1);
  for (int j = 0; j <= n; ++j) ns.nodes[j] = Scalar(-1) + Scalar(2) * j / n;
  ns.nodes[n] = Scalar(1);
  return ns;
}

template <typename Scalar = double>
NodeSet1D<Scalar> chebyshev1(int n) {
  if (n < 0) throw invalid_degree("chebyshev1 requires degree >= 0");
  NodeSet1D<Scalar> ns;
  ns.degree = n;
  ns.family = NodeFamily::chebyshev1;
  ns.nodes.resize(n + 1);
  const Scalar pi = pi_value<Scalar>();
  for (int j = 1; j <= n + 1; ++j) ns.nodes[j - 1] = -cos(Scalar(2 * j - 1) * pi / (2 * n + 2));
  return ns;
}

template <typename Scalar = double>
NodeSet1D<Scalar> chebyshev2(int n) {
  if (n < 0) throw invalid_degree("chebyshev2 requires degree >= 0");
  NodeSet1D<Scalar> ns;
  ns.degree = n;
  ns.family = NodeFamily::chebyshev2;
  ns.nodes.resize(n + 1);
  const Scalar pi = pi_value<Scalar>();
  for (int j = 1; j <= n + 1; ++j) ns.nodes[j - 1] = -cos(Scalar(j) * pi / (n + 2));
  return ns;
}

template <typename Scalar = double>
NodeSet1D<Scalar> chebyshev_lobatto(int n) {
  if (n < 1) throw invalid_degree("chebyshev_lobatto requires degree >= 1");
  NodeSet1D<Scalar> ns;
  ns.degree = n;
  ns.family = NodeFamily::lobatto;
  ns.nodes.resize(n + 1);
  const Scalar pi = pi_value<Scalar>();
  for (int j = 1; j <= n + 1; ++j) ns.nodes[j - 1] = -cos(Scalar(j - 1) * pi / n);
  // boundary membership drives the max-set logic; pin the endpoints exactly
  ns.nodes[0] = Scalar(-1);
  ns.nodes[n] = Scalar(1);
  return ns;
}

template <typename Scalar = double>
NodeSet1D<Scalar> extended_chebyshev(int n) {
  if (n < 1) throw invalid_degree("extended_chebyshev requires degree >= 1");
  NodeSet1D<Scalar> ns;
  ns.degree = n;
  ns.family = NodeFamily::extended;
  ns.nodes.resize(n + 1);
  const Scalar pi = pi_value<Scalar>();
  const Scalar scale = cos(pi / (2 * n + 2));
  for (int j = 1; j <= n + 1; ++j)
    ns.nodes[j - 1] = -cos(Scalar(2 * j - 1) * pi / (2 * n + 2)) / scale;
  ns.nodes[0] = Scalar(-1);
  ns.nodes[n] = Scalar(1);
  return ns;
}

template <typename Scalar = double>
NodeSet1D<Scalar> custom_nodes(std::vector<Scalar> values) {
  if (values.empty()) throw invalid_input("custom node list is empty");
  std::sort(values.begin(), values.end());
  NodeSet1D<Scalar> ns;
  ns.degree = static_cast<int>(values.size()) - 1;
  ns.family = NodeFamily::custom;
  ns.nodes.resize(values.size());
  for (size_t j = 0; j < values.size(); ++j) ns.nodes[j] = values[j];
  detail::check_valid(ns);
  return ns;
}

/// Shift selected nodes (0-based index -> offset). The result must remain a
/// valid strictly increasing set in [-1,1]; family becomes custom.
template <typename Scalar>
NodeSet1D<Scalar> perturb(const NodeSet1D<Scalar>& ns, const std::map<int, Scalar>& shifts) {
  NodeSet1D<Scalar> out = ns;
  out.family = NodeFamily::custom;
  for (auto& [idx, s] : shifts) {
    if (idx < 0 || idx >= ns.count()) throw invalid_input("perturb index out of range");
    out.nodes[idx] += s;
  }
  detail::check_valid(out);
  return out;
}

/// Multiply all nodes by c in (0,1]; the result lives in [-c,c].
template <typename Scalar>
NodeSet1D<Scalar> scale(const NodeSet1D<Scalar>& ns, Scalar c) {
  if (!(c > Scalar(0)) || c > Scalar(1)) throw invalid_input("scale factor must be in (0,1]");
  if (c == Scalar(1)) return ns;
  NodeSet1D<Scalar> out;
  out.degree = ns.degree;
  out.family = NodeFamily::custom;
  out.nodes = ns.nodes * c;
  return out;
}

template <typename Scalar = double>
NodeSet1D<Scalar> make_family(NodeFamily f, int n) {
  switch (f) {
    case NodeFamily::equidistant: return equidistant<Scalar>(n);
    case NodeFamily::chebyshev1: return chebyshev1<Scalar>(n);
    case NodeFamily::chebyshev2: return chebyshev2<Scalar>(n);
    case NodeFamily::lobatto: return chebyshev_lobatto<Scalar>(n);
    case NodeFamily::extended: return extended_chebyshev<Scalar>(n);
    default: throw invalid_input("custom family has no generator");
  }
}

}  // namespace lebgeo
