#ifndef MSEM_NODES_HPP
#define MSEM_NODES_HPP

#include <utility>
#include <vector>

namespace msem {

// Legendre polynomial value and first derivative at xi, by the three-term
// recurrence.
std::pair<double, double> legendre(int n, double xi);

enum class NodeKind { gauss_lobatto, gauss, extended_gauss };

// 1D node set on [-1,1].
//  gauss_lobatto : N+1 nodes, roots of (1-xi^2) P_N', includes both endpoints
//  gauss         : N interior nodes, roots of P_N
//  extended_gauss: N+2 nodes, {-1} + gauss(N) + {+1}; interpolation grid only,
//                  no quadrature weights
struct NodeSet {
  NodeKind kind;
  int order;                    // N
  std::vector<double> nodes;    // sorted ascending
  std::vector<double> weights;  // empty for extended_gauss

  int size() const { return static_cast<int>(nodes.size()); }
};

NodeSet nodeset(NodeKind kind, int order);

// Gauss quadrature of f over [a,b] with npts points.
template <typename F>
double gauss_integrate(const NodeSet& gauss_rule, double a, double b, F&& f) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int q = 0; q < gauss_rule.size(); ++q)
    acc += gauss_rule.weights[q] * f(mid + half * gauss_rule.nodes[q]);
  return acc * half;
}

}  // namespace msem

#endif
