#include "msem/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msem {

std::pair<double, double> legendre(int n, double xi) {
  if (n < 0) throw std::invalid_argument("legendre: order must be >= 0");
  if (n == 0) return {1.0, 0.0};
  double pm1 = 1.0, p = xi;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * xi * p - (k - 1.0) * pm1) / k;
    pm1 = p;
    p = pk;
  }
  // P_n' from the standard identity; at xi = +-1 use the closed form.
  double dp;
  if (std::abs(1.0 - xi * xi) < 1e-14) {
    dp = 0.5 * n * (n + 1.0) * (xi > 0 ? 1.0 : ((n % 2 == 0) ? -1.0 : 1.0));
  } else {
    dp = n * (xi * p - pm1) / (xi * xi - 1.0);
  }
  return {p, dp};
}

namespace {

constexpr int kMaxNewton = 100;
constexpr double kTol = 1e-15;

// P_n'' via the Legendre ODE (1-x^2) P'' = 2x P' - n(n+1) P.
double legendre_dd(int n, double xi, double p, double dp) {
  return (2.0 * xi * dp - n * (n + 1.0) * p) / (1.0 - xi * xi);
}

std::vector<double> gauss_nodes(int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    double xi = -std::cos(M_PI * (i + 0.75) / (n + 0.5));
    int it = 0;
    for (; it < kMaxNewton; ++it) {
      auto [p, dp] = legendre(n, xi);
      const double dx = p / dp;
      xi -= dx;
      if (std::abs(dx) < kTol) break;
    }
    if (it == kMaxNewton) throw std::runtime_error("gauss nodes: Newton failed");
    x[i] = xi;
  }
  std::sort(x.begin(), x.end());
  // enforce exact symmetry about 0
  for (int i = 0; i < n / 2; ++i) {
    const double s = 0.5 * (x[n - 1 - i] - x[i]);
    x[i] = -s;
    x[n - 1 - i] = s;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return x;
}

std::vector<double> gll_nodes(int n) {
  std::vector<double> x(n + 1);
  x.front() = -1.0;
  x.back() = 1.0;
  for (int i = 1; i < n; ++i) {
    // Chebyshev-Lobatto initial guess, then Newton on P_n'.
    double xi = -std::cos(M_PI * i / n);
    int it = 0;
    for (; it < kMaxNewton; ++it) {
      auto [p, dp] = legendre(n, xi);
      const double ddp = legendre_dd(n, xi, p, dp);
      const double dx = dp / ddp;
      xi -= dx;
      if (std::abs(dx) < kTol) break;
    }
    if (it == kMaxNewton) throw std::runtime_error("gll nodes: Newton failed");
    x[i] = xi;
  }
  std::sort(x.begin(), x.end());
  for (int i = 0; i <= n / 2; ++i) {
    const double s = 0.5 * (x[n - i] - x[i]);
    x[i] = -s;
    x[n - i] = s;
  }
  if (n % 2 == 0) x[n / 2] = 0.0;
  return x;
}

}  // namespace

NodeSet nodeset(NodeKind kind, int order) {
  if (order < 1) throw std::invalid_argument("nodeset: order must be >= 1");
  NodeSet ns;
  ns.kind = kind;
  ns.order = order;
  switch (kind) {
    case NodeKind::gauss: {
      ns.nodes = gauss_nodes(order);
      ns.weights.resize(order);
      for (int i = 0; i < order; ++i) {
        auto [p, dp] = legendre(order, ns.nodes[i]);
        (void)p;
        ns.weights[i] = 2.0 / ((1.0 - ns.nodes[i] * ns.nodes[i]) * dp * dp);
      }
      break;
    }
    case NodeKind::gauss_lobatto: {
      ns.nodes = gll_nodes(order);
      ns.weights.resize(order + 1);
      for (int i = 0; i <= order; ++i) {
        auto [p, dp] = legendre(order, ns.nodes[i]);
        (void)dp;
        ns.weights[i] = 2.0 / (order * (order + 1.0) * p * p);
      }
      break;
    }
    case NodeKind::extended_gauss: {
      ns.nodes = gauss_nodes(order);
      ns.nodes.insert(ns.nodes.begin(), -1.0);
      ns.nodes.push_back(1.0);
      break;
    }
  }
  return ns;
}

}  // namespace msem
