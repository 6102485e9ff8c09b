#include "msem/convergence.hpp"

#include <cmath>
#include <stdexcept>

#include "msem/basis.hpp"

namespace msem {

std::vector<ConvergenceRow> h_refinement_1d(int degree, const std::function<double(double)>& f,
                                            const std::function<double(double)>& df, int p,
                                            const std::vector<int>& element_counts,
                                            int error_quad_points) {
  if (degree != 0 && degree != 1)
    throw std::invalid_argument("h_refinement_1d: degree must be 0 or 1");
  const Basis1D lag(Family1D::lagrange_gll, p);
  const Basis1D edg(Family1D::edge_gll, p);
  const NodeSet err_rule = nodeset(NodeKind::gauss, error_quad_points);
  const NodeSet red_rule = nodeset(NodeKind::gauss, p + 2);

  std::vector<ConvergenceRow> rows;
  for (int m : element_counts) {
    const double h = 2.0 / m;
    double l2 = 0.0, semi = 0.0;
    for (int e = 0; e < m; ++e) {
      const double xl = -1.0 + h * e;
      auto phys = [&](double xi) { return xl + 0.5 * h * (xi + 1.0); };
      if (degree == 0) {
        std::vector<double> nodal(p + 1);
        for (int i = 0; i <= p; ++i) nodal[i] = f(phys(lag.nodes().nodes[i]));
        for (int q = 0; q < err_rule.size(); ++q) {
          const double xi = err_rule.nodes[q];
          const double w = err_rule.weights[q] * 0.5 * h;
          double v = 0.0, dv = 0.0;
          for (int i = 0; i <= p; ++i) {
            v += nodal[i] * lag.lagrange_eval(i, xi);
            dv += nodal[i] * lag.lagrange_deriv(i, xi, 1);
          }
          const double x = phys(xi);
          l2 += w * std::pow(f(x) - v, 2);
          semi += w * std::pow(df(x) - dv * 2.0 / h, 2);
        }
      } else {
        // histopolation of the proxy pulled back to the reference element
        std::vector<double> u(p);
        for (int i = 0; i < p; ++i) {
          double acc = 0.0;
          const double a = lag.nodes().nodes[i], b = lag.nodes().nodes[i + 1];
          for (int q = 0; q < red_rule.size(); ++q) {
            const double xi = 0.5 * (a + b) + 0.5 * (b - a) * red_rule.nodes[q];
            acc += red_rule.weights[q] * 0.5 * (b - a) * f(phys(xi)) * 0.5 * h;
          }
          u[i] = acc;
        }
        for (int q = 0; q < err_rule.size(); ++q) {
          const double xi = err_rule.nodes[q];
          const double w = err_rule.weights[q] * 0.5 * h;
          double r = 0.0;
          for (int i = 0; i < p; ++i) r += u[i] * edg.edge_eval(i, xi);
          const double x = phys(xi);
          l2 += w * std::pow(f(x) - r * 2.0 / h, 2);
        }
      }
    }
    rows.push_back({m, h, std::sqrt(l2), std::sqrt(semi)});
  }
  return rows;
}

std::vector<double> observed_orders(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> orders;
  for (std::size_t i = 1; i < rows.size(); ++i)
    orders.push_back(std::log(rows[i - 1].l2_error / rows[i].l2_error) /
                     std::log(rows[i - 1].h / rows[i].h));
  return orders;
}

}  // namespace msem
