#include "msem/mimetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msem/parallel.hpp"

namespace msem {

SupportGrid support_of(const CellComplex& c) {
  SupportGrid g;
  g.axes.resize(c.dimension());
  for (int a = 0; a < c.dimension(); ++a) {
    const Axis& ax = c.axis(a);
    for (int i = 0; i < ax.cells; ++i)
      g.axes[a].segments.push_back({ax.cell_lo(i), ax.cell_hi(i)});
    for (int i = 0; i < ax.node_count(); ++i) g.axes[a].points.push_back(ax.node(i));
  }
  return g;
}

SupportGrid support_of(const TensorBasis& b) {
  SupportGrid g;
  g.axes.resize(b.dimension());
  const auto& enodes = b.edge().nodes().nodes;
  const auto& lnodes = b.lagrange().nodes().nodes;
  for (int a = 0; a < b.dimension(); ++a) {
    for (std::size_t i = 0; i + 1 < enodes.size(); ++i)
      g.axes[a].segments.push_back({enodes[i], enodes[i + 1]});
    g.axes[a].points = lnodes;
  }
  return g;
}

Quadrature default_quadrature(int order) { return Quadrature{order + 2}; }

namespace {

template <bool Parallel>
Eigen::VectorXd reduce_impl(const AnalyticForm& form, const SupportGrid& grid, Quadrature quad) {
  const int n = static_cast<int>(grid.axes.size());
  const int k = form.degree;
  if (form.dimension != n) throw std::invalid_argument("reduce: dimension mismatch");
  if (quad.points < 1) throw std::invalid_argument("reduce: quadrature order must be >= 1");
  const NodeSet rule = nodeset(NodeKind::gauss, quad.points);
  const auto comps = form_components(n, k);

  // per-component dof counts and offsets
  std::vector<Index> sizes(comps.size()), offsets(comps.size());
  Index total = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Index s = 1;
    for (int a = 0; a < n; ++a) {
      const bool extent = std::find(comps[c].begin(), comps[c].end(), a) != comps[c].end();
      s *= extent ? static_cast<Index>(grid.axes[a].segments.size())
                  : static_cast<Index>(grid.axes[a].points.size());
    }
    offsets[c] = total;
    sizes[c] = s;
    total += s;
  }

  Eigen::VectorXd out(total);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& axes = comps[c];
    std::array<Index, 3> len{1, 1, 1};
    for (int a = 0; a < n; ++a) {
      const bool extent = std::find(axes.begin(), axes.end(), a) != axes.end();
      len[a] = extent ? static_cast<Index>(grid.axes[a].segments.size())
                      : static_cast<Index>(grid.axes[a].points.size());
    }
    const ScalarField& f = form.components[c];
    auto body = [&, c](Index local) {
      std::array<int, 3> mi{};
      Index rem = local;
      for (int a = n - 1; a >= 0; --a) {
        mi[a] = static_cast<int>(rem % len[a]);
        rem /= len[a];
      }
      // iterated Gauss quadrature over the extent axes
      Eigen::Vector3d x = Eigen::Vector3d::Zero();
      std::array<double, 3> mid{}, half{};
      for (int a = 0; a < n; ++a) {
        const bool extent = std::find(axes.begin(), axes.end(), a) != axes.end();
        if (extent) {
          const auto& seg = grid.axes[a].segments[mi[a]];
          mid[a] = 0.5 * (seg[0] + seg[1]);
          half[a] = 0.5 * (seg[1] - seg[0]);
        } else {
          x[a] = grid.axes[a].points[mi[a]];
        }
      }
      double acc = 0.0;
      Index qtotal = 1;
      for (int j = 0; j < k; ++j) qtotal *= rule.size();
      for (Index q = 0; q < qtotal; ++q) {
        Index qr = q;
        double w = 1.0;
        for (int j = k - 1; j >= 0; --j) {
          const int a = axes[j];
          const int qi = static_cast<int>(qr % rule.size());
          qr /= rule.size();
          x[a] = mid[a] + half[a] * rule.nodes[qi];
          w *= rule.weights[qi] * half[a];
        }
        acc += w * f(x);
      }
      out[offsets[c] + local] = acc;
    };
    if constexpr (Parallel)
      parallel_for(sizes[c], body);
    else
      serial_for(sizes[c], body);
  }
  return out;
}

}  // namespace

Eigen::VectorXd reduce_on_support(const AnalyticForm& form, const SupportGrid& grid,
                                  Quadrature quad) {
  return reduce_impl<true>(form, grid, quad);
}

Eigen::VectorXd reduce_on_support_serial(const AnalyticForm& form, const SupportGrid& grid,
                                         Quadrature quad) {
  return reduce_impl<false>(form, grid, quad);
}

Cochain reduce(const AnalyticForm& form, const CellComplex& complex, Quadrature quad) {
  Cochain out = make_cochain(complex, form.degree);
  out.coefficients = reduce_on_support(form, support_of(complex), quad);
  return out;
}

double reduce_on_cell(const AnalyticForm& form, const TensorCell& cell, Quadrature quad) {
  const int n = form.dimension;
  if (static_cast<int>(cell.factors.size()) != n)
    throw std::invalid_argument("reduce_on_cell: one factor per axis required");
  SupportGrid g;
  g.axes.resize(n);
  std::vector<int> extent_axes;
  for (int a = 0; a < n; ++a) {
    if (cell.factors[a].extent) {
      g.axes[a].segments.push_back({cell.factors[a].lo, cell.factors[a].hi});
      extent_axes.push_back(a);
    } else {
      g.axes[a].points.push_back(cell.factors[a].lo);
    }
  }
  if (static_cast<int>(extent_axes.size()) != form.degree)
    throw std::invalid_argument("reduce_on_cell: cell degree does not match the form degree");
  return reduce_on_support_serial(form, g, quad)[0];
}

Eigen::VectorXd DiscreteForm::eval(const Eigen::Vector3d& xi) const {
  for (int a = 0; a < dimension(); ++a)
    if (std::abs(xi[a]) > 1.0 + 1e-12)
      throw std::invalid_argument("DiscreteForm::eval: point outside the reference domain");
  Eigen::VectorXd v(basis->component_count());
  for (int c = 0; c < basis->component_count(); ++c)
    v[c] = basis->eval_field(c, coefficients, xi);
  return v;
}

DiscreteForm make_discrete(std::shared_ptr<const TensorBasis> basis, Eigen::VectorXd coeff) {
  if (coeff.size() != basis->dof_count())
    throw std::invalid_argument("make_discrete: coefficient count mismatch");
  return DiscreteForm{std::move(basis), std::move(coeff)};
}

AnalyticForm from_discrete(const DiscreteForm& df) {
  AnalyticForm a;
  a.dimension = df.dimension();
  a.degree = df.degree();
  for (int c = 0; c < df.basis->component_count(); ++c) {
    a.components.push_back(
        [df, c](const Eigen::Vector3d& x) { return df.basis->eval_field(c, df.coefficients, x); });
  }
  return a;
}

DiscreteForm project(const AnalyticForm& form, std::shared_ptr<const TensorBasis> basis,
                     std::optional<Quadrature> quad) {
  if (form.degree != basis->degree() || form.dimension != basis->dimension())
    throw std::invalid_argument("project: form/basis degree mismatch");
  const Quadrature q = quad.value_or(default_quadrature(basis->order()));
  Eigen::VectorXd c = reduce_on_support(form, support_of(*basis), q);
  return make_discrete(std::move(basis), std::move(c));
}

DiscreteForm rebase(const DiscreteForm& df, std::shared_ptr<const TensorBasis> target,
                    std::optional<Quadrature> quad) {
  if (df.degree() != target->degree() || df.dimension() != target->dimension())
    throw std::invalid_argument("rebase: degree mismatch");
  // per-axis polynomial degree is (family size - 1); the target must span the
  // source space for pi_M to be the identity on forms
  const int k = df.degree(), n = df.dimension();
  if ((k >= 1 && target->edge().size() < df.basis->edge().size()) ||
      (k <= n - 1 && target->lagrange().size() < df.basis->lagrange().size()))
    throw std::invalid_argument("rebase: target family cannot represent the source degree");
  const Quadrature q = quad.value_or(default_quadrature(std::max(df.basis->order(), target->order())));
  Eigen::VectorXd c = reduce_on_support(from_discrete(df), support_of(*target), q);
  return make_discrete(std::move(target), std::move(c));
}

DiscreteForm coproject(const AnalyticForm& form, std::shared_ptr<const TensorBasis> target,
                       const MetricField& metric, std::optional<Quadrature> quad) {
  const int n = target->dimension();
  const int k = target->degree();
  if (form.degree != k || form.dimension != n)
    throw std::invalid_argument("coproject: form/basis degree mismatch");
  const Quadrature q = quad.value_or(default_quadrature(target->order()));

  const Side other = target->side() == Side::primal ? Side::dual : Side::primal;
  auto mid = std::make_shared<TensorBasis>(n, n - k, other, target->order(),
                                           target->point_family());
  DiscreteForm star_proj = project(hodge(form, metric), mid, q);

  AnalyticForm back = hodge(from_discrete(star_proj), metric);
  const int sign = (k * (n - k)) % 2 == 0 ? 1 : -1;
  Eigen::VectorXd c = reduce_on_support(back, support_of(*target), q);
  return make_discrete(std::move(target), sign * c);
}

}  // namespace msem
