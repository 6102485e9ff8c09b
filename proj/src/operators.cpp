#include "msem/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msem/parallel.hpp"

namespace msem {

namespace {

int facet_sign(int axis, bool high) {
  const int low = (axis % 2 == 0) ? -1 : 1;
  return high ? -low : low;
}

std::vector<int> drop_axis(const std::vector<int>& axes, int axis) {
  std::vector<int> out;
  for (int a : axes)
    if (a != axis) out.push_back(a < axis ? a : a - 1);
  return out;
}

}  // namespace

DiscreteForm exterior_derivative(const DiscreteForm& df) {
  const int n = df.dimension();
  const int k = df.degree();
  if (k >= n)
    throw std::invalid_argument("exterior_derivative: the derivative of a top form is not stored");
  if (!df.basis->has_grid_complex()) {
    // interior-Gauss dual points: switch to the extended-Gauss representation
    auto eg = std::make_shared<TensorBasis>(n, k, Side::dual, df.basis->order(),
                                            DualPointFamily::extended_gauss);
    return exterior_derivative(rebase(df, std::move(eg)));
  }
  const CellComplex& grid = df.basis->grid_complex();
  auto out_basis = std::make_shared<TensorBasis>(df.basis->with_degree(k + 1));
  Eigen::VectorXd c =
      grid.incidence(k + 1).cast<double>().transpose() * df.coefficients;
  return make_discrete(std::move(out_basis), std::move(c));
}

DiscreteForm hodge_star(const DiscreteForm& df, const MetricField& metric,
                        std::optional<Quadrature> quad) {
  const int n = df.dimension();
  const Side other = df.basis->side() == Side::primal ? Side::dual : Side::primal;
  auto target = std::make_shared<TensorBasis>(n, n - df.degree(), other, df.basis->order(),
                                              df.basis->point_family());
  const Quadrature q = quad.value_or(default_quadrature(df.basis->order()));
  Eigen::VectorXd c = reduce_on_support(hodge(from_discrete(df), metric), support_of(*target), q);
  return make_discrete(std::move(target), std::move(c));
}

Eigen::MatrixXd codifferential_matrix(int order) {
  const Basis1D lag(Family1D::lagrange_gll, order);
  const Eigen::MatrixXd& d2 = lag.diff2_matrix();
  // column i is -eps_i' at the nodes, i.e. +sum_{k<=i} l_k''(xi_j); this is
  // the sign that makes the matrix equal to the star-d-star composition and
  // the formal adjoint of d
  Eigen::MatrixXd dstar(order + 1, order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j <= order; ++j) {
      double acc = 0.0;
      for (int k = 0; k <= i; ++k) acc += d2(j, k);
      dstar(j, i) = acc;
    }
  return dstar;
}

DiscreteForm codifferential(const DiscreteForm& df, const MetricField& metric,
                            std::optional<Quadrature> quad) {
  const int n = df.dimension();
  const int k = df.degree();
  if (k < 1) throw std::invalid_argument("codifferential: degree must be >= 1");
  DiscreteForm starred = hodge_star(df, metric, quad);
  DiscreteForm dstarred = exterior_derivative(starred);
  DiscreteForm back = hodge_star(dstarred, metric, quad);
  const int sign = (n * (k + 1) + 1) % 2 == 0 ? 1 : -1;
  back.coefficients *= sign;
  return back;
}

DiscreteForm laplace_de_rham(const DiscreteForm& df, const MetricField& metric,
                             std::optional<Quadrature> quad) {
  const int n = df.dimension();
  const int k = df.degree();
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(df.coefficients.size());
  if (k < n) acc += codifferential(exterior_derivative(df), metric, quad).coefficients;
  if (k > 0) acc += exterior_derivative(codifferential(df, metric, quad)).coefficients;
  return make_discrete(df.basis, std::move(acc));
}

DiscreteForm wedge_h(const DiscreteForm& a, const DiscreteForm& b, std::optional<Quadrature> quad) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("wedge_h: dimension mismatch");
  if (a.basis->side() != b.basis->side())
    throw std::invalid_argument("wedge_h: both forms must live on the same side");
  const int k = a.degree(), l = b.degree(), n = a.dimension();
  if (k + l > n) throw std::invalid_argument("wedge_h: degree overflow");
  auto target = std::make_shared<TensorBasis>(a.basis->with_degree(k + l));
  const Quadrature q = quad.value_or(default_quadrature(a.basis->order()));
  AnalyticForm w = wedge(from_discrete(a), from_discrete(b));
  Eigen::VectorXd c = reduce_on_support(w, support_of(*target), q);
  return make_discrete(std::move(target), std::move(c));
}

Eigen::MatrixXd mass_matrix(const TensorBasis& basis, const MetricField& metric,
                            std::optional<Quadrature> quad) {
  const int n = basis.dimension();
  const int k = basis.degree();
  const Quadrature q = quad.value_or(default_quadrature(basis.order()));
  const NodeSet rule = nodeset(NodeKind::gauss, q.points);
  const Index dofs = basis.dof_count();
  const int ncomp = basis.component_count();

  const auto& enodes = basis.edge().nodes().nodes;
  const int cells_per_axis = static_cast<int>(enodes.size()) - 1;
  Index ncells = 1;
  for (int a = 0; a < n; ++a) ncells *= cells_per_axis;

  std::vector<Eigen::MatrixXd> local(ncells);
  parallel_for(ncells, [&](Index cell) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dofs, dofs);
    std::array<int, 3> ci{};
    Index rem = cell;
    for (int a = n - 1; a >= 0; --a) {
      ci[a] = static_cast<int>(rem % cells_per_axis);
      rem /= cells_per_axis;
    }
    Index qtotal = 1;
    for (int a = 0; a < n; ++a) qtotal *= rule.size();
    Eigen::VectorXd values(dofs);
    std::vector<int> comp_of(dofs);
    for (int c = 0; c < ncomp; ++c)
      for (Index i = 0; i < basis.component(c).size; ++i)
        comp_of[basis.component(c).offset + i] = c;

    for (Index qp = 0; qp < qtotal; ++qp) {
      Index qr = qp;
      Eigen::Vector3d xi = Eigen::Vector3d::Zero();
      double w = 1.0;
      for (int a = n - 1; a >= 0; --a) {
        const int qi = static_cast<int>(qr % rule.size());
        qr /= rule.size();
        const double lo = enodes[ci[a]], hi = enodes[ci[a] + 1];
        xi[a] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[qi];
        w *= rule.weights[qi] * 0.5 * (hi - lo);
      }
      for (int c = 0; c < ncomp; ++c)
        for (Index i = 0; i < basis.component(c).size; ++i)
          values[basis.component(c).offset + i] = basis.eval(c, i, xi);
      // Gram determinants of the inverse metric between components
      const Eigen::Matrix3d ginv = metric.inverse(xi);
      const double sq = metric.sqrt_det(xi);
      Eigen::MatrixXd gram(ncomp, ncomp);
      for (int c1 = 0; c1 < ncomp; ++c1)
        for (int c2 = 0; c2 < ncomp; ++c2) {
          if (k == 0) {
            gram(c1, c2) = 1.0;
            continue;
          }
          Eigen::MatrixXd blk(k, k);
          const auto& s1 = basis.component(c1).axes;
          const auto& s2 = basis.component(c2).axes;
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) blk(i, j) = ginv(s1[i], s2[j]);
          gram(c1, c2) = blk.determinant();
        }
      for (Index i = 0; i < dofs; ++i) {
        if (values[i] == 0.0) continue;
        for (Index j = 0; j < dofs; ++j) {
          if (values[j] == 0.0) continue;
          m(i, j) += w * sq * gram(comp_of[i], comp_of[j]) * values[i] * values[j];
        }
      }
    }
    local[cell] = std::move(m);
  });

  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(dofs, dofs);
  for (Index cell = 0; cell < ncells; ++cell) mass += local[cell];
  return mass;
}

double inner(const DiscreteForm& a, const DiscreteForm& b, const MetricField& metric,
             std::optional<Quadrature> quad) {
  if (a.degree() != b.degree()) throw std::invalid_argument("inner: degree mismatch");
  const Eigen::MatrixXd m = mass_matrix(*a.basis, metric, quad);
  return a.coefficients.dot(m * b.coefficients);
}

double integrate(const AnalyticForm& form, std::optional<Quadrature> quad) {
  if (form.degree != form.dimension)
    throw std::invalid_argument("integrate: only top-degree forms have a domain integral");
  TensorCell cell;
  for (int a = 0; a < form.dimension; ++a) cell.factors.push_back({true, -1.0, 1.0});
  return reduce_on_cell(form, cell, quad.value_or(Quadrature{16}));
}

double integrate(const DiscreteForm& df, std::optional<Quadrature> quad) {
  return integrate(from_discrete(df), quad.value_or(default_quadrature(df.basis->order())));
}

DiscreteForm trace_tangential(const DiscreteForm& df, int axis, bool high) {
  const int n = df.dimension();
  const int k = df.degree();
  if (n < 2) throw std::invalid_argument("trace_tangential: use trace_value in 1D");
  if (k > n - 1) throw std::invalid_argument("trace_tangential: degree exceeds facet dimension");
  const Basis1D& lag = df.basis->lagrange();
  const double end = high ? 1.0 : -1.0;
  if (std::abs(lag.nodes().nodes[high ? lag.size() - 1 : 0] - end) > 1e-14)
    throw std::invalid_argument("trace_tangential: point family has no boundary nodes");

  auto facet = std::make_shared<TensorBasis>(n - 1, k, df.basis->side(), df.basis->order(),
                                             df.basis->point_family());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(facet->dof_count());
  const int sign = facet_sign(axis, high);
  const int end_node = high ? lag.size() - 1 : 0;

  for (int fc = 0; fc < facet->component_count(); ++fc) {
    const auto& fcomp = facet->component(fc);
    std::vector<int> paxes;
    for (int b : fcomp.axes) paxes.push_back(b < axis ? b : b + 1);
    // locate the parent component with the same extent axes
    int pc = -1;
    for (int c = 0; c < df.basis->component_count(); ++c)
      if (df.basis->component(c).axes == paxes) pc = c;
    if (pc < 0) continue;
    const auto& pcomp = df.basis->component(pc);
    for (Index local = 0; local < fcomp.size; ++local) {
      std::array<int, 3> fmi{};
      Index rem = local;
      for (int a = n - 2; a >= 0; --a) {
        fmi[a] = static_cast<int>(rem % fcomp.len[a]);
        rem /= fcomp.len[a];
      }
      std::array<int, 3> pmi{};
      for (int a = 0; a < n; ++a)
        pmi[a] = (a == axis) ? end_node : fmi[a < axis ? a : a - 1];
      Index pl = 0;
      for (int a = 0; a < n; ++a) pl = pl * pcomp.len[a] + pmi[a];
      out[fcomp.offset + local] = sign * df.coefficients[pcomp.offset + pl];
    }
  }
  return make_discrete(std::move(facet), std::move(out));
}

DiscreteForm trace_normal(const DiscreteForm& df, int axis, bool high) {
  const int n = df.dimension();
  const int k = df.degree();
  if (n < 2) throw std::invalid_argument("trace_normal: use trace_value in 1D");
  if (k < 1) throw std::invalid_argument("trace_normal: needs an edge factor along the axis");
  const Basis1D& edg = df.basis->edge();
  const double end = high ? 1.0 : -1.0;

  auto facet = std::make_shared<TensorBasis>(n - 1, k - 1, df.basis->side(), df.basis->order(),
                                             df.basis->point_family());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(facet->dof_count());
  const int fsign = facet_sign(axis, high);

  for (int pc = 0; pc < df.basis->component_count(); ++pc) {
    const auto& pcomp = df.basis->component(pc);
    const auto it = std::find(pcomp.axes.begin(), pcomp.axes.end(), axis);
    if (it == pcomp.axes.end()) continue;
    const int pos = static_cast<int>(it - pcomp.axes.begin());
    const int psign = pos % 2 == 0 ? 1 : -1;  // dxi^S = psign * dxi^axis ^ dxi^{S minus axis}
    const int fc = [&] {
      std::vector<int> fax = drop_axis(pcomp.axes, axis);
      for (int c = 0; c < facet->component_count(); ++c)
        if (facet->component(c).axes == fax) return c;
      throw std::logic_error("trace_normal: facet component not found");
    }();
    const auto& fcomp = facet->component(fc);
    for (Index local = 0; local < fcomp.size; ++local) {
      std::array<int, 3> fmi{};
      Index rem = local;
      for (int a = n - 2; a >= 0; --a) {
        fmi[a] = static_cast<int>(rem % fcomp.len[a]);
        rem /= fcomp.len[a];
      }
      double acc = 0.0;
      for (int i = 0; i < edg.size(); ++i) {
        std::array<int, 3> pmi{};
        for (int a = 0; a < n; ++a)
          pmi[a] = (a == axis) ? i : fmi[a < axis ? a : a - 1];
        Index pl = 0;
        for (int a = 0; a < n; ++a) pl = pl * pcomp.len[a] + pmi[a];
        acc += df.coefficients[pcomp.offset + pl] * edg.eval(i, end);
      }
      out[fcomp.offset + local] += fsign * psign * acc;
    }
  }
  return make_discrete(std::move(facet), std::move(out));
}

double trace_value(const DiscreteForm& df, bool high) {
  if (df.dimension() != 1) throw std::invalid_argument("trace_value: 1D forms only");
  const int sign = facet_sign(0, high);
  const double end = high ? 1.0 : -1.0;
  if (df.degree() == 0) {
    const Basis1D& lag = df.basis->lagrange();
    double acc = 0.0;
    for (int i = 0; i < lag.size(); ++i)
      acc += df.coefficients[i] * lag.eval(i, end);
    return sign * acc;
  }
  const Basis1D& edg = df.basis->edge();
  double acc = 0.0;
  for (int i = 0; i < edg.size(); ++i) acc += df.coefficients[i] * edg.eval(i, end);
  return sign * acc;
}

}  // namespace msem
