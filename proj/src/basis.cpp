#include "msem/basis.hpp"
#include <functional>
#include <algorithm>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace msem {

namespace {

NodeKind node_kind_of(Family1D f) {
  switch (f) {
    case Family1D::lagrange_gll:
    case Family1D::edge_gll:
      return NodeKind::gauss_lobatto;
    case Family1D::lagrange_gauss:
      return NodeKind::gauss;
    case Family1D::lagrange_extended_gauss:
    case Family1D::edge_extended_gauss:
      return NodeKind::extended_gauss;
  }
  throw std::logic_error("unknown family");
}

}  // namespace

Basis1D::Basis1D(Family1D family, int order)
    : family_(family), order_(order), nodes_(nodeset(node_kind_of(family), order)) {
  const int m = nodes_.size();
  bary_.assign(m, 1.0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i)
      if (i != j) bary_[j] /= (nodes_.nodes[j] - nodes_.nodes[i]);
  }
  d1_.resize(m, m);
  for (int i = 0; i < m; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      d1_(i, j) = (bary_[j] / bary_[i]) / (nodes_.nodes[i] - nodes_.nodes[j]);
      rowsum += d1_(i, j);
    }
    d1_(i, i) = -rowsum;
  }
  d2_ = d1_ * d1_;
}

bool Basis1D::is_edge() const {
  return family_ == Family1D::edge_gll || family_ == Family1D::edge_extended_gauss;
}

int Basis1D::size() const { return is_edge() ? nodes_.size() - 1 : nodes_.size(); }

double Basis1D::lagrange_at(int i, double xi) const {
  const int m = nodes_.size();
  // exact cardinal value when xi hits a node
  for (int p = 0; p < m; ++p)
    if (xi == nodes_.nodes[p]) return i == p ? 1.0 : 0.0;
  double num = bary_[i] / (xi - nodes_.nodes[i]);
  double den = 0.0;
  for (int j = 0; j < m; ++j) den += bary_[j] / (xi - nodes_.nodes[j]);
  return num / den;
}

double Basis1D::lagrange_eval(int i, double xi) const {
  if (i < 0 || i >= nodes_.size()) throw std::out_of_range("lagrange_eval: index");
  return lagrange_at(i, xi);
}

double Basis1D::lagrange_deriv(int i, double xi, int deriv_order) const {
  if (i < 0 || i >= nodes_.size()) throw std::out_of_range("lagrange_deriv: index");
  if (deriv_order != 1 && deriv_order != 2)
    throw std::invalid_argument("lagrange_deriv: order must be 1 or 2");
  const Eigen::MatrixXd& d = deriv_order == 1 ? d1_ : d2_;
  // l_i^(r) is again degree <= N, so interpolate its nodal values
  double acc = 0.0;
  for (int m = 0; m < nodes_.size(); ++m) acc += d(m, i) * lagrange_at(m, xi);
  return acc;
}

double Basis1D::edge_eval(int i, double xi) const {
  if (i < 0 || i >= nodes_.size() - 1) throw std::out_of_range("edge_eval: index");
  double acc = 0.0;
  for (int k = 0; k <= i; ++k) acc -= lagrange_deriv(k, xi, 1);
  return acc;
}

double Basis1D::eval(int i, double xi) const {
  return is_edge() ? edge_eval(i, xi) : lagrange_eval(i, xi);
}

TensorBasis::TensorBasis(int dimension, int degree, Side side, int order, DualPointFamily points)
    : n_(dimension),
      k_(degree),
      order_(order),
      side_(side),
      points_(points),
      lag_(side == Side::primal ? Family1D::lagrange_gll
                                : (points == DualPointFamily::gauss
                                       ? Family1D::lagrange_gauss
                                       : Family1D::lagrange_extended_gauss),
           order),
      edg_(side == Side::primal ? Family1D::edge_gll : Family1D::edge_extended_gauss, order) {
  if (degree < 0 || degree > dimension)
    throw std::invalid_argument("TensorBasis: degree out of range");
  // components mirror the cell groups: subsets in lexicographic order
  std::vector<int> pick(k_);
  Index offset = 0;
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k_) {
      Component c;
      c.axes = pick;
      c.len = {1, 1, 1};
      c.size = 1;
      for (int a = 0; a < n_; ++a) {
        const bool extent = std::find(pick.begin(), pick.end(), a) != pick.end();
        c.len[a] = extent ? edg_.size() : lag_.size();
        c.size *= c.len[a];
      }
      c.offset = offset;
      offset += c.size;
      comps_.push_back(std::move(c));
      return;
    }
    for (int a = start; a < n_; ++a) {
      pick[depth] = a;
      rec(a + 1, depth + 1);
    }
  };
  rec(0, 0);

  if (side_ == Side::primal || points_ == DualPointFamily::extended_gauss) {
    std::vector<Axis> axes(n_);
    for (int a = 0; a < n_; ++a) {
      axes[a].cells = edg_.size();
      axes[a].nodes = edg_.nodes().nodes;
    }
    grid_ = std::make_shared<const CellComplex>(CellComplex::from_axes(std::move(axes)));
  }
}

Index TensorBasis::dof_count() const {
  Index t = 0;
  for (const auto& c : comps_) t += c.size;
  return t;
}

double TensorBasis::eval(int c, Index local, const Eigen::Vector3d& xi) const {
  const Component& comp = comps_[c];
  std::array<int, 3> mi{};
  Index rem = local;
  for (int a = n_ - 1; a >= 0; --a) {
    mi[a] = static_cast<int>(rem % comp.len[a]);
    rem /= comp.len[a];
  }
  double v = 1.0;
  for (int a = 0; a < n_; ++a) {
    const bool extent = std::find(comp.axes.begin(), comp.axes.end(), a) != comp.axes.end();
    v *= extent ? edg_.eval(mi[a], xi[a]) : lag_.eval(mi[a], xi[a]);
  }
  return v;
}

double TensorBasis::eval_field(int c, const Eigen::VectorXd& coeff,
                               const Eigen::Vector3d& xi) const {
  const Component& comp = comps_[c];
  // cache the 1D factor values, then contract
  std::array<std::vector<double>, 3> vals;
  for (int a = 0; a < n_; ++a) {
    const bool extent = std::find(comp.axes.begin(), comp.axes.end(), a) != comp.axes.end();
    vals[a].resize(comp.len[a]);
    for (int i = 0; i < comp.len[a]; ++i)
      vals[a][i] = extent ? edg_.eval(i, xi[a]) : lag_.eval(i, xi[a]);
  }
  double acc = 0.0;
  std::array<int, 3> mi{};
  for (Index local = 0; local < comp.size; ++local) {
    Index rem = local;
    for (int a = n_ - 1; a >= 0; --a) {
      mi[a] = static_cast<int>(rem % comp.len[a]);
      rem /= comp.len[a];
    }
    double v = coeff[comp.offset + local];
    if (v == 0.0) continue;
    for (int a = 0; a < n_; ++a) v *= vals[a][mi[a]];
    acc += v;
  }
  return acc;
}

bool TensorBasis::has_grid_complex() const { return grid_ != nullptr; }

const CellComplex& TensorBasis::grid_complex() const {
  if (!grid_)
    throw std::logic_error("grid_complex: interior-Gauss dual basis has no grid complex");
  return *grid_;
}

TensorBasis TensorBasis::with_degree(int degree) const {
  return TensorBasis(n_, degree, side_, order_, points_);
}

}  // namespace msem
