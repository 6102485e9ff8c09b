#ifndef MSEM_BASIS_HPP
#define MSEM_BASIS_HPP

#include <Eigen/Dense>
#include <array>
#include <memory>
#include <vector>

#include "msem/nodes.hpp"
#include "msem/topology.hpp"

namespace msem {

enum class Family1D {
  lagrange_gll,
  edge_gll,
  lagrange_gauss,
  lagrange_extended_gauss,
  edge_extended_gauss,
};

// 1D cardinal family on one of the node sets. Lagrange functions interpolate
// node values; edge functions are the 1-form proxies eps_i = -sum_{k<=i} l_k'
// whose integral over the i-th segment is 1.
class Basis1D {
 public:
  Basis1D(Family1D family, int order);

  Family1D family() const { return family_; }
  int order() const { return order_; }
  const NodeSet& nodes() const { return nodes_; }
  bool is_edge() const;
  int size() const;

  // basis function i at xi (Lagrange value or edge proxy)
  double eval(int i, double xi) const;
  // l_i value / first / second derivative (Lagrange families only)
  double lagrange_eval(int i, double xi) const;
  double lagrange_deriv(int i, double xi, int deriv_order) const;
  // eps_i proxy of the edge family on the same node set
  double edge_eval(int i, double xi) const;

  // D1(m,j) = l_j'(xi_m); D2 = D1*D1 gives l_j'' at the nodes
  const Eigen::MatrixXd& diff_matrix() const { return d1_; }
  const Eigen::MatrixXd& diff2_matrix() const { return d2_; }

 private:
  Family1D family_;
  int order_;
  NodeSet nodes_;
  std::vector<double> bary_;  // barycentric weights
  Eigen::MatrixXd d1_, d2_;

  double lagrange_at(int i, double xi) const;
};

enum class Side { primal, dual };
enum class DualPointFamily { gauss, extended_gauss };

// Tensor-product basis for the k-form component fields. Component c spans the
// axis subset S_c (canonical lexicographic order); its factors are edge
// functions along S_c and Lagrange functions elsewhere. Dof enumeration is
// C-order inside a component, components concatenated, which matches the cell
// numbering of the grid complexes.
class TensorBasis {
 public:
  struct Component {
    std::vector<int> axes;  // extent subset S
    std::array<int, 3> len{};
    Index size = 0;
    Index offset = 0;
  };

  TensorBasis(int dimension, int degree, Side side, int order,
              DualPointFamily points = DualPointFamily::extended_gauss);

  int dimension() const { return n_; }
  int degree() const { return k_; }
  Side side() const { return side_; }
  int order() const { return order_; }
  DualPointFamily point_family() const { return points_; }

  const Basis1D& lagrange() const { return lag_; }
  const Basis1D& edge() const { return edg_; }

  int component_count() const { return static_cast<int>(comps_.size()); }
  const Component& component(int c) const { return comps_[c]; }
  Index dof_count() const;

  // value of basis function `local` of component c at a reference point
  double eval(int c, Index local, const Eigen::Vector3d& xi) const;
  // field value of component c for a coefficient vector
  double eval_field(int c, const Eigen::VectorXd& coeff, const Eigen::Vector3d& xi) const;

  // Grid complex whose k-cells carry the dofs (GLL grid for the primal side,
  // extended-Gauss grid for the dual). Unavailable for the interior-Gauss
  // point family.
  const CellComplex& grid_complex() const;
  bool has_grid_complex() const;

  // a peer basis on the same grid with a different form degree
  TensorBasis with_degree(int degree) const;

 private:
  int n_, k_, order_;
  Side side_;
  DualPointFamily points_;
  Basis1D lag_, edg_;
  std::vector<Component> comps_;
  std::shared_ptr<const CellComplex> grid_;
};

}  // namespace msem

#endif
