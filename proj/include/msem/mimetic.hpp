#ifndef MSEM_MIMETIC_HPP
#define MSEM_MIMETIC_HPP

#include <memory>
#include <optional>

#include "msem/basis.hpp"
#include "msem/forms.hpp"
#include "msem/topology.hpp"

namespace msem {

// Geometric support of the degrees of freedom: per axis, the 1-cell intervals
// and the 0-cell positions. For a plain grid complex the points are the
// segment endpoints; the staggered dual grids decouple the two.
struct AxisSupport {
  std::vector<std::array<double, 2>> segments;
  std::vector<double> points;
};

struct SupportGrid {
  std::vector<AxisSupport> axes;
};

SupportGrid support_of(const CellComplex& c);
SupportGrid support_of(const TensorBasis& b);

// Number of Gauss points per direction used by reduction; the default is the
// basis order + 2, which integrates products of the degree-N families exactly.
struct Quadrature {
  int points;
};
Quadrature default_quadrature(int order);

// De Rham map: integrate the k-form over every k-cell of the support
// (point evaluation on 0-cells). Layout matches the cell/dof numbering.
// Parallel over cells; reduce_serial is the reference implementation.
Eigen::VectorXd reduce_on_support(const AnalyticForm& form, const SupportGrid& grid,
                                  Quadrature quad);
Eigen::VectorXd reduce_on_support_serial(const AnalyticForm& form, const SupportGrid& grid,
                                         Quadrature quad);

Cochain reduce(const AnalyticForm& form, const CellComplex& complex, Quadrature quad);

// integral of a k-form over one explicit tensor cell: per axis either an
// interval (extent) or a pinned coordinate
struct TensorCell {
  struct Factor {
    bool extent;
    double lo, hi;  // hi unused for points
  };
  std::vector<Factor> factors;
};
double reduce_on_cell(const AnalyticForm& form, const TensorCell& cell, Quadrature quad);

// A k-cochain together with the basis that reconstructs it.
struct DiscreteForm {
  std::shared_ptr<const TensorBasis> basis;
  Eigen::VectorXd coefficients;

  int dimension() const { return basis->dimension(); }
  int degree() const { return basis->degree(); }
  // Whitney map: component values at a reference point
  Eigen::VectorXd eval(const Eigen::Vector3d& xi) const;
};

DiscreteForm make_discrete(std::shared_ptr<const TensorBasis> basis, Eigen::VectorXd coeff);

// view a reconstructed discrete form as an analytic form (no derivative)
AnalyticForm from_discrete(const DiscreteForm& df);

// pi = I o R on the given basis
DiscreteForm project(const AnalyticForm& form, std::shared_ptr<const TensorBasis> basis,
                     std::optional<Quadrature> quad = {});

// pi_M: same form, new basis
DiscreteForm rebase(const DiscreteForm& df, std::shared_ptr<const TensorBasis> target,
                    std::optional<Quadrature> quad = {});

// Coprojections (-1)^{k(n-k)} star pi~ star. `target` is the basis the result
// is expressed in; the intermediate projection runs on the opposite side.
DiscreteForm coproject(const AnalyticForm& form, std::shared_ptr<const TensorBasis> target,
                       const MetricField& metric, std::optional<Quadrature> quad = {});

}  // namespace msem

#endif
