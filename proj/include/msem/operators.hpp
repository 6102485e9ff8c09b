#ifndef MSEM_OPERATORS_HPP
#define MSEM_OPERATORS_HPP

#include "msem/mimetic.hpp"

namespace msem {

// d on the coefficients: the transposed incidence matrix of the basis grid,
// metric-free. For the interior-Gauss dual family the form is first rebased
// onto the extended-Gauss grid.
DiscreteForm exterior_derivative(const DiscreteForm& df);

// star: re-expression of the pointwise Hodge of the reconstruction on the
// opposite-side basis of degree n-k
DiscreteForm hodge_star(const DiscreteForm& df, const MetricField& metric,
                        std::optional<Quadrature> quad = {});

// (D*)(j,i) = -sum_{k<=i} l_k''(xi_j): the 1D codifferential matrix taking
// edge coefficients (N) to nodal coefficients (N+1)
Eigen::MatrixXd codifferential_matrix(int order);

// delta* = (-1)^{n(k+1)+1} star d star
DiscreteForm codifferential(const DiscreteForm& df, const MetricField& metric,
                            std::optional<Quadrature> quad = {});

// a ^_h b = pi(I a ^ I b), projected onto the basis of a's side
DiscreteForm wedge_h(const DiscreteForm& a, const DiscreteForm& b,
                     std::optional<Quadrature> quad = {});

// delta* d + d delta*, assembled from the operators above
DiscreteForm laplace_de_rham(const DiscreteForm& df, const MetricField& metric,
                             std::optional<Quadrature> quad = {});

// (M^k)_ij = integral <basis_i, basis_j> omega over the reference domain
Eigen::MatrixXd mass_matrix(const TensorBasis& basis, const MetricField& metric,
                            std::optional<Quadrature> quad = {});
double inner(const DiscreteForm& a, const DiscreteForm& b, const MetricField& metric,
             std::optional<Quadrature> quad = {});

// integral of an n-form discrete form over the reference domain
double integrate(const DiscreteForm& df, std::optional<Quadrature> quad = {});
double integrate(const AnalyticForm& form, std::optional<Quadrature> quad = {});

// --- traces of discrete forms -------------------------------------------------

// Tangential trace: components not involving `axis`, restricted to the facet,
// times the facet orientation sign. Degree k form on the (n-1)-dim facet.
DiscreteForm trace_tangential(const DiscreteForm& df, int axis, bool high);

// Normal trace: components involving `axis`, edge factor evaluated at the end
// point. Degree k-1 form on the facet. In 1D the result is the single signed
// boundary value, returned through `trace_value`.
DiscreteForm trace_normal(const DiscreteForm& df, int axis, bool high);
double trace_value(const DiscreteForm& df, bool high);  // 1D forms

}  // namespace msem

#endif
