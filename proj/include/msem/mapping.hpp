#ifndef MSEM_MAPPING_HPP
#define MSEM_MAPPING_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "msem/forms.hpp"

namespace msem {

// Coordinate map Phi from the reference domain with its analytic Jacobian
// J(i,k) = dPhi^i / dxi^k. The inverse is optional.
struct Mapping {
  int dimension = 0;
  std::function<Eigen::Vector3d(const Eigen::Vector3d&)> map;
  std::function<Eigen::Matrix3d(const Eigen::Vector3d&)> jacobian;
  std::function<Eigen::Vector3d(const Eigen::Vector3d&)> inverse;  // may be empty

  bool has_inverse() const { return static_cast<bool>(inverse); }
  // det of the n x n Jacobian block
  double jacobian_det(const Eigen::Vector3d& xi) const;
};

Mapping identity_map(int n);
// x = A xi + b
Mapping affine_map(const Eigen::Matrix3d& a, const Eigen::Vector3d& b, int n);
// reference square to the annulus r in [r_inner, r_outer], theta in [0, 2 pi)
Mapping annulus_map(double r_inner, double r_outer);
// reference square to the (r, theta) rectangle of the same annulus
Mapping annulus_polar_rectangle(double r_inner, double r_outer);
// curvilinear quadrilateral: x = xi + c sin(pi xi) sin(pi eta), same for y
Mapping perturbed_quad_map(double c);

Mapping map_by_name(const std::string& name, double p0 = 1.0, double p1 = 2.0);

// Phi^star: componentwise Jacobian-minor contraction
AnalyticForm pullback(const AnalyticForm& form, const Mapping& map);

// pulled-back Euclidean metric g = J^T J
MetricField pulled_back_metric(const Mapping& map);

// max over the sample points of |Phi^star(d a) - d_manual| where d_manual is
// the hand-differentiated pullback supplied as the oracle
double pullback_commutes_d_check(const AnalyticForm& form_with_derivative, const Mapping& map,
                                 const AnalyticForm& manual_pullback_derivative,
                                 const std::vector<Eigen::Vector3d>& samples);

// det J > 0 on a uniform sample grid
bool orientation_preserving(const Mapping& map, int samples_per_axis = 7);

}  // namespace msem

#endif
