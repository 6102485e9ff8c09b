#ifndef MSEM_FORMS_HPP
#define MSEM_FORMS_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace msem {

using ScalarField = std::function<double(const Eigen::Vector3d&)>;

// canonical k-form components: axis subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> form_components(int n, int k);
int component_index(int n, int k, const std::vector<int>& axes);
int binomial(int n, int k);

// sign of the permutation taking the concatenation (a, b) to sorted order;
// 0 if a and b intersect
int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b);

// A k-form given by component functions of the reference coordinates, in
// canonical component order, with an optional analytic exterior derivative.
struct AnalyticForm {
  int dimension = 0;
  int degree = 0;
  std::vector<ScalarField> components;
  std::vector<ScalarField> derivative;  // components of d a; empty if not supplied

  bool has_derivative() const { return !derivative.empty(); }
  Eigen::VectorXd eval(const Eigen::Vector3d& x) const;
  AnalyticForm exterior_derivative() const;

  static AnalyticForm zero_form(int n, ScalarField f, std::vector<ScalarField> gradient = {});
  // terms given as (index sequence, coefficient); sequences are canonicalized
  // with the permutation sign, so {1,0} contributes -1 times the {0,1} slot
  static AnalyticForm from_terms(int n, int k,
                                 const std::vector<std::pair<std::vector<int>, ScalarField>>& terms);
  static AnalyticForm constant(int n, int k, const Eigen::VectorXd& component_values);
};

// wedge of pointwise component vectors
Eigen::VectorXd wedge_components(int n, int k, int l, const Eigen::VectorXd& a,
                                 const Eigen::VectorXd& b);
AnalyticForm wedge(const AnalyticForm& a, const AnalyticForm& b);

// Pointwise metric data on the reference domain.
struct MetricField {
  int dimension = 0;
  std::function<Eigen::Matrix3d(const Eigen::Vector3d&)> tensor;  // g_ij
  Eigen::Matrix3d inverse(const Eigen::Vector3d& x) const;
  double sqrt_det(const Eigen::Vector3d& x) const;
};

MetricField identity_metric(int n);

// matrix of the pointwise Hodge star in the canonical component bases:
// (star b)_{components of degree n-k} = H * b_{components of degree k}
Eigen::MatrixXd hodge_component_matrix(const MetricField& g, const Eigen::Vector3d& x, int k);

// star of a whole form (lazy component functions)
AnalyticForm hodge(const AnalyticForm& a, const MetricField& g);

// <a,b> at a point: sum of inverse-metric Gram determinants
double inner_components(const MetricField& g, const Eigen::Vector3d& x, int k,
                        const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace msem

#endif
