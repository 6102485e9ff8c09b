#ifndef MSEM_TESTS_HELPERS_HPP
#define MSEM_TESTS_HELPERS_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <random>

#include "msem/topology.hpp"

namespace msem::testing {

inline Eigen::MatrixXi dense(const Eigen::SparseMatrix<int>& m) {
  return Eigen::MatrixXi(m);
}

inline Chain random_chain(const CellComplex& c, int degree, std::mt19937& rng, int lo = -3,
                          int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Chain ch = make_chain(c, degree);
  for (Eigen::Index i = 0; i < ch.coefficients.size(); ++i) ch.coefficients[i] = d(rng);
  return ch;
}

inline Cochain random_int_cochain(const CellComplex& c, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  Cochain co = make_cochain(c, degree);
  for (Eigen::Index i = 0; i < co.coefficients.size(); ++i) co.coefficients[i] = d(rng);
  return co;
}

inline Cochain random_cochain(const CellComplex& c, int degree, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Cochain co = make_cochain(c, degree);
  for (Eigen::Index i = 0; i < co.coefficients.size(); ++i) co.coefficients[i] = d(rng);
  return co;
}

}  // namespace msem::testing

#endif
