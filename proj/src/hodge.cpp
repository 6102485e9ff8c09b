#include "msem/hodge.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace msem {

double harmonic_amplitude(const Cochain& reduced, const Chain& harmonic_chain,
                          const Cochain& harmonic_cochain) {
  const double denom = pairing(harmonic_cochain, harmonic_chain);
  if (denom == 0.0) throw std::invalid_argument("harmonic_amplitude: degenerate pair");
  return pairing(reduced, harmonic_chain) / denom;
}

namespace {

// shared core; e_down is the coboundary matrix from degree k-1 into k (may be
// empty for k = 0), weight an optional SPD matrix for the M-weighted
// least-squares potential
void split_coefficients(const Eigen::VectorXd& c, const Eigen::MatrixXd& e_down,
                        const std::vector<Eigen::VectorXd>& harmonic, Eigen::VectorXd& exact,
                        Eigen::VectorXd& harm, Eigen::VectorXd& rest, Eigen::VectorXd& alpha,
                        Eigen::VectorXd& potential, const Eigen::MatrixXd* weight = nullptr) {
  const Eigen::Index nh = static_cast<Eigen::Index>(harmonic.size());
  alpha.resize(nh);
  harm = Eigen::VectorXd::Zero(c.size());
  if (nh > 0) {
    // G alpha = p handles non-orthogonal harmonic bases
    Eigen::MatrixXd gram(nh, nh);
    Eigen::VectorXd p(nh);
    for (Eigen::Index j = 0; j < nh; ++j) {
      p[j] = c.dot(harmonic[j]);
      for (Eigen::Index l = 0; l < nh; ++l) gram(j, l) = harmonic[l].dot(harmonic[j]);
    }
    alpha = gram.colPivHouseholderQr().solve(p);
    for (Eigen::Index j = 0; j < nh; ++j) harm += alpha[j] * harmonic[j];
  }
  if (e_down.size() > 0) {
    if (weight) {
      // normal equations of the M-weighted problem
      const Eigen::MatrixXd a = e_down.transpose() * (*weight) * e_down;
      const Eigen::VectorXd b = e_down.transpose() * (*weight) * (c - harm);
      potential = a.completeOrthogonalDecomposition().solve(b);
    } else {
      potential = e_down.completeOrthogonalDecomposition().solve(c - harm);
    }
    exact = e_down * potential;
  } else {
    potential.resize(0);
    exact = Eigen::VectorXd::Zero(c.size());
  }
  rest = c - exact - harm;
}

}  // namespace

CochainSplit decompose(const Cochain& cochain, const HomologyInfo& homology,
                       const Eigen::MatrixXd* weight) {
  const CellComplex& cx = *cochain.complex;
  const int k = cochain.degree;
  if (homology.degree != k) throw std::invalid_argument("decompose: homology degree mismatch");

  Eigen::MatrixXd e_down;
  if (k >= 1) e_down = cx.incidence(k).cast<double>().transpose().eval();

  CochainSplit s;
  s.exact = make_cochain(cx, k);
  s.harmonic = make_cochain(cx, k);
  s.remainder = make_cochain(cx, k);
  split_coefficients(cochain.coefficients, e_down, homology.harmonic, s.exact.coefficients,
                     s.harmonic.coefficients, s.remainder.coefficients, s.amplitudes,
                     s.potential, weight);
  s.harmonic_pairing_residual = 0.0;
  for (const auto& h : homology.harmonic) {
    const double r = (s.exact.coefficients + s.remainder.coefficients).dot(h);
    s.harmonic_pairing_residual = std::max(s.harmonic_pairing_residual, std::abs(r));
  }
  return s;
}

HodgeSplit decompose(const DiscreteForm& df) {
  const CellComplex& grid = df.basis->grid_complex();
  const int k = df.degree();
  HomologyInfo hom = homology(grid, k);

  Eigen::MatrixXd e_down;
  if (k >= 1) e_down = grid.incidence(k).cast<double>().transpose().eval();

  HodgeSplit s;
  Eigen::VectorXd exact, harm, rest, alpha, potential;
  split_coefficients(df.coefficients, e_down, hom.harmonic, exact, harm, rest, alpha, potential);
  s.exact_part = make_discrete(df.basis, std::move(exact));
  s.harmonic_part = make_discrete(df.basis, std::move(harm));
  s.coexact_or_complement_part = make_discrete(df.basis, std::move(rest));
  s.amplitudes = std::move(alpha);
  return s;
}

Cochain solve_coboundary(const Cochain& f, double tolerance) {
  const CellComplex& cx = *f.complex;
  const int k1 = f.degree;
  if (k1 < 1) throw std::invalid_argument("solve_coboundary: data degree must be >= 1");
  const Eigen::MatrixXd e_up = cx.incidence(k1).cast<double>().transpose().eval();
  // minimum-norm least squares; the solution is orthogonal to null(E)
  Eigen::VectorXd a = e_up.completeOrthogonalDecomposition().solve(f.coefficients);
  const double fnorm = f.coefficients.norm();
  const double res = (e_up * a - f.coefficients).norm();
  if (res > tolerance * std::max(1.0, fnorm))
    throw std::runtime_error("solve_coboundary: data is not a coboundary (residual " +
                             std::to_string(res) + ")");
  Cochain out = make_cochain(cx, k1 - 1);
  out.coefficients = std::move(a);
  return out;
}

}  // namespace msem
