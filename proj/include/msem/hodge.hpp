#ifndef MSEM_HODGE_HPP
#define MSEM_HODGE_HPP

#include <optional>

#include "msem/mimetic.hpp"
#include "msem/topology.hpp"

namespace msem {

// alpha = <R a, h_(k)> / <h^(k), h_(k)>
double harmonic_amplitude(const Cochain& reduced, const Chain& harmonic_chain,
                          const Cochain& harmonic_cochain);

// Coefficient-level Hodge split: input = exact + harmonic + remainder, with
// d(harmonic) = 0 and the exact part a coboundary of the least-squares
// potential. The remainder carries the coexact/complement content.
struct CochainSplit {
  Cochain exact;
  Cochain harmonic;
  Cochain remainder;
  Eigen::VectorXd amplitudes;       // one per harmonic pair
  Eigen::VectorXd potential;        // (k-1)-cochain generating the exact part
  double harmonic_pairing_residual; // max |<remainder+exact, h_j>|
};

// The exact-part potential solves an unweighted least-squares problem by
// default; pass a (SPD) weight matrix for the M-weighted variant.
CochainSplit decompose(const Cochain& cochain, const HomologyInfo& homology,
                       const Eigen::MatrixXd* weight = nullptr);

// Discrete-form wrapper: the three parts share the input basis.
struct HodgeSplit {
  DiscreteForm exact_part;
  DiscreteForm harmonic_part;
  DiscreteForm coexact_or_complement_part;
  Eigen::VectorXd amplitudes;
};

HodgeSplit decompose(const DiscreteForm& df);

// Minimum-norm solution of E^{(k+1,k)} a = f for f in the coboundary range.
// Throws when the relative residual exceeds `tolerance`.
Cochain solve_coboundary(const Cochain& f, double tolerance = 1e-8);

}  // namespace msem

#endif
