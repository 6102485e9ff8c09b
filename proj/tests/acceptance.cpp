// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in the checks themselves.

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "forms_testlib.hpp"
#include "helpers.hpp"
#include "msem/convergence.hpp"
#include "msem/hodge.hpp"
#include "msem/mapping.hpp"
#include "msem/operators.hpp"
#include "msem/potential_flow.hpp"

using namespace msem;
using namespace msem::testing;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %-34s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Eigen::MatrixXi grid2x2_e01() {
  Eigen::MatrixXi e(9, 12);
  e << -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0,  //
      0, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0,   //
      0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0,    //
      1, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0,   //
      0, 1, 0, 0, -1, 0, 0, 0, 1, -1, 0, 0,   //
      0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0,    //
      0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0,    //
      0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, -1,    //
      0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  return e;
}

Eigen::MatrixXi grid2x2_e12() {
  Eigen::MatrixXi e(12, 4);
  e << 1, 0, 0, 0,  //
      -1, 1, 0, 0,  //
      0, -1, 0, 0,  //
      0, 0, 1, 0,   //
      0, 0, -1, 1,  //
      0, 0, 0, -1,  //
      -1, 0, 0, 0,  //
      0, -1, 0, 0,  //
      1, 0, -1, 0,  //
      0, 1, 0, -1,  //
      0, 0, 1, 0,   //
      0, 0, 0, 1;
  return e;
}

// 1: golden incidence matrices of the 2x2 grid, and E01 E12 = 0 exactly
void criterion_incidence() {
  const CellComplex c = CellComplex::build(2, {2, 2});
  const Eigen::MatrixXi e01 = Eigen::MatrixXi(c.incidence(1));
  const Eigen::MatrixXi e12 = Eigen::MatrixXi(c.incidence(2));
  const bool match = (e01 == grid2x2_e01()) && (e12 == grid2x2_e12());
  const bool nil = (e01 * e12).isZero();
  report(1, "incidence golden matrices", match && nil,
         match ? "entrywise match, E01*E12 = 0" : "matrix mismatch");
}

// 2: hole-complex homology: Betti 1 and the golden harmonic chain
void criterion_homology() {
  const HoleComplex h = hole_complex();
  const HomologyInfo info = homology_from_incidence(Eigen::MatrixXi(h.e01).cast<double>(),
                                                    Eigen::MatrixXi(h.e12).cast<double>());
  Eigen::VectorXd expect(12);
  expect << 1, -1, 0, 0, 1, 1, -1, 1, -1, 0, 0, -1;
  const bool pass =
      info.betti == 1 && info.integral && (info.harmonic[0] - expect).lpNorm<Eigen::Infinity>() == 0.0;
  report(2, "hole-complex harmonic chain", pass,
         "betti=" + std::to_string(info.betti) + (info.integral ? ", integral basis" : ""));
}

// 3: R(x^3 dx) on {-1,0,1} is (-1/4, 1/4) and differs from the Galerkin fit
void criterion_reduction() {
  const AnalyticForm a = AnalyticForm::from_terms(
      1, 1, {{{0}, [](const Eigen::Vector3d& x) { return x[0] * x[0] * x[0]; }}});
  auto b = std::make_shared<TensorBasis>(1, 1, Side::primal, 2);
  const DiscreteForm p = project(a, b);
  const double e_red = std::max(std::abs(p.coefficients[0] + 0.25),
                                std::abs(p.coefficients[1] - 0.25));
  // Galerkin oracle via the edge mass matrix
  const Eigen::MatrixXd m = mass_matrix(*b, identity_metric(1));
  const NodeSet q = nodeset(NodeKind::gauss, 6);
  Eigen::VectorXd rhs(2);
  for (int i = 0; i < 2; ++i)
    rhs[i] = gauss_integrate(q, -1.0, 1.0,
                             [&](double x) { return x * x * x * b->edge().eval(i, x); });
  const Eigen::VectorXd gal = m.ldlt().solve(rhs);
  const double e_gal = std::max(std::abs(gal[0] + 0.3), std::abs(gal[1] - 0.3));
  const bool pass = e_red < 1e-13 && e_gal < 1e-12 && std::abs(gal[0] - p.coefficients[0]) > 0.01;
  report(3, "reduction vs Galerkin", pass,
         "R err " + fmt(e_red) + ", Galerkin (-3/10,3/10) err " + fmt(e_gal));
}

// 4: potential flow: alpha = Gamma/4 and <Rv,h> = 2 Gamma to 1e-8 relative
void criterion_potential_flow() {
  const CellComplex annulus = annulus_complex(1, 4, 1.0, 2.0);
  const HomologyInfo hom = homology(annulus, 1);
  double worst = 0.0;
  bool pass = hom.betti == 1;
  for (double gamma : {0.0, 1.0, 4.0, 10.0}) {
    const Cochain rv = reduce(potential_flow_velocity(gamma), annulus, Quadrature{12});
    const double pairv = pairing(rv, hom.harmonic_chains[0]);
    const double alpha = harmonic_amplitude(rv, hom.harmonic_chains[0], hom.harmonic_cochains[0]);
    const double scale = std::max(1.0, std::abs(gamma));
    const double err =
        std::max(std::abs(pairv - 2.0 * gamma), std::abs(alpha - gamma / 4.0) * 4.0) / scale;
    worst = std::max(worst, err);
    pass = pass && err < 1e-8;
  }
  report(4, "potential-flow decomposition", pass, "worst relative error " + fmt(worst));
}

// 5: oriented tensor reduction over [-1,1] x [0,1] x {5}
void criterion_tensor_reduction() {
  const AnalyticForm dxdy =
      AnalyticForm::from_terms(3, 2, {{{0, 1}, [](const Eigen::Vector3d&) { return 1.0; }}});
  const AnalyticForm dydx =
      AnalyticForm::from_terms(3, 2, {{{1, 0}, [](const Eigen::Vector3d&) { return 1.0; }}});
  TensorCell cell;
  cell.factors = {{true, -1.0, 1.0}, {true, 0.0, 1.0}, {false, 5.0, 0.0}};
  const double plus = reduce_on_cell(dxdy, cell, Quadrature{4});
  const double minus = reduce_on_cell(dydx, cell, Quadrature{4});
  const bool pass = std::abs(plus - 2.0) < 1e-14 && std::abs(minus + 2.0) < 1e-14;
  report(5, "tensor reduction orientation", pass,
         "R(dx^dy)=" + fmt(plus) + ", R(dy^dx)=" + fmt(minus));
}

// 6: commuting diagrams on 50+ random smooth inputs, N in 2..8, n in {1,2}
void criterion_commuting() {
  std::mt19937 rng(2024);
  double e_rd = 0.0, e_dpi = 0.0, e_ri = 0.0, e_pipi = 0.0;
  int inputs = 0;
  for (int n : {1, 2}) {
    for (int order = 2; order <= 8; ++order) {
      for (int rep = 0; rep < 4; ++rep) {
        ++inputs;
        const Quadrature q{order + 4};
        std::uniform_int_distribution<int> kd(0, n - 1);
        const int k = kd(rng);
        auto b = std::make_shared<TensorBasis>(n, k, Side::primal, order);
        const CellComplex& grid = b->grid_complex();
        const AnalyticForm a = random_smooth_form(n, k, rng);

        const Cochain ra = reduce(a, grid, q);
        const Cochain rda = reduce(a.exterior_derivative(), grid, q);
        const Eigen::VectorXd delta_ra =
            grid.incidence(k + 1).cast<double>().transpose() * ra.coefficients;
        e_rd = std::max(e_rd, (rda.coefficients - delta_ra).lpNorm<Eigen::Infinity>());

        // d pi a vs pi d a on the coefficients
        auto b1 = std::make_shared<TensorBasis>(n, k + 1, Side::primal, order);
        const DiscreteForm dpa = exterior_derivative(make_discrete(b, ra.coefficients));
        const DiscreteForm pda = project(a.exterior_derivative(), b1, q);
        e_dpi = std::max(e_dpi,
                         (dpa.coefficients - pda.coefficients).lpNorm<Eigen::Infinity>());

        // R I = Id and pi pi = pi
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::uniform_int_distribution<int> kd2(0, n);
        const int k2 = kd2(rng);
        auto b2 = std::make_shared<TensorBasis>(n, k2, Side::primal, order);
        Eigen::VectorXd coef(b2->dof_count());
        for (Index i = 0; i < coef.size(); ++i) coef[i] = u(rng);
        const DiscreteForm df = make_discrete(b2, coef);
        const Eigen::VectorXd ri = reduce_on_support(from_discrete(df), support_of(*b2), q);
        e_ri = std::max(e_ri, (ri - coef).lpNorm<Eigen::Infinity>());
        const DiscreteForm pa = project(a, b, q);
        const DiscreteForm ppa = project(from_discrete(pa), b, q);
        e_pipi = std::max(e_pipi,
                          (ppa.coefficients - pa.coefficients).lpNorm<Eigen::Infinity>());
      }
    }
  }
  const bool pass = e_rd < 1e-9 && e_dpi < 1e-9 && e_ri < 1e-12 && e_pipi < 1e-12;
  report(6, "commuting diagrams", pass,
         std::to_string(inputs) + " inputs; Rd-dR " + fmt(e_rd) + ", dpi-pid " + fmt(e_dpi) +
             ", RI-Id " + fmt(e_ri) + ", pipi-pi " + fmt(e_pipi));
}

// 7: nilpotency, integer-exact for the topological operators
void criterion_nilpotency() {
  std::mt19937 rng(7);
  bool exact = true;
  std::vector<CellComplex> cs;
  for (int order = 2; order <= 6; ++order) {
    cs.push_back(CellComplex::build(1, {order}));
    cs.push_back(CellComplex::build(2, {order, order}));
    cs.push_back(CellComplex::build(2, {order, order}, {false, true}));
  }
  cs.push_back(CellComplex::build(3, {4, 3, 2}));
  cs.push_back(CellComplex::build(3, {2, 2, 2}, {true, true, true}));
  for (const CellComplex& c : cs) {
    const int n = c.dimension();
    for (int k = 2; k <= n; ++k)
      for (int rep = 0; rep < 3; ++rep)
        exact = exact && boundary(boundary(random_chain(c, k, rng))).coefficients.isZero();
    for (int k = 0; k + 2 <= n; ++k)
      for (int rep = 0; rep < 3; ++rep)
        exact = exact &&
                coboundary(coboundary(random_int_cochain(c, k, rng))).coefficients.isZero(0.0);
  }
  // dd = 0 on discrete-form coefficients
  for (int order = 2; order <= 6; ++order) {
    auto b = std::make_shared<TensorBasis>(3, 0, Side::primal, order);
    std::uniform_int_distribution<int> ui(-9, 9);
    Eigen::VectorXd coef(b->dof_count());
    for (Index i = 0; i < coef.size(); ++i) coef[i] = ui(rng);
    exact = exact && exterior_derivative(exterior_derivative(make_discrete(b, coef)))
                         .coefficients.isZero(0.0);
  }
  // floating codifferential nilpotency in 2D
  const MetricField id2 = identity_metric(2);
  double e_cod = 0.0;
  for (int order : {2, 4}) {
    auto b = std::make_shared<TensorBasis>(2, 2, Side::primal, order);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXd coef(b->dof_count());
    for (Index i = 0; i < coef.size(); ++i) coef[i] = u(rng);
    const DiscreteForm dd = codifferential(codifferential(make_discrete(b, coef), id2), id2);
    e_cod = std::max(e_cod, dd.coefficients.lpNorm<Eigen::Infinity>());
  }
  const bool pass = exact && e_cod < 1e-9;
  report(7, "nilpotency suite", pass,
         std::string(exact ? "integer chain ops exact" : "INEXACT") + ", delta*delta* " +
             fmt(e_cod));
}

// 8: h-convergence orders for p = 1,2,3
void criterion_convergence() {
  bool pass = true;
  std::string detail;
  for (int p : {1, 2, 3}) {
    const auto r0 = h_refinement_1d(
        0, [](double x) { return std::sin(M_PI * x); },
        [](double x) { return M_PI * std::cos(M_PI * x); }, p, {4, 8, 16, 32});
    const auto o0 = observed_orders(r0);
    const auto r1 =
        h_refinement_1d(1, [](double x) { return std::sin(M_PI * x); }, {}, p, {4, 8, 16, 32});
    const auto o1 = observed_orders(r1);
    // the two rates over the last three levels
    for (std::size_t i = o0.size() - 2; i < o0.size(); ++i) {
      pass = pass && std::abs(o0[i] - (p + 1.0)) < 0.2;
      pass = pass && std::abs(o1[i] - double(p)) < 0.2;
    }
    detail += "p" + std::to_string(p) + ": " + fmt(o0.back()) + "/" + fmt(o1.back()) + " ";
  }
  report(8, "h-convergence orders", pass, detail);
}

// 9: codifferential route equivalence, independent of the dual grid
void criterion_codifferential() {
  const MetricField id1 = identity_metric(1);
  double worst = 0.0;
  for (int order = 2; order <= 6; ++order) {
    const Eigen::MatrixXd direct = codifferential_matrix(order);
    for (DualPointFamily pf : {DualPointFamily::gauss, DualPointFamily::extended_gauss}) {
      auto b = std::make_shared<TensorBasis>(1, 1, Side::primal, order, pf);
      Eigen::MatrixXd composed(order + 1, order);
      for (int i = 0; i < order; ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(order);
        e[i] = 1.0;
        composed.col(i) = codifferential(make_discrete(b, e), id1).coefficients;
      }
      worst = std::max(worst, (composed - direct).lpNorm<Eigen::Infinity>());
    }
  }
  report(9, "codifferential route equivalence", worst < 1e-10,
         "max |direct - star d star| " + fmt(worst) + " over both dual grids");
}

// 10: wedge and inner-product identities
void criterion_wedge_inner() {
  std::mt19937 rng(10);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double e_anti = 0.0, e_leib = 0.0, e_int = 0.0, e_sym = 0.0;
  bool spd = true;

  for (int n : {2, 3}) {
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l + k <= 2; ++l) {
        if (k + l > n) continue;
        auto ba = std::make_shared<TensorBasis>(n, k, Side::primal, 2);
        auto bb = std::make_shared<TensorBasis>(n, l, Side::primal, 2);
        Eigen::VectorXd ca(ba->dof_count()), cb(bb->dof_count());
        for (Index i = 0; i < ca.size(); ++i) ca[i] = u(rng);
        for (Index i = 0; i < cb.size(); ++i) cb[i] = u(rng);
        const DiscreteForm a = make_discrete(ba, ca);
        const DiscreteForm b = make_discrete(bb, cb);
        const double sgn = (k * l) % 2 == 0 ? 1.0 : -1.0;
        e_anti = std::max(e_anti, (wedge_h(a, b).coefficients -
                                   sgn * wedge_h(b, a).coefficients)
                                      .lpNorm<Eigen::Infinity>());
      }
  }
  {
    const int order = 3;
    auto b0 = std::make_shared<TensorBasis>(2, 0, Side::primal, order);
    auto b1 = std::make_shared<TensorBasis>(2, 1, Side::primal, order);
    Eigen::VectorXd c0(b0->dof_count()), c1(b1->dof_count());
    for (Index i = 0; i < c0.size(); ++i) c0[i] = u(rng);
    for (Index i = 0; i < c1.size(); ++i) c1[i] = u(rng);
    const DiscreteForm a = make_discrete(b0, c0);
    const DiscreteForm b = make_discrete(b1, c1);
    const DiscreteForm lhs = exterior_derivative(wedge_h(a, b));
    const Eigen::VectorXd rhs = wedge_h(exterior_derivative(a), b).coefficients +
                                wedge_h(a, exterior_derivative(b)).coefficients;
    e_leib = (lhs.coefficients - rhs).lpNorm<Eigen::Infinity>();

    // top-degree wedge integral
    Eigen::VectorXd d1(b1->dof_count());
    for (Index i = 0; i < d1.size(); ++i) d1[i] = u(rng);
    const DiscreteForm bb = make_discrete(b1, d1);
    e_int = std::abs(integrate(wedge_h(b, bb), Quadrature{order + 4}) -
                     integrate(wedge(from_discrete(b), from_discrete(bb)), Quadrature{order + 4}));
  }
  const MetricField id2 = identity_metric(2);
  for (int k = 0; k <= 2; ++k) {
    const TensorBasis b(2, k, Side::primal, 3);
    const Eigen::MatrixXd m = mass_matrix(b, id2);
    e_sym = std::max(e_sym, (m - m.transpose()).lpNorm<Eigen::Infinity>());
    Eigen::VectorXd x(m.rows());
    for (Index i = 0; i < x.size(); ++i) x[i] = u(rng);
    spd = spd && x.dot(m * x) > 0.0;
  }
  const bool pass = e_anti < 1e-12 && e_leib < 1e-9 && e_int < 1e-9 && e_sym < 1e-12 && spd;
  report(10, "wedge and inner identities", pass,
         "antisym " + fmt(e_anti) + ", Leibniz " + fmt(e_leib) + ", integral " + fmt(e_int) +
             ", mass asym " + fmt(e_sym));
}

// 11: pullback suite on the annulus
void criterion_pullback() {
  // (a) reduction commutes with the polar-rectangle pullback for the flow field
  const double r_out = 2.0;
  const Mapping polar = annulus_polar_rectangle(1.0, r_out);
  const AnalyticForm v = potential_flow_velocity(3.0);
  const AnalyticForm pv = pullback(v, polar);
  const CellComplex ref = CellComplex::build(2, {2, 4});
  std::vector<Axis> phys_axes(2);
  for (int ax = 0; ax < 2; ++ax) {
    phys_axes[ax].cells = ref.axis(ax).cells;
    for (int i = 0; i <= phys_axes[ax].cells; ++i) {
      Eigen::Vector3d corner = Eigen::Vector3d::Zero();
      corner[ax] = -1.0 + 2.0 * i / phys_axes[ax].cells;
      phys_axes[ax].nodes.push_back(polar.map(corner)[ax]);
    }
  }
  const CellComplex phys = CellComplex::from_axes(phys_axes);
  const Cochain ref_red = reduce(pv, ref, Quadrature{12});
  const Cochain phys_red = reduce(v, phys, Quadrature{12});
  const double e_comm = (ref_red.coefficients - phys_red.coefficients).lpNorm<Eigen::Infinity>();

  // (b) mapped edge functions reduce to Kronecker deltas through the real
  // annulus map
  const Mapping m = annulus_map(1.0, r_out);
  const int order = 3;
  const TensorBasis tb(2, 1, Side::primal, order);
  const CellComplex& grid = tb.grid_complex();
  double e_kron = 0.0;
  for (Index dof : {Index(0), Index(7), tb.component(1).offset + 3}) {
    const int comp = dof < tb.component(0).size ? 0 : 1;
    const Index local = dof - tb.component(comp).offset;
    AnalyticForm ebar;
    ebar.dimension = 2;
    ebar.degree = 1;
    for (int j = 0; j < 2; ++j) {
      ebar.components.push_back([&tb, &m, comp, local, j](const Eigen::Vector3d& x) {
        const Eigen::Vector3d xi = m.inverse(x);
        const Eigen::Matrix3d jinv = m.jacobian(xi).inverse();
        return tb.eval(comp, local, xi) * jinv(comp, j);
      });
    }
    const Cochain r = reduce(pullback(ebar, m), grid, Quadrature{order + 5});
    for (Index i = 0; i < r.coefficients.size(); ++i)
      e_kron = std::max(e_kron, std::abs(r.coefficients[i] - (i == dof ? 1.0 : 0.0)));
  }
  const bool pass = e_comm < 1e-8 && e_kron < 1e-10;
  report(11, "pullback suite", pass,
         "projection commutation " + fmt(e_comm) + ", mapped edge Kronecker " + fmt(e_kron));
}

}  // namespace

int main() {
  criterion_incidence();
  criterion_homology();
  criterion_reduction();
  criterion_potential_flow();
  criterion_tensor_reduction();
  criterion_commuting();
  criterion_nilpotency();
  criterion_convergence();
  criterion_codifferential();
  criterion_wedge_inner();
  criterion_pullback();
  std::printf("acceptance: %d/11 criteria passed\n", 11 - g_failures);
  return g_failures;
}
