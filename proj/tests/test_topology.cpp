#include <doctest.h>

#include <Eigen/QR>
#include <random>

#include "helpers.hpp"
#include "msem/topology.hpp"

using namespace msem;
using namespace msem::testing;

namespace {

// golden E_(0,1) and E_(1,2) of the 2x2-face grid
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

}  // namespace

TEST_CASE("1D line of two segments") {
  const CellComplex c = CellComplex::build(1, {2});
  CHECK(c.cell_count(0) == 3);
  CHECK(c.cell_count(1) == 2);
  Eigen::MatrixXi e01(3, 2);
  e01 << -1, 0, 1, -1, 0, 1;
  CHECK(dense(c.incidence(1)) == e01);
}

TEST_CASE("2x2 grid matches the golden incidence matrices") {
  const CellComplex c = CellComplex::build(2, {2, 2});
  REQUIRE(c.cell_count(0) == 9);
  REQUIRE(c.cell_count(1) == 12);
  REQUIRE(c.cell_count(2) == 4);
  CHECK(dense(c.incidence(1)) == grid2x2_e01());
  CHECK(dense(c.incidence(2)) == grid2x2_e12());
  CHECK((grid2x2_e01() * grid2x2_e12()).isZero());
}

TEST_CASE("boundary of the full 2-chain on the 2x2 grid") {
  const CellComplex c = CellComplex::build(2, {2, 2});
  Chain faces = make_chain(c, 2);
  faces.coefficients.setOnes();
  const Chain b = boundary(faces);
  // tau_1 + tau_4 + tau_11 + tau_12 - tau_6 - tau_3 - tau_8 - tau_7 (1-based)
  IntVector expect = IntVector::Zero(12);
  expect[0] = expect[3] = expect[10] = expect[11] = 1;
  expect[5] = expect[2] = expect[7] = expect[6] = -1;
  CHECK(b.coefficients == expect);
  CHECK(boundary(b).coefficients.isZero());
}

TEST_CASE("nilpotency and duality pairing on assorted complexes") {
  std::mt19937 rng(42);
  std::vector<CellComplex> cs;
  cs.push_back(CellComplex::build(1, {5}));
  cs.push_back(CellComplex::build(2, {3, 4}));
  cs.push_back(CellComplex::build(2, {4, 3}, {false, true}));
  cs.push_back(CellComplex::build(3, {2, 3, 2}));
  cs.push_back(CellComplex::build(3, {2, 2, 2}, {true, true, true}));
  for (const CellComplex& c : cs) {
    const int n = c.dimension();
    for (int k = 2; k <= n; ++k) {
      for (int rep = 0; rep < 4; ++rep) {
        const Chain ch = random_chain(c, k, rng);
        CHECK(boundary(boundary(ch)).coefficients.isZero());
      }
    }
    for (int k = 0; k + 2 <= n; ++k) {
      for (int rep = 0; rep < 4; ++rep) {
        const Cochain co = random_int_cochain(c, k, rng);
        CHECK(coboundary(coboundary(co)).coefficients.isZero());
      }
    }
    // <delta c, d> = <c, boundary d>, exact for integer data
    for (int k = 0; k + 1 <= n; ++k) {
      const Cochain co = random_int_cochain(c, k, rng);
      const Chain ch = random_chain(c, k + 1, rng);
      CHECK(pairing(coboundary(co), ch) == pairing(co, boundary(ch)));
    }
  }
}

TEST_CASE("pairing basics") {
  const CellComplex c = CellComplex::build(2, {2, 2});
  // canonical bases pair to the identity
  for (Index i = 0; i < c.cell_count(1); ++i) {
    Cochain co = make_cochain(c, 1);
    co.coefficients[i] = 1.0;
    for (Index j = 0; j < c.cell_count(1); ++j) {
      Chain ch = make_chain(c, 1);
      ch.coefficients[j] = 1;
      CHECK(pairing(co, ch) == (i == j ? 1.0 : 0.0));
    }
  }
  std::mt19937 rng(7);
  const Cochain co = random_cochain(c, 1, rng);
  CHECK(pairing(co, make_chain(c, 1)) == 0.0);
  // mismatched degrees pair to zero by convention
  const Chain faces = random_chain(c, 2, rng);
  CHECK(pairing(co, faces) == 0.0);
}

TEST_CASE("dual complex counts and incidence transpose") {
  SUBCASE("1D primal and dual") {
    const CellComplex c = CellComplex::build(1, {2});
    const DualComplex d(c);
    CHECK(d.has_boundary());
    CHECK(d.interior_count(0) == 2);  // duals of the segments
    CHECK(d.interior_count(1) == 3);  // duals of the nodes
    CHECK(d.boundary_count(0) == 2);
  }
  SUBCASE("2D dual boundary has no corner nodes") {
    const CellComplex c = CellComplex::build(2, {3, 4});
    const DualComplex d(c);
    // feet of the dual edges = one per primal boundary edge
    CHECK(d.boundary_count(0) == 2 * 3 + 2 * 4);
    CHECK(d.boundary_count(1) == 2 * 3 + 2 * 4);
  }
  SUBCASE("fully periodic complex is self-dual without boundary") {
    const CellComplex c = CellComplex::build(2, {3, 3}, {true, true});
    const DualComplex d(c);
    CHECK(!d.has_boundary());
    CHECK(d.boundary_count(0) == 0);
    CHECK(d.boundary_count(1) == 0);
    for (int p = 1; p <= 2; ++p) {
      const Eigen::MatrixXi lhs = Eigen::MatrixXi(d.incidence(p));
      const Eigen::MatrixXi rhs = dense(c.incidence(2 - p + 1)).transpose();
      CHECK(lhs == rhs);
    }
    CHECK((Eigen::MatrixXi(d.incidence(1)) * Eigen::MatrixXi(d.incidence(2))).isZero());
  }
}

TEST_CASE("relabeling cochain map commutes with the coboundary") {
  // swap the two axes of a 2D grid; the transpose map with its orientation
  // signs is the induced cochain map
  const CellComplex a = CellComplex::build(1, {3});
  const CellComplex b = CellComplex::build(1, {2});
  const CellComplex ab = tensor_product_complex(a, b);
  const CellComplex ba = tensor_product_complex(b, a);
  std::mt19937 rng(3);
  for (int k = 0; k < 2; ++k) {
    const ProductTranspose tk = product_transpose(ab, 1, k);
    const ProductTranspose tk1 = product_transpose(ab, 1, k + 1);
    const Cochain cba = random_int_cochain(ba, k, rng);
    // pull back to ab through the relabeling
    Cochain cab = make_cochain(ab, k);
    for (Index i = 0; i < cab.coefficients.size(); ++i)
      cab.coefficients[i] = tk.sign[i] * cba.coefficients[tk.index[i]];
    const Cochain lhs = coboundary(cab);
    const Cochain dba = coboundary(cba);
    Cochain rhs = make_cochain(ab, k + 1);
    for (Index i = 0; i < rhs.coefficients.size(); ++i)
      rhs.coefficients[i] = tk1.sign[i] * dba.coefficients[tk1.index[i]];
    CHECK(lhs.coefficients == rhs.coefficients);
  }
}

TEST_CASE("trace of cochains in 1D") {
  const CellComplex c = CellComplex::build(1, {4});
  Cochain a = make_cochain(c, 0);
  for (int i = 0; i <= 4; ++i) a.coefficients[i] = 10.0 + i;
  const BoundaryFacet left = boundary_facet(c, 0, false);
  const BoundaryFacet right = boundary_facet(c, 0, true);
  CHECK(trace_cochain(a, left).coefficients[0] == -a.coefficients[0]);
  CHECK(trace_cochain(a, right).coefficients[0] == a.coefficients[4]);

  const Cochain zero = make_cochain(c, 0);
  CHECK(trace_cochain(zero, left).coefficients.isZero());
  CHECK(is_tangent(zero));

  Cochain bump = make_cochain(c, 0);
  bump.coefficients[2] = 5.0;  // interior support
  CHECK(trace_cochain(bump, left).coefficients.isZero());
  CHECK(trace_cochain(bump, right).coefficients.isZero());
  CHECK(is_tangent(bump));
  CHECK(!is_tangent(a));
}

TEST_CASE("trace of cochains on a 2D facet") {
  const CellComplex c = CellComplex::build(2, {2, 3});
  std::mt19937 rng(5);
  const Cochain u = random_int_cochain(c, 1, rng);
  const BoundaryFacet bottom = boundary_facet(c, 1, false);
  const Cochain tu = trace_cochain(u, bottom);
  // facet keeps the xi-direction edges at eta node 0; bottom of axis 1 has sign +1
  CHECK(tu.coefficients.size() == 2);
  CHECK(tu.coefficients[0] == u.coefficients[0]);
  CHECK(tu.coefficients[1] == u.coefficients[4]);
  CHECK_THROWS(boundary_facet(CellComplex::build(2, {2, 2}, {false, true}), 1, false));
}

TEST_CASE("homology of the hole complex") {
  const HoleComplex h = hole_complex();
  REQUIRE(h.e01.rows() == 8);
  REQUIRE(h.e01.cols() == 12);
  REQUIRE(h.e12.rows() == 12);
  REQUIRE(h.e12.cols() == 4);
  CHECK((dense(h.e01) * dense(h.e12)).isZero());

  const HomologyInfo info =
      homology_from_incidence(dense(h.e01).cast<double>(), dense(h.e12).cast<double>());
  REQUIRE(info.betti == 1);
  REQUIRE(info.integral);
  Eigen::VectorXd expect(12);
  expect << 1, -1, 0, 0, 1, 1, -1, 1, -1, 0, 0, -1;
  CHECK(info.harmonic[0] == expect);

  // betti from the rank formula, by an independent factorization
  const Eigen::MatrixXd e01 = dense(h.e01).cast<double>();
  const Eigen::MatrixXd e12 = dense(h.e12).cast<double>();
  const auto rank01 = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(e01).rank();
  const auto rank12 = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(e12).rank();
  CHECK(12 - rank01 - rank12 == info.betti);

  // harmonic residuals
  CHECK((e01 * info.harmonic[0]).lpNorm<Eigen::Infinity>() < 1e-10);
  CHECK((e12.transpose() * info.harmonic[0]).lpNorm<Eigen::Infinity>() < 1e-10);
}

TEST_CASE("homology of tensor grids") {
  SUBCASE("contractible grid has no harmonic chains") {
    const CellComplex c = CellComplex::build(2, {2, 2});
    const HomologyInfo info = homology(c, 1);
    CHECK(info.betti == 0);
    CHECK(info.harmonic.empty());
  }
  SUBCASE("annulus grid carries one harmonic cycle") {
    const CellComplex c = annulus_complex(1, 4);
    CHECK(c.cell_count(0) == 8);
    CHECK(c.cell_count(1) == 12);
    CHECK(c.cell_count(2) == 4);
    const HomologyInfo info = homology(c, 1);
    REQUIRE(info.betti == 1);
    REQUIRE(info.integral);
    const Eigen::VectorXd& h = info.harmonic[0];
    // uniform +-1 over the angular edges, zero on the radial edges
    for (Index i = 0; i < 4; ++i) CHECK(h[i] == 0.0);
    for (Index i = 4; i < 12; ++i) CHECK(h[i] == 1.0);
    CHECK((dense(c.incidence(1)).cast<double>() * h).isZero());
    // the harmonic cochain spans the same line
    REQUIRE(info.harmonic_cochains.size() == 1);
    CHECK(info.harmonic_cochains[0].coefficients == h);
    REQUIRE(info.harmonic_chains.size() == 1);
    CHECK(info.harmonic_chains[0].coefficients.cast<double>() == h);
  }
  SUBCASE("torus has two harmonic 1-cycles") {
    const CellComplex c = CellComplex::build(2, {3, 3}, {true, true});
    CHECK(homology(c, 1).betti == 2);
    CHECK(homology(c, 0).betti == 1);
    CHECK(homology(c, 2).betti == 1);
  }
}

TEST_CASE("tensor product chains") {
  const CellComplex a = CellComplex::build(1, {2});
  const CellComplex b = CellComplex::build(1, {2});
  const CellComplex ab = tensor_product_complex(a, b);
  CHECK(ab.dimension() == 2);
  CHECK(ab.cell_count(2) == 4);

  std::mt19937 rng(11);
  SUBCASE("boundary of a tensor chain splits into factor boundaries") {
    for (int p : {0, 1})
      for (int q : {0, 1}) {
        const Chain cp = random_chain(a, p, rng);
        const Chain cq = random_chain(b, q, rng);
        const Chain prod = tensor_product_chain(cp, cq, ab);
        if (p + q == 0) continue;
        IntVector lhs = boundary(prod).coefficients;
        IntVector rhs = IntVector::Zero(ab.cell_count(p + q - 1));
        if (p >= 1)
          rhs += tensor_product_chain(boundary(cp), cq, ab).coefficients;
        if (q >= 1) {
          const int sgn = p % 2 == 0 ? 1 : -1;
          rhs += sgn * tensor_product_chain(cp, boundary(cq), ab).coefficients;
        }
        CHECK(lhs == rhs);
      }
  }
  SUBCASE("two segments span one 2-cell with four signed boundary edges") {
    const CellComplex one = CellComplex::build(2, {1, 1});
    Chain cell = make_chain(one, 2);
    cell.coefficients[0] = 1;
    const Chain bd = boundary(cell);
    // bottom +, right +, top -, left -
    IntVector expect(4);
    expect << 1, -1, -1, 1;
    CHECK(bd.coefficients == expect);
  }
  SUBCASE("0-cell swap commutes without sign; 1-1 swap picks up -1") {
    const CellComplex ba = tensor_product_complex(b, a);
    for (int p : {0, 1})
      for (int q : {0, 1}) {
        const Chain cp = random_chain(a, p, rng);
        const Chain cq = random_chain(b, q, rng);
        const Chain ab_chain = tensor_product_chain(cp, cq, ab);
        const Chain ba_chain = tensor_product_chain(cq, cp, ba);
        const ProductTranspose t = product_transpose(ab, 1, p + q);
        const int expect_sign = (p * q) % 2 == 0 ? 1 : -1;
        for (Index i = 0; i < ab_chain.coefficients.size(); ++i)
          CHECK(t.sign[i] * ba_chain.coefficients[t.index[i]] ==
                expect_sign * ab_chain.coefficients[i]);
      }
  }
}

TEST_CASE("build preconditions") {
  CHECK_THROWS(CellComplex::build(0, {}));
  CHECK_THROWS(CellComplex::build(4, {1, 1, 1, 1}));
  CHECK_THROWS(CellComplex::build(2, {2, 0}));
  const CellComplex c = CellComplex::build(1, {2});
  CHECK_THROWS(c.incidence(0));
  CHECK_THROWS(c.incidence(2));
}
