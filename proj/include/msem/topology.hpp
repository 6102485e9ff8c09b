#ifndef MSEM_TOPOLOGY_HPP
#define MSEM_TOPOLOGY_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <cstdint>
#include <vector>

#include "msem/nodes.hpp"

namespace msem {

using Index = Eigen::Index;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// One coordinate direction of a tensor-product grid. For a periodic axis the
// last 1-cell wraps from nodes[cells-1] back to nodes[0] + period.
struct Axis {
  int cells = 0;
  bool periodic = false;
  std::vector<double> nodes;  // cells+1 coords, or cells when periodic
  double period = 0.0;

  int node_count() const { return periodic ? cells : cells + 1; }
  double node(int i) const {
    return (periodic && i == cells) ? nodes[0] + period : nodes[i];
  }
  double cell_lo(int i) const { return nodes[i]; }
  double cell_hi(int i) const { return node(i + 1); }
};

// Oriented tensor-product cubical cell complex.
//
// k-cells are identified by (extent axes S, multi-index m): the cell spans one
// 1-cell along every axis in S and sits on a node along every other axis.
// Numbering: groups ordered by ascending axis subset (so 1-form components
// come out in the canonical d-xi^{i1}^...^d-xi^{ik} order), and C-order inside
// each group (last axis fastest). 1-cells point toward increasing coordinate,
// and the face signs follow the singular-cube boundary: collapsing the j-th
// extent axis (1-based) to its lower end contributes (-1)^j, to its upper end
// (-1)^{j+1}.
class CellComplex {
 public:
  struct Group {
    std::vector<int> axes;      // sorted extent axes
    std::array<int, 3> len{};   // per-axis index range
    Index size = 0;
    Index offset = 0;
  };

  static CellComplex build(int dimension, const std::vector<int>& cells_per_direction,
                           const std::vector<bool>& periodic = {});
  static CellComplex from_axes(std::vector<Axis> axes);

  int dimension() const { return n_; }
  const Axis& axis(int a) const { return axes_[a]; }
  Axis& axis(int a) { return axes_[a]; }

  Index cell_count(int k) const;
  int group_count(int k) const { return static_cast<int>(groups_[k].size()); }
  const Group& group(int k, int g) const { return groups_[k][g]; }
  // group index of a given sorted axis subset
  int group_of(int k, const std::vector<int>& axes) const;

  Index cell_index(int k, int g, const std::array<int, 3>& mi) const;
  void cell_decode(int k, Index idx, int& g, std::array<int, 3>& mi) const;

  // E_{(k-1,k)}: rows are (k-1)-cells, columns k-cells, entries in {-1,0,1};
  // psi(boundary c) = E * psi(c). Requires 1 <= k <= n.
  const Eigen::SparseMatrix<int>& incidence(int k) const;

  // Count of k-cells lying entirely in the domain boundary.
  Index boundary_cell_count(int k) const;

  std::uint64_t hash() const { return hash_; }

 private:
  int n_ = 0;
  std::vector<Axis> axes_;
  std::vector<std::vector<Group>> groups_;             // per degree
  mutable std::vector<Eigen::SparseMatrix<int>> inc_;  // built on demand
  mutable std::vector<bool> inc_built_;
  std::uint64_t hash_ = 0;

  void finalize();
};

struct Chain {
  const CellComplex* complex = nullptr;
  int degree = 0;
  IntVector coefficients;
};

struct Cochain {
  const CellComplex* complex = nullptr;
  int degree = 0;
  Eigen::VectorXd coefficients;
};

Chain make_chain(const CellComplex& c, int degree);
Cochain make_cochain(const CellComplex& c, int degree);

Chain boundary(const Chain& chain);
Cochain coboundary(const Cochain& cochain);

// (c^(k))^T c_(l); defined as 0 when the degrees differ.
double pairing(const Cochain& cochain, const Chain& chain);

// --- dual complex ----------------------------------------------------------

// Dual cells carry the index of their primal partner: the dual of the i-th
// primal k-cell is the i-th interior dual (n-k)-cell. Dual incidence matrices
// are the transposes of the primal ones under this labeling. The boundary part
// pairs with the cells of the primal boundary complex.
class DualComplex {
 public:
  explicit DualComplex(const CellComplex& primal);

  const CellComplex& primal() const { return *primal_; }
  bool has_boundary() const;
  Index interior_count(int k) const;
  Index boundary_count(int k) const;
  // tilde-E_{(p-1,p)} = E^T_{(n-p,n-p+1)}
  Eigen::SparseMatrix<int> incidence(int p) const;

 private:
  const CellComplex* primal_;
};

// --- boundary facets and the discrete trace --------------------------------

// The face of the domain where coordinate `axis` is pinned to its low or high
// end. `sign` is the orientation the facet cells carry inside the boundary
// complex relative to their parent cells.
struct BoundaryFacet {
  const CellComplex* parent = nullptr;
  int axis = 0;
  bool high = false;
  int sign = 0;
  CellComplex facet;  // (n-1)-dimensional sub-grid

  // index of the parent k-cell matching facet k-cell `idx`
  Index parent_cell(int k, Index idx) const;
};

BoundaryFacet boundary_facet(const CellComplex& c, int axis, bool high);

// Restriction of a cochain to a facet, with the boundary orientation sign.
// For 1D parents the facet is a single point and the result carries no facet
// complex, only the one signed coefficient.
Cochain trace_cochain(const Cochain& cochain, const BoundaryFacet& facet);

// tr c = 0 on every facet of the complex
bool is_tangent(const Cochain& cochain);

// --- homology ---------------------------------------------------------------

struct HomologyInfo {
  int degree = 0;
  int betti = 0;
  bool integral = false;                  // basis rounded to exact integers
  std::vector<Eigen::VectorXd> harmonic;  // normalized: first nonzero entry +1
  std::vector<Chain> harmonic_chains;     // filled when integral
  std::vector<Cochain> harmonic_cochains;
};

// Harmonic representatives of null(E_lo) with range(E_hi) orthogonality, by
// rank-revealing SVD. Pass empty matrices at the ends of the complex.
HomologyInfo homology_from_incidence(const Eigen::MatrixXd& e_lo, const Eigen::MatrixXd& e_hi,
                                     double tolerance = 1e-10);

HomologyInfo homology(const CellComplex& c, int k, double tolerance = 1e-10);

// --- reference non-contractible complexes ------------------------------------

// A 4-quad ring around a hole with a fixed hand numbering (8 nodes, 12 edges,
// 4 faces), kept as explicit incidence tables. Topologically the annulus
// below.
struct HoleComplex {
  Eigen::SparseMatrix<int> e01;  // 8 x 12
  Eigen::SparseMatrix<int> e12;  // 12 x 4
};
HoleComplex hole_complex();

// Annulus grid: axis 0 radial (non-periodic, n_r cells on [r_inner,r_outer]),
// axis 1 angular (periodic, n_theta cells on [0,2pi)).
CellComplex annulus_complex(int n_r, int n_theta, double r_inner = 1.0, double r_outer = 2.0);

// --- tensor products --------------------------------------------------------

// D = D1 (x) D2: the grid with the concatenated axes.
CellComplex tensor_product_complex(const CellComplex& a, const CellComplex& b);

// c_p (x) c_q as a chain on tensor_product_complex(a, b).
Chain tensor_product_chain(const Chain& cp, const Chain& cq, const CellComplex& product);

// Index map and sign realizing the factor swap: entry i of the result gives
// the cell index in B (x) A of product cell i of A (x) B, and sign(cell) =
// (-1)^{pq} for a cell with p extent axes in A and q in B.
struct ProductTranspose {
  std::vector<Index> index;
  std::vector<int> sign;
};
ProductTranspose product_transpose(const CellComplex& product, int n_first, int degree);

}  // namespace msem

#endif
