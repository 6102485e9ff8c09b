#include "msem/topology.hpp"
#include <functional>

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msem {

namespace {

std::vector<std::vector<int>> axis_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  // lexicographic enumeration of k-subsets of {0..n-1}
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int a = start; a < n; ++a) {
      pick[depth] = a;
      rec(a + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

CellComplex CellComplex::build(int dimension, const std::vector<int>& cells_per_direction,
                               const std::vector<bool>& periodic) {
  if (dimension < 1 || dimension > 3)
    throw std::invalid_argument("build_complex: dimension must be 1, 2 or 3");
  if (static_cast<int>(cells_per_direction.size()) != dimension)
    throw std::invalid_argument("build_complex: one cell count per direction required");
  std::vector<Axis> axes(dimension);
  for (int a = 0; a < dimension; ++a) {
    Axis& ax = axes[a];
    ax.cells = cells_per_direction[a];
    if (ax.cells < 1) throw std::invalid_argument("build_complex: cell counts must be >= 1");
    ax.periodic = !periodic.empty() && periodic[a];
    if (ax.periodic) {
      ax.period = 2.0 * M_PI;
      ax.nodes.resize(ax.cells);
      for (int i = 0; i < ax.cells; ++i) ax.nodes[i] = ax.period * i / ax.cells;
    } else {
      ax.nodes.resize(ax.cells + 1);
      for (int i = 0; i <= ax.cells; ++i) ax.nodes[i] = -1.0 + 2.0 * i / ax.cells;
    }
  }
  return from_axes(std::move(axes));
}

CellComplex CellComplex::from_axes(std::vector<Axis> axes) {
  CellComplex c;
  c.n_ = static_cast<int>(axes.size());
  if (c.n_ < 1 || c.n_ > 3) throw std::invalid_argument("from_axes: dimension must be 1, 2 or 3");
  for (const Axis& ax : axes) {
    if (ax.cells < 1) throw std::invalid_argument("from_axes: cell counts must be >= 1");
    if (static_cast<int>(ax.nodes.size()) != ax.node_count())
      throw std::invalid_argument("from_axes: node coordinate count mismatch");
  }
  c.axes_ = std::move(axes);
  c.finalize();
  return c;
}

void CellComplex::finalize() {
  groups_.assign(n_ + 1, {});
  for (int k = 0; k <= n_; ++k) {
    Index offset = 0;
    for (const auto& subset : axis_subsets(n_, k)) {
      Group g;
      g.axes = subset;
      g.len = {1, 1, 1};
      g.size = 1;
      for (int a = 0; a < n_; ++a) {
        const bool extent = std::find(subset.begin(), subset.end(), a) != subset.end();
        g.len[a] = extent ? axes_[a].cells : axes_[a].node_count();
        g.size *= g.len[a];
      }
      g.offset = offset;
      offset += g.size;
      groups_[k].push_back(std::move(g));
    }
  }
  inc_.assign(n_ + 1, {});
  inc_built_.assign(n_ + 1, false);

  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, &n_, sizeof n_);
  for (const Axis& ax : axes_) {
    h = fnv1a(h, &ax.cells, sizeof ax.cells);
    const char p = ax.periodic ? 1 : 0;
    h = fnv1a(h, &p, sizeof p);
    h = fnv1a(h, ax.nodes.data(), ax.nodes.size() * sizeof(double));
    h = fnv1a(h, &ax.period, sizeof ax.period);
  }
  hash_ = h;
}

Index CellComplex::cell_count(int k) const {
  if (k < 0 || k > n_) return 0;
  Index total = 0;
  for (const Group& g : groups_[k]) total += g.size;
  return total;
}

int CellComplex::group_of(int k, const std::vector<int>& axes) const {
  for (int g = 0; g < group_count(k); ++g)
    if (groups_[k][g].axes == axes) return g;
  throw std::invalid_argument("group_of: no such axis subset");
}

Index CellComplex::cell_index(int k, int g, const std::array<int, 3>& mi) const {
  const Group& grp = groups_[k][g];
  Index idx = 0;
  for (int a = 0; a < n_; ++a) idx = idx * grp.len[a] + mi[a];
  return grp.offset + idx;
}

void CellComplex::cell_decode(int k, Index idx, int& g, std::array<int, 3>& mi) const {
  for (int gi = group_count(k) - 1; gi >= 0; --gi) {
    const Group& grp = groups_[k][gi];
    if (idx >= grp.offset) {
      g = gi;
      Index rem = idx - grp.offset;
      mi = {0, 0, 0};
      for (int a = n_ - 1; a >= 0; --a) {
        mi[a] = static_cast<int>(rem % grp.len[a]);
        rem /= grp.len[a];
      }
      return;
    }
  }
  throw std::out_of_range("cell_decode: index out of range");
}

const Eigen::SparseMatrix<int>& CellComplex::incidence(int k) const {
  if (k < 1 || k > n_) throw std::invalid_argument("incidence: need 1 <= k <= dimension");
  if (inc_built_[k]) return inc_[k];

  std::vector<Eigen::Triplet<int>> trips;
  for (int g = 0; g < group_count(k); ++g) {
    const Group& grp = groups_[k][g];
    std::array<int, 3> mi{};
    for (Index local = 0; local < grp.size; ++local) {
      Index rem = local;
      for (int a = n_ - 1; a >= 0; --a) {
        mi[a] = static_cast<int>(rem % grp.len[a]);
        rem /= grp.len[a];
      }
      const Index col = grp.offset + local;
      for (std::size_t j = 0; j < grp.axes.size(); ++j) {
        const int a = grp.axes[j];
        std::vector<int> face_axes = grp.axes;
        face_axes.erase(face_axes.begin() + static_cast<long>(j));
        const int fg = group_of(k - 1, face_axes);
        const int sign_low = (j % 2 == 0) ? -1 : 1;  // (-1)^{j+1}, j 1-based

        std::array<int, 3> fmi = mi;
        fmi[a] = mi[a];
        trips.emplace_back(static_cast<int>(cell_index(k - 1, fg, fmi)), static_cast<int>(col),
                           sign_low);
        int up = mi[a] + 1;
        if (axes_[a].periodic) up %= axes_[a].cells;
        fmi[a] = up;
        trips.emplace_back(static_cast<int>(cell_index(k - 1, fg, fmi)), static_cast<int>(col),
                           -sign_low);
      }
    }
  }
  Eigen::SparseMatrix<int> e(cell_count(k - 1), cell_count(k));
  e.setFromTriplets(trips.begin(), trips.end());  // duplicate (row,col) adds up
  inc_[k] = std::move(e);
  inc_built_[k] = true;
  return inc_[k];
}

Index CellComplex::boundary_cell_count(int k) const {
  if (k < 0 || k >= n_) return 0;
  Index total = 0;
  for (const Group& g : groups_[k]) {
    Index interior = 1;
    for (int a = 0; a < n_; ++a) {
      const bool extent = std::find(g.axes.begin(), g.axes.end(), a) != g.axes.end();
      if (extent)
        interior *= axes_[a].cells;
      else
        interior *= axes_[a].periodic ? axes_[a].node_count()
                                      : std::max(0, axes_[a].node_count() - 2);
    }
    total += g.size - interior;
  }
  return total;
}

Chain make_chain(const CellComplex& c, int degree) {
  Chain ch;
  ch.complex = &c;
  ch.degree = degree;
  ch.coefficients = IntVector::Zero(c.cell_count(degree));
  return ch;
}

Cochain make_cochain(const CellComplex& c, int degree) {
  Cochain co;
  co.complex = &c;
  co.degree = degree;
  co.coefficients = Eigen::VectorXd::Zero(c.cell_count(degree));
  return co;
}

Chain boundary(const Chain& chain) {
  if (chain.degree < 1) throw std::invalid_argument("boundary: degree must be >= 1");
  Chain out;
  out.complex = chain.complex;
  out.degree = chain.degree - 1;
  out.coefficients =
      chain.complex->incidence(chain.degree).cast<std::int64_t>() * chain.coefficients;
  return out;
}

Cochain coboundary(const Cochain& cochain) {
  const int n = cochain.complex->dimension();
  if (cochain.degree >= n) throw std::invalid_argument("coboundary: degree must be < dimension");
  Cochain out;
  out.complex = cochain.complex;
  out.degree = cochain.degree + 1;
  out.coefficients = cochain.complex->incidence(cochain.degree + 1).cast<double>().transpose() *
                     cochain.coefficients;
  return out;
}

double pairing(const Cochain& cochain, const Chain& chain) {
  if (cochain.complex->hash() != chain.complex->hash())
    throw std::invalid_argument("pairing: chain and cochain live on different complexes");
  if (cochain.degree != chain.degree) return 0.0;
  return cochain.coefficients.dot(chain.coefficients.cast<double>());
}

// --- dual complex ------------------------------------------------------------

DualComplex::DualComplex(const CellComplex& primal) : primal_(&primal) {}

bool DualComplex::has_boundary() const {
  for (int a = 0; a < primal_->dimension(); ++a)
    if (!primal_->axis(a).periodic) return true;
  return false;
}

Index DualComplex::interior_count(int k) const {
  return primal_->cell_count(primal_->dimension() - k);
}

Index DualComplex::boundary_count(int k) const {
  return primal_->boundary_cell_count(primal_->dimension() - 1 - k);
}

Eigen::SparseMatrix<int> DualComplex::incidence(int p) const {
  const int n = primal_->dimension();
  if (p < 1 || p > n) throw std::invalid_argument("dual incidence: need 1 <= p <= dimension");
  return primal_->incidence(n - p + 1).transpose();
}

// --- boundary facets ----------------------------------------------------------

BoundaryFacet boundary_facet(const CellComplex& c, int axis, bool high) {
  if (c.axis(axis).periodic)
    throw std::invalid_argument("boundary_facet: periodic axis has no boundary");
  BoundaryFacet f;
  f.parent = &c;
  f.axis = axis;
  f.high = high;
  // orientation of the facet inside the boundary complex: low end of axis a
  // carries (-1)^{a+1}, the high end the opposite
  const int low_sign = (axis % 2 == 0) ? -1 : 1;
  f.sign = high ? -low_sign : low_sign;
  std::vector<Axis> sub;
  for (int a = 0; a < c.dimension(); ++a)
    if (a != axis) sub.push_back(c.axis(a));
  if (sub.empty()) {
    // 1D: the facet is a single point; model it as a degenerate 1-axis complex
    // is not possible, so parent_cell handles dimension()==1 directly.
  } else {
    f.facet = CellComplex::from_axes(std::move(sub));
  }
  return f;
}

Index BoundaryFacet::parent_cell(int k, Index idx) const {
  const int n = parent->dimension();
  const int end_node = high ? parent->axis(axis).cells : 0;
  if (n == 1) {
    if (k != 0 || idx != 0) throw std::out_of_range("parent_cell: 1D facet is a single node");
    return end_node;
  }
  int g;
  std::array<int, 3> mi{};
  facet.cell_decode(k, idx, g, mi);
  std::vector<int> paxes;
  for (int b : facet.group(k, g).axes) paxes.push_back(b < axis ? b : b + 1);
  std::array<int, 3> pmi{};
  for (int a = 0; a < n; ++a) {
    if (a == axis)
      pmi[a] = end_node;
    else
      pmi[a] = mi[a < axis ? a : a - 1];
  }
  return parent->cell_index(k, parent->group_of(k, paxes), pmi);
}

Cochain trace_cochain(const Cochain& cochain, const BoundaryFacet& facet) {
  const CellComplex& c = *cochain.complex;
  if (facet.parent->hash() != c.hash())
    throw std::invalid_argument("trace: facet was not derived from the cochain's complex");
  const int k = cochain.degree;
  if (k > c.dimension() - 1) throw std::invalid_argument("trace: degree exceeds boundary dimension");
  const Index m = (c.dimension() == 1) ? 1 : facet.facet.cell_count(k);
  Cochain out;
  out.complex = (c.dimension() == 1) ? nullptr : &facet.facet;
  out.degree = k;
  out.coefficients.resize(m);
  for (Index i = 0; i < m; ++i)
    out.coefficients[i] = facet.sign * cochain.coefficients[facet.parent_cell(k, i)];
  return out;
}

bool is_tangent(const Cochain& cochain) {
  const CellComplex& c = *cochain.complex;
  for (int a = 0; a < c.dimension(); ++a) {
    if (c.axis(a).periodic) continue;
    for (bool high : {false, true}) {
      // facet construction is cheap relative to the check
      BoundaryFacet f = boundary_facet(c, a, high);
      const Index m = (c.dimension() == 1) ? 1 : f.facet.cell_count(cochain.degree);
      for (Index i = 0; i < m; ++i)
        if (cochain.coefficients[f.parent_cell(cochain.degree, i)] != 0.0) return false;
    }
  }
  return true;
}

// --- homology -----------------------------------------------------------------

HomologyInfo homology_from_incidence(const Eigen::MatrixXd& e_lo, const Eigen::MatrixXd& e_hi,
                                     double tolerance) {
  const Index m = e_lo.cols() > 0 ? e_lo.cols() : e_hi.rows();
  Eigen::MatrixXd stacked(e_lo.rows() + e_hi.cols(), m);
  if (e_lo.rows() > 0) stacked.topRows(e_lo.rows()) = e_lo;
  if (e_hi.cols() > 0) stacked.bottomRows(e_hi.cols()) = e_hi.transpose();

  HomologyInfo info;
  if (stacked.rows() == 0) {
    info.betti = static_cast<int>(m);
    return info;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tolerance * smax) ++rank;
  const Index nullity = m - rank;

  info.betti = static_cast<int>(nullity);
  info.integral = nullity > 0;
  for (Index j = 0; j < nullity; ++j) {
    Eigen::VectorXd v = svd.matrixV().col(m - 1 - j);
    // sign/scale normalization: first entry above noise becomes +1
    double pivot = 0.0;
    for (Index i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > 1e-8) {
        pivot = v[i];
        break;
      }
    if (pivot != 0.0) v /= pivot;
    bool is_int = true;
    for (Index i = 0; i < v.size(); ++i)
      if (std::abs(v[i] - std::round(v[i])) > 1e-6) {
        is_int = false;
        break;
      }
    if (is_int)
      for (Index i = 0; i < v.size(); ++i) v[i] = std::round(v[i]) + 0.0;  // also clears -0
    info.integral = info.integral && is_int;
    info.harmonic.push_back(std::move(v));
  }
  return info;
}

HomologyInfo homology(const CellComplex& c, int k, double tolerance) {
  const int n = c.dimension();
  Eigen::MatrixXd e_lo, e_hi;
  if (k >= 1) e_lo = c.incidence(k).cast<double>().toDense();
  if (k < n) e_hi = c.incidence(k + 1).cast<double>().toDense();
  if (k == 0) e_lo.resize(0, c.cell_count(0));
  if (k == n) e_hi.resize(c.cell_count(n), 0);

  HomologyInfo info = homology_from_incidence(e_lo, e_hi, tolerance);
  info.degree = k;
  for (const auto& v : info.harmonic) {
    Cochain hc = make_cochain(c, k);
    hc.coefficients = v;
    info.harmonic_cochains.push_back(std::move(hc));
    if (info.integral) {
      Chain ch = make_chain(c, k);
      for (Index i = 0; i < v.size(); ++i) ch.coefficients[i] = static_cast<std::int64_t>(v[i]);
      info.harmonic_chains.push_back(std::move(ch));
    }
  }
  return info;
}

// --- reference complexes --------------------------------------------------------

HoleComplex hole_complex() {
  HoleComplex h;
  // incidence tables of the 4-quad ring; the node/edge/face numbering is fixed
  const int e01[][3] = {{0, 0, -1}, {0, 1, -1}, {0, 2, -1},  {1, 0, 1},  {1, 3, -1}, {1, 4, -1},
                        {2, 2, 1},  {2, 5, -1}, {2, 6, -1},  {3, 3, 1},  {3, 5, 1},  {3, 7, -1},
                        {4, 6, 1},  {4, 8, -1}, {4, 9, -1},  {5, 7, 1},  {5, 8, 1},  {5, 10, -1},
                        {6, 1, 1},  {6, 9, 1},  {6, 11, -1}, {7, 4, 1},  {7, 10, 1}, {7, 11, 1}};
  const int e12[][3] = {{0, 0, 1},  {1, 1, -1}, {2, 0, -1}, {2, 1, 1},  {3, 0, 1},  {3, 2, -1},
                        {4, 2, 1},  {5, 0, -1}, {6, 1, 1},  {7, 2, -1}, {8, 3, 1},  {9, 1, 1},
                        {9, 3, -1}, {10, 2, -1}, {10, 3, 1}, {11, 3, -1}};
  std::vector<Eigen::Triplet<int>> t01, t12;
  for (const auto& e : e01) t01.emplace_back(e[0], e[1], e[2]);
  for (const auto& e : e12) t12.emplace_back(e[0], e[1], e[2]);
  h.e01.resize(8, 12);
  h.e12.resize(12, 4);
  h.e01.setFromTriplets(t01.begin(), t01.end());
  h.e12.setFromTriplets(t12.begin(), t12.end());
  return h;
}

CellComplex annulus_complex(int n_r, int n_theta, double r_inner, double r_outer) {
  Axis r;
  r.cells = n_r;
  r.periodic = false;
  r.nodes.resize(n_r + 1);
  for (int i = 0; i <= n_r; ++i) r.nodes[i] = r_inner + (r_outer - r_inner) * i / n_r;
  Axis th;
  th.cells = n_theta;
  th.periodic = true;
  th.period = 2.0 * M_PI;
  th.nodes.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) th.nodes[i] = th.period * i / n_theta;
  return CellComplex::from_axes({r, th});
}

// --- tensor products -------------------------------------------------------------

CellComplex tensor_product_complex(const CellComplex& a, const CellComplex& b) {
  std::vector<Axis> axes;
  for (int i = 0; i < a.dimension(); ++i) axes.push_back(a.axis(i));
  for (int i = 0; i < b.dimension(); ++i) axes.push_back(b.axis(i));
  return CellComplex::from_axes(std::move(axes));
}

Chain tensor_product_chain(const Chain& cp, const Chain& cq, const CellComplex& product) {
  const CellComplex& a = *cp.complex;
  const CellComplex& b = *cq.complex;
  const int n1 = a.dimension(), n2 = b.dimension();
  if (product.dimension() != n1 + n2)
    throw std::invalid_argument("tensor_product_chain: product dimension mismatch");
  const int k = cp.degree + cq.degree;
  Chain out = make_chain(product, k);
  for (int g = 0; g < product.group_count(k); ++g) {
    const auto& grp = product.group(k, g);
    std::vector<int> s1, s2;
    for (int ax : grp.axes) (ax < n1 ? s1 : s2).push_back(ax < n1 ? ax : ax - n1);
    if (static_cast<int>(s1.size()) != cp.degree) continue;  // cells with the wrong split
    const int g1 = a.group_of(cp.degree, s1);
    const int g2 = b.group_of(cq.degree, s2);
    std::array<int, 3> mi{};
    for (Index local = 0; local < grp.size; ++local) {
      Index rem = local;
      for (int ax = n1 + n2 - 1; ax >= 0; --ax) {
        mi[ax] = static_cast<int>(rem % grp.len[ax]);
        rem /= grp.len[ax];
      }
      std::array<int, 3> m1{}, m2{};
      for (int ax = 0; ax < n1; ++ax) m1[ax] = mi[ax];
      for (int ax = 0; ax < n2; ++ax) m2[ax] = mi[n1 + ax];
      const Index i1 = a.cell_index(cp.degree, g1, m1);
      const Index i2 = b.cell_index(cq.degree, g2, m2);
      out.coefficients[grp.offset + local] = cp.coefficients[i1] * cq.coefficients[i2];
    }
  }
  return out;
}

ProductTranspose product_transpose(const CellComplex& product, int n_first, int degree) {
  const int n = product.dimension();
  const int n2 = n - n_first;
  std::vector<Axis> swapped;
  for (int ax = n_first; ax < n; ++ax) swapped.push_back(product.axis(ax));
  for (int ax = 0; ax < n_first; ++ax) swapped.push_back(product.axis(ax));
  CellComplex ba = CellComplex::from_axes(std::move(swapped));

  ProductTranspose t;
  const Index m = product.cell_count(degree);
  t.index.resize(m);
  t.sign.resize(m);
  for (Index i = 0; i < m; ++i) {
    int g;
    std::array<int, 3> mi{};
    product.cell_decode(degree, i, g, mi);
    const auto& grp = product.group(degree, g);
    int p = 0;
    for (int ax : grp.axes)
      if (ax < n_first) ++p;
    const int q = degree - p;
    std::vector<int> baxes;
    for (int ax : grp.axes)
      if (ax >= n_first) baxes.push_back(ax - n_first);
    for (int ax : grp.axes)
      if (ax < n_first) baxes.push_back(ax + n2);
    std::array<int, 3> bmi{};
    for (int ax = 0; ax < n2; ++ax) bmi[ax] = mi[n_first + ax];
    for (int ax = 0; ax < n_first; ++ax) bmi[n2 + ax] = mi[ax];
    t.index[i] = ba.cell_index(degree, ba.group_of(degree, baxes), bmi);
    t.sign[i] = (p * q) % 2 == 0 ? 1 : -1;
  }
  return t;
}

}  // namespace msem
