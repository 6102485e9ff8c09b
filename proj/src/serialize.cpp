#include "msem/serialize.hpp"

#include <cstdio>

namespace msem {

namespace {

const char* family_name(Family1D f) {
  switch (f) {
    case Family1D::lagrange_gll: return "lagrange_gll";
    case Family1D::edge_gll: return "edge_gll";
    case Family1D::lagrange_gauss: return "lagrange_gauss";
    case Family1D::lagrange_extended_gauss: return "lagrange_extended_gauss";
    case Family1D::edge_extended_gauss: return "edge_extended_gauss";
  }
  return "?";
}

}  // namespace

json to_json(const CellComplex& c) {
  json j;
  j["dimension"] = c.dimension();
  std::vector<int> cells;
  std::vector<bool> periodic;
  for (int a = 0; a < c.dimension(); ++a) {
    cells.push_back(c.axis(a).cells);
    periodic.push_back(c.axis(a).periodic);
  }
  j["cells_per_direction"] = cells;
  j["periodic"] = periodic;
  j["orientation_convention"] = "default_lexicographic";
  std::vector<long> counts;
  for (int k = 0; k <= c.dimension(); ++k) counts.push_back(c.cell_count(k));
  j["cell_counts"] = counts;
  j["hash"] = c.hash();
  return j;
}

json to_json(const Chain& chain) {
  json j;
  j["complex_hash"] = chain.complex->hash();
  j["degree"] = chain.degree;
  std::vector<std::int64_t> v(chain.coefficients.data(),
                              chain.coefficients.data() + chain.coefficients.size());
  j["coefficients"] = v;
  return j;
}

json to_json(const Cochain& cochain) {
  json j;
  j["complex_hash"] = cochain.complex->hash();
  j["degree"] = cochain.degree;
  std::vector<double> v(cochain.coefficients.data(),
                        cochain.coefficients.data() + cochain.coefficients.size());
  j["coefficients"] = v;
  return j;
}

json to_json(const DiscreteForm& df) {
  json j;
  j["dimension"] = df.dimension();
  j["degree"] = df.degree();
  j["order"] = df.basis->order();
  j["side"] = df.basis->side() == Side::primal ? "primal" : "dual";
  j["lagrange_family"] = family_name(df.basis->lagrange().family());
  j["edge_family"] = family_name(df.basis->edge().family());
  std::vector<double> v(df.coefficients.data(), df.coefficients.data() + df.coefficients.size());
  j["coefficients"] = v;
  return j;
}

json to_json(const CochainSplit& split) {
  json j;
  j["exact"] = to_json(split.exact);
  j["harmonic"] = to_json(split.harmonic);
  j["remainder"] = to_json(split.remainder);
  std::vector<double> amp(split.amplitudes.data(),
                          split.amplitudes.data() + split.amplitudes.size());
  j["amplitudes"] = amp;
  return j;
}

void write_coordinate_list(std::ostream& os, const Eigen::SparseMatrix<int>& m) {
  for (int outer = 0; outer < m.outerSize(); ++outer)
    for (Eigen::SparseMatrix<int>::InnerIterator it(m, outer); it; ++it)
      if (it.value() != 0) os << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_csv_row(std::ostream& os, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << format_full(values[i]);
  }
  os << '\n';
}

}  // namespace msem
