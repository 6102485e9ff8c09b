#include "msem/forms.hpp"
#include <functional>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msem {

std::vector<std::vector<int>> form_components(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
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

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

int component_index(int n, int k, const std::vector<int>& axes) {
  const auto comps = form_components(n, k);
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i] == axes) return static_cast<int>(i);
  throw std::invalid_argument("component_index: no such component");
}

int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> cat = a;
  cat.insert(cat.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i] == cat[j]) return 0;
      if (cat[i] > cat[j]) sign = -sign;
    }
  return sign;
}

Eigen::VectorXd AnalyticForm::eval(const Eigen::Vector3d& x) const {
  Eigen::VectorXd v(components.size());
  for (std::size_t c = 0; c < components.size(); ++c) v[c] = components[c](x);
  return v;
}

AnalyticForm AnalyticForm::exterior_derivative() const {
  if (!has_derivative())
    throw std::logic_error("exterior_derivative: no analytic derivative supplied");
  AnalyticForm d;
  d.dimension = dimension;
  d.degree = degree + 1;
  d.components = derivative;
  return d;
}

AnalyticForm AnalyticForm::zero_form(int n, ScalarField f, std::vector<ScalarField> gradient) {
  AnalyticForm a;
  a.dimension = n;
  a.degree = 0;
  a.components = {std::move(f)};
  if (!gradient.empty()) {
    if (static_cast<int>(gradient.size()) != n)
      throw std::invalid_argument("zero_form: gradient needs one component per axis");
    a.derivative = std::move(gradient);
  }
  return a;
}

AnalyticForm AnalyticForm::from_terms(
    int n, int k, const std::vector<std::pair<std::vector<int>, ScalarField>>& terms) {
  AnalyticForm a;
  a.dimension = n;
  a.degree = k;
  const auto comps = form_components(n, k);
  std::vector<std::vector<std::pair<double, ScalarField>>> buckets(comps.size());
  for (const auto& [seq, f] : terms) {
    if (static_cast<int>(seq.size()) != k)
      throw std::invalid_argument("from_terms: index sequence length mismatch");
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;  // repeated index: the term vanishes
    // parity of the sort
    int sign = 1;
    std::vector<int> tmp = seq;
    for (std::size_t i = 0; i < tmp.size(); ++i)
      for (std::size_t j = i + 1; j < tmp.size(); ++j)
        if (tmp[i] > tmp[j]) {
          std::swap(tmp[i], tmp[j]);
          sign = -sign;
        }
    buckets[component_index(n, k, sorted)].push_back({double(sign), f});
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto terms_c = buckets[c];
    a.components.push_back([terms_c](const Eigen::Vector3d& x) {
      double acc = 0.0;
      for (const auto& [s, f] : terms_c) acc += s * f(x);
      return acc;
    });
  }
  return a;
}

AnalyticForm AnalyticForm::constant(int n, int k, const Eigen::VectorXd& values) {
  AnalyticForm a;
  a.dimension = n;
  a.degree = k;
  for (Eigen::Index c = 0; c < values.size(); ++c) {
    const double v = values[c];
    a.components.push_back([v](const Eigen::Vector3d&) { return v; });
  }
  // constants are closed
  const int cnt = binomial(n, k + 1);
  for (int c = 0; c < cnt; ++c)
    a.derivative.push_back([](const Eigen::Vector3d&) { return 0.0; });
  return a;
}

Eigen::VectorXd wedge_components(int n, int k, int l, const Eigen::VectorXd& a,
                                 const Eigen::VectorXd& b) {
  const auto sc = form_components(n, k);
  const auto tc = form_components(n, l);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(binomial(n, k + l));
  for (std::size_t si = 0; si < sc.size(); ++si)
    for (std::size_t ti = 0; ti < tc.size(); ++ti) {
      const int sign = shuffle_sign(sc[si], tc[ti]);
      if (sign == 0) continue;
      std::vector<int> u;
      std::merge(sc[si].begin(), sc[si].end(), tc[ti].begin(), tc[ti].end(),
                 std::back_inserter(u));
      out[component_index(n, k + l, u)] += sign * (a[si] * b[ti]);
    }
  return out;
}

AnalyticForm wedge(const AnalyticForm& a, const AnalyticForm& b) {
  if (a.dimension != b.dimension) throw std::invalid_argument("wedge: dimension mismatch");
  if (a.degree + b.degree > a.dimension) throw std::invalid_argument("wedge: degree overflow");
  AnalyticForm w;
  w.dimension = a.dimension;
  w.degree = a.degree + b.degree;
  const int cnt = binomial(a.dimension, w.degree);
  for (int c = 0; c < cnt; ++c) {
    w.components.push_back([a, b, c](const Eigen::Vector3d& x) {
      return wedge_components(a.dimension, a.degree, b.degree, a.eval(x), b.eval(x))[c];
    });
  }
  return w;
}

Eigen::Matrix3d MetricField::inverse(const Eigen::Vector3d& x) const {
  Eigen::Matrix3d g = tensor(x);
  // pad the unused block with the identity so the 3x3 inverse is safe
  for (int i = dimension; i < 3; ++i) g(i, i) = 1.0;
  return g.inverse();
}

double MetricField::sqrt_det(const Eigen::Vector3d& x) const {
  Eigen::Matrix3d g = tensor(x);
  double det = 1.0;
  if (dimension == 1)
    det = g(0, 0);
  else if (dimension == 2)
    det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  else
    det = g.determinant();
  if (det <= 0.0) throw std::runtime_error("metric: non-positive determinant");
  return std::sqrt(det);
}

MetricField identity_metric(int n) {
  MetricField m;
  m.dimension = n;
  m.tensor = [](const Eigen::Vector3d&) { return Eigen::Matrix3d::Identity(); };
  return m;
}

Eigen::MatrixXd hodge_component_matrix(const MetricField& g, const Eigen::Vector3d& x, int k) {
  const int n = g.dimension;
  const auto src = form_components(n, k);
  const auto dst = form_components(n, n - k);
  const Eigen::Matrix3d ginv = g.inverse(x);
  const double sq = g.sqrt_det(x);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dst.size(), src.size());
  for (std::size_t si = 0; si < src.size(); ++si) {
    // row: the complement of S
    std::vector<int> comp;
    for (int a = 0; a < n; ++a)
      if (std::find(src[si].begin(), src[si].end(), a) == src[si].end()) comp.push_back(a);
    const int row = comp.empty() && dst.size() == 1
                        ? 0
                        : component_index(n, n - k, comp);
    const int sgn = shuffle_sign(src[si], comp);
    for (std::size_t ti = 0; ti < src.size(); ++ti) {
      // det of the inverse-metric block indexed by S (rows) and T (cols)
      Eigen::MatrixXd blk(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) blk(i, j) = ginv(src[si][i], src[ti][j]);
      const double d = k == 0 ? 1.0 : blk.determinant();
      h(row, ti) += sgn * sq * d;
    }
  }
  return h;
}

AnalyticForm hodge(const AnalyticForm& a, const MetricField& g) {
  AnalyticForm s;
  s.dimension = a.dimension;
  s.degree = a.dimension - a.degree;
  const int cnt = binomial(a.dimension, s.degree);
  for (int c = 0; c < cnt; ++c) {
    s.components.push_back([a, g, c](const Eigen::Vector3d& x) {
      return (hodge_component_matrix(g, x, a.degree) * a.eval(x))(c);
    });
  }
  return s;
}

double inner_components(const MetricField& g, const Eigen::Vector3d& x, int k,
                        const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const int n = g.dimension;
  const auto comps = form_components(n, k);
  const Eigen::Matrix3d ginv = g.inverse(x);
  double acc = 0.0;
  for (std::size_t si = 0; si < comps.size(); ++si)
    for (std::size_t ti = 0; ti < comps.size(); ++ti) {
      Eigen::MatrixXd blk(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) blk(i, j) = ginv(comps[si][i], comps[ti][j]);
      const double d = k == 0 ? 1.0 : blk.determinant();
      acc += a[si] * b[ti] * d;
    }
  return acc;
}

}  // namespace msem
