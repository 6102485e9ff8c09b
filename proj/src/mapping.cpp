#include "msem/mapping.hpp"

#include <cmath>
#include <stdexcept>

namespace msem {

double Mapping::jacobian_det(const Eigen::Vector3d& xi) const {
  const Eigen::Matrix3d j = jacobian(xi);
  switch (dimension) {
    case 1:
      return j(0, 0);
    case 2:
      return j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0);
    default:
      return j.determinant();
  }
}

Mapping identity_map(int n) {
  Mapping m;
  m.dimension = n;
  m.map = [](const Eigen::Vector3d& x) { return x; };
  m.jacobian = [](const Eigen::Vector3d&) { return Eigen::Matrix3d::Identity(); };
  m.inverse = [](const Eigen::Vector3d& x) { return x; };
  return m;
}

Mapping affine_map(const Eigen::Matrix3d& a, const Eigen::Vector3d& b, int n) {
  Mapping m;
  m.dimension = n;
  Eigen::Matrix3d af = Eigen::Matrix3d::Identity();
  af.topLeftCorner(n, n) = a.topLeftCorner(n, n);
  m.map = [af, b](const Eigen::Vector3d& x) -> Eigen::Vector3d { return af * x + b; };
  m.jacobian = [af](const Eigen::Vector3d&) { return af; };
  const Eigen::Matrix3d ai = af.inverse();
  m.inverse = [ai, b](const Eigen::Vector3d& x) -> Eigen::Vector3d { return ai * (x - b); };
  return m;
}

Mapping annulus_map(double r_inner, double r_outer) {
  Mapping m;
  m.dimension = 2;
  const double dr = 0.5 * (r_outer - r_inner);
  m.map = [=](const Eigen::Vector3d& xi) -> Eigen::Vector3d {
    const double r = r_inner + dr * (xi[0] + 1.0);
    const double th = M_PI * (xi[1] + 1.0);
    return {r * std::cos(th), r * std::sin(th), 0.0};
  };
  m.jacobian = [=](const Eigen::Vector3d& xi) {
    const double r = r_inner + dr * (xi[0] + 1.0);
    const double th = M_PI * (xi[1] + 1.0);
    Eigen::Matrix3d j = Eigen::Matrix3d::Identity();
    j(0, 0) = dr * std::cos(th);
    j(0, 1) = -r * M_PI * std::sin(th);
    j(1, 0) = dr * std::sin(th);
    j(1, 1) = r * M_PI * std::cos(th);
    return j;
  };
  m.inverse = [=](const Eigen::Vector3d& x) -> Eigen::Vector3d {
    const double r = std::hypot(x[0], x[1]);
    double th = std::atan2(x[1], x[0]);
    if (th < 0) th += 2.0 * M_PI;
    return {(r - r_inner) / dr - 1.0, th / M_PI - 1.0, 0.0};
  };
  return m;
}

Mapping annulus_polar_rectangle(double r_inner, double r_outer) {
  Eigen::Matrix3d a = Eigen::Matrix3d::Identity();
  a(0, 0) = 0.5 * (r_outer - r_inner);
  a(1, 1) = M_PI;
  Eigen::Vector3d b(0.5 * (r_outer + r_inner), M_PI, 0.0);
  return affine_map(a, b, 2);
}

Mapping perturbed_quad_map(double c) {
  Mapping m;
  m.dimension = 2;
  m.map = [c](const Eigen::Vector3d& xi) -> Eigen::Vector3d {
    const double s = c * std::sin(M_PI * xi[0]) * std::sin(M_PI * xi[1]);
    return {xi[0] + s, xi[1] + s, 0.0};
  };
  m.jacobian = [c](const Eigen::Vector3d& xi) {
    Eigen::Matrix3d j = Eigen::Matrix3d::Identity();
    const double sx = c * M_PI * std::cos(M_PI * xi[0]) * std::sin(M_PI * xi[1]);
    const double sy = c * M_PI * std::sin(M_PI * xi[0]) * std::cos(M_PI * xi[1]);
    j(0, 0) = 1.0 + sx;
    j(0, 1) = sy;
    j(1, 0) = sx;
    j(1, 1) = 1.0 + sy;
    return j;
  };
  return m;
}

Mapping map_by_name(const std::string& name, double p0, double p1) {
  if (name == "identity1") return identity_map(1);
  if (name == "identity" || name == "identity2") return identity_map(2);
  if (name == "identity3") return identity_map(3);
  if (name == "annulus") return annulus_map(p0, p1);
  if (name == "annulus-polar") return annulus_polar_rectangle(p0, p1);
  if (name == "curved-quad") return perturbed_quad_map(p0);
  if (name == "scaling" || name == "affine") {
    Eigen::Matrix3d a = Eigen::Matrix3d::Identity() * p0;
    return affine_map(a, Eigen::Vector3d::Zero(), 2);
  }
  throw std::invalid_argument("unknown map: " + name);
}

AnalyticForm pullback(const AnalyticForm& form, const Mapping& map) {
  const int n = form.dimension;
  const int k = form.degree;
  AnalyticForm out;
  out.dimension = n;
  out.degree = k;
  const auto comps = form_components(n, k);
  for (std::size_t t = 0; t < comps.size(); ++t) {
    const std::vector<int> tcomp = comps[t];
    out.components.push_back([form, map, tcomp, comps, k](const Eigen::Vector3d& xi) {
      const Eigen::Vector3d x = map.map(xi);
      const Eigen::Matrix3d j = map.jacobian(xi);
      double acc = 0.0;
      for (std::size_t s = 0; s < comps.size(); ++s) {
        // minor of J with rows from the target component, columns ours
        double minor = 1.0;
        if (k > 0) {
          Eigen::MatrixXd blk(k, k);
          for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) blk(p, q) = j(comps[s][p], tcomp[q]);
          minor = blk.determinant();
        }
        if (minor != 0.0) acc += form.components[s](x) * minor;
      }
      return acc;
    });
  }
  if (form.has_derivative()) {
    AnalyticForm d = pullback(form.exterior_derivative(), map);
    out.derivative = d.components;
  }
  return out;
}

MetricField pulled_back_metric(const Mapping& map) {
  MetricField g;
  g.dimension = map.dimension;
  g.tensor = [map](const Eigen::Vector3d& xi) -> Eigen::Matrix3d {
    const Eigen::Matrix3d j = map.jacobian(xi);
    return j.transpose() * j;
  };
  return g;
}

double pullback_commutes_d_check(const AnalyticForm& form, const Mapping& map,
                                 const AnalyticForm& manual, const std::vector<Eigen::Vector3d>& samples) {
  const AnalyticForm lhs = pullback(form.exterior_derivative(), map);
  double res = 0.0;
  for (const auto& xi : samples)
    res = std::max(res, (lhs.eval(xi) - manual.eval(xi)).cwiseAbs().maxCoeff());
  return res;
}

bool orientation_preserving(const Mapping& map, int samples_per_axis) {
  const int n = map.dimension;
  long total = 1;
  for (int a = 0; a < n; ++a) total *= samples_per_axis;
  for (long i = 0; i < total; ++i) {
    long rem = i;
    Eigen::Vector3d xi = Eigen::Vector3d::Zero();
    for (int a = 0; a < n; ++a) {
      xi[a] = -1.0 + 2.0 * (rem % samples_per_axis) / (samples_per_axis - 1.0);
      rem /= samples_per_axis;
    }
    if (map.jacobian_det(xi) <= 0.0) return false;
  }
  return true;
}

}  // namespace msem
