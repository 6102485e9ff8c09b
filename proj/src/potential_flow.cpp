#include "msem/potential_flow.hpp"

#include <cmath>

namespace msem {

AnalyticForm potential_flow_velocity(double gamma) {
  AnalyticForm v;
  v.dimension = 2;
  v.degree = 1;
  v.components = {
      [](const Eigen::Vector3d& x) {
        const double r = x[0], th = x[1];
        return std::cos(th) * (1.0 - 1.0 / (r * r));
      },
      [gamma](const Eigen::Vector3d& x) {
        const double r = x[0], th = x[1];
        return -std::sin(th) * (r + 1.0 / r) + gamma / (2.0 * M_PI);
      },
  };
  v.derivative = {[](const Eigen::Vector3d&) { return 0.0; }};
  return v;
}

AnalyticForm potential_flow_potential() {
  return AnalyticForm::zero_form(
      2, [](const Eigen::Vector3d& x) { return std::cos(x[1]) * (x[0] + 1.0 / x[0]); },
      {[](const Eigen::Vector3d& x) {
         return std::cos(x[1]) * (1.0 - 1.0 / (x[0] * x[0]));
       },
       [](const Eigen::Vector3d& x) { return -std::sin(x[1]) * (x[0] + 1.0 / x[0]); }});
}

}  // namespace msem
