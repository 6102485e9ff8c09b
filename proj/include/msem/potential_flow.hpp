#ifndef MSEM_POTENTIAL_FLOW_HPP
#define MSEM_POTENTIAL_FLOW_HPP

#include "msem/forms.hpp"

namespace msem {

// Cylinder potential flow with circulation `gamma` on the annulus, written in
// (r, theta) coordinates:
//   v = cos(theta)(1 - 1/r^2) dr - [sin(theta)(r + 1/r) - gamma/(2 pi)] dtheta
// which is d[cos(theta)(r + 1/r)] + gamma/(2 pi) dtheta. The form is closed;
// its circulation around any circle r = const equals gamma.
AnalyticForm potential_flow_velocity(double gamma);

// the single-valued potential cos(theta)(r + 1/r) whose gradient is the
// gamma = 0 velocity
AnalyticForm potential_flow_potential();

}  // namespace msem

#endif
