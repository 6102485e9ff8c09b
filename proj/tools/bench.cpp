// Timing comparison of the serial reference kernels against the cell-parallel
// OpenMP variants: reduction of a 2-form on a fine grid and 1-form mass
// assembly. Also verifies that the parallel results match bitwise.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "msem/mimetic.hpp"
#include "msem/operators.hpp"
#include "msem/parallel.hpp"

using namespace msem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

AnalyticForm test_form() {
  AnalyticForm a;
  a.dimension = 2;
  a.degree = 2;
  a.components = {[](const Eigen::Vector3d& x) {
    return std::sin(3.0 * x[0] + 0.2) * std::cos(2.0 * x[1]) + x[0] * x[1];
  }};
  return a;
}

}  // namespace

int main() {
#ifdef MSEM_HAVE_OPENMP
  std::printf("OpenMP enabled, %d hardware threads\n", omp_get_num_procs());
#else
  std::printf("built without OpenMP; every variant runs the serial path\n");
#endif

  const int order = 48;
  const TensorBasis basis(2, 2, Side::primal, order);
  const SupportGrid grid = support_of(basis);
  const AnalyticForm a = test_form();
  const Quadrature quad{8};

  std::printf("reduction of a 2-form, %d x %d cells, %d^2 Gauss points per cell\n", order, order,
              quad.points);
  auto t0 = Clock::now();
  const Eigen::VectorXd serial = reduce_on_support_serial(a, grid, quad);
  const double t_serial = seconds_since(t0);
  std::printf("  serial reference: %8.3f ms\n", 1e3 * t_serial);

  for (int threads : {2, 4, 8}) {
    set_thread_count(threads);
    t0 = Clock::now();
    const Eigen::VectorXd par = reduce_on_support(a, grid, quad);
    const double t_par = seconds_since(t0);
    const bool same = (par - serial).lpNorm<Eigen::Infinity>() == 0.0;
    std::printf("  %d threads:       %8.3f ms   speedup %.2fx   bitwise %s\n", threads,
                1e3 * t_par, t_serial / t_par, same ? "equal" : "DIFFERENT");
  }

  const int morder = 6;
  const TensorBasis mb(2, 1, Side::primal, morder);
  const MetricField id = identity_metric(2);
  std::printf("mass matrix of 1-forms, order %d (%ld dofs)\n", morder, (long)mb.dof_count());
  set_thread_count(1);
  t0 = Clock::now();
  const Eigen::MatrixXd m1 = mass_matrix(mb, id);
  const double tm1 = seconds_since(t0);
  std::printf("  serial reference: %8.3f ms\n", 1e3 * tm1);
  for (int threads : {2, 4, 8}) {
    set_thread_count(threads);
    t0 = Clock::now();
    const Eigen::MatrixXd mp = mass_matrix(mb, id);
    const double tp = seconds_since(t0);
    const bool same = (mp - m1).lpNorm<Eigen::Infinity>() == 0.0;
    std::printf("  %d threads:       %8.3f ms   speedup %.2fx   bitwise %s\n", threads, 1e3 * tp,
                tm1 / tp, same ? "equal" : "DIFFERENT");
  }
  set_thread_count(1);
  return 0;
}
