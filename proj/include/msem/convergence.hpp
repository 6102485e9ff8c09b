#ifndef MSEM_CONVERGENCE_HPP
#define MSEM_CONVERGENCE_HPP

#include <functional>
#include <vector>

namespace msem {

struct ConvergenceRow {
  int elements;
  double h;
  double l2_error;
  double h_semi_error;  // |d(a - pi a)| for 0-forms; 0 for 1-forms
};

// h-refinement of the projection on [-1,1] split into uniform elements, each
// carrying the order-p Gauss-Lobatto family. For degree 0 the function and its
// derivative are interpolated; for degree 1 `f` is the dx-proxy and the edge
// family histopolates it.
std::vector<ConvergenceRow> h_refinement_1d(int degree, const std::function<double(double)>& f,
                                            const std::function<double(double)>& df, int p,
                                            const std::vector<int>& element_counts,
                                            int error_quad_points = 24);

// observed orders between consecutive rows (size = rows - 1)
std::vector<double> observed_orders(const std::vector<ConvergenceRow>& rows);

}  // namespace msem

#endif
