#ifndef MSEM_TESTS_FORMS_TESTLIB_HPP
#define MSEM_TESTS_FORMS_TESTLIB_HPP

#include <cmath>
#include <random>

#include "msem/forms.hpp"

namespace msem::testing {

struct Smooth1D {
  std::function<double(double)> v;
  std::function<double(double)> dv;
};

inline Smooth1D random_smooth_1d(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c0 = u(rng), c1 = u(rng), w = 1.0 + 2.0 * std::abs(u(rng)), ph = u(rng);
  return {[=](double x) { return c0 + c1 * std::sin(w * x + ph); },
          [=](double x) { return c1 * w * std::cos(w * x + ph); }};
}

// random k-form with separable smooth components and its analytic derivative
inline AnalyticForm random_smooth_form(int n, int k, std::mt19937& rng) {
  const auto comps = form_components(n, k);
  std::vector<std::array<Smooth1D, 3>> factors(comps.size());
  for (auto& f : factors)
    for (int a = 0; a < n; ++a) f[a] = random_smooth_1d(rng);

  AnalyticForm form;
  form.dimension = n;
  form.degree = k;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto f = factors[c];
    form.components.push_back([f, n](const Eigen::Vector3d& x) {
      double acc = 1.0;
      for (int a = 0; a < n; ++a) acc *= f[a].v(x[a]);
      return acc;
    });
  }
  if (k < n) {
    const auto dcomps = form_components(n, k + 1);
    for (std::size_t dc = 0; dc < dcomps.size(); ++dc) {
      // collect the contributions d_a (component S) with {a} u S = dcomps[dc]
      struct Term {
        int axis;
        int comp;
        int sign;
      };
      std::vector<Term> terms;
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (int a = 0; a < n; ++a) {
          const int s = shuffle_sign({a}, comps[c]);
          if (s == 0) continue;
          const std::vector<int> single{a};
          std::vector<int> u;
          std::merge(comps[c].begin(), comps[c].end(), single.begin(), single.end(),
                     std::back_inserter(u));
          if (u == dcomps[dc]) terms.push_back({a, static_cast<int>(c), s});
        }
      form.derivative.push_back([terms, factors, n](const Eigen::Vector3d& x) {
        double acc = 0.0;
        for (const auto& t : terms) {
          double prod = t.sign;
          for (int a = 0; a < n; ++a)
            prod *= (a == t.axis) ? factors[t.comp][a].dv(x[a]) : factors[t.comp][a].v(x[a]);
          acc += prod;
        }
        return acc;
      });
    }
  }
  return form;
}

}  // namespace msem::testing

#endif
