#ifndef GEVREY_QUADRATURE_HPP
#define GEVREY_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace gevrey {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are computed once per order and shared read-only afterwards.
const GaussLegendreRule& gauss_legendre(std::size_t order);

template <class F>
double integrate(const GaussLegendreRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return acc * half;
}

}  // namespace gevrey

#endif  // GEVREY_QUADRATURE_HPP
