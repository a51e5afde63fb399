#ifndef GEVREY_LAMBERT_W_HPP
#define GEVREY_LAMBERT_W_HPP

#include <vector>

namespace gevrey {

/// Principal branch of the Lambert W function on [-1/e, inf).
///
/// Throws std::domain_error for x < -1/e.
double lambert_w(double x);

/// W'(x) = W(x) / (x (1 + W(x))), defined for x > 0.
double lambert_w_prime(double x);

/// Polynomial p_n in the closed form of the n-th derivative of W.
/// Coefficients are stored in ascending powers and are integer valued.
struct LambertPolynomial {
  std::vector<double> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  double operator()(double x) const;
  LambertPolynomial derivative() const;
};

/// p_1 = 1, p_{n+1}(x) = (1 + x) p_n'(x) - (n x + 3n - 1) p_n(x).
LambertPolynomial p_polynomial(int n);

/// n-th derivative of W at x > 0:
///   W^n(x) p_n(W(x)) / (x^n (1 + W(x))^(2n - 1)).
double lambert_w_derivative(double x, int n);

}  // namespace gevrey

#endif  // GEVREY_LAMBERT_W_HPP
