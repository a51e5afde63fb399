#ifndef GEVREY_GEVREY_SCALE_HPP
#define GEVREY_GEVREY_SCALE_HPP

namespace gevrey {

/// Parameters of the extended Gevrey scale: sigma > 1, rho > 0, tau > 0.
struct GevreyParams {
  double sigma = 2.0;
  double rho = 1.0;
  double tau = 1.0;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

/// omega_sigma(x) = x^(sigma/(sigma-1)) / W(x)^(1/(sigma-1)), omega_sigma(0) = 0.
/// Evaluated as x exp(W(x)/(sigma-1)), which is the same function by W(x) e^W(x) = x.
double omega(double sigma, double x);

/// g_sigma(x) = omega_sigma(ln(1 + |x|)); the weight of the Gamma_sigma decay class.
double decay_weight(double sigma, double x);

/// ln f_{rho,sigma}(x) = -rho g_sigma(1/|x|), -inf at x = 0.
double log_flat_profile(double rho, double sigma, double x);

/// f_{rho,sigma}(x) = exp(-rho g_sigma(1/|x|)), flat at the origin, f(0) = 0.
double flat_profile(const GevreyParams& params, double x);
double flat_profile(double rho, double sigma, double x);

/// ln M_p for M_p = p^(tau p^sigma), M_0 = 1.
double log_sequence(double tau, double sigma, long p);

/// T_{tau,sigma}(x) = sup_p (p ln x - ln M_p), x > 0.
double associated_function(double tau, double sigma, double x);

/// h_{tau,sigma}(x) = exp(-T(1/x)) = inf_p M_p x^p, x > 0.
double sequence_infimum(double tau, double sigma, double x);

}  // namespace gevrey

#endif  // GEVREY_GEVREY_SCALE_HPP
