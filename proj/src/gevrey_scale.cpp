#include "gevrey/gevrey_scale.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gevrey/lambert_w.hpp"

namespace gevrey {
namespace {

constexpr double kUnderflowExponent = 700.0;
constexpr int kScanHysteresis = 8;
constexpr long kScanCap = 10000;

void require_sigma(double sigma, const char* who) {
  if (!(sigma > 1.0)) {
    throw std::invalid_argument(std::string(who) + ": sigma must exceed 1, got " +
                                std::to_string(sigma));
  }
}

}  // namespace

void GevreyParams::validate() const {
  if (!(sigma > 1.0)) throw std::invalid_argument("GevreyParams: sigma must exceed 1");
  if (!(rho > 0.0)) throw std::invalid_argument("GevreyParams: rho must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("GevreyParams: tau must be positive");
}

double omega(double sigma, double x) {
  require_sigma(sigma, "omega");
  if (x < 0.0) {
    throw std::domain_error("omega: argument must be nonnegative, got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  return x * std::exp(lambert_w(x) / (sigma - 1.0));
}

double decay_weight(double sigma, double x) {
  return omega(sigma, std::log1p(std::abs(x)));
}

double log_flat_profile(double rho, double sigma, double x) {
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  return -rho * decay_weight(sigma, 1.0 / std::abs(x));
}

double flat_profile(double rho, double sigma, double x) {
  if (x == 0.0) return 0.0;
  const double e = -log_flat_profile(rho, sigma, x);
  if (e > kUnderflowExponent) return 0.0;
  return std::exp(-e);
}

double flat_profile(const GevreyParams& params, double x) {
  return flat_profile(params.rho, params.sigma, x);
}

double log_sequence(double tau, double sigma, long p) {
  if (p <= 1) return 0.0;
  const double pp = static_cast<double>(p);
  return tau * std::pow(pp, sigma) * std::log(pp);
}

double associated_function(double tau, double sigma, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("associated_function: argument must be positive");
  }
  const double lx = std::log(x);
  double best = 0.0;  // p = 0 term
  double previous = 0.0;
  int decreasing = 0;
  for (long p = 1; p <= kScanCap; ++p) {
    const double term = static_cast<double>(p) * lx - log_sequence(tau, sigma, p);
    if (term > best) best = term;
    decreasing = term < previous ? decreasing + 1 : 0;
    if (decreasing >= kScanHysteresis) break;
    previous = term;
  }
  return best;
}

double sequence_infimum(double tau, double sigma, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("sequence_infimum: argument must be positive, got " +
                            std::to_string(x));
  }
  return std::exp(-associated_function(tau, sigma, 1.0 / x));
}

}  // namespace gevrey
