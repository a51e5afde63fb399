#ifndef GEVREY_DECAY_HPP
#define GEVREY_DECAY_HPP

#include <optional>
#include <vector>

#include "gevrey/filter.hpp"

namespace gevrey {

/// sigma_eta = (sigma + eta (sigma - 1)) / (1 + eta (sigma - 1)), in (1, sigma).
double sigma_eta(double sigma, double eta);

/// xi_n = 2^(n+2) pi / 3 - (-1)^n eps, which lies in [2^n pi, 2^(n+1) pi].
double evaluation_point(int n, double eps);

/// Empirical rho at xi: -ln|phi_hat(xi)| / g_{sigma_ref}(xi); +inf where phi_hat vanishes.
double decay_ratio(const LowPassFilter& m0, double xi, double sigma_ref);
double decay_ratio_from_log(double log_abs, double xi, double sigma_ref);

struct DecaySample {
  int n = 0;
  double xi = 0.0;
  double log_abs = 0.0;
  bool zero = false;
  double r_upper = 0.0;  // decay_ratio at sigma
  double r_lower = 0.0;  // decay_ratio at sigma_eta
};

struct DecayReport {
  double sigma = 0.0;
  double eta = 0.0;
  double sigma_eta = 0.0;
  double eps = 0.0;
  double envelope_eps = 0.0;  // window on which the local envelope was checked
  int n_min = 0;
  int n_max = 0;
  std::vector<DecaySample> samples;
  double fitted_rho = 0.0;  // least squares of ln|phi_hat| against g_sigma
  double fitted_C = 0.0;
  double r_upper_min = 0.0;
  double r_upper_max = 0.0;
  double bracket_ratio = 0.0;  // r_upper_max / r_upper_min, must be <= 10
  double lower_limit = 0.0;    // 2 r_lower(n_min)
  bool all_nonzero = false;
  bool bracket_ok = false;
  bool lower_ok = false;
  bool pass = false;
  std::optional<int> zero_at_n;
};

inline constexpr double kBracketLimit = 10.0;
inline constexpr double kLowerSlack = 2.0;

/// Window used for the envelope precondition: eps/2, capped at pi/8 so it stays
/// inside (2pi/3 - 2pi/15, 2pi/3 + 2pi/15) where m0 has no further zeros.
double envelope_window(double eps);

/// Evaluates phi_hat at xi_n for n_min..n_max and judges the two-sided estimate.
/// Throws std::runtime_error when the envelope check fails on envelope_window(eps).
DecayReport run_decay_suite(const LowPassFilter& m0, double eps, int n_min, int n_max, double eta,
                            unsigned jobs = 1);

/// decay_ratio at each sample of a report for another reference sigma.
std::vector<double> ratio_series(const DecayReport& report, double sigma_ref);

struct FlatnessResult {
  std::vector<double> derivatives;
  bool decreasing = false;  // |derivative| strictly decreasing along x_list
};

/// j-th derivative of f_{rho_sigma, sigma}, rho_sigma = e^{-1/sigma}, by central
/// differences with h = x/20, Richardson-extrapolated over h, h/2, h/4.
FlatnessResult flatness_check(double sigma, int j, const std::vector<double>& x_list);

/// a_j = ln(1 + 2^j / eps), accurate for j far beyond the double range of 2^j.
double c_eta_argument(long j, double eps);
/// (W(a_j) / a_j)^eta
double c_eta_term(long j, double eps, double eta);
/// sum_{j=1}^{J} of the terms above.
double c_eta_partial_sum(long J, double eps, double eta);

struct ComparisonScan {
  double sigma_prime = 0.0;
  double xi0 = 0.0;     // the inequality holds at every scanned xi >= xi0
  bool holds = false;   // holds at the end of the scan
};

/// Scans g_{sigma_eta}(xi) <= rho g_{sigma'}(xi) on a log grid of [1, xi_end].
ComparisonScan comparison_scan(double sigma_eta_value, double sigma_prime, double rho,
                               double xi_end, int points = 2000);

}  // namespace gevrey

#endif  // GEVREY_DECAY_HPP
