#include "gevrey/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gevrey/gevrey_scale.hpp"
#include "gevrey/lambert_w.hpp"
#include "gevrey/parallel.hpp"
#include "gevrey/wavelet.hpp"

namespace gevrey {

double sigma_eta(double sigma, double eta) {
  if (!(sigma > 1.0)) throw std::invalid_argument("sigma_eta: sigma must exceed 1");
  if (!(eta > 1.0)) {
    throw std::domain_error("sigma_eta: eta must exceed 1 (C_eta diverges otherwise), got " +
                            std::to_string(eta));
  }
  const double s = eta * (sigma - 1.0);
  return (sigma + s) / (1.0 + s);
}

double evaluation_point(int n, double eps) {
  if (n < 1) throw std::invalid_argument("evaluation_point: n must be positive");
  if (!(eps > 0.0 && eps < 8.0 * kPi / 15.0)) {
    throw std::domain_error("evaluation_point: eps must lie in (0, 8pi/15)");
  }
  const double center = std::ldexp(kTwoPiOverThree, n + 1);
  return n % 2 == 0 ? center - eps : center + eps;
}

double decay_ratio_from_log(double log_abs, double xi, double sigma_ref) {
  if (log_abs == -std::numeric_limits<double>::infinity()) {
    return std::numeric_limits<double>::infinity();
  }
  if (log_abs >= 0.0) return 0.0;
  return -log_abs / decay_weight(sigma_ref, xi);
}

double decay_ratio(const LowPassFilter& m0, double xi, double sigma_ref) {
  return decay_ratio_from_log(log_scaling_hat(m0, xi).log_abs, xi, sigma_ref);
}

double envelope_window(double eps) { return std::min(0.5 * eps, kPi / 8.0); }

DecayReport run_decay_suite(const LowPassFilter& m0, double eps, int n_min, int n_max, double eta,
                            unsigned jobs) {
  if (n_min < 3 || n_max > 20 || n_min > n_max) {
    throw std::invalid_argument("run_decay_suite: need 3 <= n_min <= n_max <= 20");
  }
  DecayReport rep;
  rep.sigma = m0.config().sigma;
  rep.eta = eta;
  rep.sigma_eta = sigma_eta(rep.sigma, eta);
  rep.eps = eps;
  rep.n_min = n_min;
  rep.n_max = n_max;
  evaluation_point(n_min, eps);  // range check on eps

  rep.envelope_eps = envelope_window(eps);
  const EnvelopeResult env = m0.verify_envelope(rep.envelope_eps);
  if (!env.ok) {
    throw std::runtime_error("run_decay_suite: local envelope of m0 near 2pi/3 failed on eps' = " +
                             std::to_string(rep.envelope_eps));
  }

  rep.samples.resize(static_cast<std::size_t>(n_max - n_min + 1));
  parallel_for(rep.samples.size(), jobs, [&](std::size_t i) {
    DecaySample& s = rep.samples[i];
    s.n = n_min + static_cast<int>(i);
    s.xi = evaluation_point(s.n, eps);
    const LogMagnitude lm = log_scaling_hat(m0, s.xi);
    s.log_abs = lm.log_abs;
    s.zero = lm.zero;
    s.r_upper = decay_ratio_from_log(lm.log_abs, s.xi, rep.sigma);
    s.r_lower = decay_ratio_from_log(lm.log_abs, s.xi, rep.sigma_eta);
  });

  rep.all_nonzero = true;
  for (const auto& s : rep.samples) {
    if (s.zero) {
      rep.all_nonzero = false;
      if (!rep.zero_at_n) rep.zero_at_n = s.n;
    }
  }

  // ln|phi_hat| ~ ln C - rho g_sigma(xi)
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (const auto& s : rep.samples) {
    if (s.zero) continue;
    const double x = decay_weight(rep.sigma, s.xi);
    sx += x;
    sy += s.log_abs;
    sxx += x * x;
    sxy += x * s.log_abs;
    ++count;
  }
  if (count >= 2) {
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    rep.fitted_rho = -slope;
    rep.fitted_C = std::exp((sy - slope * sx) / count);
  }

  if (rep.all_nonzero) {
    rep.r_upper_min = std::numeric_limits<double>::infinity();
    for (const auto& s : rep.samples) {
      rep.r_upper_min = std::min(rep.r_upper_min, s.r_upper);
      rep.r_upper_max = std::max(rep.r_upper_max, s.r_upper);
    }
    rep.bracket_ratio = rep.r_upper_max / rep.r_upper_min;
    rep.bracket_ok = rep.r_upper_min > 0.0 && rep.bracket_ratio <= kBracketLimit;
    rep.lower_limit = kLowerSlack * rep.samples.front().r_lower;
    rep.lower_ok = std::all_of(rep.samples.begin(), rep.samples.end(),
                               [&](const DecaySample& s) { return s.r_lower <= rep.lower_limit; });
  }
  rep.pass = rep.all_nonzero && rep.bracket_ok && rep.lower_ok;
  return rep;
}

std::vector<double> ratio_series(const DecayReport& report, double sigma_ref) {
  std::vector<double> out;
  out.reserve(report.samples.size());
  for (const auto& s : report.samples) {
    out.push_back(decay_ratio_from_log(s.log_abs, s.xi, sigma_ref));
  }
  return out;
}

FlatnessResult flatness_check(double sigma, int j, const std::vector<double>& x_list) {
  if (!(sigma > 1.0)) throw std::invalid_argument("flatness_check: sigma must exceed 1");
  if (j < 1 || j > 5) throw std::invalid_argument("flatness_check: order must lie in [1, 5]");
  if (x_list.empty()) throw std::invalid_argument("flatness_check: empty abscissa list");
  for (std::size_t i = 0; i < x_list.size(); ++i) {
    if (!(x_list[i] >= 1e-3)) {
      throw std::invalid_argument("flatness_check: abscissae must be at least 1e-3");
    }
    if (i > 0 && !(x_list[i] < x_list[i - 1])) {
      throw std::invalid_argument("flatness_check: abscissae must be strictly decreasing");
    }
  }
  const double rho = std::exp(-1.0 / sigma);
  const auto f = [&](double x) { return flat_profile(rho, sigma, x); };

  double binom[6] = {1, 0, 0, 0, 0, 0};
  for (int k = 1; k <= j; ++k) {
    for (int i = k; i > 0; --i) binom[i] += binom[i - 1];
  }
  const auto central = [&](double x, double h) {
    double acc = 0.0;
    for (int k = 0; k <= j; ++k) {
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      acc += sign * binom[k] * f(x + (0.5 * j - k) * h);
    }
    return acc / std::pow(h, j);
  };

  FlatnessResult out;
  for (const double x : x_list) {
    const double h = x / 20.0;
    const double d0 = central(x, h);
    const double d1 = central(x, 0.5 * h);
    const double d2 = central(x, 0.25 * h);
    const double r0 = (4.0 * d1 - d0) / 3.0;
    const double r1 = (4.0 * d2 - d1) / 3.0;
    out.derivatives.push_back((16.0 * r1 - r0) / 15.0);
  }
  out.decreasing = true;
  for (std::size_t i = 1; i < out.derivatives.size(); ++i) {
    if (!(std::abs(out.derivatives[i]) < std::abs(out.derivatives[i - 1]))) out.decreasing = false;
  }
  return out;
}

double c_eta_argument(long j, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("c_eta_argument: eps must be positive");
  if (j <= 50) return std::log1p(std::ldexp(1.0, static_cast<int>(j)) / eps);
  return static_cast<double>(j) * std::numbers::ln2 - std::log(eps) +
         std::log1p(std::ldexp(eps, -static_cast<int>(std::min(j, 2000L))));
}

double c_eta_term(long j, double eps, double eta) {
  const double a = c_eta_argument(j, eps);
  return std::pow(lambert_w(a) / a, eta);
}

double c_eta_partial_sum(long J, double eps, double eta) {
  if (J < 1) throw std::invalid_argument("c_eta_partial_sum: J must be positive");
  double sum = 0.0;
  double carry = 0.0;
  for (long j = 1; j <= J; ++j) {
    const double y = c_eta_term(j, eps, eta) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

ComparisonScan comparison_scan(double sigma_eta_value, double sigma_prime, double rho,
                               double xi_end, int points) {
  if (!(sigma_prime > 1.0 && sigma_eta_value > 1.0)) {
    throw std::invalid_argument("comparison_scan: sigmas must exceed 1");
  }
  if (!(rho > 0.0) || !(xi_end > 1.0) || points < 2) {
    throw std::invalid_argument("comparison_scan: need rho > 0, xi_end > 1, points >= 2");
  }
  ComparisonScan out;
  out.sigma_prime = sigma_prime;
  const double log_end = std::log(xi_end);
  double first_good = 1.0;
  bool ok = false;
  for (int i = 0; i < points; ++i) {
    const double xi = std::exp(log_end * i / (points - 1));
    ok = decay_weight(sigma_eta_value, xi) <= rho * decay_weight(sigma_prime, xi);
    if (!ok) first_good = i + 1 < points ? std::exp(log_end * (i + 1) / (points - 1)) : xi_end;
  }
  out.xi0 = first_good;
  out.holds = ok;
  return out;
}

}  // namespace gevrey
