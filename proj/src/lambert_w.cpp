#include "gevrey/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gevrey {
namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e rounded to nearest
constexpr double kBranchWindow = 1e-6;
constexpr double kSeriesRadius = 0.3;
constexpr double kLargeArgument = 1e20;
constexpr int kMaxIterations = 50;
constexpr double kResidualStop = 1e-15;

// W around the branch point in powers of p = sqrt(2 (e x + 1)).
double branch_point_series(double x) {
  const double t = std::fma(std::numbers::e, x, 1.0);
  const double p = std::sqrt(2.0 * std::max(t, 0.0));
  return -1.0 +
         p * (1.0 +
              p * (-1.0 / 3.0 +
                   p * (11.0 / 72.0 +
                        p * (-43.0 / 540.0 +
                             p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
}

double initial_guess(double x) {
  if (x < -kSeriesRadius) return branch_point_series(x);
  if (x < kSeriesRadius) return x * (1.0 + x * (-1.0 + 1.5 * x));
  if (x >= std::numbers::e) {
    const double l = std::log(x);
    return l - std::log(l);
  }
  // W(0.3) to W(e) = 1, linear in between.
  constexpr double w_lo = 0.23675531078855933;
  const double s = (x - kSeriesRadius) / (std::numbers::e - kSeriesRadius);
  return w_lo + s * (1.0 - w_lo);
}

[[noreturn]] void iteration_overrun(double x) {
  throw std::runtime_error("lambert_w: iteration cap exceeded at x = " +
                           std::to_string(x));
}

// Newton on w + ln w - ln x = 0, used where w e^w would overflow.
double solve_log_form(double x) {
  const double lx = std::log(x);
  double w = lx - std::log(lx);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double r = w + std::log(w) - lx;
    const double step = r / (1.0 + 1.0 / w);
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * w) {
      return w;
    }
  }
  iteration_overrun(x);
}

double solve_halley(double x) {
  double w = initial_guess(x);
  const double scale = std::max(std::abs(x), 1e-300);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= kResidualStop * scale) return w;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <=
        2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(w), 1e-300)) {
      return w;
    }
  }
  iteration_overrun(x);
}

void require_positive(double x, const char* who) {
  if (!(x > 0.0)) {
    throw std::domain_error(std::string(who) + ": argument must be positive, got " +
                            std::to_string(x));
  }
}

}  // namespace

double lambert_w(double x) {
  if (std::isnan(x)) return x;
  if (x < -kInvE) {
    throw std::domain_error("lambert_w: argument " + std::to_string(x) +
                            " lies below the branch point -1/e");
  }
  if (x == -kInvE) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  if (x <= -kInvE + kBranchWindow) return branch_point_series(x);
  if (x > kLargeArgument) return solve_log_form(x);
  return solve_halley(x);
}

double lambert_w_prime(double x) {
  require_positive(x, "lambert_w_prime");
  const double w = lambert_w(x);
  return w / (x * (1.0 + w));
}

double LambertPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

LambertPolynomial LambertPolynomial::derivative() const {
  LambertPolynomial d;
  if (coefficients.size() <= 1) {
    d.coefficients = {0.0};
    return d;
  }
  d.coefficients.resize(coefficients.size() - 1);
  for (std::size_t k = 1; k < coefficients.size(); ++k) {
    d.coefficients[k - 1] = static_cast<double>(k) * coefficients[k];
  }
  return d;
}

LambertPolynomial p_polynomial(int n) {
  if (n < 1) {
    throw std::domain_error("p_polynomial: order must be >= 1, got " + std::to_string(n));
  }
  LambertPolynomial p{{1.0}};
  for (int k = 1; k < n; ++k) {
    const LambertPolynomial dp = p.derivative();
    const double kk = static_cast<double>(k);
    std::vector<double> next(p.coefficients.size() + 1, 0.0);
    // (1 + x) p'
    for (std::size_t i = 0; i < dp.coefficients.size(); ++i) {
      next[i] += dp.coefficients[i];
      next[i + 1] += dp.coefficients[i];
    }
    // -(k x + 3k - 1) p
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
      next[i] -= (3.0 * kk - 1.0) * p.coefficients[i];
      next[i + 1] -= kk * p.coefficients[i];
    }
    while (next.size() > 1 && next.back() == 0.0) next.pop_back();
    p.coefficients = std::move(next);
  }
  return p;
}

double lambert_w_derivative(double x, int n) {
  require_positive(x, "lambert_w_derivative");
  if (n < 1) {
    throw std::domain_error("lambert_w_derivative: order must be >= 1");
  }
  const double w = lambert_w(x);
  const double pn = p_polynomial(n)(w);
  if (pn == 0.0) return 0.0;
  const double nn = static_cast<double>(n);
  if (n <= 10) {
    return std::pow(w, nn) * pn / (std::pow(x, nn) * std::pow(1.0 + w, 2.0 * nn - 1.0));
  }
  // x^n overflows quickly for the arguments used in the decay checks.
  const double log_mag = nn * std::log(w) + std::log(std::abs(pn)) - nn * std::log(x) -
                         (2.0 * nn - 1.0) * std::log1p(w);
  return std::copysign(std::exp(log_mag), pn);
}

}  // namespace gevrey
