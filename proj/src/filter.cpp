#include "gevrey/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gevrey/gevrey_scale.hpp"
#include "gevrey/quadrature.hpp"

namespace gevrey {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kIntervalOrder = 8;
constexpr std::size_t kHeadOrder = 16;
constexpr int kMaxRefinement = 24;

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

void FilterConfig::validate() const {
  if (!(sigma > 1.0)) {
    throw std::invalid_argument("FilterConfig: sigma must exceed 1, got " + std::to_string(sigma));
  }
  if (!(d > 0.0 && d <= kPi / 6.0)) {
    throw std::invalid_argument("FilterConfig: d must lie in (0, pi/6], got " + std::to_string(d));
  }
  if (!(quad_tol > 0.0 && quad_tol <= 1e-6)) {
    throw std::invalid_argument("FilterConfig: quad_tol must lie in (0, 1e-6]");
  }
  if (table_n < 257 || table_n % 2 == 0) {
    throw std::invalid_argument("FilterConfig: table_n must be odd and >= 257, got " +
                                std::to_string(table_n));
  }
}

double cutoff_profile(double sigma, double eta) {
  if (eta <= 0.0) return 0.0;
  return flat_profile(1.0, sigma, eta);
}

double reduce_angle(double xi) { return std::remainder(xi, kTwoPi); }

// ---------------------------------------------------------------------------
// DeltaTable

double DeltaTable::log_integrand(double eta) const {
  return -decay_weight(sigma_, 1.0 / eta) - decay_weight(sigma_, 1.0 / (1.0 - eta));
}

double DeltaTable::integrand(double eta) const { return std::exp(log_integrand(eta)); }

double DeltaTable::interval_mass(double a, double b) const {
  const auto& rule = gauss_legendre(kIntervalOrder);
  return integrate(rule, [this](double eta) { return integrand(eta); }, a, b);
}

double DeltaTable::log_head_mass(double s) const {
  // Geometric pieces [s/2^(k+1), s/2^k]; the integrand is flat to all orders at 0,
  // so the pieces shrink super-exponentially and the sum is kept in log form.
  const auto& rule = gauss_legendre(kHeadOrder);
  double total = kNegInf;
  double previous = kNegInf;
  double hi = s;
  for (int k = 0; k < 2000 && hi > 1e-300; ++k) {
    const double lo = 0.5 * hi;
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double piece = kNegInf;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      piece = log_add(piece, std::log(rule.weights[i] * half) +
                                 log_integrand(mid + half * rule.nodes[i]));
    }
    total = log_add(total, piece);
    if (k >= 2 && piece < previous && piece < total - 60.0) break;
    previous = piece;
    hi = lo;
  }
  return total;
}

DeltaTable DeltaTable::build(const FilterConfig& config) {
  config.validate();
  DeltaTable t;
  t.sigma_ = config.sigma;
  const auto n = static_cast<std::size_t>(config.table_n);
  t.step_ = 0.5 / static_cast<double>(n - 1);

  // Coarse estimate of the half mass to turn quad_tol into an absolute bound.
  double half_estimate = 0.0;
  for (int i = 0; i < 64; ++i) {
    half_estimate += t.interval_mass(i / 128.0, (i + 1) / 128.0);
  }
  const double local_tol = config.quad_tol * half_estimate * t.step_;

  t.raw_.assign(n, 0.0);
  t.raw_[1] = std::exp(t.log_head_mass(t.step_));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double a = static_cast<double>(i) * t.step_;
    const double b = static_cast<double>(i + 1) * t.step_;
    const double whole = t.interval_mass(a, b);
    // One refinement level must agree with the single rule.
    double refined = 0.0;
    int parts = 2;
    double previous = whole;
    for (int level = 0;; ++level) {
      refined = 0.0;
      for (int k = 0; k < parts; ++k) {
        refined += t.interval_mass(a + (b - a) * k / parts, a + (b - a) * (k + 1) / parts);
      }
      if (std::abs(refined - previous) <= local_tol) break;
      if (level >= kMaxRefinement) {
        throw std::runtime_error("DeltaTable: quadrature failed to reach quad_tol on [" +
                                 std::to_string(a) + ", " + std::to_string(b) + "]");
      }
      previous = refined;
      parts *= 2;
    }
    // Keep the single-rule value when it is within tolerance so that partial
    // integrals evaluated later join the node values continuously.
    t.raw_[i + 1] = t.raw_[i] + (std::abs(refined - whole) <= local_tol ? whole : refined);
  }

  t.normalization_ = 2.0 * t.raw_.back();
  t.log_normalization_ = std::log(t.normalization_);
  t.cumulative_.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.cumulative_[i] = t.raw_[i] / t.normalization_;
  return t;
}

std::vector<double> DeltaTable::nodes() const {
  std::vector<double> out(raw_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(i) * step_;
  return out;
}

double DeltaTable::half_value(double x) const {
  if (x <= 0.0) return 0.0;
  const std::size_t last = raw_.size() - 1;
  const auto i = std::min(static_cast<std::size_t>(x / step_), last);
  if (i == last) return 0.5;
  if (i == 0) return std::exp(log_head_mass(x) - log_normalization_);
  const double a = static_cast<double>(i) * step_;
  return (raw_[i] + interval_mass(a, x)) / normalization_;
}

double DeltaTable::operator()(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x > 0.5) return 1.0 - half_value(1.0 - x);
  return half_value(x);
}

double DeltaTable::complement(double x) const {
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  if (x > 0.5) return half_value(1.0 - x);
  return 1.0 - half_value(x);
}

double DeltaTable::log_value(double x) const {
  if (x <= 0.0) return kNegInf;
  if (x >= 1.0) return 0.0;
  if (x > 0.5) return std::log1p(-half_value(1.0 - x));
  if (x < step_) return log_head_mass(x) - log_normalization_;
  return std::log(half_value(x));
}

double DeltaTable::log_complement(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return kNegInf;
  if (x > 0.5) return log_value(1.0 - x);
  return std::log1p(-half_value(x));
}

// ---------------------------------------------------------------------------
// LowPassFilter

LowPassFilter::LowPassFilter(const FilterConfig& config)
    : config_(config), table_(DeltaTable::build(config)) {}

double LowPassFilter::theta_upper(double u) const {
  const double first = table_.complement((5.0 * u - kPi) / (3.0 * kPi));
  if (first == 0.0) return 0.0;
  return first * table_(std::abs(u - kTwoPiOverThree) / config_.d);
}

double LowPassFilter::log_theta_upper(double u) const {
  const double first = table_.log_complement((5.0 * u - kPi) / (3.0 * kPi));
  if (first == kNegInf) return kNegInf;
  return first + table_.log_value(std::abs(u - kTwoPiOverThree) / config_.d);
}

double LowPassFilter::theta(double xi) const {
  const double u = std::abs(reduce_angle(xi));
  if (u >= 0.5 * kPi) return theta_upper(u);
  return 1.0 - theta_upper(kPi - u);
}

double LowPassFilter::operator()(double xi) const {
  return std::sin(0.5 * kPi * theta(xi));
}

double LowPassFilter::log_value(double xi) const {
  const double u = std::abs(reduce_angle(xi));
  if (u < 0.5 * kPi) return std::log(std::sin(0.5 * kPi * (1.0 - theta_upper(kPi - u))));
  const double th = theta_upper(u);
  if (th > 1e-3) return std::log(std::sin(0.5 * kPi * th));
  const double log_th = log_theta_upper(u);
  if (log_th == kNegInf) return kNegInf;
  // sin(x) = x (1 - x^2/6 + ...), x = pi/2 theta
  const double x = 0.5 * kPi * th;
  return std::log(0.5 * kPi) + log_th + std::log1p(-x * x / 6.0);
}

EnvelopeResult LowPassFilter::verify_envelope(double eps, std::size_t points_per_side) const {
  if (!(eps > 0.0 && eps < kPi / 6.0)) {
    throw std::invalid_argument("verify_envelope: eps must lie in (0, pi/6)");
  }
  if (points_per_side == 0) {
    throw std::invalid_argument("verify_envelope: need at least one grid point per side");
  }
  EnvelopeResult out;
  out.r_min = std::numeric_limits<double>::infinity();
  out.r_max = 0.0;
  for (std::size_t k = 1; k <= points_per_side; ++k) {
    const double t = eps * static_cast<double>(k) / static_cast<double>(points_per_side);
    for (const double xi : {kTwoPiOverThree - t, kTwoPiOverThree + t}) {
      const double lm = log_value(xi);
      if (lm == kNegInf) {
        if (!out.leak_at) out.leak_at = xi;
        continue;
      }
      const double r = -lm / decay_weight(config_.sigma, 1.0 / t);
      out.r_min = std::min(out.r_min, r);
      out.r_max = std::max(out.r_max, r);
    }
  }
  out.ok = !out.leak_at && std::isfinite(out.r_min) && std::isfinite(out.r_max) &&
           out.r_min > 0.0;
  return out;
}

}  // namespace gevrey
