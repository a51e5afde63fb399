#ifndef GEVREY_FILTER_HPP
#define GEVREY_FILTER_HPP

#include <cstddef>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace gevrey {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// 2pi/3 exactly as produced by kTwoPi * 1 / 3, so exact angles hit the zero of m0.
inline constexpr double kTwoPiOverThree = kTwoPi / 3.0;

/// Everything that determines the low-pass filter.
struct FilterConfig {
  double sigma = 2.0;
  double d = kPi / 12.0;  // half-width of the bump factor, radians
  double quad_tol = 1e-12;
  int table_n = 2049;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

/// Cutoff profile: f_{1,sigma}(eta) for eta > 0, 0 otherwise.
double cutoff_profile(double sigma, double eta);

/// Normalized cumulative integral of cutoff(eta) cutoff(1 - eta).
///
/// Node values are tabulated on [0, 1/2]; between nodes the remaining partial
/// integral is evaluated directly, and (1/2, 1) is obtained by reflection, so
/// delta(x) + delta(1 - x) = 1 holds to rounding.
class DeltaTable {
 public:
  static DeltaTable build(const FilterConfig& config);

  double operator()(double x) const;
  /// 1 - delta(x), accurate where delta is close to one.
  double complement(double x) const;
  /// ln delta(x), finite for every x > 0 even where delta underflows.
  double log_value(double x) const;
  double log_complement(double x) const;

  double sigma() const { return sigma_; }
  double step() const { return step_; }
  /// Full integral of the product over [0, 1].
  double normalization() const { return normalization_; }
  std::span<const double> cumulative() const { return cumulative_; }
  std::vector<double> nodes() const;

 private:
  DeltaTable() = default;

  double log_integrand(double eta) const;
  double integrand(double eta) const;
  double interval_mass(double a, double b) const;
  double log_head_mass(double s) const;  // ln of the integral over [0, s], s <= step
  double half_value(double x) const;     // x in [0, 1/2]

  double sigma_ = 2.0;
  double step_ = 0.0;
  double normalization_ = 1.0;
  double log_normalization_ = 0.0;
  std::vector<double> raw_;         // unnormalized cumulative mass at the nodes
  std::vector<double> cumulative_;  // raw_ / normalization_
};

/// Result of probing the local envelope of m0 near 2pi/3.
struct EnvelopeResult {
  double r_min = 0.0;
  double r_max = 0.0;
  bool ok = false;
  std::optional<double> leak_at;  // grid point where m0 vanished away from 2pi/3
};

/// The low-pass filter m0 = sin(pi/2 theta) together with its delta table.
/// Immutable after construction; safe to share across threads.
class LowPassFilter {
 public:
  explicit LowPassFilter(const FilterConfig& config);

  const FilterConfig& config() const { return config_; }
  const DeltaTable& delta() const { return table_; }

  double theta(double xi) const;
  double operator()(double xi) const;
  /// ln m0(xi); -inf exactly where theta vanishes.
  double log_value(double xi) const;

  /// min/max over a punctured grid of -ln m0(xi) / g_sigma(1/|xi - 2pi/3|).
  EnvelopeResult verify_envelope(double eps, std::size_t points_per_side = 256) const;

 private:
  double theta_upper(double u) const;      // u in [pi/2, pi]
  double log_theta_upper(double u) const;  // ln of the same

  FilterConfig config_;
  DeltaTable table_;
};

/// Reduces xi into [-pi, pi] exactly (IEEE remainder by the double nearest 2pi).
double reduce_angle(double xi);

}  // namespace gevrey

#endif  // GEVREY_FILTER_HPP
