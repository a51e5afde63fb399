#ifndef GEVREY_WAVELET_HPP
#define GEVREY_WAVELET_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gevrey/filter.hpp"

namespace gevrey {

inline constexpr double kTailTolerance = 1e-10;

/// Number of nontrivial factors in the refinement product: the smallest J >= 0
/// with |xi| / 2^J <= pi/5. Every later factor is exactly 1.
int product_depth(double xi);

/// phi_hat(xi) = prod_{j=1}^{J} m0(xi / 2^j). Real and in [0, 1].
double scaling_hat(const LowPassFilter& m0, double xi);
/// Same product with an explicit depth; used to show that the truncation is exact.
double scaling_hat(const LowPassFilter& m0, double xi, int depth);

struct LogMagnitude {
  double log_abs = 0.0;  // -inf when zero
  bool zero = false;
};

/// Sum of ln m0(xi / 2^j); finite far below the double underflow threshold.
LogMagnitude log_scaling_hat(const LowPassFilter& m0, double xi);

/// psi_hat(xi) = e^{i xi/2} conj(m0(xi/2 + pi)) phi_hat(xi/2).
std::complex<double> wavelet_hat(const LowPassFilter& m0, double xi);
double wavelet_hat_abs(const LowPassFilter& m0, double xi);

/// Uniform samples of a real or complex function.
struct SampledFunction {
  std::vector<double> abscissae;
  std::vector<std::complex<double>> values;
  std::string quantity;  // e.g. "psi", "phi_hat"
  FilterConfig config;
  double xi_max = 0.0;
  double l2_mass = 0.0;           // dx * sum |value|^2
  double max_imag_residue = 0.0;  // max |Im value|
  double tail_bound = 0.0;        // bound on |psi_hat| beyond xi_max

  /// Throws std::logic_error if the grid is not strictly increasing and uniform
  /// or the value count does not match.
  void validate() const;
};

/// Largest |phi_hat| found on the cozero windows of all octaves beyond xi0.
/// Each octave [2^n pi, 2^(n+1) pi] is scanned only where phi_hat can be nonzero.
double scaling_tail_bound(const LowPassFilter& m0, double xi0, std::size_t points_per_octave = 256);
/// Same for |psi_hat| beyond xi0 (|psi_hat(xi)| <= |phi_hat(xi/2)|).
double spectral_tail_bound(const LowPassFilter& m0, double xi0, std::size_t points_per_octave = 256);

/// Doubles from 2^6 pi until spectral_tail_bound drops below tol.
double spectral_cutoff(const LowPassFilter& m0, double tol = kTailTolerance);

/// psi on x_m = m pi / xi_max, m in [-n/2, n/2), by trapezoid inverse Fourier
/// quadrature over [-xi_max, xi_max] evaluated with one FFT.
SampledFunction synthesize_time(const LowPassFilter& m0, double xi_max, std::size_t n_samples,
                                unsigned jobs = 1);

struct PeriodizationResult {
  double sum = 0.0;
  double tail_bound = 0.0;  // bound on the omitted terms |k| > k_max
};

/// sum_{|k| <= k_max} |phi_hat(xi + 2 pi k)|^2.
PeriodizationResult periodization(const LowPassFilter& m0, double xi, int k_max);

/// sum_{j = j_min}^{j_max} |psi_hat(2^j xi)|^2.
double calderon_sum(const LowPassFilter& m0, double xi, int j_min = -40, int j_max = 40);

struct InnerProduct {
  int k = 0;
  double re = 0.0;
  double im = 0.0;
};

/// <psi, psi(. - k)> = (1/2pi) int |psi_hat|^2 e^{i k xi} dxi for k = 0..k_max.
std::vector<InnerProduct> translate_inner_products(const LowPassFilter& m0, int k_max,
                                                   unsigned jobs = 1);

/// Cozero window of phi_hat on [2^n pi, 2^(n+1) pi] for a filter vanishing on
/// [4pi/5, pi]: |xi - 2^(n+2) pi / 3| < 8 pi / 15.
std::pair<double, double> octave_window(int n);

/// The interval A_n on which m0 is bounded below in the two-sided estimate.
std::pair<double, double> product_bound_interval(int n);

struct ProductBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Two-sided product estimate for phi_hat(xi), xi in the n-th octave.
/// The infimum over A_n is taken over a closed grid of `a_points` points.
ProductBounds product_bounds(const LowPassFilter& m0, double xi, int n, std::size_t a_points = 2001);

}  // namespace gevrey

#endif  // GEVREY_WAVELET_HPP
