#include "gevrey/wavelet.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "gevrey/parallel.hpp"

namespace gevrey {
namespace {

constexpr double kLogSwitch = 1e-8;
constexpr int kMaxOctave = 60;
constexpr double kNegligible = 1e-20;  // far below every tail tolerance, squares below 1e-40

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

double log_product(const LowPassFilter& m0, double xi, int depth) {
  double acc = 0.0;
  for (int j = 1; j <= depth; ++j) {
    const double term = m0.log_value(std::ldexp(xi, -j));
    if (term == -std::numeric_limits<double>::infinity()) return term;
    acc += term;
  }
  return acc;
}

// Calls visit(n, octave_max) for every octave whose cozero window reaches
// beyond a, until the maxima have collapsed far below the largest one seen.
template <class Visit>
void scan_octaves(const LowPassFilter& m0, double a, std::size_t points, Visit&& visit) {
  if (!(a >= kPi)) throw std::invalid_argument("tail scan must start at or beyond pi");
  if (points < 2) throw std::invalid_argument("tail scan needs at least two points per octave");
  const int n_start = std::max(0, static_cast<int>(std::floor(std::log2(a / kPi))) - 1);
  double best = 0.0;
  for (int n = n_start; n <= kMaxOctave; ++n) {
    auto [lo, hi] = octave_window(n);
    lo = std::max({lo, std::ldexp(kPi, n), a});
    hi = std::min(hi, std::ldexp(kPi, n + 1));
    if (lo > hi) continue;
    double octave_max = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
      const double xi = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
      octave_max = std::max(octave_max, scaling_hat(m0, xi));
    }
    visit(n, octave_max);
    best = std::max(best, octave_max);
    if (n >= n_start + 1 && octave_max < kNegligible) break;
    if (n >= n_start + 3 && octave_max <= 1e-30 * best) break;
  }
}

struct FftwDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

}  // namespace

int product_depth(double xi) {
  if (!std::isfinite(xi)) throw std::domain_error("product_depth: argument must be finite");
  double a = std::abs(xi);
  int depth = 0;
  while (a > kPi / 5.0) {
    a *= 0.5;
    ++depth;
  }
  return depth;
}

double scaling_hat(const LowPassFilter& m0, double xi, int depth) {
  double acc = 1.0;
  for (int j = 1; j <= depth; ++j) {
    const double factor = m0(std::ldexp(xi, -j));
    if (factor == 0.0) return 0.0;
    if (factor < kLogSwitch) return std::exp(log_product(m0, xi, depth));
    acc *= factor;
  }
  return acc;
}

double scaling_hat(const LowPassFilter& m0, double xi) {
  return scaling_hat(m0, xi, product_depth(xi));
}

LogMagnitude log_scaling_hat(const LowPassFilter& m0, double xi) {
  LogMagnitude out;
  out.log_abs = log_product(m0, xi, product_depth(xi));
  out.zero = out.log_abs == -std::numeric_limits<double>::infinity();
  return out;
}

double wavelet_hat_abs(const LowPassFilter& m0, double xi) {
  const double half = 0.5 * std::abs(xi);
  const double high = m0(half + kPi);
  if (high == 0.0) return 0.0;
  return high * scaling_hat(m0, half);
}

std::complex<double> wavelet_hat(const LowPassFilter& m0, double xi) {
  const double half = 0.5 * std::abs(xi);
  const std::complex<double> high = std::conj(std::complex<double>(m0(half + kPi), 0.0));
  const double low = high == 0.0 ? 0.0 : scaling_hat(m0, half);
  return std::polar(1.0, 0.5 * xi) * high * low;
}

void SampledFunction::validate() const {
  if (abscissae.size() != values.size()) {
    throw std::logic_error("SampledFunction: abscissae and values differ in length");
  }
  if (abscissae.size() < 2) return;
  const double step = abscissae[1] - abscissae[0];
  if (!(step > 0.0)) throw std::logic_error("SampledFunction: abscissae not increasing");
  for (std::size_t i = 1; i < abscissae.size(); ++i) {
    const double s = abscissae[i] - abscissae[i - 1];
    if (!(s > 0.0) || std::abs(s - step) > 1e-9 * step) {
      throw std::logic_error("SampledFunction: abscissae not uniform");
    }
  }
}

double scaling_tail_bound(const LowPassFilter& m0, double xi0, std::size_t points_per_octave) {
  double bound = 0.0;
  scan_octaves(m0, std::abs(xi0), points_per_octave,
               [&](int, double octave_max) { bound = std::max(bound, octave_max); });
  return bound;
}

double spectral_tail_bound(const LowPassFilter& m0, double xi0, std::size_t points_per_octave) {
  return scaling_tail_bound(m0, 0.5 * std::abs(xi0), points_per_octave);
}

double spectral_cutoff(const LowPassFilter& m0, double tol) {
  double xi = std::ldexp(kPi, 6);
  for (int k = 0; k < 24; ++k, xi *= 2.0) {
    if (spectral_tail_bound(m0, xi) < tol) return xi;
  }
  throw std::runtime_error("spectral_cutoff: tail did not fall below tolerance");
}

SampledFunction synthesize_time(const LowPassFilter& m0, double xi_max, std::size_t n_samples,
                                unsigned jobs) {
  if (!is_power_of_two(n_samples)) {
    throw std::invalid_argument("synthesize_time: n_samples must be a power of two");
  }
  if (!(std::isfinite(xi_max) && xi_max >= kTwoPi)) {
    throw std::invalid_argument("synthesize_time: xi_max must be finite and at least 2pi");
  }
  const double tail = spectral_tail_bound(m0, xi_max);
  if (!(tail < kTailTolerance)) {
    throw std::runtime_error("synthesize_time: |psi_hat| reaches " + std::to_string(tail) +
                             " beyond xi_max = " + std::to_string(xi_max) +
                             "; use a larger xi_max");
  }

  const std::size_t n = n_samples;
  const auto half_n = static_cast<std::ptrdiff_t>(n / 2);
  const double dxi = 2.0 * xi_max / static_cast<double>(n);
  const double dx = kPi / xi_max;

  std::unique_ptr<fftw_complex[], FftwDeleter> buf(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
  if (!buf) throw std::bad_alloc();
  // Plan before filling: planning may overwrite the array.
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf.get(), buf.get(), FFTW_BACKWARD,
                                    FFTW_ESTIMATE);
  if (plan == nullptr) throw std::runtime_error("synthesize_time: FFT planning failed");

  std::vector<std::complex<double>> spectrum(n);
  parallel_for(n, jobs, [&](std::size_t k) {
    const auto q = static_cast<std::ptrdiff_t>(k) < half_n ? static_cast<std::ptrdiff_t>(k)
                                                          : static_cast<std::ptrdiff_t>(k) -
                                                                static_cast<std::ptrdiff_t>(n);
    if (q == -half_n) {
      // Both trapezoid endpoints alias onto this bin.
      spectrum[k] = 0.5 * (wavelet_hat(m0, -xi_max) + wavelet_hat(m0, xi_max));
    } else {
      spectrum[k] = wavelet_hat(m0, static_cast<double>(q) * dxi);
    }
  });
  for (std::size_t k = 0; k < n; ++k) {
    buf[k][0] = spectrum[k].real();
    buf[k][1] = spectrum[k].imag();
  }
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  SampledFunction out;
  out.quantity = "psi";
  out.config = m0.config();
  out.xi_max = xi_max;
  out.tail_bound = tail;
  out.abscissae.resize(n);
  out.values.resize(n);
  const double scale = dxi / kTwoPi;
  double mass = 0.0;
  double imag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(i) - half_n;
    const std::size_t src = static_cast<std::size_t>(m < 0 ? m + static_cast<std::ptrdiff_t>(n) : m);
    const std::complex<double> v(buf[src][0] * scale, buf[src][1] * scale);
    out.abscissae[i] = static_cast<double>(m) * dx;
    out.values[i] = v;
    mass += std::norm(v);
    imag = std::max(imag, std::abs(v.imag()));
  }
  out.l2_mass = mass * dx;
  out.max_imag_residue = imag;
  return out;
}

PeriodizationResult periodization(const LowPassFilter& m0, double xi, int k_max) {
  if (k_max < 32) throw std::invalid_argument("periodization: k_max must be at least 32");
  PeriodizationResult out;
  for (int k = -k_max; k <= k_max; ++k) {
    const double v = scaling_hat(m0, xi + kTwoPi * static_cast<double>(k));
    out.sum += v * v;
  }
  // Beyond |k| > k_max at most one lattice point falls in each octave window per side.
  const double a = std::max(kPi, kTwoPi * (k_max + 1) - std::abs(xi));
  double tail = 0.0;
  scan_octaves(m0, a, 64, [&](int, double octave_max) { tail += octave_max * octave_max; });
  out.tail_bound = 2.0 * tail;
  return out;
}

double calderon_sum(const LowPassFilter& m0, double xi, int j_min, int j_max) {
  if (xi == 0.0) throw std::domain_error("calderon_sum: xi must be nonzero");
  if (j_min > -30 || j_max < 30) {
    throw std::invalid_argument("calderon_sum: need j_min <= -30 and j_max >= 30");
  }
  double acc = 0.0;
  for (int j = j_min; j <= j_max; ++j) {
    const double v = wavelet_hat_abs(m0, std::ldexp(xi, j));
    acc += v * v;
  }
  return acc;
}

std::vector<InnerProduct> translate_inner_products(const LowPassFilter& m0, int k_max,
                                                   unsigned jobs) {
  if (k_max < 0 || k_max > 16) {
    throw std::invalid_argument("translate_inner_products: k_max must lie in [0, 16]");
  }
  const double cutoff = spectral_cutoff(m0);
  const double h = kPi / 256.0;
  const auto m = static_cast<std::size_t>(std::llround(cutoff / h));
  const std::size_t count = 2 * m + 1;
  std::vector<double> weight(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const double xi = (static_cast<double>(i) - static_cast<double>(m)) * h;
    const double v = wavelet_hat_abs(m0, xi);
    weight[i] = (i == 0 || i + 1 == count ? 0.5 : 1.0) * v * v;
  });
  std::vector<InnerProduct> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double arg = static_cast<double>(k) * (static_cast<double>(i) - static_cast<double>(m)) * h;
      re += weight[i] * std::cos(arg);
      im += weight[i] * std::sin(arg);
    }
    out.push_back({k, re * h / kTwoPi, im * h / kTwoPi});
  }
  return out;
}

std::pair<double, double> octave_window(int n) {
  if (n < 0) throw std::invalid_argument("octave_window: octave index must be nonnegative");
  const double center = std::ldexp(kTwoPiOverThree, n + 1);
  const double r = 8.0 * kPi / 15.0;
  return {center - r, center + r};
}

std::pair<double, double> product_bound_interval(int n) {
  if (n < 0) throw std::invalid_argument("product_bound_interval: octave index must be nonnegative");
  const double s = n % 2 == 0 ? 1.0 : -1.0;
  const double scale = std::ldexp(kPi, -(n + 2));
  return {kPi / 3.0 - (3.0 + s) * scale, kPi / 3.0 + (3.0 - s) * scale};
}

ProductBounds product_bounds(const LowPassFilter& m0, double xi, int n, std::size_t a_points) {
  if (a_points < 2) throw std::invalid_argument("product_bounds: need at least two A_n points");
  const double center = std::ldexp(kTwoPiOverThree, n + 1);
  double product = 1.0;
  for (int j = 1; j <= n + 1; ++j) {
    const double sign = (n - j) % 2 == 0 ? 1.0 : -1.0;
    product *= m0(kTwoPiOverThree - sign * std::ldexp(xi - center, -j));
  }
  const auto [lo, hi] = product_bound_interval(n);
  double inf = 1.0;
  for (std::size_t i = 0; i < a_points; ++i) {
    inf = std::min(inf, m0(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(a_points - 1)));
  }
  return {inf * product, product};
}

}  // namespace gevrey
