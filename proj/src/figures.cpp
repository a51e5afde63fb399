#include "gevrey/figures.hpp"

#include <cmath>

#include "gevrey/parallel.hpp"
#include "gevrey/wavelet.hpp"

namespace gevrey {
namespace {

template <class F>
PlotSeries sample(double lo, double hi, std::size_t n, unsigned jobs, F&& f) {
  PlotSeries s;
  s.x.resize(n);
  s.y.resize(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    s.x[i] = x;
    s.y[i] = f(x);
  });
  return s;
}

}  // namespace

std::vector<Figure> build_figures(const LowPassFilter& m0, unsigned jobs) {
  std::vector<Figure> figs;

  // 1201 points with 0 and +-2pi/3 among them exactly.
  Figure f1{"fig1_m0.svg", {"Low-pass filter m0", "xi", "m0(xi)", {}}, 0.0};
  PlotSeries s1;
  s1.x.resize(1201);
  s1.y.resize(1201);
  parallel_for(1201, jobs, [&](std::size_t i) {
    const double x = kTwoPiOverThree * (static_cast<double>(static_cast<int>(i) - 600) / 400.0);
    s1.x[i] = x;
    s1.y[i] = m0(x);
  });
  f1.plot.series.push_back(std::move(s1));
  figs.push_back(std::move(f1));

  Figure f2{"fig2_phi_hat.svg", {"Scaling function, Fourier side", "xi", "phi_hat(xi)", {}}, 0.0};
  f2.plot.series.push_back(
      sample(-8.0 * kPi, 8.0 * kPi, 2001, jobs, [&](double x) { return scaling_hat(m0, x); }));
  figs.push_back(std::move(f2));

  Figure f3{"fig3_phi_hat_detail.svg", {"phi_hat near its first bump", "xi", "phi_hat(xi)", {}}, 0.0};
  f3.plot.series.push_back(
      sample(2.0 * kTwoPiOverThree, 3.0 * kPi, 2001, jobs, [&](double x) { return scaling_hat(m0, x); }));
  figs.push_back(std::move(f3));

  Figure f4{"fig4_psi_hat.svg", {"Wavelet, Fourier side", "xi", "|psi_hat(xi)|", {}}, 0.0};
  f4.plot.series.push_back(
      sample(-8.0 * kPi, 8.0 * kPi, 2001, jobs, [&](double x) { return wavelet_hat_abs(m0, x); }));
  figs.push_back(std::move(f4));

  const SampledFunction psi = synthesize_time(m0, std::ldexp(kPi, 8), std::size_t{1} << 15, jobs);
  Figure f5{"fig5_psi.svg", {"Wavelet psi", "x", "psi(x)", {}}, psi.max_imag_residue};
  PlotSeries s5;
  for (std::size_t i = 0; i < psi.abscissae.size(); ++i) {
    const double x = psi.abscissae[i];
    if (x < -6.0 || x > 5.0) continue;
    s5.x.push_back(x);
    s5.y.push_back(psi.values[i].real());
  }
  f5.plot.series.push_back(std::move(s5));
  figs.push_back(std::move(f5));
  return figs;
}

}  // namespace gevrey
