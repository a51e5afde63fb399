#include "gevrey/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "gevrey/cycles.hpp"
#include "gevrey/decay.hpp"
#include "gevrey/figures.hpp"
#include "gevrey/gevrey_scale.hpp"
#include "gevrey/lambert_w.hpp"
#include "gevrey/parallel.hpp"
#include "gevrey/wavelet.hpp"

namespace gevrey {
namespace {

// Uniform doubles in [0, 1) from the top 53 bits, identical on every platform.
class UnitStream {
 public:
  explicit UnitStream(std::uint64_t seed) : rng_(seed) {}
  double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

double grid(double lo, double hi, std::size_t i, std::size_t n) {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

class Suite {
 public:
  Suite(VerificationReport& report, std::ostream* timing) : report_(report), timing_(timing) {}

  void add(std::string name, double measured, double tolerance, bool pass, std::string detail = {},
           std::optional<std::pair<double, double>> bracket = std::nullopt) {
    report_.checks.push_back(
        {std::move(name), measured, tolerance, bracket, pass, std::move(detail)});
  }

  template <class F>
  void timed(const char* label, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    if (timing_ != nullptr) {
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      *timing_ << "  " << label << ": " << s << " s\n";
    }
  }

 private:
  VerificationReport& report_;
  std::ostream* timing_;
};

}  // namespace

VerificationReport run_verification(const VerifyOptions& opt) {
  opt.filter.validate();
  VerificationReport rep;
  rep.config = opt.filter;
  rep.eps = opt.eps;
  rep.eta = opt.eta;
  Suite suite(rep, opt.timing);
  const unsigned jobs = opt.jobs;
  const double sigma = opt.filter.sigma;

  std::optional<LowPassFilter> built;
  suite.timed("filter", [&] { built.emplace(opt.filter); });
  const LowPassFilter& m0 = *built;

  suite.timed("lambert", [&] {
    const std::size_t n = 10000;
    const double lo = -std::exp(-1.0);
    const double ratio = (1e10 - lo - 1e-6) / 1e-6;
    std::vector<double> res(n), w3(n, 0.0);
    parallel_for(n, jobs, [&](std::size_t k) {
      const double x = lo + 1e-6 * std::pow(ratio, static_cast<double>(k) / (n - 1));
      const double w = lambert_w(x);
      res[k] = std::abs(w * std::exp(w) - x) / std::max(std::abs(x), 1.0);
      if (x >= std::numbers::e) {
        const double l = std::log(x);
        const double ll = std::log(l);
        const double slack = 4.0 * std::numeric_limits<double>::epsilon() * l;
        if (w < l - ll - slack || w > l - 0.5 * ll + slack) w3[k] = 1.0;
      }
    });
    const double worst = *std::max_element(res.begin(), res.end());
    suite.add("lambert_residual", worst, 1e-14, worst <= 1e-14, "10^4-point log grid on [-1/e+1e-6, 1e10]");
    const double bad = std::accumulate(w3.begin(), w3.end(), 0.0);
    suite.add("lambert_log_bounds", bad, 0.0, bad == 0.0,
              "ln x - ln ln x <= W(x) <= ln x - ln ln x / 2 for x >= e");
  });

  suite.timed("gevrey scale", [&] {
    // ln(f_{1,2}/h_{tau,2}) on [1e-6, 1] for tau = 0.2 and 5
    double low = std::numeric_limits<double>::infinity();
    double high = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 120; ++i) {
      const double x = std::pow(10.0, -6.0 + 0.05 * i);
      const double lf = log_flat_profile(1.0, 2.0, x);
      low = std::min(low, lf + associated_function(0.2, 2.0, 1.0 / x));
      high = std::max(high, lf + associated_function(5.0, 2.0, 1.0 / x));
    }
    // T_{1,2} / g_2 on [1e2, 1e8]
    double t_lo = std::numeric_limits<double>::infinity();
    double t_hi = 0.0;
    for (int i = 0; i <= 60; ++i) {
      const double x = std::pow(10.0, 2.0 + 0.1 * i);
      const double r = associated_function(1.0, 2.0, x) / decay_weight(2.0, x);
      t_lo = std::min(t_lo, r);
      t_hi = std::max(t_hi, r);
    }
    rep.notes["gevrey_scale"] = {{"ln_min_f_over_h_tau_0.2", low},
                                 {"ln_max_f_over_h_tau_5", high},
                                 {"T_over_g_min", t_lo},
                                 {"T_over_g_max", t_hi}};
  });

  suite.timed("filter identities", [&] {
    const std::size_t n = 10001;
    double qmf = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = grid(-kPi, kPi, i, n);
      const double a = m0(xi), b = m0(xi + kPi);
      qmf = std::max(qmf, std::abs(a * a + b * b - 1.0));
    }
    suite.add("qmf_identity", qmf, 1e-12, qmf <= 1e-12, "m0^2(xi) + m0^2(xi + pi) = 1");

    double low = 0.0, high = 0.0, bump = 0.0;
    for (std::size_t i = 0; i < 2001; ++i) {
      low = std::max(low, std::abs(m0(grid(0.0, kPi / 5.0, i, 2001)) - 1.0));
      high = std::max(high, m0(grid(4.0 * kPi / 5.0, kPi, i, 2001)));
      if (i > 0 && i < 2000) bump = std::max(bump, m0(grid(kTwoPiOverThree, 4.0 * kPi / 5.0, i, 2001)));
    }
    suite.add("m0_one_on_low_band", low, 1e-12, low <= 1e-12, "[0, pi/5]");
    suite.add("m0_zero_on_high_band", high, 1e-12, high <= 1e-12, "[4pi/5, pi]");
    const double z = m0(kTwoPiOverThree);
    suite.add("m0_zero_at_two_pi_over_three", z, 0.0, z == 0.0);
    const double third = std::abs(m0(kPi / 3.0) - 1.0);
    suite.add("m0_one_at_pi_over_three", third, 1e-12, third <= 1e-12);
    suite.add("m0_bump_positive", bump, 0.0, bump > 0.0, "max over (2pi/3, 4pi/5)");

    const EnvelopeResult env = m0.verify_envelope(envelope_window(opt.eps));
    suite.add("m0_local_envelope", env.r_max, 0.0, env.ok,
              "-ln m0 / g_sigma(1/|xi - 2pi/3|) finite and positive on the window",
              std::make_pair(env.r_min, env.r_max));
  });

  suite.timed("delta", [&] {
    const DeltaTable& d = m0.delta();
    const bool exact = d(0.0) == 0.0 && d(1.0) == 1.0 && d(0.5) == 0.5;
    bool mono = true;
    double prev = -1.0;
    for (std::size_t i = 0; i <= 10000; ++i) {
      const double v = d(static_cast<double>(i) / 10000.0);
      if (v < prev) mono = false;
      prev = v;
    }
    suite.add("delta_structure", exact && mono ? 0.0 : 1.0, 0.0, exact && mono,
              "delta(0)=0, delta(1)=1, delta(1/2)=1/2 exactly; monotone on 10^4 points");
    FilterConfig twice = opt.filter;
    twice.table_n = 2 * opt.filter.table_n - 1;
    const double change = std::abs(DeltaTable::build(twice)(0.3) - d(0.3));
    suite.add("delta_table_convergence", change, 1e-12, change < 1e-12, "table_n doubled, delta(0.3)");
  });

  suite.timed("scaling function", [&] {
    double flat = 0.0;
    for (std::size_t i = 0; i < 4001; ++i) {
      flat = std::max(flat, std::abs(scaling_hat(m0, grid(-0.4 * kPi, 0.4 * kPi, i, 4001)) - 1.0));
    }
    double zeros = 0.0;
    for (int k = 1; k <= 8; ++k) {
      zeros = std::max({zeros, scaling_hat(m0, kTwoPi * k), scaling_hat(m0, -kTwoPi * k)});
    }
    UnitStream u(20240501);
    double trunc = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double xi = (2.0 * u.next() - 1.0) * std::ldexp(kPi, 10);
      const int depth = product_depth(xi);
      trunc = std::max(trunc, std::abs(scaling_hat(m0, xi, depth + 6) - scaling_hat(m0, xi, depth)));
    }
    const bool ok = scaling_hat(m0, 0.0) == 1.0 && flat <= 1e-14 && zeros == 0.0 && trunc == 0.0;
    suite.add("scaling_identities", std::max({flat, zeros, trunc}), 1e-14, ok,
              "phi_hat(0)=1, phi_hat=1 on [-2pi/5, 2pi/5], phi_hat(2pi k)=0 for 1<=|k|<=8, exact truncation");
  });

  suite.timed("periodization", [&] {
    const std::size_t n = 1000;
    std::vector<double> dev(n);
    parallel_for(n, jobs, [&](std::size_t i) {
      const PeriodizationResult r = periodization(m0, grid(-kPi, kPi, i, n), 64);
      dev[i] = std::abs(r.sum - 1.0) + r.tail_bound;
    });
    const double worst = *std::max_element(dev.begin(), dev.end());
    suite.add("periodization", worst, 1e-8, worst <= 1e-8, "sum_{|k|<=64} |phi_hat(xi + 2pi k)|^2 plus tail bound");
  });

  suite.timed("calderon", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      worst = std::max(worst, std::abs(calderon_sum(m0, std::exp2(i / 99.0), -40, 40) - 1.0));
    }
    suite.add("calderon", worst, 1e-8, worst <= 1e-8, "sum_{j=-40}^{40} |psi_hat(2^j xi)|^2 on [1, 2]");
  });

  suite.timed("translates", [&] {
    double worst = 0.0, imag = 0.0;
    for (const auto& ip : translate_inner_products(m0, 8, jobs)) {
      worst = std::max(worst, std::abs(ip.re - (ip.k == 0 ? 1.0 : 0.0)));
      imag = std::max(imag, std::abs(ip.im));
    }
    suite.add("translate_inner_products", worst, 1e-6, worst <= 1e-6 && imag <= 1e-10,
              "<psi, psi(. - k)> = delta_k0 for |k| <= 8, imaginary part " + std::to_string(imag));
  });

  suite.timed("support refinement", [&] {
    std::size_t violations = 0;
    const double floor = std::log(1e-300);
    for (int n = 3; n <= 12; ++n) {
      const std::size_t count = (std::size_t{64} << n) + 1;
      const double lo = std::ldexp(kPi, n);
      const double center = std::ldexp(kTwoPiOverThree, n + 1);
      std::vector<char> bad(count, 0);
      parallel_for(count, jobs, [&](std::size_t i) {
        const double xi = lo + static_cast<double>(i) * (kPi / 64.0);
        if (std::abs(xi - center) < 8.0 * kPi / 15.0) return;
        if (log_scaling_hat(m0, xi).log_abs > floor) bad[i] = 1;
      });
      violations += static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
    }
    suite.add("support_containment", static_cast<double>(violations), 0.0, violations == 0,
              "|xi - 2^(n+2) pi/3| < 8pi/15 wherever |phi_hat| > 1e-300, n = 3..12");

    UnitStream u(7);
    const auto [wlo, whi] = octave_window(4);
    const double lo = std::max(wlo, std::ldexp(kPi, 4));
    const double hi = std::min(whi, std::ldexp(kPi, 5));
    int taken = 0;
    double worst = 0.0;
    while (taken < 50) {
      const double xi = lo + (hi - lo) * u.next();
      const double v = scaling_hat(m0, xi);
      if (v == 0.0) continue;
      ++taken;
      const ProductBounds b = product_bounds(m0, xi, 4);
      worst = std::max({worst, (b.lower - v) / v, (v - b.upper) / v});
    }
    suite.add("product_two_sided", worst, 1e-9, worst <= 1e-9,
              "inf_{A_4} m0 * P(xi) <= phi_hat(xi) <= P(xi) at 50 cozero points, n = 4, relative slack for argument rounding");
  });

  suite.timed("decay", [&] {
    const DecayReport d = run_decay_suite(m0, opt.eps, 3, 18, opt.eta, jobs);
    suite.add("decay_non_band_limited", d.all_nonzero ? 0.0 : 1.0, 0.0, d.all_nonzero,
              "phi_hat(xi_n) != 0 for n = 3..18");
    suite.add("decay_upper_bracket", d.bracket_ratio, kBracketLimit, d.bracket_ok,
              "r_upper(n) = -ln|phi_hat(xi_n)| / g_sigma(xi_n)",
              std::make_pair(d.r_upper_min, d.r_upper_max));
    double worst_lower = 0.0;
    for (const auto& s : d.samples) worst_lower = std::max(worst_lower, s.r_lower);
    suite.add("decay_lower_bound", worst_lower, d.lower_limit, d.lower_ok,
              "r_lower(n) <= 2 r_lower(n_min), sigma_eta = " + std::to_string(d.sigma_eta));
    // Outside Gamma_{sigma'}: -ln|phi_hat| / g_{sigma'} collapses toward 0.
    const std::vector<double> r = ratio_series(d, 1.01);
    const double shrink = r.front() / r.back();
    suite.add("decay_exclusion_witness", shrink, 1.5, shrink >= 1.5,
              "-ln|phi_hat(xi_n)| / g_1.01(xi_n) shrinks from n = 3 to n = 18");
    rep.notes["decay"] = to_json(d);

    const ComparisonScan cs = comparison_scan(d.sigma_eta, d.sigma_eta - 0.1 > 1.0 ? d.sigma_eta - 0.1
                                                                              : 0.5 * (1.0 + d.sigma_eta),
                                              1.0, std::ldexp(kPi, 20));
    suite.add("g_comparison", cs.xi0, 0.0, cs.holds,
              "g_{sigma_eta} <= g_{sigma'} beyond xi0, sigma' = " + std::to_string(cs.sigma_prime));
  });

  suite.timed("cycles", [&] {
    bool ok = true;
    bool placed = true;
    for (const Cycle& c : enumerate_cycles(8)) {
      const CycleProduct p = cycle_product(m0, c.members());
      if (c.length == 1) {
        ok = ok && p.product == 1.0;
        continue;
      }
      ok = ok && p.product == 0.0;
      if (p.zero_at) {
        const std::int64_t a = std::abs(p.zero_at->p());
        const std::int64_t q = p.zero_at->q();
        placed = placed && (3 * a == q || 10 * a >= 4 * q);
      }
    }
    const DyadicAngle fifth = DyadicAngle::make(1, 5);
    const CycleProduct p5 = cycle_product(m0, orbit(fifth, 8).points);
    const bool five = p5.zero_at && std::abs(p5.zero_at->p()) == 2 && p5.zero_at->q() == 5 &&
                      m0_at(m0, fifth) > 0.0;
    suite.add("invariant_cycles", ok && placed && five ? 0.0 : 1.0, 0.0, ok && placed && five,
              "products vanish on every nontrivial cycle of length <= 8 at 2pi/3 or in [4pi/5, pi]");
  });

  suite.timed("flatness", [&] {
    const std::vector<double> xs = {0.2, 0.1, 0.05, 0.02};
    const FlatnessResult f1 = flatness_check(sigma, 1, xs);
    suite.add("flatness_first_derivative", std::abs(f1.derivatives.back()), 0.0, f1.decreasing,
              "|f'| decreasing along x = 0.2, 0.1, 0.05, 0.02");
    nlohmann::json orders = nlohmann::json::object();
    for (int j = 1; j <= 5; ++j) {
      const FlatnessResult f = flatness_check(sigma, j, xs);
      nlohmann::json e;
      e["derivatives"] = f.derivatives;
      e["decreasing"] = f.decreasing;
      orders[std::to_string(j)] = e;
    }
    rep.notes["flatness"] = orders;
  });

  suite.timed("c_eta", [&] {
    const double s3 = c_eta_partial_sum(1000, opt.eps, 1.0);
    const double s6 = c_eta_partial_sum(1000000, opt.eps, 1.0);
    suite.add("c_eta_diverges_eta1", s6 / s3, 1.2, s6 / s3 >= 1.2, "partial sums J = 10^6 vs 10^3");
    const double inc_early = c_eta_partial_sum(10000, opt.eps, 2.0) - c_eta_partial_sum(1000, opt.eps, 2.0);
    const double inc_late = c_eta_partial_sum(1000000, opt.eps, 2.0) - c_eta_partial_sum(100000, opt.eps, 2.0);
    suite.add("c_eta_converges_eta2", inc_late / inc_early, 0.1, inc_late / inc_early <= 0.1,
              "decade increments of the eta = 2 partial sums shrink");
    rep.notes["c_eta"] = {{"eta1_J1e3", s3}, {"eta1_J1e6", s6}, {"eta2_term_J60", c_eta_term(60, opt.eps, 2.0)}};
  });

  suite.timed("figures", [&] {
    const std::vector<Figure> figs = build_figures(m0, jobs);
    const PlotSeries& s1 = figs[0].plot.series.front();
    double at_zero = -1.0, at_peak = 1.0;
    for (std::size_t i = 0; i < s1.x.size(); ++i) {
      if (s1.x[i] == 0.0) at_zero = s1.y[i];
      if (s1.x[i] == kTwoPiOverThree) at_peak = s1.y[i];
    }
    const bool fig1 = at_zero == 1.0 && at_peak == 0.0;
    double amp = 0.0;
    for (const double v : figs[4].plot.series.front().y) amp = std::max(amp, std::abs(v));
    const bool fig5 = amp >= 0.5 && amp <= 2.0 && figs[4].max_imag_residue <= 1e-10;
    suite.add("figure_data", amp, 0.0, fig1 && fig5,
              "fig1 m0(0)=1 and m0(2pi/3)=0; fig5 real with max |psi| in [0.5, 2]",
              std::make_pair(0.5, 2.0));
  });

  suite.timed("synthesis", [&] {
    const SampledFunction psi = synthesize_time(m0, std::ldexp(kPi, 8), std::size_t{1} << 15, jobs);
    suite.add("synthesis_real", psi.max_imag_residue, 1e-10, psi.max_imag_residue <= 1e-10);
    const double dev = std::abs(psi.l2_mass - 1.0);
    suite.add("synthesis_l2_norm", dev, 1e-6, dev <= 1e-6, "dx * sum |psi|^2 = 1");
  });

  return rep;
}

}  // namespace gevrey
