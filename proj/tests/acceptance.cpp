// Acceptance run: one line per criterion 1..13, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gevrey/cli.hpp"
#include "gevrey/cycles.hpp"
#include "gevrey/decay.hpp"
#include "gevrey/figures.hpp"
#include "gevrey/filter.hpp"
#include "gevrey/gevrey_scale.hpp"
#include "gevrey/lambert_w.hpp"
#include "gevrey/wavelet.hpp"
#include "oracles.hpp"

using namespace gevrey;

namespace {

// Pinned tolerances.
constexpr double kLambertResidualTol = 1e-14;
constexpr double kQmfTol = 1e-12;
constexpr double kSupportTol = 1e-12;
constexpr double kDeltaRefineTol = 1e-12;
constexpr double kFlatTopTol = 1e-14;
constexpr double kPeriodizationTol = 1e-8;
constexpr double kCalderonTol = 1e-8;
constexpr double kInnerProductTol = 1e-6;
constexpr double kRealTol = 1e-10;
constexpr double kNormTol = 1e-6;
constexpr double kSupportFloor = 1e-300;
constexpr double kProductRelSlack = 1e-9;
constexpr double kBracketMax = 10.0;
constexpr double kLowerFactor = 2.0;
constexpr double kExclusionGrowth = 1.5;
constexpr double kFlatDerivTol = 1e-6;
constexpr double kCetaTailTol = 1e-9;
constexpr double kCetaGrowth = 1.2;
constexpr double kFig5Min = 0.5;
constexpr double kFig5Max = 2.0;

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail, double seconds) {
  std::printf("[%s] %2d %s: %s (%.1f s)\n", pass ? "PASS" : "FAIL", id, title, detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <class F>
void criterion(int id, const char* title, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail << "threw: " << e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, title, pass, detail.str(), s);
}

double uniform(double lo, double hi, int i, int n) { return lo + (hi - lo) * i / (n - 1); }

}  // namespace

int main() {
  const LowPassFilter m0{FilterConfig{}};

  criterion(1, "Lambert residual and bounds", [&](std::ostream& d) {
    const int n = 10000;
    const double lo = -std::exp(-1.0);
    const double span = (1e10 - lo) / 1e-6;
    double worst = 0.0;
    int bound_failures = 0;
    for (int k = 0; k < n; ++k) {
      const double x = lo + 1e-6 * std::pow(span, static_cast<double>(k) / (n - 1));
      const double w = lambert_w(x);
      worst = std::max(worst, std::fabs(w * std::exp(w) - x) / std::max(std::fabs(x), 1.0));
      if (x >= std::exp(1.0)) {
        const double l = std::log(x);
        const double ll = std::log(l);
        const double slack = 4.0 * std::numeric_limits<double>::epsilon() * l;
        if (w < l - ll - slack || w > l - 0.5 * ll + slack) ++bound_failures;
      }
    }
    d << "max residual " << worst << ", bound violations " << bound_failures;
    return worst <= kLambertResidualTol && bound_failures == 0;
  });

  criterion(2, "QMF identity", [&](std::ostream& d) {
    double worst = 0.0;
    for (int i = 0; i < 10001; ++i) {
      const double xi = uniform(-kPi, kPi, i, 10001);
      const double a = m0(xi);
      const double b = m0(xi + kPi);
      worst = std::max(worst, std::fabs(a * a + b * b - 1.0));
    }
    d << "max |m0^2(xi) + m0^2(xi+pi) - 1| = " << worst;
    return worst <= kQmfTol;
  });

  criterion(3, "support facts", [&](std::ostream& d) {
    double one_dev = 0.0;
    double zero_dev = 0.0;
    double bump = 0.0;
    for (int i = 0; i < 10001; ++i) {
      one_dev = std::max(one_dev, std::fabs(m0(uniform(0.0, kPi / 5.0, i, 10001)) - 1.0));
      zero_dev = std::max(zero_dev, std::fabs(m0(uniform(4.0 * kPi / 5.0, kPi, i, 10001))));
      if (i > 0 && i < 10000) bump = std::max(bump, m0(uniform(kTwoPiOverThree, 4.0 * kPi / 5.0, i, 10001)));
    }
    const double at_third = m0(kTwoPiOverThree);
    const double at_pi3 = m0(kPi / 3.0);
    d << "|m0-1| on [0,pi/5] " << one_dev << ", |m0| on [4pi/5,pi] " << zero_dev << ", m0(2pi/3) = "
      << at_third << ", m0(pi/3) = " << at_pi3 << ", bump max " << bump;
    return one_dev <= kSupportTol && zero_dev <= kSupportTol && at_third == 0.0 &&
           std::fabs(at_pi3 - 1.0) <= kSupportTol && bump > 0.0;
  });

  criterion(4, "delta structure", [&](std::ostream& d) {
    const DeltaTable& t = m0.delta();
    const bool exact = t(0.0) == 0.0 && t(1.0) == 1.0 && t(0.5) == 0.5;
    bool monotone = true;
    double prev = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      const double v = t(i / 10000.0);
      if (v < prev) monotone = false;
      prev = v;
    }
    FilterConfig doubled;
    doubled.table_n = 2 * doubled.table_n - 1;
    const double change = std::fabs(DeltaTable::build(doubled)(0.3) - t(0.3));
    d << "exact endpoints " << exact << ", monotone " << monotone << ", refinement change at 0.3 " << change;
    return exact && monotone && change < kDeltaRefineTol;
  });

  criterion(5, "scaling function identities", [&](std::ostream& d) {
    const bool origin = scaling_hat(m0, 0.0) == 1.0;
    double flat = 0.0;
    for (int i = 0; i < 4001; ++i) {
      flat = std::max(flat, std::fabs(scaling_hat(m0, uniform(-2.0 * kPi / 5.0, 2.0 * kPi / 5.0, i, 4001)) - 1.0));
    }
    bool lattice = true;
    for (int k = 1; k <= 8; ++k) {
      lattice = lattice && scaling_hat(m0, kTwoPi * k) == 0.0 && scaling_hat(m0, -kTwoPi * k) == 0.0;
    }
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-1e5, 1e5);
    int truncation_failures = 0;
    for (int i = 0; i < 100; ++i) {
      const double xi = u(rng);
      const int depth = product_depth(xi);
      if (scaling_hat(m0, xi, depth) != scaling_hat(m0, xi, depth + 10)) ++truncation_failures;
    }
    d << "phi_hat(0) = 1: " << origin << ", flat-top deviation " << flat << ", zeros at 2pi k: " << lattice
      << ", truncation failures " << truncation_failures;
    return origin && flat <= kFlatTopTol && lattice && truncation_failures == 0;
  });

  criterion(6, "orthonormality witnesses", [&](std::ostream& d) {
    double per = 0.0;
    for (int i = 0; i < 1000; ++i) {
      per = std::max(per, std::fabs(periodization(m0, uniform(-kPi, kPi, i, 1000), 64).sum - 1.0));
    }
    double cal = 0.0;
    for (int i = 0; i < 100; ++i) {
      cal = std::max(cal, std::fabs(calderon_sum(m0, std::pow(2.0, i / 99.0)) - 1.0));
    }
    double ip = 0.0;
    for (const InnerProduct& p : translate_inner_products(m0, 8)) {
      ip = std::max({ip, std::fabs(p.re - (p.k == 0 ? 1.0 : 0.0)), std::fabs(p.im)});
    }
    d << "periodization " << per << ", Calderon " << cal << ", translates " << ip;
    return per <= kPeriodizationTol && cal <= kCalderonTol && ip <= kInnerProductTol;
  });

  criterion(7, "synthesis", [&](std::ostream& d) {
    const SampledFunction psi = synthesize_time(m0, std::ldexp(kPi, 8), std::size_t{1} << 15);
    const double plancherel =
        oracle::plancherel([&](double x) { return wavelet_hat_abs(m0, x); }, 64.0 * kPi);
    d << "max |Im psi| " << psi.max_imag_residue << ", |int |psi|^2 - 1| = " << std::fabs(psi.l2_mass - 1.0)
      << ", |oracle - 1| = " << std::fabs(plancherel - 1.0);
    return psi.max_imag_residue <= kRealTol && std::fabs(psi.l2_mass - 1.0) <= kNormTol &&
           std::fabs(psi.l2_mass - plancherel) <= kNormTol && std::fabs(plancherel - 1.0) <= kNormTol;
  });

  criterion(8, "support refinement", [&](std::ostream& d) {
    long violations = 0;
    long visited = 0;
    const double floor = std::log(kSupportFloor);
    for (int n = 3; n <= 12; ++n) {
      const double lo = std::ldexp(kPi, n);
      const double center = std::ldexp(kTwoPiOverThree, n + 1);
      const long count = (64L << n) + 1;
      for (long i = 0; i < count; ++i) {
        const double xi = lo + static_cast<double>(i) * (kPi / 64.0);
        const LogMagnitude l = log_scaling_hat(m0, xi);
        if (l.zero || l.log_abs <= floor) continue;
        ++visited;
        if (!(std::fabs(xi - center) < 8.0 * kPi / 15.0)) ++violations;
      }
    }
    const auto [a_lo, a_hi] = product_bound_interval(4);
    double a_min = 1.0;
    for (int i = 0; i < 4001; ++i) a_min = std::min(a_min, m0(uniform(a_lo, a_hi, i, 4001)));
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(16.0 * kPi, 32.0 * kPi);
    const double center = 64.0 * kPi / 3.0;
    int taken = 0;
    int two_sided_failures = 0;
    while (taken < 50) {
      const double xi = u(rng);
      const double phi = scaling_hat(m0, xi);
      if (phi == 0.0) continue;
      ++taken;
      double product = 1.0;
      for (int j = 1; j <= 5; ++j) {
        const double sign = ((4 - j) % 2 == 0) ? 1.0 : -1.0;
        product *= m0(kTwoPiOverThree - sign * (xi - center) / std::pow(2.0, j));
      }
      if (phi > product * (1.0 + kProductRelSlack) || phi < a_min * product * (1.0 - kProductRelSlack)) {
        ++two_sided_failures;
      }
    }
    d << "containment violations " << violations << " of " << visited << " cozero grid points, "
      << "two-sided failures " << two_sided_failures << " of 50";
    return violations == 0 && visited > 0 && two_sided_failures == 0;
  });

  criterion(9, "decay suite", [&](std::ostream& d) {
    const DecayReport r = run_decay_suite(m0, kPi / 4.0, 3, 18, 2.0);
    bool lower = true;
    for (const DecaySample& s : r.samples) lower = lower && s.r_lower <= kLowerFactor * r.samples.front().r_lower;
    const std::vector<double> low = ratio_series(r, 1.01);
    bool increasing = true;
    for (std::size_t i = 1; i < low.size(); ++i) increasing = increasing && low[i] > low[i - 1];
    const double growth = low.back() / low.front();
    d << "nonzero " << r.all_nonzero << ", r_upper bracket ratio " << r.bracket_ratio << ", lower bound "
      << lower << ", sigma'=1.01 ratio " << low.front() << " -> " << low.back() << " (growth " << growth
      << ", monotone increase " << increasing << ")";
    return r.all_nonzero && r.bracket_ratio <= kBracketMax && lower && increasing &&
           growth >= kExclusionGrowth;
  });

  criterion(10, "invariant cycles", [&](std::ostream& d) {
    std::set<std::vector<oracle::Turn>> got;
    bool products = true;
    for (const Cycle& c : enumerate_cycles(8)) {
      std::vector<oracle::Turn> turns;
      for (const DyadicAngle& a : c.members()) turns.emplace_back(a.p(), a.q());
      std::sort(turns.begin(), turns.end());
      got.insert(turns);
      const double p = cycle_product(m0, c.members()).product;
      products = products && (c.start.p() == 0 ? p == 1.0 : p == 0.0);
    }
    const bool matches = got == oracle::brute_cycles(8);
    const CycleProduct fifth = cycle_product(m0, orbit(DyadicAngle::make(1, 5), 8).points);
    const bool zero_at = fifth.zero_at && std::llabs(fifth.zero_at->p()) == 2 && fifth.zero_at->q() == 5;
    const bool positive =
        m0_at(m0, DyadicAngle::make(1, 5)) > 0.0 && m0_at(m0, DyadicAngle::make(-1, 5)) > 0.0;
    d << got.size() << " cycles, oracle match " << matches << ", products " << products
      << ", 1/5 cycle zero at " << (fifth.zero_at ? fifth.zero_at->to_string() : "none")
      << ", m0(+-2pi/5) > 0: " << positive;
    return matches && products && zero_at && positive;
  });

  criterion(11, "flatness", [&](std::ostream& d) {
    const std::vector<double> xs{0.2, 0.1, 0.05, 0.02};
    bool all = true;
    for (int j = 1; j <= 5; ++j) {
      const FlatnessResult r = flatness_check(2.0, j, xs);
      d << "j=" << j << (r.decreasing ? " decreasing" : " not decreasing") << " [";
      for (std::size_t i = 0; i < r.derivatives.size(); ++i) d << (i ? " " : "") << std::abs(r.derivatives[i]);
      d << "]; ";
      all = all && r.decreasing;
    }
    const double rho = std::exp(-0.5);
    const double t = std::log1p(1.0 / 0.2);
    const double w = lambert_w(t);
    const double omega_prime = std::exp(w) * (1.0 + t * lambert_w_prime(t));
    const double analytic = flat_profile(rho, 2.0, 0.2) * rho * omega_prime / (1.0 + 1.0 / 0.2) / 0.04;
    const double rel = std::fabs(flatness_check(2.0, 1, xs).derivatives[0] / analytic - 1.0);
    d << "j=1 vs analytic at 0.2: rel " << rel;
    return all && rel <= kFlatDerivTol;
  });

  criterion(12, "C_eta dichotomy", [&](std::ostream& d) {
    const double e = kPi / 4.0;
    // the omitted part of the eta = 2 series beyond J = 60, bounded below by a finite stretch
    const double tail = c_eta_partial_sum(1000000, e, 2.0) - c_eta_partial_sum(60, e, 2.0);
    const double s3 = c_eta_partial_sum(1000, e, 1.0);
    const double s6 = c_eta_partial_sum(1000000, e, 1.0);
    d << "eta=2 tail beyond J=60 >= " << tail << " (term at 60: " << c_eta_term(60, e, 2.0)
      << "), eta=1 S(1e3) = " << s3 << ", S(1e6) = " << s6;
    return tail < kCetaTailTol && s6 >= kCetaGrowth * s3;
  });

  criterion(13, "figures", [&](std::ostream& d) {
    const auto dir = std::filesystem::temp_directory_path() / "gevrey_acceptance_figs";
    std::filesystem::remove_all(dir);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli({"plot", "--out", dir.string()}, out, err);
    int files = 0;
    for (const char* name :
         {"fig1_m0.svg", "fig2_phi_hat.svg", "fig3_phi_hat_detail.svg", "fig4_psi_hat.svg", "fig5_psi.svg"}) {
      if (std::filesystem::exists(dir / name) && std::filesystem::file_size(dir / name) > 0) ++files;
    }
    std::filesystem::remove_all(dir);
    const std::vector<Figure> figs = build_figures(m0);
    const PlotSeries& f1 = figs.at(0).plot.series.at(0);
    bool zero_at_third = false;
    bool one_at_origin = false;
    for (std::size_t i = 0; i < f1.x.size(); ++i) {
      if (std::fabs(std::fabs(f1.x[i]) - kTwoPiOverThree) < 1e-12 && f1.y[i] == 0.0) zero_at_third = true;
      if (f1.x[i] == 0.0 && f1.y[i] == 1.0) one_at_origin = true;
    }
    const PlotSeries& f5 = figs.at(4).plot.series.at(0);
    double amp = 0.0;
    for (double y : f5.y) amp = std::max(amp, std::fabs(y));
    d << "exit " << code << ", files " << files << "/5, fig1 zero at 2pi/3 " << zero_at_third
      << ", fig1 one at 0 " << one_at_origin << ", fig5 max |Im| " << figs.at(4).max_imag_residue
      << ", fig5 amplitude " << amp;
    return code == 0 && files == 5 && zero_at_third && one_at_origin &&
           figs.at(4).max_imag_residue <= kRealTol && amp >= kFig5Min && amp <= kFig5Max;
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
