// Independent reference computations used by the tests. Nothing here calls the
// routine it is meant to check.
#ifndef GEVREY_TESTS_ORACLES_HPP
#define GEVREY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// W(x) by bisection on w e^w = x in long double.
inline double bisection_w(double x) {
  const long double target = x;
  long double lo = -1.0L;
  long double hi = std::max(1.0L, std::log1p(std::fabs(target)) + 1.0L);
  for (int i = 0; i < 400; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (mid * std::exp(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::numeric_limits<long double>::epsilon() * std::fabs(mid)) break;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

inline double omega(double sigma, double x) {
  if (x == 0.0) return 0.0;
  return x * std::exp(bisection_w(x) / (sigma - 1.0));
}

inline double g(double sigma, double x) { return omega(sigma, std::log1p(std::fabs(x))); }

inline double log_m(double tau, double sigma, long p) {
  if (p <= 1) return 0.0;
  return tau * std::pow(static_cast<double>(p), sigma) * std::log(static_cast<double>(p));
}

// sup over p = 0..p_max of p ln x - ln M_p
inline double brute_t(double tau, double sigma, double x, long p_max = 200) {
  double best = 0.0;
  for (long p = 1; p <= p_max; ++p) {
    best = std::max(best, static_cast<double>(p) * std::log(x) - log_m(tau, sigma, p));
  }
  return best;
}

// inf over p = 0..p_max of M_p x^p
inline double brute_h(double tau, double sigma, double x, long p_max = 200) {
  double best = 1.0;
  for (long p = 1; p <= p_max; ++p) {
    best = std::min(best, std::exp(log_m(tau, sigma, p) + static_cast<double>(p) * std::log(x)));
  }
  return best;
}

// j-th central difference quotient with step h.
inline double central_difference(const std::function<double(double)>& f, double x, double h,
                                 int j) {
  double acc = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= j; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom * f(x + (0.5 * j - k) * h);
    binom = binom * (j - k) / (k + 1);
  }
  return acc / std::pow(h, j);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 40) {
  struct Rec {
    const std::function<double(double)>& f;
    double run(double a, double b, double fa, double fm, double fb, double whole, double tol,
               int depth) const {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m);
      const double rm = 0.5 * (m + b);
      const double flm = f(lm);
      const double frm = f(rm);
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      const double delta = left + right - whole;
      if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
      return run(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
             run(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
  } rec{f};
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return rec.run(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

inline double piecewise_simpson(const std::function<double(double)>& f, double a, double b,
                                int pieces, double tol = 1e-14) {
  double acc = 0.0;
  const double h = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) acc += adaptive_simpson(f, a + i * h, a + (i + 1) * h, tol);
  return acc;
}

// (1/2pi) * integral over R of |psi_hat|^2 for an even |psi_hat| negligible
// beyond the cutoff.
inline double plancherel(const std::function<double(double)>& abs_psi_hat, double cutoff,
                         int pieces = 2048) {
  const auto sq = [&](double x) {
    const double v = abs_psi_hat(x);
    return v * v;
  };
  return 2.0 * piecewise_simpson(sq, 0.0, cutoff, pieces) / (2.0 * M_PI);
}

// Fraction p/q of a full turn, reduced and shifted into [-1/2, 1/2).
using Turn = std::pair<std::int64_t, std::int64_t>;

inline Turn normalize(std::int64_t p, std::int64_t q) {
  p %= q;
  if (p < 0) p += q;
  if (2 * p >= q) p -= q;
  const std::int64_t gg = std::gcd(p < 0 ? -p : p, q);
  return {p / gg, q / gg};
}

// Every cycle of the doubling map of length <= max_len, found by scanning all
// m / (2^l - 1) and keeping orbits of minimal period l.
inline std::set<std::vector<Turn>> brute_cycles(int max_len) {
  std::set<std::vector<Turn>> out;
  for (int l = 1; l <= max_len; ++l) {
    const std::int64_t q = (std::int64_t{1} << l) - 1;
    for (std::int64_t m = 0; m < std::max<std::int64_t>(q, 1); ++m) {
      std::vector<std::int64_t> orbit{m};
      std::int64_t x = (2 * m) % q;
      while (x != m) {
        orbit.push_back(x);
        x = (2 * x) % q;
      }
      if (static_cast<int>(orbit.size()) != l) continue;
      std::vector<Turn> members;
      for (std::int64_t v : orbit) members.push_back(normalize(v, q));
      std::sort(members.begin(), members.end());
      out.insert(members);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // GEVREY_TESTS_ORACLES_HPP
