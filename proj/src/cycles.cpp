#include "gevrey/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gevrey {
namespace {

constexpr int kMaxCycleLength = 24;

std::uint64_t rotate_left(std::uint64_t w, int bits, std::uint64_t mask) {
  return ((w << 1) | (w >> (bits - 1))) & mask;
}

// Numerator over 2^l - 1 shifted into [-1/2, 1/2).
std::int64_t signed_word(std::uint64_t w, std::uint64_t n) {
  return 2 * w < n ? static_cast<std::int64_t>(w)
                   : static_cast<std::int64_t>(w) - static_cast<std::int64_t>(n);
}

}  // namespace

DyadicAngle DyadicAngle::make(std::int64_t p, std::int64_t q) {
  if (q <= 0 || q % 2 == 0) {
    throw std::invalid_argument("DyadicAngle: denominator must be positive and odd, got " +
                                std::to_string(q));
  }
  std::int64_t r = ((p % q) + q) % q;
  if (2 * r >= q) r -= q;
  const std::int64_t g = std::gcd(r < 0 ? -r : r, q);
  DyadicAngle a;
  a.p_ = r / g;
  a.q_ = q / g;
  return a;
}

double DyadicAngle::radians() const {
  return kTwoPi * static_cast<double>(p_) / static_cast<double>(q_);
}

std::string DyadicAngle::to_string() const {
  if (p_ == 0) return "0";
  return "2pi*" + std::to_string(p_) + "/" + std::to_string(q_);
}

bool operator<(const DyadicAngle& a, const DyadicAngle& b) {
  return a.p_ * b.q_ < b.p_ * a.q_;
}

DyadicAngle doubling(const DyadicAngle& a) {
  std::int64_t r = 2 * a.p();
  const std::int64_t q = a.q();
  if (2 * r >= q) {
    r -= q;
  } else if (2 * r < -q) {
    r += q;
  }
  return DyadicAngle::make(r, q);
}

Orbit orbit(const DyadicAngle& a, int max_len) {
  if (max_len < 1) throw std::invalid_argument("orbit: max_len must be at least 1");
  Orbit out;
  out.points.push_back(a);
  DyadicAngle cur = doubling(a);
  while (!(cur == a)) {
    if (static_cast<int>(out.points.size()) >= max_len) return out;
    out.points.push_back(cur);
    cur = doubling(cur);
  }
  out.is_cycle = true;
  return out;
}

std::vector<DyadicAngle> Cycle::members() const {
  std::vector<DyadicAngle> out;
  out.reserve(static_cast<std::size_t>(length));
  DyadicAngle cur = start;
  for (int i = 0; i < length; ++i) {
    out.push_back(cur);
    cur = doubling(cur);
  }
  return out;
}

std::vector<Cycle> enumerate_cycles(int max_len) {
  if (max_len < 1 || max_len > kMaxCycleLength) {
    throw std::invalid_argument("enumerate_cycles: max_len must lie in [1, 24]");
  }
  // Points of period dividing l are m / (2^l - 1); doubling rotates the l-bit word m.
  std::vector<Cycle> out;
  for (int l = 1; l <= max_len; ++l) {
    const std::uint64_t n = (std::uint64_t{1} << l) - 1;
    const std::size_t first = out.size();
    for (std::uint64_t m = 0; m < n; ++m) {
      std::uint64_t w = m;
      int period = 0;
      do {
        w = rotate_left(w, l, n);
        ++period;
      } while (w != m && period < l);
      if (w != m || period != l) continue;
      const std::int64_t own = signed_word(m, n);
      bool smallest = true;
      for (int k = 1; k < l && smallest; ++k) {
        w = rotate_left(w, l, n);
        if (signed_word(w, n) < own) smallest = false;
      }
      if (!smallest) continue;
      out.push_back({DyadicAngle::make(own, static_cast<std::int64_t>(n)), l});
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
              [](const Cycle& a, const Cycle& b) { return a.start < b.start; });
  }
  return out;
}

double m0_at(const LowPassFilter& m0, const DyadicAngle& a) {
  // |xi| / pi = 2 |p| / q
  const std::int64_t p = a.p() < 0 ? -a.p() : a.p();
  if (10 * p >= 4 * a.q()) return 0.0;
  if (3 * p == a.q()) return 0.0;
  return m0(a.radians());
}

CycleProduct cycle_product(const LowPassFilter& m0, const std::vector<DyadicAngle>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("cycle_product: cycle must be nonempty");
  CycleProduct out;
  for (const auto& a : cycle) {
    const double v = m0_at(m0, a);
    if (v == 0.0 && !out.zero_at) out.zero_at = a;
    out.product *= v;
  }
  return out;
}

}  // namespace gevrey
