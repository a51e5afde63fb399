#ifndef GEVREY_CYCLES_HPP
#define GEVREY_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gevrey/filter.hpp"

namespace gevrey {

/// The angle 2 pi p / q in [-pi, pi) with q odd and p/q reduced.
class DyadicAngle {
 public:
  DyadicAngle() = default;
  /// Reduces p/q and shifts it into [-1/2, 1/2). Throws std::invalid_argument
  /// unless q is positive and odd.
  static DyadicAngle make(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  /// kTwoPi * p / q; 2pi/3 comes out bitwise equal to kTwoPiOverThree.
  double radians() const;
  std::string to_string() const;  // "2pi*p/q"

  friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;
  /// Orders by value.
  friend bool operator<(const DyadicAngle& a, const DyadicAngle& b);

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// xi -> 2 xi mod 2pi on [-pi, pi).
DyadicAngle doubling(const DyadicAngle& a);

struct Orbit {
  std::vector<DyadicAngle> points;
  bool is_cycle = false;
};

/// Iterates the doubling map from a until it returns (is_cycle) or max_len
/// points have been collected without returning.
Orbit orbit(const DyadicAngle& a, int max_len);

/// A cycle stored by its smallest member and its length.
struct Cycle {
  DyadicAngle start;
  int length = 0;
  std::vector<DyadicAngle> members() const;  // in doubling order from start
};

/// All cycles of length <= max_len (max_len <= 24), sorted by length then start.
std::vector<Cycle> enumerate_cycles(int max_len);

/// m0 at an exact angle. Zeros (|xi| = 2pi/3 or |xi| >= 4pi/5) are decided in
/// rational arithmetic; elsewhere the angle is converted to double.
double m0_at(const LowPassFilter& m0, const DyadicAngle& a);

struct CycleProduct {
  double product = 1.0;
  std::optional<DyadicAngle> zero_at;  // first member where m0 vanishes
};

CycleProduct cycle_product(const LowPassFilter& m0, const std::vector<DyadicAngle>& cycle);

}  // namespace gevrey

#endif  // GEVREY_CYCLES_HPP
