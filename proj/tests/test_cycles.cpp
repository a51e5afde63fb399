#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gevrey/cycles.hpp"
#include "gevrey/filter.hpp"
#include "oracles.hpp"

using namespace gevrey;

namespace {

const LowPassFilter& default_filter() {
  static const LowPassFilter m0{FilterConfig{}};
  return m0;
}

std::vector<oracle::Turn> as_turns(const std::vector<DyadicAngle>& members) {
  std::vector<oracle::Turn> out;
  for (const auto& a : members) out.emplace_back(a.p(), a.q());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("dyadic angles") {
  const DyadicAngle a = DyadicAngle::make(3, 9);
  CHECK(a.p() == 1);
  CHECK(a.q() == 3);
  CHECK(DyadicAngle::make(2, 3) == DyadicAngle::make(-1, 3));
  CHECK(DyadicAngle::make(7, 5) == DyadicAngle::make(2, 5));
  CHECK(DyadicAngle::make(1, 3).radians() == doctest::Approx(kTwoPiOverThree));
  CHECK(DyadicAngle::make(0, 7).to_string() == "0");
  CHECK(DyadicAngle::make(1, 5).to_string() == "2pi*1/5");
  CHECK(DyadicAngle::make(-1, 5) < DyadicAngle::make(1, 7));
  CHECK_THROWS_AS(DyadicAngle::make(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(DyadicAngle::make(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(DyadicAngle::make(1, -3), std::invalid_argument);
}

TEST_CASE("doubling") {
  CHECK(doubling(DyadicAngle::make(1, 3)) == DyadicAngle::make(-1, 3));
  CHECK(doubling(DyadicAngle::make(0, 1)) == DyadicAngle::make(0, 1));
  CHECK(doubling(DyadicAngle::make(1, 5)) == DyadicAngle::make(2, 5));
  CHECK(doubling(DyadicAngle::make(2, 5)) == DyadicAngle::make(-1, 5));
}

TEST_CASE("orbits") {
  const Orbit o3 = orbit(DyadicAngle::make(1, 3), 10);
  CHECK(o3.is_cycle);
  CHECK(as_turns(o3.points) == std::vector<oracle::Turn>{{-1, 3}, {1, 3}});
  const Orbit o5 = orbit(DyadicAngle::make(1, 5), 10);
  CHECK(o5.is_cycle);
  CHECK(as_turns(o5.points) == std::vector<oracle::Turn>{{-2, 5}, {-1, 5}, {1, 5}, {2, 5}});
  const Orbit o0 = orbit(DyadicAngle::make(0, 1), 10);
  CHECK(o0.is_cycle);
  CHECK(o0.points.size() == 1);
  // 1/7 has period 3, so a cap of 2 cannot close it
  CHECK_FALSE(orbit(DyadicAngle::make(1, 7), 2).is_cycle);
}

TEST_CASE("orbit length divides l") {
  for (int l = 1; l <= 12; ++l) {
    const std::int64_t q = (std::int64_t{1} << l) - 1;
    for (std::int64_t m = 0; m < std::max<std::int64_t>(q, 1); ++m) {
      const Orbit o = orbit(DyadicAngle::make(m, std::max<std::int64_t>(q, 1)), l);
      REQUIRE(o.is_cycle);
      CHECK(l % static_cast<int>(o.points.size()) == 0);
    }
  }
}

TEST_CASE("enumeration matches brute force") {
  for (int max_len : {1, 2, 4, 8, 10}) {
    std::set<std::vector<oracle::Turn>> got;
    std::map<int, int> per_length;
    for (const Cycle& c : enumerate_cycles(max_len)) {
      got.insert(as_turns(c.members()));
      ++per_length[c.length];
      // doubling l times returns to the start exactly
      DyadicAngle a = c.start;
      for (int i = 0; i < c.length; ++i) a = doubling(a);
      CHECK(a == c.start);
    }
    CAPTURE(max_len);
    CHECK(got == oracle::brute_cycles(max_len));
    if (max_len >= 4) {
      CHECK(per_length[4] == 3);  // (2^4 - 2^2) / 4
    }
  }
  const auto two = enumerate_cycles(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].length == 1);
  CHECK(two[1].members().size() == 2);
  const auto four = enumerate_cycles(4);
  std::set<std::int64_t> denominators;
  for (const Cycle& c : four) {
    if (c.length == 4) denominators.insert(c.start.q());
  }
  CHECK(denominators == std::set<std::int64_t>{5, 15});
  CHECK_THROWS_AS(enumerate_cycles(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cycles(25), std::invalid_argument);
}

TEST_CASE("cycle products") {
  const LowPassFilter& m0 = default_filter();
  const CycleProduct third = cycle_product(m0, orbit(DyadicAngle::make(1, 3), 4).points);
  CHECK(third.product == 0.0);
  REQUIRE(third.zero_at.has_value());
  CHECK(third.zero_at->q() == 3);
  const CycleProduct zero = cycle_product(m0, {DyadicAngle::make(0, 1)});
  CHECK(zero.product == 1.0);
  CHECK_FALSE(zero.zero_at.has_value());

  const CycleProduct fifth = cycle_product(m0, orbit(DyadicAngle::make(1, 5), 4).points);
  CHECK(fifth.product == 0.0);
  REQUIRE(fifth.zero_at.has_value());
  CHECK(std::abs(fifth.zero_at->p()) == 2);
  CHECK(fifth.zero_at->q() == 5);
  CHECK(m0_at(m0, DyadicAngle::make(1, 5)) > 0.0);
  CHECK(m0_at(m0, DyadicAngle::make(-1, 5)) > 0.0);
  CHECK(m0_at(m0, DyadicAngle::make(2, 5)) == 0.0);
}

TEST_CASE("every nontrivial cycle up to length 8 has a zero factor") {
  const LowPassFilter& m0 = default_filter();
  for (const Cycle& c : enumerate_cycles(8)) {
    const CycleProduct p = cycle_product(m0, c.members());
    if (c.start.p() == 0) {
      CHECK(p.product == 1.0);
      continue;
    }
    CAPTURE(c.start.to_string());
    CHECK(p.product == 0.0);
    REQUIRE(p.zero_at.has_value());
    const double x = std::abs(p.zero_at->radians());
    const bool at_third = p.zero_at->q() == 3;
    CHECK((at_third || x >= 4.0 * kPi / 5.0 - 1e-15));
  }
}

TEST_CASE("m0 at exact angles agrees with the floating filter") {
  const LowPassFilter& m0 = default_filter();
  for (const Cycle& c : enumerate_cycles(6)) {
    for (const DyadicAngle& a : c.members()) {
      const double exact = m0_at(m0, a);
      const double floating = m0(a.radians());
      CHECK(std::fabs(exact - floating) <= 1e-12);
    }
  }
}
