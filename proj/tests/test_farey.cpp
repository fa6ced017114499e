#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "msi/farey.hpp"

using msi::FareyFraction;
using msi::Rational;

TEST_CASE("enumeration") {
  CHECK(msi::farey_enumerate(2).fractions == std::vector<FareyFraction>{{1, 2}});
  const std::vector<FareyFraction> five = {{1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}};
  CHECK(msi::farey_enumerate(5).fractions == five);
  CHECK_THROWS_AS(msi::farey_enumerate(1), msi::DomainError);

  // Brute force: reduced j/l in (0, 1/2], l <= 100, sorted.
  std::vector<FareyFraction> brute;
  for (std::int64_t l = 2; l <= 100; ++l) {
    for (std::int64_t j = 1; 2 * j <= l; ++j) {
      if (std::gcd(j, l) == 1) brute.push_back({j, l});
    }
  }
  std::sort(brute.begin(), brute.end(), msi::less_than);
  CHECK(msi::farey_enumerate(100).fractions == brute);

  const auto full = msi::farey_full(4);
  CHECK(full.size() == 7);
  CHECK(full.front() == FareyFraction{0, 1});
  CHECK(full.back() == FareyFraction{1, 1});
}

TEST_CASE("minimum gap") {
  const auto five = msi::farey_enumerate(5);
  CHECK(msi::min_gap(five) == Rational(1, 20));
  CHECK(msi::numbering_spacing_parameter(five) == 20);
  for (std::int64_t q = 3; q <= 300; q += 17) {
    CHECK(msi::min_gap(msi::farey_enumerate(q)) >= Rational(1, static_cast<unsigned long>(q * q)));
  }
  CHECK_THROWS_AS(msi::min_gap(msi::farey_enumerate(2)), msi::DomainError);
}

TEST_CASE("pair keys") {
  using msi::PairKey;
  CHECK(msi::pair_key({1, 4}, {1, 5}, PairKey::difference) == std::pair<std::int64_t, std::int64_t>{1, 20});
  CHECK(msi::pair_key({1, 2}, {1, 5}, PairKey::difference) == std::pair<std::int64_t, std::int64_t>{3, 10});
  // 1/2 + 1/2 = 1 sits on an integer.
  CHECK(msi::pair_key({1, 2}, {1, 2}, PairKey::wrapped_sum).first == 0);
  // 2/5 + 1/3 = 11/15 is 4/15 from 1.
  CHECK(msi::pair_key({2, 5}, {1, 3}, PairKey::wrapped_sum) == std::pair<std::int64_t, std::int64_t>{4, 15});
}

TEST_CASE("spacing thresholds") {
  const msi::SpacingThreshold ten(10.0);
  CHECK(ten.within(1, 20));
  CHECK(ten.within(1, 10));  // boundary is NEAR
  CHECK_FALSE(ten.within(3, 10));
  CHECK(ten.within(0, 1));
  // An infinite A leaves only a zero key inside the threshold.
  const msi::SpacingThreshold inf(HUGE_VAL);
  CHECK_FALSE(inf.within(1, 1000000));
  CHECK(inf.within(0, 1));
  // A = 1/3 is not a dyadic; the comparison still follows the stored double exactly.
  const msi::SpacingThreshold third(1.0 / 3.0);
  CHECK(third.within(1, 1));
}

TEST_CASE("partition at Q = 5, A = 10") {
  const auto five = msi::farey_enumerate(5);
  const auto part = msi::spaced_pair_partition(five, five, 10.0, msi::PairKey::difference);
  CHECK(part.near.size() + part.far.size() == 10);
  // indices: 1/5 -> 0, 1/4 -> 1, 1/2 -> 4
  const msi::PairPartition::IndexPair quarter_fifth{1, 0}, half_fifth{4, 0};
  CHECK(std::count(part.near.begin(), part.near.end(), quarter_fifth) == 1);
  CHECK(std::count(part.far.begin(), part.far.end(), half_fifth) == 1);

  // Once 1/A drops below the smallest difference (1/20) nothing is NEAR.
  const auto wide = msi::spaced_pair_partition(five, five, 20.0, msi::PairKey::difference);
  CHECK(wide.near.size() == 1);
  const auto past = msi::spaced_pair_partition(five, five, 21.0, msi::PairKey::difference);
  CHECK(past.near.empty());
  CHECK(past.far.size() == 10);
  const auto unbounded = msi::spaced_pair_partition(five, five, HUGE_VAL, msi::PairKey::difference);
  CHECK(unbounded.near.empty());
  // With 1/A at or above the largest difference (3/10) nothing is FAR.
  const auto tight = msi::spaced_pair_partition(five, five, 1.0, msi::PairKey::difference);
  CHECK(tight.far.empty());
  CHECK(tight.near.size() == 10);
}
