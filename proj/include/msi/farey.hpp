// farey.hpp
//
// Reduced fractions j/l with 1 < l <= Q in (0, 1/2], their spacing, and the
// near/far split of fraction pairs at a threshold 1/A. All comparisons are
// exact: fractions are integer pairs and A is held as the exact dyadic value
// of its binary64 representation.

#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "msi/numeric.hpp"

namespace msi {

struct FareyFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Rational exact() const { return Rational(static_cast<long>(num), static_cast<unsigned long>(den)); }
  bool operator==(const FareyFraction&) const = default;
};

// a/b < c/d
inline bool less_than(const FareyFraction& a, const FareyFraction& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

struct FareySequence {
  std::int64_t order = 0;
  std::vector<FareyFraction> fractions;  // ascending
};

// The full Farey sequence of order Q on [0, 1] (0/1 ... 1/1), by the
// next-term recurrence.
std::vector<FareyFraction> farey_full(std::int64_t q);

// Reduced j/l, 1 < l <= Q, 0 < j/l <= 1/2, ascending. Q >= 2.
FareySequence farey_enumerate(std::int64_t q);

// Minimal difference of consecutive fractions. Needs >= 2 fractions.
Rational min_gap(const FareySequence& seq);

// 1 / min_gap: the A for which ||lambda_n - lambda_m|| >= |n - m| / A holds
// along the sorted numbering.
Rational numbering_spacing_parameter(const FareySequence& seq);

// Exact test of p/q <= 1/A for A > 0 (A = +inf accepts only a zero key).
class SpacingThreshold {
 public:
  explicit SpacingThreshold(double a);

  double a() const { return a_; }
  // num/den <= 1/A, den > 0, num >= 0.
  bool within(std::int64_t num, std::int64_t den) const;

 private:
  double a_;
  bool infinite_ = false;
  std::int64_t mantissa_ = 0;  // A = mantissa_ * 2^exponent_
  int exponent_ = 0;
};

enum class PairKey { difference, wrapped_sum };

// Key of the ordered pair (a, b) with a > b, as an exact fraction over
// den = a.den * b.den: difference a - b, or ||a + b||.
std::pair<std::int64_t, std::int64_t> pair_key(const FareyFraction& a, const FareyFraction& b, PairKey mode);

struct PairPartition {
  using IndexPair = std::pair<std::uint32_t, std::uint32_t>;  // (index in L, index in R)
  std::vector<IndexPair> near;  // key <= 1/A
  std::vector<IndexPair> far;   // key > 1/A
};

// Classifies every (i, k) with L[i] > R[k]. Pairs with L[i] < R[k] are the
// exchanged couples and appear when the roles of L and R are swapped; equal
// fractions belong to the diagonal and are never listed.
PairPartition spaced_pair_partition(const FareySequence& left, const FareySequence& right, double a, PairKey mode);

}  // namespace msi
