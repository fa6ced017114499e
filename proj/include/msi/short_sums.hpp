// short_sums.hpp
//
// Triangular (Fejer) weighted short sums around a center x:
//
//   S_f(x, h) = sum_{|n - x| <= h} (1 - |n - x|/h) f(n)
//             = (1/h) sum_{m <= h} sum_{0 <= |n - x| < m} f(n),
//
// the expected value M(x, h) = h sum_{d <= x+h} g(d)/d for f = g*1, and the
// weighted multiple count chi_q(x) of q in the window minus h/q.
//
// Indices n < 1 contribute nothing (the window is clamped at the left edge).

#pragma once

#include <cstdint>
#include <vector>

#include "msi/arith.hpp"

namespace msi {

// Even half-width h >= 2.
class FejerWindow {
 public:
  explicit FejerWindow(std::int64_t h);

  std::int64_t h() const { return h_; }

  // 1 - |s|/h inside the window, 0 outside.
  template <class T>
  T weight(std::int64_t s) const {
    const std::int64_t a = s < 0 ? -s : s;
    if (a >= h_) return T(0);
    return ratio<T>(h_ - a, h_);
  }

 private:
  std::int64_t h_;
};

// Accumulator used by PrefixSums: long double for the real path, so that
// the affine combinations below lose at most ~11 bits fewer than binary64
// at N ~ 10^6.
template <class T>
struct prefix_accumulator {
  using type = T;
};
template <>
struct prefix_accumulator<double> {
  using type = long double;
};

// p0[n] = sum_{m <= n} f(m), p1[n] = sum_{m <= n} m f(m), p0[0] = p1[0] = 0.
template <class T>
class PrefixSums {
 public:
  using accum_t = typename prefix_accumulator<T>::type;

  explicit PrefixSums(const FunctionTable<T>& f) : PrefixSums(f.values()) {}
  // values[0] is f(1).
  explicit PrefixSums(std::span<const T> values);

  std::size_t max_n() const { return p0_.size() - 1; }
  const accum_t& p0(std::size_t n) const { return p0_[n]; }
  const accum_t& p1(std::size_t n) const { return p1_[n]; }

  // S_f(x, h) in O(1); requires x + h <= max_n.
  T triangular_sum(std::int64_t x, const FejerWindow& w) const;

 private:
  std::vector<accum_t> p0_;
  std::vector<accum_t> p1_;
};

// O(1) per call after the O(max_n) prefix construction inside.
template <class T>
T fejer_short_sum(const FunctionTable<T>& f, std::int64_t x, const FejerWindow& w);

// Same value through the prebuilt prefix sums.
template <class T>
T fejer_short_sum(const PrefixSums<T>& sums, std::int64_t x, const FejerWindow& w) {
  return sums.triangular_sum(x, w);
}

// Serial O(h) reference: the weighted window, term by term.
template <class T>
T fejer_short_sum_reference(const FunctionTable<T>& f, std::int64_t x, const FejerWindow& w);

// The literal double-average form (1/h) sum_{m<=h} sum_{|n-x|<m} f(n), O(h^2).
template <class T>
T averaged_double_sum(const FunctionTable<T>& f, std::int64_t x, const FejerWindow& w);

// h * sum_{d <= x+h} g(d)/d. g must be tabulated on [1, x+h].
template <class T>
T mean_value(const FunctionTable<T>& g, std::int64_t x, const FejerWindow& w);

// Weighted count of multiples of q in [x-h, x+h] (n >= 1), minus h/q.
template <class T>
T chi_tilde_direct(std::int64_t q, std::int64_t x, const FejerWindow& w);

}  // namespace msi
