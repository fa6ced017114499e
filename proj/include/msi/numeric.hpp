// numeric.hpp
//
// Scalar plumbing shared by every module: the exact rational type, the
// correctly rounded rational -> binary64 map, pairwise summation, and
// trigonometry at rational multiples of pi with exact argument reduction.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

namespace msi {

using Rational = mpq_class;

// Error taxonomy. The CLI maps these onto exit codes.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

// Round-to-nearest, ties-to-even image of q in binary64. mpq_get_d truncates,
// so the truncated value and its upper neighbour are compared exactly.
double to_double(const Rational& q);

inline double to_double(double v) { return v; }

// Converts an integer or a double into scalar type T. Doubles convert to
// Rational exactly (every finite binary64 is a dyadic rational).
template <class T>
T from_int(long long v) {
  if constexpr (is_exact_v<T>) {
    return Rational(static_cast<long>(v));
  } else {
    return static_cast<T>(v);
  }
}

template <class T>
T ratio(long long num, long long den) {
  if constexpr (is_exact_v<T>) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
  } else {
    return static_cast<T>(num) / static_cast<T>(den);
  }
}

// "p/q" (or "p" when q = 1).
std::string to_fraction_string(const Rational& q);
// Shortest decimal that reads back to the same double.
std::string format_double(double v);

// Accepts "p/q", "p", or a decimal literal such as "-0.125" / "1e-3".
// Decimals are read exactly as written (0.1 means 1/10).
Rational parse_rational(const std::string& text);

// Pairwise (tree) summation with a fixed split rule, so the result depends
// only on the input order and never on how the caller was scheduled.
double pairwise_sum(std::span<const double> values);

// Rationals sum exactly; order is irrelevant.
Rational exact_sum(std::span<const Rational> values);

template <class T>
T reduce_sum(std::span<const T> values) {
  if constexpr (is_exact_v<T>) {
    return exact_sum(values);
  } else {
    return pairwise_sum(values);
  }
}

// sin(pi*num/den) and cos(pi*num/den) with num reduced modulo 2*den in
// integer arithmetic before any floating-point work. den > 0.
double sin_pi_frac(std::int64_t num, std::int64_t den);
double cos_pi_frac(std::int64_t num, std::int64_t den);

// ||num/den||: distance to the nearest integer, returned as an exact
// fraction (numerator, denominator) with the same denominator.
std::int64_t dist_to_int_num(std::int64_t num, std::int64_t den);

// ||alpha|| for real alpha.
double dist_to_int(double alpha);

}  // namespace msi
