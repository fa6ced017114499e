// spectral.hpp
//
// Fourier side of the weighted multiple count. With h even,
//
//   chi_q(x) = sum_{l | q, l > 1} (l/q) sum*_{j <= l/2} c(j, l) cos(2 pi x j / l),
//   c(j, q)  = F_h(j/q) / q,   F_h(b) = (2/h) sin^2(pi h b) / sin^2(pi b) >= 0,
//
// where sum* runs over j coprime to l. Ramanujan coefficients of f = g*1
// with supp g in [1, Q] are the finite sums R_l = (1/l) sum_{m <= Q/l} g(lm)/m.

#pragma once

#include <cstdint>
#include <vector>

#include "msi/arith.hpp"
#include "msi/short_sums.hpp"

namespace msi {

struct FejerCoefficient {
  std::int64_t j = 0;
  std::int64_t q = 0;
  double value = 0.0;
};

// F_h(beta) for real non-integer beta. Exactly 0 when h*beta is an integer.
double fejer_kernel_value(double beta, const FejerWindow& w);

// F_h(num/den) with exact argument reduction; den does not divide num.
double fejer_kernel_value(std::int64_t num, std::int64_t den, const FejerWindow& w);

// c(j, q) for 1 <= j <= q/2.
FejerCoefficient fejer_coefficient(std::int64_t j, std::int64_t q, const FejerWindow& w);

// The divisor-flipped reduced-fraction expansion of chi_q(x).
double chi_tilde_expansion(std::int64_t q, std::int64_t x, const FejerWindow& w);

// sum_{1 <= j <= q-1} c(j, q)^2, optionally over gcd(j, q) = 1 only. q >= 2.
double coefficient_square_sum(std::int64_t q, const FejerWindow& w, bool reduced_only);

// R_l(g*1) = (1/l) sum_{m <= Q/l} g(l m)/m. Requires supp g in [1, Q].
template <class T>
T ramanujan_coefficient(const FunctionTable<T>& g, std::int64_t ell, std::int64_t q_max);

// R_l for 1 <= l <= Q.
template <class T>
class RamanujanTable {
 public:
  RamanujanTable(const FunctionTable<T>& g, std::int64_t q_max);

  std::int64_t q_max() const { return q_max_; }
  // Zero for l > Q.
  T at(std::int64_t ell) const {
    if (ell < 1 || ell > q_max_) return T(0);
    return values_[static_cast<std::size_t>(ell)];
  }

 private:
  std::int64_t q_max_;
  std::vector<T> values_;  // 1-based
};

}  // namespace msi
