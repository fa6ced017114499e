#include "msi/spectral.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace msi {

double fejer_kernel_value(double beta, const FejerWindow& w) {
  if (beta == std::floor(beta)) throw DomainError("fejer_kernel_value: beta must not be an integer");
  const double h = static_cast<double>(w.h());
  const double hb = h * beta;
  if (hb == std::floor(hb)) return 0.0;
  const double top = std::sin(std::numbers::pi * hb);
  const double num = top * top;
  if (num == 0.0) return 0.0;
  const double bottom = std::sin(std::numbers::pi * beta);
  return (2.0 / h) * num / (bottom * bottom);
}

double fejer_kernel_value(std::int64_t num, std::int64_t den, const FejerWindow& w) {
  if (den <= 0) throw DomainError("fejer_kernel_value: denominator must be positive");
  if (num % den == 0) throw DomainError("fejer_kernel_value: beta must not be an integer");
  const __int128 hn = static_cast<__int128>(w.h()) * num;
  if (hn % den == 0) return 0.0;
  const double top = sin_pi_frac(static_cast<std::int64_t>(hn % (2 * static_cast<__int128>(den))), den);
  const double numer = top * top;
  if (numer == 0.0) return 0.0;
  const double bottom = sin_pi_frac(num, den);
  return (2.0 / static_cast<double>(w.h())) * numer / (bottom * bottom);
}

FejerCoefficient fejer_coefficient(std::int64_t j, std::int64_t q, const FejerWindow& w) {
  if (q < 2 || j < 1 || 2 * j > q) {
    throw DomainError("fejer_coefficient: need 1 <= j <= q/2, got j=" + std::to_string(j) + " q=" + std::to_string(q));
  }
  return {j, q, fejer_kernel_value(j, q, w) / static_cast<double>(q)};
}

double chi_tilde_expansion(std::int64_t q, std::int64_t x, const FejerWindow& w) {
  if (q < 1) throw DomainError("chi_tilde_expansion: q must be >= 1");
  std::vector<double> terms;
  for (std::int64_t ell = 2; ell <= q; ++ell) {
    if (q % ell != 0) continue;
    const double scale = static_cast<double>(ell) / static_cast<double>(q);
    for (std::int64_t j = 1; 2 * j <= ell; ++j) {
      if (std::gcd(j, ell) != 1) continue;
      const double c = fejer_coefficient(j, ell, w).value;
      if (c == 0.0) continue;
      // cos(2 pi x j / l) = cos(pi * (2 x j mod 2l) / l)
      const auto phase = static_cast<std::int64_t>((static_cast<__int128>(2) * x * j) % (2 * ell));
      terms.push_back(scale * c * cos_pi_frac(phase, ell));
    }
  }
  return pairwise_sum(terms);
}

double coefficient_square_sum(std::int64_t q, const FejerWindow& w, bool reduced_only) {
  if (q < 2) throw DomainError("coefficient_square_sum: q must be >= 2");
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(q));
  const double inv_q = 1.0 / static_cast<double>(q);
  for (std::int64_t j = 1; j < q; ++j) {
    if (reduced_only && std::gcd(j, q) != 1) continue;
    const double c = fejer_kernel_value(j, q, w) * inv_q;
    terms.push_back(c * c);
  }
  return pairwise_sum(terms);
}

template <class T>
T ramanujan_coefficient(const FunctionTable<T>& g, std::int64_t ell, std::int64_t q_max) {
  if (ell < 1) throw DomainError("ramanujan_coefficient: l must be >= 1");
  if (q_max < 1) throw DomainError("ramanujan_coefficient: Q must be >= 1");
  if (static_cast<std::int64_t>(g.support_max()) > q_max) {
    throw PreconditionError("ramanujan_coefficient: supp(g) exceeds [1, " + std::to_string(q_max) + "]");
  }
  std::vector<T> terms;
  for (std::int64_t m = 1; ell * m <= q_max; ++m) {
    const T v = g.at(ell * m);
    if (v == 0) continue;
    terms.push_back(v / from_int<T>(m));
  }
  return reduce_sum<T>(terms) / from_int<T>(ell);
}

template <class T>
RamanujanTable<T>::RamanujanTable(const FunctionTable<T>& g, std::int64_t q_max)
    : q_max_(q_max), values_(static_cast<std::size_t>(q_max) + 1, T(0)) {
  for (std::int64_t ell = 1; ell <= q_max; ++ell) {
    values_[static_cast<std::size_t>(ell)] = ramanujan_coefficient(g, ell, q_max);
  }
}

template Rational ramanujan_coefficient<Rational>(const FunctionTable<Rational>&, std::int64_t, std::int64_t);
template double ramanujan_coefficient<double>(const FunctionTable<double>&, std::int64_t, std::int64_t);
template class RamanujanTable<Rational>;
template class RamanujanTable<double>;

}  // namespace msi
