#include "msi/farey.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace msi {

std::vector<FareyFraction> farey_full(std::int64_t q) {
  if (q < 1) throw DomainError("farey_full: order must be >= 1");
  std::vector<FareyFraction> out;
  std::int64_t a = 0, b = 1, c = 1, d = q;
  out.push_back({a, b});
  while (c <= q) {
    out.push_back({c, d});
    if (c == d) break;
    const std::int64_t k = (q + b) / d;
    const std::int64_t e = k * c - a;
    const std::int64_t f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
  }
  return out;
}

FareySequence farey_enumerate(std::int64_t q) {
  if (q < 2) throw DomainError("farey_enumerate: order must be >= 2, got " + std::to_string(q));
  FareySequence seq;
  seq.order = q;
  std::int64_t a = 0, b = 1, c = 1, d = q;
  while (2 * c <= d) {
    if (d > 1) seq.fractions.push_back({c, d});
    const std::int64_t k = (q + b) / d;
    const std::int64_t e = k * c - a;
    const std::int64_t f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
  }
  return seq;
}

Rational min_gap(const FareySequence& seq) {
  if (seq.fractions.size() < 2) throw DomainError("min_gap: need at least two fractions");
  Rational best;
  bool first = true;
  for (std::size_t i = 1; i < seq.fractions.size(); ++i) {
    const Rational gap = seq.fractions[i].exact() - seq.fractions[i - 1].exact();
    if (first || gap < best) {
      best = gap;
      first = false;
    }
  }
  return best;
}

Rational numbering_spacing_parameter(const FareySequence& seq) { return 1 / min_gap(seq); }

SpacingThreshold::SpacingThreshold(double a) : a_(a) {
  if (!(a > 0.0)) throw DomainError("spacing parameter A must be positive");
  if (std::isinf(a)) {
    infinite_ = true;
    return;
  }
  int e = 0;
  const double m = std::frexp(a, &e);
  mantissa_ = static_cast<std::int64_t>(std::ldexp(m, 53));
  exponent_ = e - 53;
}

bool SpacingThreshold::within(std::int64_t num, std::int64_t den) const {
  if (num <= 0) return true;
  if (infinite_) return false;
  using u128 = unsigned __int128;
  const u128 lhs = static_cast<u128>(num) * static_cast<u128>(mantissa_);  // < 2^116
  const auto bits = [](u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    return hi ? 128 - std::countl_zero(hi) : 64 - std::countl_zero(static_cast<std::uint64_t>(v));
  };
  if (exponent_ >= 0) {
    // num * M * 2^e <= den
    if (bits(lhs) + exponent_ > 100) return false;
    return (lhs << exponent_) <= static_cast<u128>(den);
  }
  // num * M <= den * 2^(-e)
  const int shift = -exponent_;
  const u128 d = static_cast<u128>(den);
  if (bits(d) + shift > 127) return true;
  return lhs <= (d << shift);
}

std::pair<std::int64_t, std::int64_t> pair_key(const FareyFraction& a, const FareyFraction& b, PairKey mode) {
  const std::int64_t den = a.den * b.den;
  if (mode == PairKey::difference) return {a.num * b.den - b.num * a.den, den};
  return {dist_to_int_num(a.num * b.den + b.num * a.den, den), den};
}

PairPartition spaced_pair_partition(const FareySequence& left, const FareySequence& right, double a, PairKey mode) {
  const SpacingThreshold threshold(a);
  PairPartition out;
  for (std::size_t i = 0; i < left.fractions.size(); ++i) {
    for (std::size_t k = 0; k < right.fractions.size(); ++k) {
      if (!less_than(right.fractions[k], left.fractions[i])) continue;
      const auto [num, den] = pair_key(left.fractions[i], right.fractions[k], mode);
      const PairPartition::IndexPair ref{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)};
      if (threshold.within(num, den)) {
        out.near.push_back(ref);
      } else {
        out.far.push_back(ref);
      }
    }
  }
  return out;
}

}  // namespace msi
