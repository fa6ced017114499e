#include "msi/short_sums.hpp"

#include <algorithm>
#include <string>

namespace msi {

FejerWindow::FejerWindow(std::int64_t h) : h_(h) {
  if (h < 2 || h % 2 != 0) {
    throw DomainError("Fejer window half-width must be a positive even integer, got " + std::to_string(h));
  }
}

namespace {

template <class T>
void require_window_in_table(std::size_t max_n, std::int64_t x, const FejerWindow& w, const char* op) {
  if (x < 1) throw DomainError(std::string(op) + ": center must be >= 1");
  if (static_cast<std::uint64_t>(x + w.h()) > max_n) {
    throw RangeError(std::string(op) + ": x + h = " + std::to_string(x + w.h()) + " exceeds table size " +
                     std::to_string(max_n));
  }
}

template <class A>
A accum_from(std::int64_t v) {
  if constexpr (is_exact_v<A>) {
    return Rational(static_cast<long>(v));
  } else {
    return static_cast<A>(v);
  }
}

}  // namespace

template <class T>
PrefixSums<T>::PrefixSums(std::span<const T> values) : p0_(values.size() + 1), p1_(values.size() + 1) {
  p0_[0] = accum_t(0);
  p1_[0] = accum_t(0);
  for (std::size_t n = 1; n <= values.size(); ++n) {
    const accum_t v = static_cast<accum_t>(values[n - 1]);
    p0_[n] = p0_[n - 1] + v;
    p1_[n] = p1_[n - 1] + accum_from<accum_t>(static_cast<std::int64_t>(n)) * v;
  }
}

template <class T>
T PrefixSums<T>::triangular_sum(std::int64_t x, const FejerWindow& w) const {
  const std::int64_t h = w.h();
  require_window_in_table<T>(max_n(), x, w, "fejer_short_sum");
  const auto xi = static_cast<std::size_t>(x);
  const auto hi = static_cast<std::size_t>(x + h);
  const auto lo_m1 = static_cast<std::size_t>(std::max<std::int64_t>(x - h, 1) - 1);
  // n in [x-h, x]: weight (h - x + n)/h.  n in (x, x+h]: weight (h + x - n)/h.
  const accum_t left = accum_from<accum_t>(h - x) * (p0_[xi] - p0_[lo_m1]) + (p1_[xi] - p1_[lo_m1]);
  const accum_t right = accum_from<accum_t>(h + x) * (p0_[hi] - p0_[xi]) - (p1_[hi] - p1_[xi]);
  const accum_t total = (left + right) / accum_from<accum_t>(h);
  return static_cast<T>(total);
}

template <class T>
T fejer_short_sum(const FunctionTable<T>& f, std::int64_t x, const FejerWindow& w) {
  return PrefixSums<T>(f).triangular_sum(x, w);
}

template <class T>
T fejer_short_sum_reference(const FunctionTable<T>& f, std::int64_t x, const FejerWindow& w) {
  require_window_in_table<T>(f.max_n(), x, w, "fejer_short_sum_reference");
  T s(0);
  for (std::int64_t n = std::max<std::int64_t>(1, x - w.h()); n <= x + w.h(); ++n) {
    const T& v = f[static_cast<std::size_t>(n)];
    if (v == 0) continue;
    s += w.weight<T>(n - x) * v;
  }
  return s;
}

template <class T>
T averaged_double_sum(const FunctionTable<T>& f, std::int64_t x, const FejerWindow& w) {
  require_window_in_table<T>(f.max_n(), x, w, "averaged_double_sum");
  T outer(0);
  for (std::int64_t m = 1; m <= w.h(); ++m) {
    T inner(0);
    for (std::int64_t n = std::max<std::int64_t>(1, x - m + 1); n <= x + m - 1; ++n) {
      inner += f[static_cast<std::size_t>(n)];
    }
    outer += inner;
  }
  return outer / from_int<T>(w.h());
}

template <class T>
T mean_value(const FunctionTable<T>& g, std::int64_t x, const FejerWindow& w) {
  if (x < 1) throw DomainError("mean_value: center must be >= 1");
  const std::int64_t top = x + w.h();
  if (static_cast<std::uint64_t>(top) > g.max_n()) {
    throw RangeError("mean_value: g not tabulated up to x + h = " + std::to_string(top));
  }
  std::vector<T> terms;
  terms.reserve(static_cast<std::size_t>(top));
  for (std::int64_t d = 1; d <= top; ++d) {
    const T& v = g[static_cast<std::size_t>(d)];
    if (v == 0) continue;
    terms.push_back(v / from_int<T>(d));
  }
  return from_int<T>(w.h()) * reduce_sum<T>(terms);
}

template <class T>
T chi_tilde_direct(std::int64_t q, std::int64_t x, const FejerWindow& w) {
  if (q < 1) throw DomainError("chi_tilde_direct: q must be >= 1");
  if (x < 1) throw DomainError("chi_tilde_direct: x must be >= 1");
  const std::int64_t h = w.h();
  const std::int64_t lo = std::max<std::int64_t>(1, x - h);
  // first multiple of q that is >= lo
  std::int64_t n = ((lo + q - 1) / q) * q;
  std::int64_t weighted = 0;  // sum of (h - |n - x|), divided by h at the end
  for (; n <= x + h; n += q) weighted += h - (n > x ? n - x : x - n);
  return ratio<T>(weighted, h) - ratio<T>(h, q);
}

#define MSI_INSTANTIATE_SHORT(T)                                                                     \
  template class PrefixSums<T>;                                                                      \
  template T fejer_short_sum<T>(const FunctionTable<T>&, std::int64_t, const FejerWindow&);          \
  template T fejer_short_sum_reference<T>(const FunctionTable<T>&, std::int64_t, const FejerWindow&); \
  template T averaged_double_sum<T>(const FunctionTable<T>&, std::int64_t, const FejerWindow&);      \
  template T mean_value<T>(const FunctionTable<T>&, std::int64_t, const FejerWindow&);               \
  template T chi_tilde_direct<T>(std::int64_t, std::int64_t, const FejerWindow&);

MSI_INSTANTIATE_SHORT(Rational)
MSI_INSTANTIATE_SHORT(double)

#undef MSI_INSTANTIATE_SHORT

}  // namespace msi
