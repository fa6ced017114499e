// arith.hpp
//
// Tabulated arithmetic functions on [1, max_n]: sieves for the Moebius and
// divisor functions, convolution with the unit function, Moebius inversion,
// support cutoffs, and the named presets the CLI exposes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msi/numeric.hpp"

namespace msi {

// Values of an arithmetic function on [1, max_n], stored 1-based. Immutable
// after construction. For exact tables the binary64 view is the correctly
// rounded image of each value; for real tables it is the values themselves.
template <class T>
class FunctionTable {
 public:
  FunctionTable() = default;

  // values[0] is f(1).
  explicit FunctionTable(std::vector<T> values) : data_(values.size() + 1) {
    for (std::size_t i = 0; i < values.size(); ++i) data_[i + 1] = std::move(values[i]);
    data_[0] = T(0);
    build_float_view();
  }

  static FunctionTable zeros(std::size_t max_n) {
    return FunctionTable(std::vector<T>(max_n, T(0)));
  }

  std::size_t max_n() const { return data_.empty() ? 0 : data_.size() - 1; }

  // f(n) for 1 <= n <= max_n; zero outside (the domain convention used by
  // every short-sum clamp).
  T at(std::int64_t n) const {
    if (n < 1 || static_cast<std::size_t>(n) > max_n()) return T(0);
    return data_[static_cast<std::size_t>(n)];
  }
  const T& operator[](std::size_t n) const { return data_[n]; }

  std::span<const T> values() const { return std::span<const T>(data_).subspan(data_.empty() ? 0 : 1); }

  std::span<const double> float_view() const {
    if constexpr (is_exact_v<T>) {
      return std::span<const double>(float_).subspan(float_.empty() ? 0 : 1);
    } else {
      return values();
    }
  }

  // Largest n with f(n) != 0, or 0 for the zero function.
  std::size_t support_max() const {
    for (std::size_t n = max_n(); n >= 1; --n) {
      if (data_[n] != 0) return n;
    }
    return 0;
  }

  bool operator==(const FunctionTable& other) const { return data_ == other.data_; }

 private:
  void build_float_view() {
    if constexpr (is_exact_v<T>) {
      float_.resize(data_.size());
      for (std::size_t i = 0; i < data_.size(); ++i) float_[i] = to_double(data_[i]);
    }
  }

  std::vector<T> data_;
  std::vector<double> float_;  // exact tables only
};

using ExactTable = FunctionTable<Rational>;
using RealTable = FunctionTable<double>;

// Binary64 copy of an exact table.
RealTable to_real(const ExactTable& table);

// Support restriction supp(g) in [1, Q] (fixed), or the x-dependent
// [1, floor((x+h)^theta)] (power).
class SupportCutoff {
 public:
  enum class Mode { fixed, power };

  static SupportCutoff fixed(std::int64_t q);
  static SupportCutoff power(double theta);
  // "fixed:Q", "power:THETA", or a bare integer Q.
  static SupportCutoff parse(const std::string& text);

  Mode mode() const { return mode_; }
  std::int64_t fixed_q() const { return q_; }
  double theta() const { return theta_; }

  // floor(y^theta) in power mode (clamped to [1, y]); Q in fixed mode.
  std::int64_t limit_at(std::int64_t y) const;
  // Support bound in force for center x with half-width h.
  std::int64_t limit_for(std::int64_t x, std::int64_t h) const {
    return mode_ == Mode::fixed ? q_ : limit_at(x + h);
  }

  std::string to_string() const;

 private:
  Mode mode_ = Mode::fixed;
  std::int64_t q_ = 1;
  double theta_ = 1.0;
};

// floor(y^theta), exact when theta is a short fraction p/q (q <= 1000) such as
// 1/2 or 3/10.
std::int64_t floor_power(std::int64_t y, double theta);

template <class T>
FunctionTable<T> sieve_mobius(std::size_t max_n);

template <class T>
FunctionTable<T> sieve_divisor_count(std::size_t max_n);

// f(n) = sum_{q | n} g(q) for n <= max_n. Zero entries of g are skipped, so
// the cost is O(max_n * sum_{q in supp g} 1/q).
template <class T>
FunctionTable<T> dirichlet_convolve_unit(const FunctionTable<T>& g, std::size_t max_n);

// g(n) = sum_{q | n} mu(q) f(n/q).
template <class T>
FunctionTable<T> mobius_invert(const FunctionTable<T>& f);

// Zeroes g outside [1, cutoff.limit_for(x, h)].
template <class T>
FunctionTable<T> apply_cutoff(const FunctionTable<T>& g, const SupportCutoff& cutoff, std::int64_t x,
                              std::int64_t h);

// Zeroes g outside [1, q].
template <class T>
FunctionTable<T> restrict_support(const FunctionTable<T>& g, std::int64_t q);

// Named g / G presets: delta1, unit, mobius, mobius-squared, random:SEED.
// Random values are k / 2^20 with k uniform in [-2^20, 2^20] drawn from
// mt19937_64(SEED), so the exact and real tables agree bit for bit.
class Preset {
 public:
  enum class Kind { delta1, unit, mobius, mobius_squared, random };

  static Preset parse(const std::string& text);
  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  std::string name() const;

  // Unrestricted table on [1, max_n]; callers apply the support cutoff.
  template <class T>
  FunctionTable<T> table(std::size_t max_n) const;

 private:
  Kind kind_ = Kind::delta1;
  std::uint64_t seed_ = 0;
};

// Seeded random dyadic values in [-1, 1] (shared by the random preset and
// the property tests).
std::vector<Rational> random_dyadic_values(std::uint64_t seed, std::size_t count);

// Reports max_{n} |f(n)| / n^eps: a probe of essential boundedness, never a
// verdict.
struct EssentialBoundProbe {
  double eps = 0.0;
  double max_ratio = 0.0;
  std::size_t argmax = 0;
};
EssentialBoundProbe probe_essential_bound(std::span<const double> values, double eps);

// CSV with header "n,value"; exact tables write p/q strings.
void write_csv(std::ostream& out, const ExactTable& table);
void write_csv(std::ostream& out, const RealTable& table);
// Reads "n,value" rows with n = 1, 2, ... in order; values as p/q or decimal.
ExactTable read_csv(std::istream& in);

}  // namespace msi
