// integral.hpp
//
// The short-sum mean square
//
//   J(N, h) = sum_{N < x <= 2N} | S_f(x, h) - M(x, h) |^2,   f = g*1,
//
// computed by a prefix-sum sweep over x (OpenMP, deterministic reduction),
// by a serial term-by-term reference, and through its spectral
// decomposition over pairs of Farey fractions.

#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "msi/arith.hpp"
#include "msi/farey.hpp"
#include "msi/short_sums.hpp"

namespace msi {

struct IntegralConfig {
  std::int64_t n = 0;
  FejerWindow window{2};
  SupportCutoff cutoff = SupportCutoff::fixed(1);
  double a = 0.0;  // spacing parameter; 0 selects N log N
  std::uint64_t pair_budget = 10'000'000;
  bool force = false;  // ignore pair_budget

  std::int64_t h() const { return window.h(); }
  double spacing() const;
  // Tables must cover [1, 2N + h].
  std::size_t table_size() const { return static_cast<std::size_t>(2 * n + window.h()); }
  // Largest support bound used anywhere in the sweep.
  std::int64_t max_support() const { return cutoff.limit_for(2 * n, window.h()); }

  // Throws DomainError unless h is even with 4h <= N and (fixed mode) Q <= N + h.
  void validate() const;
};

IntegralConfig make_config(std::int64_t n, std::int64_t h, const SupportCutoff& cutoff, double a = 0.0);

// Threads for the parallel kernels: 0 means the OpenMP default, which the
// CLI caps through MSI_THREADS.
struct Parallelism {
  int threads = 0;
};

// Prefix-sum sweep, O(N + h) after tabulation in fixed mode. In power mode
// the support bound floor((x+h)^theta) is re-applied per x. g is the
// unrestricted function, tabulated at least on [1, 2N + h].
template <class T>
T selberg_integral_direct(const IntegralConfig& cfg, const FunctionTable<T>& g, Parallelism par = {});

// Serial O(N h sqrt N) reference: per x, f(n) is rebuilt from its divisors
// q <= Q(x) and the window is summed term by term.
template <class T>
T selberg_integral_reference(const IntegralConfig& cfg, const FunctionTable<T>& g);

// sum_{x=N+1}^{2N} e(alpha x) in closed form (N for integer alpha).
std::complex<double> exp_sum_closed_form(double alpha, std::int64_t n);
// Same for alpha = num/den, with exact argument reduction.
std::complex<double> exp_sum_closed_form(std::int64_t num, std::int64_t den, std::int64_t n);

// sum_l R_l^2 sum*_{j <= l/2} F_h(j/l)^2 sum_{x ~ N} cos^2(2 pi x j / l). Fixed cutoff only.
double diagonal_term(const IntegralConfig& cfg, const RealTable& g);

struct DecompositionReport {
  double diagonal = 0.0;
  double near_delta = 0.0;
  double near_sigma = 0.0;
  double far_delta = 0.0;
  double far_sigma = 0.0;
  double total = 0.0;
  double direct = 0.0;
  double abs_gap = 0.0;
  std::uint64_t fraction_count = 0;
  std::uint64_t pair_count = 0;
  double a = 0.0;
};

// Off-diagonal pairs (lambda > mu) contribute a_lambda a_mu (C(delta) + C(sigma)),
// a = R_l F_h(j/l), C(alpha) = sum_{x ~ N} cos(2 pi alpha x); near/far split at
// 1/A on each key. Fixed cutoff only. ResourceError above the pair budget.
DecompositionReport selberg_integral_decomposed(const IntegralConfig& cfg, const RealTable& g, Parallelism par = {});

struct FarPartReport {
  double far_abs = 0.0;        // |far_delta| + |far_sigma|
  double a_times_h = 0.0;      // A h
  double ratio = 0.0;          // far_abs / (A h)
  double coefficient_mass = 0.0;  // sum_{1<l<=Q} sum*_{j<=l} c(j,l)^2
  double harmonic = 0.0;       // sum_{k <= K} 1/k, K = fraction count
  double majorant = 0.0;       // A * coefficient_mass * harmonic
  DecompositionReport decomposition;
};

FarPartReport far_part_bound_check(const IntegralConfig& cfg, const RealTable& g, Parallelism par = {});

struct MajorantReport {
  double j_f = 0.0;
  double j_F = 0.0;
  double n_h = 0.0;
  double ratio = 0.0;
  std::int64_t n = 0;
  std::int64_t h = 0;
  std::string cutoff;
  std::string g_spec;
  std::string G_spec;
};

// Checks |g(n)| <= G(n) wherever both are nonzero inside the support used
// by the sweep (PreconditionError naming the first offending n), then
// returns j_f / (j_F + N h).
MajorantReport majorant_compare(const IntegralConfig& cfg, const Preset& g, const Preset& big_g, Parallelism par = {});

template <class T>
MajorantReport majorant_compare(const IntegralConfig& cfg, const FunctionTable<T>& g, const FunctionTable<T>& big_g,
                                Parallelism par = {});

}  // namespace msi
