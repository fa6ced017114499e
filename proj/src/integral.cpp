#include "msi/integral.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "msi/spectral.hpp"

namespace msi {

double IntegralConfig::spacing() const {
  if (a > 0.0) return a;
  return static_cast<double>(n) * std::log(static_cast<double>(n));
}

void IntegralConfig::validate() const {
  if (n < 1) throw DomainError("N must be >= 1");
  if (4 * window.h() > n) {
    throw DomainError("need h <= N/4, got N=" + std::to_string(n) + " h=" + std::to_string(window.h()));
  }
  if (cutoff.mode() == SupportCutoff::Mode::fixed && cutoff.fixed_q() > n + window.h()) {
    throw DomainError("need Q <= N + h, got Q=" + std::to_string(cutoff.fixed_q()));
  }
  if (a < 0.0 || !(spacing() > 0.0)) throw DomainError("spacing parameter A must be positive");
}

IntegralConfig make_config(std::int64_t n, std::int64_t h, const SupportCutoff& cutoff, double a) {
  IntegralConfig cfg;
  cfg.n = n;
  cfg.window = FejerWindow(h);
  cfg.cutoff = cutoff;
  cfg.a = a;
  cfg.validate();
  return cfg;
}

namespace {

int thread_count(Parallelism par) {
#ifdef _OPENMP
  return par.threads > 0 ? par.threads : omp_get_max_threads();
#else
  (void)par;
  return 1;
#endif
}

template <class T>
void require_table(const IntegralConfig& cfg, const FunctionTable<T>& g) {
  if (g.max_n() < cfg.table_size()) {
    throw RangeError("g tabulated on [1, " + std::to_string(g.max_n()) + "], need [1, 2N + h] = [1, " +
                     std::to_string(cfg.table_size()) + "]");
  }
}

// harmonic[k] = sum_{d <= k} g(d)/d for k <= top.
template <class T>
std::vector<T> weighted_harmonic(const FunctionTable<T>& g, std::size_t top) {
  std::vector<T> out(top + 1, T(0));
  for (std::size_t d = 1; d <= top; ++d) {
    out[d] = out[d - 1];
    if (g[d] != 0) out[d] += g[d] / from_int<T>(static_cast<std::int64_t>(d));
  }
  return out;
}

template <class T>
T direct_fixed(const IntegralConfig& cfg, const FunctionTable<T>& g, Parallelism par) {
  const std::size_t size = cfg.table_size();
  const auto q = static_cast<std::size_t>(std::min<std::int64_t>(cfg.cutoff.fixed_q(), static_cast<std::int64_t>(size)));
  const FunctionTable<T> gq = restrict_support(g, static_cast<std::int64_t>(q));
  const PrefixSums<T> sums(dirichlet_convolve_unit(gq, size));
  const std::vector<T> harmonic = weighted_harmonic(gq, q);
  const T h = from_int<T>(cfg.h());

  std::vector<T> squares(static_cast<std::size_t>(cfg.n));
  const auto count = static_cast<std::int64_t>(squares.size());
#pragma omp parallel for schedule(static) num_threads(thread_count(par))
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t x = cfg.n + 1 + i;
    const auto top = std::min<std::size_t>(static_cast<std::size_t>(x + cfg.h()), q);
    const T dev = sums.triangular_sum(x, cfg.window) - h * harmonic[top];
    squares[static_cast<std::size_t>(i)] = dev * dev;
  }
  return reduce_sum<T>(squares);
}

// Power cutoff: the support bound grows with x, so f and its prefix sums
// are extended incrementally whenever floor((x+h)^theta) increases.
template <class T>
T direct_power(const IntegralConfig& cfg, const FunctionTable<T>& g) {
  const std::size_t size = cfg.table_size();
  std::vector<T> f(size, T(0));
  std::vector<T> harmonic(1, T(0));
  std::int64_t current_q = 0;
  std::optional<PrefixSums<T>> sums;
  const T h = from_int<T>(cfg.h());

  std::vector<T> squares(static_cast<std::size_t>(cfg.n));
  for (std::int64_t x = cfg.n + 1; x <= 2 * cfg.n; ++x) {
    const std::int64_t qx = std::min<std::int64_t>(cfg.cutoff.limit_for(x, cfg.h()), static_cast<std::int64_t>(size));
    if (qx > current_q || !sums) {
      for (std::int64_t q = current_q + 1; q <= qx; ++q) {
        const T& gq = g[static_cast<std::size_t>(q)];
        harmonic.push_back(harmonic.back());
        if (gq == 0) continue;
        harmonic.back() += gq / from_int<T>(q);
        for (auto m = static_cast<std::size_t>(q); m <= size; m += static_cast<std::size_t>(q)) f[m - 1] += gq;
      }
      current_q = std::max(current_q, qx);
      sums.emplace(std::span<const T>(f));
    }
    const auto top = std::min<std::int64_t>(x + cfg.h(), qx);
    const T dev = sums->triangular_sum(x, cfg.window) - h * harmonic[static_cast<std::size_t>(top)];
    squares[static_cast<std::size_t>(x - cfg.n - 1)] = dev * dev;
  }
  return reduce_sum<T>(squares);
}

}  // namespace

template <class T>
T selberg_integral_direct(const IntegralConfig& cfg, const FunctionTable<T>& g, Parallelism par) {
  cfg.validate();
  require_table(cfg, g);
  if (cfg.cutoff.mode() == SupportCutoff::Mode::fixed) return direct_fixed(cfg, g, par);
  return direct_power(cfg, g);
}

template <class T>
T selberg_integral_reference(const IntegralConfig& cfg, const FunctionTable<T>& g) {
  cfg.validate();
  require_table(cfg, g);
  const std::int64_t h = cfg.h();
  T total(0);
  for (std::int64_t x = cfg.n + 1; x <= 2 * cfg.n; ++x) {
    const std::int64_t qx = cfg.cutoff.limit_for(x, h);
    T window_sum(0);
    for (std::int64_t n = std::max<std::int64_t>(1, x - h); n <= x + h; ++n) {
      T fn(0);
      for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const std::int64_t e = n / d;
        if (d <= qx) fn += g[static_cast<std::size_t>(d)];
        if (e != d && e <= qx) fn += g[static_cast<std::size_t>(e)];
      }
      window_sum += cfg.window.weight<T>(n - x) * fn;
    }
    T mean(0);
    for (std::int64_t d = 1; d <= std::min(x + h, qx); ++d) mean += g[static_cast<std::size_t>(d)] / from_int<T>(d);
    const T dev = window_sum - from_int<T>(h) * mean;
    total += dev * dev;
  }
  return total;
}

std::complex<double> exp_sum_closed_form(double alpha, std::int64_t n) {
  const double r = alpha - std::nearbyint(alpha);
  if (r == 0.0) return {static_cast<double>(n), 0.0};
  const auto reduce = [](double t) { return t - 2.0 * std::nearbyint(t / 2.0); };  // t mod 2, in [-1, 1]
  const double amplitude = std::sin(std::numbers::pi * reduce(static_cast<double>(n) * r)) / std::sin(std::numbers::pi * r);
  const double phase = std::numbers::pi * reduce(r * static_cast<double>(3 * n + 1));
  return {amplitude * std::cos(phase), amplitude * std::sin(phase)};
}

std::complex<double> exp_sum_closed_form(std::int64_t num, std::int64_t den, std::int64_t n) {
  if (den <= 0) throw DomainError("exp_sum_closed_form: denominator must be positive");
  std::int64_t r = num % den;
  if (r < 0) r += den;
  if (r == 0) return {static_cast<double>(n), 0.0};
  const auto twice = static_cast<__int128>(2) * den;
  const auto phase = static_cast<std::int64_t>((static_cast<__int128>(r) * (3 * n + 1)) % twice);
  const auto spread = static_cast<std::int64_t>((static_cast<__int128>(r) * n) % twice);
  const double amplitude = sin_pi_frac(spread, den) / sin_pi_frac(r, den);
  return {amplitude * cos_pi_frac(phase, den), amplitude * sin_pi_frac(phase, den)};
}

namespace {

struct SpectralData {
  std::vector<FareyFraction> fractions;
  std::vector<double> amplitude;  // R_l * F_h(j/l)
};

SpectralData spectral_data(const IntegralConfig& cfg, const RealTable& g) {
  if (cfg.cutoff.mode() != SupportCutoff::Mode::fixed) {
    throw DomainError("the spectral decomposition needs a fixed support cutoff");
  }
  const std::int64_t q = cfg.cutoff.fixed_q();
  SpectralData data;
  if (q < 2) return data;
  const RealTable gq = restrict_support(g, q);
  const RamanujanTable<double> coeffs(gq, q);
  data.fractions = farey_enumerate(q).fractions;
  data.amplitude.reserve(data.fractions.size());
  for (const auto& fr : data.fractions) {
    data.amplitude.push_back(coeffs.at(fr.den) * fejer_kernel_value(fr.num, fr.den, cfg.window));
  }
  return data;
}

double diagonal_from(const IntegralConfig& cfg, const SpectralData& data) {
  std::vector<double> terms;
  terms.reserve(data.fractions.size());
  const auto n = static_cast<double>(cfg.n);
  for (std::size_t i = 0; i < data.fractions.size(); ++i) {
    const double a = data.amplitude[i];
    if (a == 0.0) continue;
    const auto& fr = data.fractions[i];
    // sum_x cos^2(2 pi x j/l) = (N + sum_x cos(4 pi x j/l)) / 2
    const double cos_sq_sum = 0.5 * (n + exp_sum_closed_form(2 * fr.num, fr.den, cfg.n).real());
    terms.push_back(a * a * cos_sq_sum);
  }
  return pairwise_sum(terms);
}

}  // namespace

double diagonal_term(const IntegralConfig& cfg, const RealTable& g) {
  // The diagonal is a closed form in N and needs neither h <= N/4 nor Q <= N + h.
  if (cfg.n < 1) throw DomainError("N must be >= 1");
  return diagonal_from(cfg, spectral_data(cfg, g));
}

DecompositionReport selberg_integral_decomposed(const IntegralConfig& cfg, const RealTable& g, Parallelism par) {
  cfg.validate();
  require_table(cfg, g);
  const SpectralData data = spectral_data(cfg, g);
  const std::uint64_t k = data.fractions.size();
  const std::uint64_t pairs = k < 2 ? 0 : k * (k - 1) / 2;
  if (pairs > cfg.pair_budget && !cfg.force) {
    throw ResourceError("decomposition needs " + std::to_string(pairs) + " fraction pairs, budget is " +
                        std::to_string(cfg.pair_budget));
  }

  DecompositionReport report;
  report.fraction_count = k;
  report.pair_count = pairs;
  report.a = cfg.spacing();
  report.diagonal = diagonal_from(cfg, data);

  const SpacingThreshold threshold(report.a);
  // Row i collects the pairs (i, m) with m < i, i.e. lambda_i > lambda_m.
  std::vector<double> row_near_delta(k, 0.0), row_near_sigma(k, 0.0), row_far_delta(k, 0.0), row_far_sigma(k, 0.0);
  const auto rows = static_cast<std::int64_t>(k);
#pragma omp parallel num_threads(thread_count(par))
  {
    std::vector<double> nd, ns, fd, fs;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 1; i < rows; ++i) {
      nd.clear();
      ns.clear();
      fd.clear();
      fs.clear();
      const auto ui = static_cast<std::size_t>(i);
      const double ai = data.amplitude[ui];
      if (ai != 0.0) {
        for (std::size_t m = 0; m < ui; ++m) {
          const double am = data.amplitude[m];
          if (am == 0.0) continue;
          const double prod = ai * am;
          const auto [dn, dd] = pair_key(data.fractions[ui], data.fractions[m], PairKey::difference);
          const auto [sn, sd] = pair_key(data.fractions[ui], data.fractions[m], PairKey::wrapped_sum);
          const double cd = prod * exp_sum_closed_form(dn, dd, cfg.n).real();
          const double cs = prod * exp_sum_closed_form(sn, sd, cfg.n).real();
          (threshold.within(dn, dd) ? nd : fd).push_back(cd);
          (threshold.within(sn, sd) ? ns : fs).push_back(cs);
        }
      }
      row_near_delta[ui] = pairwise_sum(nd);
      row_near_sigma[ui] = pairwise_sum(ns);
      row_far_delta[ui] = pairwise_sum(fd);
      row_far_sigma[ui] = pairwise_sum(fs);
    }
  }
  report.near_delta = pairwise_sum(row_near_delta);
  report.near_sigma = pairwise_sum(row_near_sigma);
  report.far_delta = pairwise_sum(row_far_delta);
  report.far_sigma = pairwise_sum(row_far_sigma);
  report.total = report.diagonal + report.near_delta + report.near_sigma + report.far_delta + report.far_sigma;
  report.direct = selberg_integral_direct<double>(cfg, g, par);
  report.abs_gap = std::fabs(report.total - report.direct);
  return report;
}

FarPartReport far_part_bound_check(const IntegralConfig& cfg, const RealTable& g, Parallelism par) {
  FarPartReport out;
  out.decomposition = selberg_integral_decomposed(cfg, g, par);
  const double a = out.decomposition.a;
  out.far_abs = std::fabs(out.decomposition.far_delta) + std::fabs(out.decomposition.far_sigma);
  out.a_times_h = a * static_cast<double>(cfg.h());
  out.ratio = out.far_abs / out.a_times_h;
  std::vector<double> mass;
  for (std::int64_t ell = 2; ell <= cfg.cutoff.fixed_q(); ++ell) {
    mass.push_back(coefficient_square_sum(ell, cfg.window, true));
  }
  out.coefficient_mass = pairwise_sum(mass);
  for (std::uint64_t k = 1; k <= out.decomposition.fraction_count; ++k) out.harmonic += 1.0 / static_cast<double>(k);
  out.majorant = a * out.coefficient_mass * out.harmonic;
  return out;
}

template <class T>
MajorantReport majorant_compare(const IntegralConfig& cfg, const FunctionTable<T>& g, const FunctionTable<T>& big_g,
                                Parallelism par) {
  cfg.validate();
  require_table(cfg, g);
  require_table(cfg, big_g);
  const auto top = static_cast<std::size_t>(std::min<std::int64_t>(cfg.max_support(), static_cast<std::int64_t>(cfg.table_size())));
  for (std::size_t n = 1; n <= top; ++n) {
    if (g[n] == 0 || big_g[n] == 0) continue;
    using std::abs;
    if (abs(g[n]) > big_g[n]) {
      throw PreconditionError("majorant violated at n = " + std::to_string(n) + ": |g(n)| > G(n)");
    }
  }
  MajorantReport report;
  report.n = cfg.n;
  report.h = cfg.h();
  report.cutoff = cfg.cutoff.to_string();
  report.j_f = to_double(selberg_integral_direct<T>(cfg, g, par));
  report.j_F = to_double(selberg_integral_direct<T>(cfg, big_g, par));
  report.n_h = static_cast<double>(cfg.n) * static_cast<double>(cfg.h());
  report.ratio = report.j_f / (report.j_F + report.n_h);
  return report;
}

MajorantReport majorant_compare(const IntegralConfig& cfg, const Preset& g, const Preset& big_g, Parallelism par) {
  const auto size = cfg.table_size();
  MajorantReport report = majorant_compare<double>(cfg, g.table<double>(size), big_g.table<double>(size), par);
  report.g_spec = g.name();
  report.G_spec = big_g.name();
  return report;
}

#define MSI_INSTANTIATE_INTEGRAL(T)                                                                         \
  template T selberg_integral_direct<T>(const IntegralConfig&, const FunctionTable<T>&, Parallelism);       \
  template T selberg_integral_reference<T>(const IntegralConfig&, const FunctionTable<T>&);                 \
  template MajorantReport majorant_compare<T>(const IntegralConfig&, const FunctionTable<T>&,               \
                                              const FunctionTable<T>&, Parallelism);

MSI_INSTANTIATE_INTEGRAL(Rational)
MSI_INSTANTIATE_INTEGRAL(double)

#undef MSI_INSTANTIATE_INTEGRAL

}  // namespace msi
