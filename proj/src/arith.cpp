#include "msi/arith.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace msi {

RealTable to_real(const ExactTable& table) {
  const auto view = table.float_view();
  return RealTable(std::vector<double>(view.begin(), view.end()));
}

// ---------------------------------------------------------------------------
// SupportCutoff

namespace {

// The short fraction p/q (q <= 1000) that theta was typed as, if any.
std::optional<std::pair<unsigned long, unsigned long>> short_fraction(double theta) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = theta;
  for (int step = 0; step < 20; ++step) {
    const double a = std::floor(x);
    const long p2 = static_cast<long>(a) * p1 + p0;
    const long q2 = static_cast<long>(a) * q1 + q0;
    if (q2 > 1000) break;
    if (std::fabs(static_cast<double>(p2) / static_cast<double>(q2) - theta) < 1e-12) {
      return std::make_pair(static_cast<unsigned long>(p2), static_cast<unsigned long>(q2));
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (x - a < 1e-15) break;
    x = 1.0 / (x - a);
  }
  return std::nullopt;
}

}  // namespace

std::int64_t floor_power(std::int64_t y, double theta) {
  if (y < 1) return 0;
  if (!(theta > 0.0) || theta > 1.0) throw DomainError("power cutoff exponent must lie in (0, 1]");
  auto k = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(y), theta)));
  // Exponents such as 0.3 mean 3/10, not the binary64 just below it: settle
  // the floor exactly through k^q <= y^p.
  if (const auto frac = short_fraction(theta)) {
    const auto [p, q] = *frac;
    mpz_class target;
    mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(y), p);
    const auto fits = [&](std::int64_t base) {
      mpz_class v;
      mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), q);
      return v <= target;
    };
    while (k > 1 && !fits(k)) --k;
    while (fits(k + 1)) ++k;
  }
  if (k < 1) k = 1;
  if (k > y) k = y;
  return k;
}

SupportCutoff SupportCutoff::fixed(std::int64_t q) {
  if (q < 1) throw DomainError("fixed cutoff requires Q >= 1");
  SupportCutoff c;
  c.mode_ = Mode::fixed;
  c.q_ = q;
  return c;
}

SupportCutoff SupportCutoff::power(double theta) {
  if (!(theta > 0.0) || theta > 1.0) throw DomainError("power cutoff exponent must lie in (0, 1]");
  SupportCutoff c;
  c.mode_ = Mode::power;
  c.theta_ = theta;
  return c;
}

SupportCutoff SupportCutoff::parse(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return fixed(std::stoll(text));
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    if (kind == "fixed") return fixed(std::stoll(arg));
    if (kind == "power") return power(to_double(parse_rational(arg)));
  } catch (const std::invalid_argument&) {
  }
  throw DomainError("bad cutoff '" + text + "' (expected fixed:Q or power:THETA)");
}

std::int64_t SupportCutoff::limit_at(std::int64_t y) const {
  if (mode_ == Mode::fixed) return q_;
  return floor_power(y, theta_);
}

std::string SupportCutoff::to_string() const {
  if (mode_ == Mode::fixed) return "fixed:" + std::to_string(q_);
  return "power:" + format_double(theta_);
}

// ---------------------------------------------------------------------------
// Sieves and convolutions

namespace {

std::vector<int> mobius_values(std::size_t max_n) {
  std::vector<int> mu(max_n + 1, 0);
  std::vector<std::uint32_t> lpf(max_n + 1, 0);
  std::vector<std::uint32_t> primes;
  mu[1] = 1;
  for (std::size_t i = 2; i <= max_n; ++i) {
    if (lpf[i] == 0) {
      lpf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
      mu[i] = -1;
    }
    for (const std::uint32_t p : primes) {
      const std::size_t m = i * p;
      if (p > lpf[i] || m > max_n) break;
      lpf[m] = p;
      mu[m] = (p == lpf[i]) ? 0 : -mu[i];
    }
  }
  return mu;
}

void require_domain(std::size_t max_n, const char* op) {
  if (max_n == 0) throw DomainError(std::string(op) + ": max_n must be >= 1");
}

}  // namespace

template <class T>
FunctionTable<T> sieve_mobius(std::size_t max_n) {
  require_domain(max_n, "sieve_mobius");
  const auto mu = mobius_values(max_n);
  std::vector<T> out(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) out[n - 1] = from_int<T>(mu[n]);
  return FunctionTable<T>(std::move(out));
}

template <class T>
FunctionTable<T> sieve_divisor_count(std::size_t max_n) {
  require_domain(max_n, "sieve_divisor_count");
  std::vector<std::int64_t> d(max_n + 1, 0);
  for (std::size_t q = 1; q <= max_n; ++q) {
    for (std::size_t m = q; m <= max_n; m += q) ++d[m];
  }
  std::vector<T> out(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) out[n - 1] = from_int<T>(d[n]);
  return FunctionTable<T>(std::move(out));
}

template <class T>
FunctionTable<T> dirichlet_convolve_unit(const FunctionTable<T>& g, std::size_t max_n) {
  require_domain(max_n, "dirichlet_convolve_unit");
  if (g.max_n() < max_n) {
    throw RangeError("dirichlet_convolve_unit: g not tabulated on [1, max_n]");
  }
  std::vector<T> out(max_n, T(0));
  const std::size_t q_top = std::min(max_n, g.max_n());
  for (std::size_t q = 1; q <= q_top; ++q) {
    const T& gq = g[q];
    if (gq == 0) continue;
    for (std::size_t m = q; m <= max_n; m += q) out[m - 1] += gq;
  }
  return FunctionTable<T>(std::move(out));
}

template <class T>
FunctionTable<T> mobius_invert(const FunctionTable<T>& f) {
  const std::size_t max_n = f.max_n();
  require_domain(max_n, "mobius_invert");
  const auto mu = mobius_values(max_n);
  std::vector<T> out(max_n, T(0));
  for (std::size_t q = 1; q <= max_n; ++q) {
    if (mu[q] == 0) continue;
    for (std::size_t m = 1; q * m <= max_n; ++m) {
      if (mu[q] > 0) {
        out[q * m - 1] += f[m];
      } else {
        out[q * m - 1] -= f[m];
      }
    }
  }
  return FunctionTable<T>(std::move(out));
}

template <class T>
FunctionTable<T> restrict_support(const FunctionTable<T>& g, std::int64_t q) {
  std::vector<T> out(g.max_n(), T(0));
  const auto top = static_cast<std::size_t>(std::max<std::int64_t>(0, std::min<std::int64_t>(q, g.max_n())));
  for (std::size_t n = 1; n <= top; ++n) out[n - 1] = g[n];
  return FunctionTable<T>(std::move(out));
}

template <class T>
FunctionTable<T> apply_cutoff(const FunctionTable<T>& g, const SupportCutoff& cutoff, std::int64_t x,
                              std::int64_t h) {
  if (x < 1) throw DomainError("apply_cutoff: x must be >= 1");
  return restrict_support(g, cutoff.limit_for(x, h));
}

// ---------------------------------------------------------------------------
// Presets

std::vector<Rational> random_dyadic_values(std::uint64_t seed, std::size_t count) {
  constexpr std::uint64_t scale = std::uint64_t{1} << 20;
  std::mt19937_64 gen(seed);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto k = static_cast<long>(gen() % (2 * scale + 1)) - static_cast<long>(scale);
    Rational v(k, static_cast<unsigned long>(scale));
    v.canonicalize();
    out.push_back(std::move(v));
  }
  return out;
}

Preset Preset::parse(const std::string& text) {
  Preset p;
  if (text == "delta1") {
    p.kind_ = Kind::delta1;
  } else if (text == "unit") {
    p.kind_ = Kind::unit;
  } else if (text == "mobius") {
    p.kind_ = Kind::mobius;
  } else if (text == "mobius-squared") {
    p.kind_ = Kind::mobius_squared;
  } else if (text.rfind("random:", 0) == 0) {
    p.kind_ = Kind::random;
    try {
      std::size_t used = 0;
      const std::string arg = text.substr(7);
      p.seed_ = std::stoull(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw DomainError("bad random seed in '" + text + "'");
    }
  } else {
    throw DomainError("unknown function preset '" + text +
                      "' (expected delta1|unit|mobius|mobius-squared|random:SEED)");
  }
  return p;
}

std::string Preset::name() const {
  switch (kind_) {
    case Kind::delta1: return "delta1";
    case Kind::unit: return "unit";
    case Kind::mobius: return "mobius";
    case Kind::mobius_squared: return "mobius-squared";
    case Kind::random: return "random:" + std::to_string(seed_);
  }
  return {};
}

template <class T>
FunctionTable<T> Preset::table(std::size_t max_n) const {
  require_domain(max_n, "Preset::table");
  std::vector<T> out(max_n, T(0));
  switch (kind_) {
    case Kind::delta1:
      out[0] = T(1);
      break;
    case Kind::unit:
      for (auto& v : out) v = T(1);
      break;
    case Kind::mobius:
    case Kind::mobius_squared: {
      const auto mu = mobius_values(max_n);
      for (std::size_t n = 1; n <= max_n; ++n) {
        const int m = kind_ == Kind::mobius ? mu[n] : mu[n] * mu[n];
        out[n - 1] = from_int<T>(m);
      }
      break;
    }
    case Kind::random: {
      auto vals = random_dyadic_values(seed_, max_n);
      for (std::size_t i = 0; i < max_n; ++i) {
        if constexpr (is_exact_v<T>) {
          out[i] = std::move(vals[i]);
        } else {
          out[i] = vals[i].get_d();  // dyadic with 20 fractional bits: exact
        }
      }
      break;
    }
  }
  return FunctionTable<T>(std::move(out));
}

// ---------------------------------------------------------------------------

EssentialBoundProbe probe_essential_bound(std::span<const double> values, double eps) {
  EssentialBoundProbe probe;
  probe.eps = eps;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    const double r = std::fabs(values[i]) / std::pow(n, eps);
    if (r > probe.max_ratio) {
      probe.max_ratio = r;
      probe.argmax = i + 1;
    }
  }
  return probe;
}

void write_csv(std::ostream& out, const ExactTable& table) {
  out << "n,value\n";
  for (std::size_t n = 1; n <= table.max_n(); ++n) out << n << ',' << to_fraction_string(table[n]) << '\n';
}

void write_csv(std::ostream& out, const RealTable& table) {
  out << "n,value\n";
  for (std::size_t n = 1; n <= table.max_n(); ++n) out << n << ',' << format_double(table[n]) << '\n';
}

ExactTable read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("read_csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,value") throw DomainError("read_csv: expected header 'n,value', got '" + line + "'");
  std::vector<Rational> values;
  std::size_t expected = 1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("read_csv: malformed row '" + line + "'");
    std::size_t n = 0;
    try {
      n = std::stoull(line.substr(0, comma));
    } catch (const std::exception&) {
      throw DomainError("read_csv: bad index in row '" + line + "'");
    }
    if (n != expected) {
      throw DomainError("read_csv: expected n = " + std::to_string(expected) + ", got " + std::to_string(n));
    }
    values.push_back(parse_rational(line.substr(comma + 1)));
    ++expected;
  }
  if (values.empty()) throw DomainError("read_csv: no rows");
  return ExactTable(std::move(values));
}

// ---------------------------------------------------------------------------

#define MSI_INSTANTIATE_ARITH(T)                                                                        \
  template FunctionTable<T> sieve_mobius<T>(std::size_t);                                               \
  template FunctionTable<T> sieve_divisor_count<T>(std::size_t);                                        \
  template FunctionTable<T> dirichlet_convolve_unit<T>(const FunctionTable<T>&, std::size_t);           \
  template FunctionTable<T> mobius_invert<T>(const FunctionTable<T>&);                                  \
  template FunctionTable<T> restrict_support<T>(const FunctionTable<T>&, std::int64_t);                 \
  template FunctionTable<T> apply_cutoff<T>(const FunctionTable<T>&, const SupportCutoff&, std::int64_t, \
                                            std::int64_t);                                              \
  template FunctionTable<T> Preset::table<T>(std::size_t) const;

MSI_INSTANTIATE_ARITH(Rational)
MSI_INSTANTIATE_ARITH(double)

#undef MSI_INSTANTIATE_ARITH

}  // namespace msi
