#include "msi/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "msi/arith.hpp"
#include "msi/calibration.hpp"
#include "msi/farey.hpp"
#include "msi/integral.hpp"
#include "msi/short_sums.hpp"
#include "msi/spectral.hpp"

namespace msi::verify {

bool SuiteReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

std::string to_json(const SuiteReport& report, int indent) {
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["pass"] = report.pass();
  out["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : report.properties) {
    nlohmann::ordered_json row;
    row["property"] = p.property;
    row["instances"] = p.instances;
    row["max_error"] = p.max_error;
    row["pass"] = p.pass;
    if (!p.detail.empty()) row["detail"] = p.detail;
    out["properties"].push_back(std::move(row));
  }
  return out.dump(indent);
}

namespace {

// Names a checked instance; rendered only when the instance fails.
class Where {
 public:
  using Field = std::pair<const char*, std::int64_t>;
  Where(std::initializer_list<Field> fields) {
    for (const auto& f : fields) {
      if (count_ < fields_.size()) fields_[count_++] = f;
    }
  }
  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < count_; ++i) os << (i ? " " : "") << fields_[i].first << '=' << fields_[i].second;
    return os.str();
  }

 private:
  std::array<Field, 6> fields_{};
  std::size_t count_ = 0;
};

std::string describe(std::initializer_list<Where::Field> fields) { return Where(fields).str(); }

// Accumulates instances, the worst error, and the first failure.
class Tally {
 public:
  explicit Tally(std::string name) { result_.property = std::move(name); }

  template <class What>
  void exact(bool ok, const What& what) {
    ++result_.instances;
    if (!ok) fail(1.0, render(what));
  }

  // error must be <= limit.
  template <class What>
  void bounded(double error, double limit, const What& what) {
    ++result_.instances;
    result_.max_error = std::max(result_.max_error, error);
    if (!(error <= limit)) fail(error, render(what));
  }

  // ratio value/bound must be <= 1.
  template <class What>
  void ratio(double value, double bound, const What& what) {
    ++result_.instances;
    const double r = bound > 0.0 ? value / bound : (value > 0.0 ? HUGE_VAL : 0.0);
    result_.max_error = std::max(result_.max_error, r);
    if (!(r <= 1.0)) fail(r, render(what));
  }

  PropertyResult done() { return result_; }

 private:
  static std::string render(const Where& w) { return w.str(); }
  static std::string render(const std::string& s) { return s; }

  void fail(double error, const std::string& what) {
    if (result_.pass) result_.detail = what;
    result_.pass = false;
    result_.max_error = std::max(result_.max_error, error);
  }

  PropertyResult result_;
};

ExactTable random_table(std::uint64_t seed, std::size_t n) { return ExactTable(random_dyadic_values(seed, n)); }

ExactTable random_nonnegative_table(std::uint64_t seed, std::size_t n) {
  auto v = random_dyadic_values(seed, n);
  for (auto& x : v) x = abs(x);
  return ExactTable(std::move(v));
}

ExactTable scaled(const ExactTable& t, const Rational& c) {
  std::vector<Rational> v(t.values().begin(), t.values().end());
  for (auto& x : v) x *= c;
  return ExactTable(std::move(v));
}

}  // namespace

// ---------------------------------------------------------------------------
// arithmetic and short sums

PropertyResult inversion_round_trip(std::size_t max_n, int random_tables) {
  Tally t("inversion_round_trip");
  for (int s = 0; s < random_tables; ++s) {
    const auto g = random_table(100 + static_cast<std::uint64_t>(s), max_n);
    t.exact(mobius_invert(dirichlet_convolve_unit(g, max_n)) == g, "mobius_invert(g*1) != g, seed " + std::to_string(100 + s));
    t.exact(dirichlet_convolve_unit(mobius_invert(g), max_n) == g, "(f*mu)*1 != f, seed " + std::to_string(100 + s));
  }
  return t.done();
}

PropertyResult majorant_transfer(std::size_t max_n, int random_pairs) {
  Tally t("majorant_transfer");
  for (int s = 0; s < random_pairs; ++s) {
    const auto g = random_table(200 + static_cast<std::uint64_t>(s), max_n);
    const auto slack = random_nonnegative_table(300 + static_cast<std::uint64_t>(s), max_n);
    std::vector<Rational> big(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) big[n - 1] = abs(g[n]) + slack[n];
    const ExactTable big_g(std::move(big));
    const auto f = dirichlet_convolve_unit(g, max_n);
    const auto big_f = dirichlet_convolve_unit(big_g, max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
      t.exact(abs(f[n]) <= big_f[n], Where({{"seed", 200 + s}, {"n", static_cast<std::int64_t>(n)}}));
    }
  }
  return t.done();
}

PropertyResult divisor_identity(std::size_t max_n) {
  Tally t("divisor_identity");
  const auto d = sieve_divisor_count<Rational>(max_n);
  const auto conv = dirichlet_convolve_unit(Preset::parse("unit").table<Rational>(max_n), max_n);
  for (std::size_t n = 1; n <= max_n; ++n) t.exact(d[n] == conv[n], Where({{"n", static_cast<std::int64_t>(n)}}));
  return t.done();
}

PropertyResult two_forms_identity(std::size_t max_n, std::int64_t max_h) {
  Tally t("two_forms_identity");
  std::vector<ExactTable> tables;
  tables.push_back(sieve_divisor_count<Rational>(max_n));
  tables.push_back(sieve_mobius<Rational>(max_n));
  tables.push_back(random_table(7, max_n));
  tables.push_back(dirichlet_convolve_unit(random_table(8, max_n), max_n));
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto& f = tables[k];
    const PrefixSums<Rational> sums(f);
    for (std::int64_t h = 2; h <= max_h; h += 2) {
      const FejerWindow w(h);
      for (std::int64_t x = 1; x + h <= static_cast<std::int64_t>(max_n); ++x) {
        t.exact(sums.triangular_sum(x, w) == averaged_double_sum(f, x, w),
                Where({{"table", static_cast<std::int64_t>(k)}, {"h", h}, {"x", x}}));
      }
    }
  }
  return t.done();
}

PropertyResult short_sum_linearity(std::size_t max_n, std::int64_t max_h, int trials) {
  Tally t("short_sum_linearity");
  std::mt19937_64 rng(42);
  for (int s = 0; s < trials; ++s) {
    const auto f1 = random_table(500 + static_cast<std::uint64_t>(s), max_n);
    const auto f2 = dirichlet_convolve_unit(random_table(600 + static_cast<std::uint64_t>(s), max_n), max_n);
    const auto coeffs = random_dyadic_values(700 + static_cast<std::uint64_t>(s), 2);
    std::vector<Rational> mix(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) mix[n - 1] = coeffs[0] * f1[n] + coeffs[1] * f2[n];
    const ExactTable combo(std::move(mix));
    const std::int64_t h = 2 * (1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_h / 2)));
    const FejerWindow w(h);
    const std::int64_t x = 1 + static_cast<std::int64_t>(rng() % (max_n - static_cast<std::size_t>(h)));
    const Rational lhs = fejer_short_sum(combo, x, w);
    const Rational rhs = coeffs[0] * fejer_short_sum(f1, x, w) + coeffs[1] * fejer_short_sum(f2, x, w);
    t.exact(lhs == rhs, Where({{"trial", s}, {"h", h}, {"x", x}}));
  }
  return t.done();
}

PropertyResult expansion_bridge(std::int64_t max_q, std::int64_t max_h, std::int64_t x_span) {
  Tally t("expansion_bridge");
  for (std::int64_t q_max = 1; q_max <= max_q; ++q_max) {
    for (std::int64_t h = 2; h <= max_h; h += 2) {
      const FejerWindow w(h);
      const std::int64_t x0 = std::max(h + 1, q_max);
      const auto size = static_cast<std::size_t>(x0 + x_span + h);
      const auto g = restrict_support(random_table(static_cast<std::uint64_t>(1000 + q_max), size), q_max);
      const auto f = dirichlet_convolve_unit(g, size);
      const PrefixSums<Rational> sums(f);
      for (std::int64_t x = x0; x < x0 + x_span; ++x) {
        const Rational lhs = sums.triangular_sum(x, w) - mean_value(g, x, w);
        Rational rhs = 0;
        for (std::int64_t q = 1; q <= q_max; ++q) {
          if (g[static_cast<std::size_t>(q)] != 0) rhs += g[static_cast<std::size_t>(q)] * chi_tilde_direct<Rational>(q, x, w);
        }
        t.exact(lhs == rhs, Where({{"Q", q_max}, {"h", h}, {"x", x}}));
      }
    }
  }
  return t.done();
}

PropertyResult chi_periodicity(std::int64_t max_q, std::int64_t max_h) {
  Tally t("chi_periodicity");
  for (std::int64_t q = 1; q <= max_q; ++q) {
    for (std::int64_t h = 2; h <= max_h; h += 2) {
      const FejerWindow w(h);
      for (std::int64_t x = h + 1; x <= h + 2 * q; ++x) {
        t.exact(chi_tilde_direct<Rational>(q, x, w) == chi_tilde_direct<Rational>(q, x + q, w),
                Where({{"q", q}, {"h", h}, {"x", x}}));
      }
    }
  }
  return t.done();
}

// ---------------------------------------------------------------------------
// spectral

PropertyResult chi_expansion_identity(std::int64_t max_q, std::int64_t max_h) {
  Tally t("chi_expansion");
  for (std::int64_t q = 1; q <= max_q; ++q) {
    for (std::int64_t h = 2; h <= max_h; h += 2) {
      const FejerWindow w(h);
      for (std::int64_t x = h + 1; x <= h + 2 * q; ++x) {
        const double direct = to_double(chi_tilde_direct<Rational>(q, x, w));
        const double expansion = chi_tilde_expansion(q, x, w);
        t.bounded(std::fabs(direct - expansion) / (1.0 + static_cast<double>(h)), 1e-9,
                  Where({{"q", q}, {"h", h}, {"x", x}}));
      }
    }
  }
  return t.done();
}

PropertyResult coefficient_nonnegativity(std::int64_t max_q, std::int64_t max_h) {
  Tally t("coefficient_nonnegativity");
  for (std::int64_t h = 2; h <= max_h; h += 2) {
    const FejerWindow w(h);
    for (std::int64_t q = 2; q <= max_q; ++q) {
      for (std::int64_t j = 1; 2 * j <= q; ++j) {
        t.exact(fejer_coefficient(j, q, w).value >= 0.0, Where({{"j", j}, {"q", q}, {"h", h}}));
      }
    }
  }
  return t.done();
}

PropertyResult coefficient_scaling(std::int64_t max_dq, std::int64_t max_h) {
  Tally t("coefficient_scaling");
  for (std::int64_t h = 2; h <= max_h; h += 2) {
    const FejerWindow w(h);
    for (std::int64_t q = 2; 2 * q <= max_dq; ++q) {
      for (std::int64_t j = 1; 2 * j <= q; ++j) {
        const double base = fejer_coefficient(j, q, w).value;
        for (std::int64_t d = 2; d * q <= max_dq; ++d) {
          const double scaled_value = fejer_coefficient(d * j, d * q, w).value;
          const double expect = base / static_cast<double>(d);
          const double err = expect == 0.0 ? (scaled_value == 0.0 ? 0.0 : HUGE_VAL)
                                           : std::fabs(scaled_value - expect) / std::fabs(expect);
          t.bounded(err, 1e-12, Where({{"j", j}, {"q", q}, {"d", d}, {"h", h}}));
        }
      }
    }
  }
  return t.done();
}

PropertyResult parseval_identity(std::int64_t max_q, std::int64_t max_h) {
  Tally t("parseval");
  for (std::int64_t q = 2; q <= max_q; ++q) {
    for (std::int64_t h = 2; h <= max_h; h += 2) {
      const FejerWindow w(h);
      // Mean square of chi over one full period, taken beyond the clamped region.
      Rational mean_square = 0;
      for (std::int64_t x = h + 1; x <= h + q; ++x) {
        const Rational c = chi_tilde_direct<Rational>(q, x, w);
        mean_square += c * c;
      }
      mean_square /= Rational(static_cast<long>(q));
      const double lhs = to_double(mean_square);
      const double rhs = 0.25 * coefficient_square_sum(q, w, false);
      const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
      const double err = scale == 0.0 ? 0.0 : std::fabs(lhs - rhs) / scale;
      t.bounded(err, 1e-9, Where({{"q", q}, {"h", h}}));
    }
  }
  return t.done();
}

PropertyResult square_sum_bound(std::int64_t max_q, std::int64_t max_h) {
  Tally t("square_sum_bound");
  for (std::int64_t h = 2; h <= max_h; h += 2) {
    const FejerWindow w(h);
    for (std::int64_t q = 2; q <= max_q; ++q) {
      const double full = coefficient_square_sum(q, w, false);
      const double bound =
          calibration::square_sum_constant * std::min(1.0, static_cast<double>(h) / static_cast<double>(q));
      t.ratio(full, bound, Where({{"q", q}, {"h", h}}));
    }
  }
  return t.done();
}

PropertyResult ramanujan_triangle(int random_pairs, std::int64_t max_q) {
  Tally t("ramanujan_triangle");
  for (int s = 0; s < random_pairs; ++s) {
    const std::int64_t q = 1 + s % max_q;
    const auto n = static_cast<std::size_t>(q);
    const auto g = random_table(900 + static_cast<std::uint64_t>(s), n);
    const auto slack = random_nonnegative_table(950 + static_cast<std::uint64_t>(s), n);
    std::vector<Rational> big(n);
    for (std::size_t i = 1; i <= n; ++i) big[i - 1] = abs(g[i]) + slack[i];
    const ExactTable big_g(std::move(big));
    for (std::int64_t ell = 1; ell <= q; ++ell) {
      t.exact(abs(ramanujan_coefficient(g, ell, q)) <= ramanujan_coefficient(big_g, ell, q),
              Where({{"pair", s}, {"l", ell}}));
    }
  }
  return t.done();
}

// ---------------------------------------------------------------------------
// farey

PropertyResult farey_unimodularity(std::int64_t max_q) {
  Tally t("farey_unimodularity");
  for (std::int64_t q = 1; q <= max_q; ++q) {
    const auto full = farey_full(q);
    for (std::size_t i = 1; i < full.size(); ++i) {
      const auto& a = full[i - 1];
      const auto& c = full[i];
      t.exact(a.den * c.num - a.num * c.den == 1, Where({{"Q", q}, {"index", static_cast<std::int64_t>(i)}}));
    }
  }
  return t.done();
}

PropertyResult farey_gap_law(std::int64_t max_q) {
  Tally t("farey_gap_law");
  for (std::int64_t q = 2; q <= max_q; ++q) {
    const auto seq = farey_enumerate(q);
    for (std::size_t i = 1; i < seq.fractions.size(); ++i) {
      const auto& a = seq.fractions[i - 1];
      const auto& c = seq.fractions[i];
      // Gap as an unreduced fraction, normalised by GMP before the comparison.
      Rational gap(static_cast<long>(c.num * a.den - a.num * c.den), static_cast<unsigned long>(a.den * c.den));
      gap.canonicalize();
      t.exact(gap == Rational(1, static_cast<unsigned long>(a.den * c.den)),
              Where({{"Q", q}, {"index", static_cast<std::int64_t>(i)}}));
    }
  }
  return t.done();
}

PropertyResult farey_min_gap(std::int64_t max_q) {
  Tally t("farey_min_gap");
  for (std::int64_t q = 3; q <= max_q; ++q) {
    const auto seq = farey_enumerate(q);
    t.exact(min_gap(seq) >= Rational(1, static_cast<unsigned long>(q * q)), Where({{"Q", q}}));
  }
  return t.done();
}

PropertyResult farey_partition_exhaustive(std::int64_t max_q) {
  Tally t("farey_partition_exhaustive");
  for (std::int64_t q1 = 2; q1 <= max_q; q1 += 3) {
    for (const std::int64_t q2 : {q1, std::max<std::int64_t>(2, q1 / 2)}) {
      const auto left = farey_enumerate(q1);
      const auto right = farey_enumerate(q2);
      const double q2d = static_cast<double>(q1 * q1);
      for (const double a : {1.0, 3.5, 10.0, q2d, 2.0 * q2d, 1e9, HUGE_VAL}) {
        for (const PairKey mode : {PairKey::difference, PairKey::wrapped_sum}) {
          const auto part = spaced_pair_partition(left, right, a, mode);
          const std::size_t width = right.fractions.size();
          std::vector<int> hits(left.fractions.size() * width, 0);
          bool classified_right = true;
          for (int side = 0; side < 2; ++side) {
            for (const auto& [i, k] : side == 0 ? part.near : part.far) {
              ++hits[i * width + k];
              // Exact rational cross-check of the threshold.
              const auto [num, den] = pair_key(left.fractions[i], right.fractions[k], mode);
              const bool near = num == 0 || (!std::isinf(a) && Rational(static_cast<long>(num), static_cast<unsigned long>(den)) * Rational(a) <= 1);
              if (near != (side == 0)) classified_right = false;
            }
          }
          bool exhaustive = true;
          for (std::size_t i = 0; i < left.fractions.size(); ++i) {
            for (std::size_t k = 0; k < width; ++k) {
              const int want = less_than(right.fractions[k], left.fractions[i]) ? 1 : 0;
              if (hits[i * width + k] != want) exhaustive = false;
            }
          }
          t.exact(exhaustive && classified_right,
                  describe({{"Q1", q1}, {"Q2", q2}, {"mode", static_cast<std::int64_t>(mode)}}) + " A=" + std::to_string(a));
        }
      }
    }
  }
  return t.done();
}

PropertyResult farey_sorted_spacing(std::int64_t max_q, std::int64_t all_pairs_up_to) {
  Tally t("farey_sorted_spacing");
  for (std::int64_t q = 3; q <= max_q; ++q) {
    const auto seq = farey_enumerate(q);
    const Rational gap = min_gap(seq);
    const auto& fr = seq.fractions;
    if (q <= all_pairs_up_to) {
      for (std::size_t n = 1; n < fr.size(); ++n) {
        for (std::size_t m = 0; m < n; ++m) {
          t.exact(fr[n].exact() - fr[m].exact() >= Rational(static_cast<long>(n - m)) * gap,
                  Where({{"Q", q}, {"n", static_cast<std::int64_t>(n)}, {"m", static_cast<std::int64_t>(m)}}));
        }
      }
    } else {
      // Telescoping: every consecutive gap 1/(b d) >= 1/G makes all index
      // spacings hold. Checked in integers, then spot-checked on random pairs
      // in rationals.
      const Rational inv = 1 / gap;
      if (inv.get_den() != 1) {
        t.exact(false, describe({{"Q", q}}) + " min gap is not a unit fraction");
        continue;
      }
      const auto big = static_cast<std::int64_t>(inv.get_num().get_si());
      for (std::size_t n = 1; n < fr.size(); ++n) {
        t.exact(fr[n - 1].den * fr[n].den <= big, Where({{"Q", q}, {"n", static_cast<std::int64_t>(n)}}));
      }
      std::mt19937_64 rng(static_cast<std::uint64_t>(q));
      for (int s = 0; s < 200; ++s) {
        auto n = static_cast<std::size_t>(rng() % fr.size());
        auto m = static_cast<std::size_t>(rng() % fr.size());
        if (m > n) std::swap(m, n);
        t.exact(fr[n].exact() - fr[m].exact() >= Rational(static_cast<long>(n - m)) * gap,
                Where({{"Q", q}, {"n", static_cast<std::int64_t>(n)}, {"m", static_cast<std::int64_t>(m)}}));
      }
    }
  }
  return t.done();
}

// ---------------------------------------------------------------------------
// integral

namespace {

const char* const kGridPresets[] = {"delta1", "unit", "mobius", "mobius-squared", "random:1"};

template <class Fn>
void for_each_grid_config(const ReconstructionGrid& grid, Fn&& fn) {
  for (const char* name : kGridPresets) {
    const auto preset = Preset::parse(name);
    for (std::int64_t n = 8; n <= grid.max_n; ++n) {
      const auto g = preset.table<double>(static_cast<std::size_t>(2 * n + grid.max_h));
      for (std::int64_t h = 2; h <= grid.max_h && 4 * h <= n; h += 2) {
        for (std::int64_t q = 1; q <= grid.max_q && q <= n + h; ++q) fn(name, n, h, q, g);
      }
    }
  }
}

}  // namespace

PropertyResult reconstruction_grid(const ReconstructionGrid& grid) {
  Tally t("reconstruction_grid");
  for_each_grid_config(grid, [&](const char* name, std::int64_t n, std::int64_t h, std::int64_t q, const RealTable& g) {
    const auto cfg = make_config(n, h, SupportCutoff::fixed(q));
    const auto rep = selberg_integral_decomposed(cfg, g);
    const std::string where = std::string(name) + " " + describe({{"N", n}, {"h", h}, {"Q", q}});
    t.bounded(rep.abs_gap / (1.0 + std::fabs(rep.direct)), grid.tolerance, where);
    t.exact(rep.direct >= 0.0 && rep.diagonal >= 0.0, "negative direct or diagonal at " + where);
  });
  return t.done();
}

PropertyResult reconstruction_random(int instances, std::uint64_t seed, double tolerance) {
  Tally t("reconstruction_random");
  std::mt19937_64 rng(seed);
  const char* const names[] = {"unit", "mobius", "mobius-squared", "random"};
  for (int i = 0; i < instances; ++i) {
    const auto n = static_cast<std::int64_t>(201 + rng() % 2800);
    const std::int64_t h_cap = std::min<std::int64_t>(64, n / 4);
    const std::int64_t h = 2 * (1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(h_cap / 2)));
    const auto q = static_cast<std::int64_t>(13 + rng() % 48);
    std::string name = names[rng() % 4];
    if (name == "random") name += ":" + std::to_string(rng() % 1000);
    const auto cfg = make_config(n, h, SupportCutoff::fixed(q));
    const auto g = Preset::parse(name).table<double>(cfg.table_size());
    const auto rep = selberg_integral_decomposed(cfg, g);
    t.bounded(rep.abs_gap / (1.0 + std::fabs(rep.direct)), tolerance,
              name + " " + describe({{"N", n}, {"h", h}, {"Q", q}}));
  }
  return t.done();
}

PropertyResult homogeneity(std::int64_t max_n) {
  Tally t("homogeneity");
  const Rational factors[] = {Rational(3, 2), Rational(-2), Rational(1, 3)};
  for (std::int64_t n = 8; n <= max_n; n += 7) {
    const auto cfg = make_config(n, 2, SupportCutoff::fixed(std::min<std::int64_t>(n, 10)));
    const auto g = random_table(static_cast<std::uint64_t>(n), cfg.table_size());
    const Rational base = selberg_integral_direct(cfg, g);
    for (const auto& c : factors) {
      t.exact(selberg_integral_direct(cfg, scaled(g, c)) == c * c * base, Where({{"N", n}}));
    }
  }
  return t.done();
}

PropertyResult ramanujan_form(std::int64_t max_n, std::int64_t max_q) {
  Tally t("ramanujan_form");
  for (std::int64_t n = 8; n <= max_n; n += 4) {
    for (std::int64_t h = 2; 4 * h <= n && h <= 6; h += 2) {
      const FejerWindow w(h);
      for (std::int64_t q_max = 1; q_max <= max_q; q_max += 3) {
        const auto cfg = make_config(n, h, SupportCutoff::fixed(q_max));
        const auto g = restrict_support(random_table(static_cast<std::uint64_t>(n * 100 + q_max), cfg.table_size()), q_max);
        Rational spectral_side = 0;
        for (std::int64_t x = n + 1; x <= 2 * n; ++x) {
          Rational inner = 0;
          for (std::int64_t q = 1; q <= q_max; ++q) inner += g[static_cast<std::size_t>(q)] * chi_tilde_direct<Rational>(q, x, w);
          spectral_side += inner * inner;
        }
        t.exact(selberg_integral_direct(cfg, g) == spectral_side, Where({{"N", n}, {"h", h}, {"Q", q_max}}));
      }
    }
  }
  return t.done();
}

PropertyResult taylor_positivity(std::int64_t max_n) {
  Tally t("taylor_positivity");
  for (std::int64_t n = 8; n <= max_n; n += 5) {
    const double a = 8.0 * static_cast<double>(n);
    // Q large enough that the near set is non-empty: gaps reach 1/(Q(Q-1)) <= 1/(8N).
    const auto q = static_cast<std::int64_t>(std::ceil(std::sqrt(8.0 * static_cast<double>(n)))) + 1;
    const auto seq = farey_enumerate(q);
    for (const PairKey mode : {PairKey::difference, PairKey::wrapped_sum}) {
      const auto part = spaced_pair_partition(seq, seq, a, mode);
      for (const auto& [i, k] : part.near) {
        const auto [num, den] = pair_key(seq.fractions[i], seq.fractions[k], mode);
        // N * key <= 1/8 holds by construction of A = 8N.
        double sum = 0.0;
        for (std::int64_t x = n + 1; x <= 2 * n; ++x) {
          sum += cos_pi_frac(static_cast<std::int64_t>((static_cast<__int128>(2) * num * x) % (2 * den)), den);
        }
        t.exact(sum > 0.0, Where({{"N", n}, {"num", num}, {"den", den}, {"mode", static_cast<std::int64_t>(mode)}}));
      }
    }
  }
  return t.done();
}

PropertyResult power_cutoff_path(std::int64_t max_n, double theta) {
  Tally t("power_cutoff_path");
  const char* const names[] = {"mobius", "mobius-squared", "random:3"};
  for (const char* name : names) {
    const auto preset = Preset::parse(name);
    for (std::int64_t n = 8; n <= max_n; ++n) {
      for (std::int64_t h = 2; 4 * h <= n && h <= 8; h += 2) {
        const auto cfg = make_config(n, h, SupportCutoff::power(theta));
        const auto g = preset.table<Rational>(cfg.table_size());
        t.exact(selberg_integral_direct(cfg, g) == selberg_integral_reference(cfg, g),
                std::string(name) + " " + describe({{"N", n}, {"h", h}}));
      }
    }
  }
  return t.done();
}

// ---------------------------------------------------------------------------
// lemma

PropertyResult far_part_bound(const ReconstructionGrid& grid) {
  Tally t("far_part_bound");
  for_each_grid_config(grid, [&](const char* name, std::int64_t n, std::int64_t h, std::int64_t q, const RealTable& g) {
    const double nd = static_cast<double>(n);
    for (const double a : {nd, nd * std::log(nd)}) {
      const auto cfg = make_config(n, h, SupportCutoff::fixed(q), a);
      const auto rep = far_part_bound_check(cfg, g);
      t.ratio(rep.far_abs, calibration::far_part_constant * rep.a_times_h,
              std::string(name) + " " + describe({{"N", n}, {"h", h}, {"Q", q}}) + " A=" + std::to_string(a));
    }
  });
  return t.done();
}

PropertyResult exp_sum_bound(int samples, std::int64_t max_n, std::uint64_t seed) {
  Tally t("exp_sum_bound");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> alpha_dist(-3.0, 3.0);
  for (int s = 0; s < samples; ++s) {
    const double alpha = alpha_dist(rng);
    const auto n = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(max_n));
    const std::complex<double> value = exp_sum_closed_form(alpha, n);
    const double dist = dist_to_int(alpha);
    const double bound = std::min(static_cast<double>(n), dist > 0.0 ? 1.0 / (2.0 * dist) : HUGE_VAL);
    // The closed form itself is checked against the literal sum.
    std::complex<double> literal = 0.0;
    for (std::int64_t x = n + 1; x <= 2 * n; ++x) {
      const double phase = 2.0 * std::numbers::pi * (alpha * static_cast<double>(x) - std::nearbyint(alpha * static_cast<double>(x)));
      literal += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    const std::string where = describe({{"sample", s}, {"N", n}}) + " alpha=" + std::to_string(alpha);
    t.ratio(std::abs(value), bound * (1.0 + 1e-12), where);
    t.bounded(std::abs(value - literal) / static_cast<double>(n), 1e-9, "closed form vs literal at " + where);
  }
  return t.done();
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "spectral", "farey", "decomposition", "lemma"};
  return names;
}

SuiteReport run_suite(const std::string& name, bool full) {
  SuiteReport report;
  report.suite = name;
  auto& p = report.properties;
  if (name == "identities") {
    p.push_back(inversion_round_trip(full ? 500 : 200, full ? 10 : 4));
    p.push_back(majorant_transfer(full ? 500 : 200, full ? 10 : 4));
    p.push_back(divisor_identity(full ? 2000 : 200));
    p.push_back(two_forms_identity(full ? 500 : 160, full ? 20 : 10));
    p.push_back(short_sum_linearity(300, 20, full ? 200 : 50));
    p.push_back(expansion_bridge(full ? 24 : 12, full ? 12 : 6, 30));
    p.push_back(chi_periodicity(full ? 60 : 20, full ? 20 : 8));
  } else if (name == "spectral") {
    p.push_back(chi_expansion_identity(full ? 200 : 60, full ? 64 : 24));
    p.push_back(coefficient_nonnegativity(full ? 500 : 200, full ? 64 : 24));
    p.push_back(coefficient_scaling(500, full ? 64 : 16));
    p.push_back(parseval_identity(full ? 200 : 80, 40));
    p.push_back(square_sum_bound(full ? 2000 : 500, full ? 200 : 60));
    p.push_back(ramanujan_triangle(100, 60));
  } else if (name == "farey") {
    p.push_back(farey_unimodularity(full ? 300 : 120));
    p.push_back(farey_gap_law(full ? 300 : 120));
    p.push_back(farey_min_gap(full ? 300 : 120));
    p.push_back(farey_partition_exhaustive(full ? 40 : 20));
    p.push_back(farey_sorted_spacing(full ? 300 : 120, 40));
  } else if (name == "decomposition") {
    ReconstructionGrid grid;
    if (!full) grid.max_n = 60;
    p.push_back(reconstruction_grid(grid));
    p.push_back(reconstruction_random(full ? 50 : 10, 20240601, 1e-6));
    p.push_back(homogeneity(full ? 200 : 60));
    p.push_back(ramanujan_form(full ? 60 : 24, 12));
    p.push_back(taylor_positivity(full ? 200 : 60));
    p.push_back(power_cutoff_path(full ? 100 : 40, 0.5));
  } else if (name == "lemma") {
    ReconstructionGrid grid;
    if (!full) grid.max_n = 60;
    p.push_back(far_part_bound(grid));
    p.push_back(exp_sum_bound(1000, 10000, 77));
  } else {
    throw DomainError("unknown suite '" + name + "' (expected identities|spectral|farey|decomposition|lemma)");
  }
  return report;
}

}  // namespace msi::verify
