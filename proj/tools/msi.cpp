// msi: command-line front end.
//
//   msi sieve     --max-n M --fn mobius|divisor|PRESET [--convolve|--invert] [--real]
//   msi integral  --n N --h H --q Q --g PRESET [--cutoff power:THETA] [--a A] [--decompose] [--json|--csv]
//   msi verify    --suite NAME [--full]
//   msi sweep     --n 2^10..2^16 --h pow:0.4 --q pow:0.3 --g mobius --G mobius-squared [--out FILE]
//   msi farey     --q Q [--csv]
//
// Exit codes: 0 pass, 1 property failure, 2 usage, 3 resource budget.
// MSI_THREADS caps the OpenMP thread count.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "msi/arith.hpp"
#include "msi/farey.hpp"
#include "msi/integral.hpp"
#include "msi/sweep.hpp"
#include "msi/verify.hpp"

namespace {

enum Exit { ok = 0, property_failure = 1, usage = 2, resource = 3 };

using json = nlohmann::ordered_json;

void apply_thread_cap() {
  const char* env = std::getenv("MSI_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw msi::DomainError(std::string("MSI_THREADS must be a positive integer, got '") + env + "'");
  omp_set_num_threads(static_cast<int>(std::min<long>(n, omp_get_max_threads())));
}

std::string fmt(double v) { return msi::format_double(v); }

// --- sieve -------------------------------------------------------------------

struct SieveArgs {
  std::size_t max_n = 100;
  std::string fn = "mobius";
  bool convolve = false;
  bool invert = false;
  bool real = false;
};

int run_sieve(const SieveArgs& a) {
  msi::ExactTable table = [&] {
    if (a.fn == "divisor") return msi::sieve_divisor_count<msi::Rational>(a.max_n);
    return msi::Preset::parse(a.fn).table<msi::Rational>(a.max_n);
  }();
  if (a.convolve) table = msi::dirichlet_convolve_unit(table, a.max_n);
  if (a.invert) table = msi::mobius_invert(table);
  if (a.real) {
    msi::write_csv(std::cout, msi::to_real(table));
  } else {
    msi::write_csv(std::cout, table);
  }
  return ok;
}

// --- integral ----------------------------------------------------------------

struct IntegralArgs {
  std::int64_t n = 0;
  std::int64_t h = 0;
  std::int64_t q = 0;
  std::string g = "mobius";
  std::string cutoff;
  double a = 0.0;
  bool decompose = false;
  bool as_json = false;
  bool as_csv = false;
  bool force = false;
};

int run_integral(const IntegralArgs& a) {
  const auto cutoff = a.cutoff.empty() ? msi::SupportCutoff::fixed(a.q) : msi::SupportCutoff::parse(a.cutoff);
  auto cfg = msi::make_config(a.n, a.h, cutoff, a.a);
  cfg.force = a.force;
  cfg.validate();
  const auto preset = msi::Preset::parse(a.g);
  const auto g = preset.table<double>(cfg.table_size());
  const auto q = cutoff.limit_for(2 * a.n, a.h);

  if (!a.decompose) {
    const double j = msi::selberg_integral_direct(cfg, g);
    if (a.as_json) {
      json out{{"N", a.n}, {"h", a.h}, {"Q", q}, {"cutoff", cutoff.to_string()}, {"g", preset.name()}, {"direct", j}};
      std::cout << out.dump(2) << '\n';
    } else if (a.as_csv) {
      std::cout << "N,h,Q,g,j_direct\n"
                << a.n << ',' << a.h << ',' << q << ',' << preset.name() << ',' << fmt(j) << '\n';
    } else {
      std::cout << fmt(j) << '\n';
    }
    return ok;
  }

  const auto r = msi::selberg_integral_decomposed(cfg, g);
  if (a.as_csv) {
    std::cout << "N,h,Q,g,j_direct,j_total,diagonal,near,far,gap\n"
              << a.n << ',' << a.h << ',' << q << ',' << preset.name() << ',' << fmt(r.direct) << ',' << fmt(r.total)
              << ',' << fmt(r.diagonal) << ',' << fmt(r.near_delta + r.near_sigma) << ','
              << fmt(r.far_delta + r.far_sigma) << ',' << fmt(r.abs_gap) << '\n';
  } else {
    json out{{"diagonal", r.diagonal},       {"near_delta", r.near_delta}, {"near_sigma", r.near_sigma},
             {"far_delta", r.far_delta},     {"far_sigma", r.far_sigma},   {"total", r.total},
             {"direct", r.direct},           {"abs_gap", r.abs_gap},       {"fraction_count", r.fraction_count},
             {"pair_count", r.pair_count},   {"a", r.a}};
    std::cout << out.dump(2) << '\n';
  }
  return ok;
}

// --- verify ------------------------------------------------------------------

int run_verify(const std::string& suite, bool full) {
  const auto& names = msi::verify::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::cerr << "msi verify: unknown suite '" << suite << "'\n";
    return usage;
  }
  const auto report = msi::verify::run_suite(suite, full);
  std::cout << msi::verify::to_json(report) << '\n';
  return report.pass() ? ok : property_failure;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
  std::string n_values = "2^10..2^16";
  std::string h_rule = "pow:0.4";
  std::string q_rule = "pow:0.3";
  std::string g = "mobius";
  std::string big_g = "mobius-squared";
  std::string out;
};

int run_sweep_command(const SweepArgs& a) {
  msi::SweepPlan plan;
  plan.n_values = msi::SweepPlan::parse_n_values(a.n_values);
  plan.h_rule = msi::SizeRule::parse(a.h_rule);
  plan.cutoff = a.q_rule;
  plan.g_spec = a.g;
  plan.G_spec = a.big_g;
  const auto rows = msi::run_sweep(plan);
  if (a.out.empty()) {
    msi::write_sweep_csv(std::cout, rows);
    return ok;
  }
  std::ofstream file(a.out);
  if (!file) throw msi::ResourceError("cannot open '" + a.out + "' for writing");
  try {
    msi::write_sweep_csv(file, rows);
  } catch (const msi::ResourceError& e) {
    throw msi::ResourceError(a.out + ": " + e.what());
  }
  return ok;
}

// --- farey -------------------------------------------------------------------

int run_farey(std::int64_t q, bool as_csv) {
  const auto seq = msi::farey_enumerate(q);
  if (as_csv) {
    std::cout << "num,den,value\n";
    for (const auto& f : seq.fractions) std::cout << f.num << ',' << f.den << ',' << fmt(f.value()) << '\n';
    return ok;
  }
  json out{{"order", q}, {"count", seq.fractions.size()}, {"min_gap", msi::to_fraction_string(msi::min_gap(seq))}};
  out["fractions"] = json::array();
  for (const auto& f : seq.fractions) out["fractions"].push_back({{"num", f.num}, {"den", f.den}, {"value", f.value()}});
  std::cout << out.dump(2) << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short-sum mean square J(N, h): direct and spectral computation, property checks, sweeps"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h is the window width
  app.require_subcommand(1);

  SieveArgs sieve;
  auto* sieve_cmd = app.add_subcommand("sieve", "Tabulate an arithmetic function as CSV (n,value)");
  sieve_cmd->add_option("--max-n", sieve.max_n, "Table length")->required()->check(CLI::PositiveNumber);
  sieve_cmd->add_option("--fn", sieve.fn, "divisor | delta1 | unit | mobius | mobius-squared | random:SEED");
  sieve_cmd->add_flag("--convolve", sieve.convolve, "Output f * 1");
  sieve_cmd->add_flag("--invert", sieve.invert, "Output f * mu");
  sieve_cmd->add_flag("--real", sieve.real, "Decimal values instead of exact fractions");

  IntegralArgs integral;
  auto* integral_cmd = app.add_subcommand("integral", "Compute the mean square J(N, h)");
  integral_cmd->add_option("--n", integral.n, "N")->required();
  integral_cmd->add_option("--h", integral.h, "Even window half-width")->required();
  auto* q_opt = integral_cmd->add_option("--q", integral.q, "Fixed support bound Q");
  auto* cut_opt = integral_cmd->add_option("--cutoff", integral.cutoff, "power:THETA (x-dependent support)");
  q_opt->excludes(cut_opt);
  integral_cmd->add_option("--g", integral.g, "delta1 | unit | mobius | mobius-squared | random:SEED");
  integral_cmd->add_option("--a", integral.a, "Spacing parameter A (default N log N)");
  integral_cmd->add_flag("--decompose", integral.decompose, "Spectral decomposition with the direct value alongside");
  auto* json_flag = integral_cmd->add_flag("--json", integral.as_json, "JSON output");
  auto* csv_flag = integral_cmd->add_flag("--csv", integral.as_csv, "CSV output");
  json_flag->excludes(csv_flag);
  integral_cmd->add_flag("--force", integral.force, "Ignore the fraction-pair budget");

  std::string suite;
  bool full = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite and print a JSON report");
  verify_cmd->add_option("--suite", suite, "identities | spectral | farey | decomposition | lemma")->required();
  verify_cmd->add_flag("--full", full, "Use the full acceptance grids");
  verify_cmd->add_flag("--json", "JSON output (the only format)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Majorant comparison across N, one CSV row per N");
  sweep_cmd->add_option("--n", sweep.n_values, "N list (a,b,c) or doubling range 2^A..2^B");
  sweep_cmd->add_option("--h", sweep.h_rule, "pow:E or fixed:H (rounded down to even)");
  sweep_cmd->add_option("--q", sweep.q_rule, "pow:E, fixed:Q, or power:THETA");
  sweep_cmd->add_option("--g", sweep.g, "g preset");
  sweep_cmd->add_option("--G", sweep.big_g, "Majorant preset");
  sweep_cmd->add_option("--out", sweep.out, "Output file (default stdout)");
  sweep_cmd->add_flag("--csv", "CSV output (the only format)");

  std::int64_t farey_q = 0;
  bool farey_csv = false;
  auto* farey_cmd = app.add_subcommand("farey", "Farey fractions of order Q in (0, 1/2]");
  farey_cmd->add_option("--q", farey_q, "Order Q")->required();
  farey_cmd->add_flag("--csv", farey_csv, "CSV (num,den,value) instead of JSON");
  farey_cmd->add_flag("--json", "JSON output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    apply_thread_cap();
    if (*sieve_cmd) return run_sieve(sieve);
    if (*integral_cmd) {
      if (integral.cutoff.empty() && integral.q == 0) throw msi::DomainError("one of --q or --cutoff is required");
      if (integral.decompose && !integral.cutoff.empty()) {
        throw msi::DomainError("--decompose needs a fixed support (--q)");
      }
      return run_integral(integral);
    }
    if (*verify_cmd) return run_verify(suite, full);
    if (*sweep_cmd) return run_sweep_command(sweep);
    if (*farey_cmd) return run_farey(farey_q, farey_csv);
  } catch (const msi::ResourceError& e) {
    std::cerr << "msi: " << e.what() << '\n';
    return resource;
  } catch (const std::bad_alloc&) {
    std::cerr << "msi: out of memory\n";
    return resource;
  } catch (const std::exception& e) {
    std::cerr << "msi: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
