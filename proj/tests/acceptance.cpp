// Acceptance run: one PASS/FAIL line per criterion, each with its wall time
// and budget. A criterion passes only if its check holds within the budget.
// Exit status is the number of failed criteria (0 when all pass).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "msi/integral.hpp"
#include "msi/sweep.hpp"
#include "msi/verify.hpp"

namespace {

using msi::verify::PropertyResult;

struct Outcome {
  bool pass = true;
  std::string summary;
};

Outcome from(std::initializer_list<PropertyResult> results) {
  Outcome o;
  for (const auto& r : results) {
    o.pass = o.pass && r.pass;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s%s n=%llu max=%.3g%s%s", o.summary.empty() ? "" : "; ", r.property.c_str(),
                  static_cast<unsigned long long>(r.instances), r.max_error, r.pass ? "" : " FAILED at ",
                  r.detail.c_str());
    o.summary += buf;
  }
  return o;
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s [%d] %s (%.2fs / %.0fs%s) %s\n", pass ? "PASS" : "FAIL", id, title, secs, budget_s,
              in_time ? "" : " OVER BUDGET", o.summary.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  using namespace msi::verify;

  criterion(1, "two-forms identity, max_n <= 500, even h <= 20, exact", 30, [] {
    return from({two_forms_identity(500, 20)});
  });

  criterion(2, "chi expansion vs direct, q <= 200, even h <= 64, tol 1e-9 (1 + h)", 60, [] {
    return from({chi_expansion_identity(200, 64)});
  });

  criterion(3, "Parseval (q <= 200, h <= 40) and square-sum bound (q <= 2000, h <= 200)", 120, [] {
    return from({parseval_identity(200, 40), square_sum_bound(2000, 200)});
  });

  criterion(4, "reconstruction: exhaustive N <= 200, Q <= 12, h <= 8 at 1e-8; 50 random at 1e-6", 120, [] {
    return from({reconstruction_grid(ReconstructionGrid{}), reconstruction_random(50, 20240601, 1e-6)});
  });

  criterion(5, "far-part bound |far| <= C_far A h over the reconstruction grid, A in {N, N log N}", 60, [] {
    return from({far_part_bound(ReconstructionGrid{})});
  });

  criterion(6, "Farey suite to Q = 300", 10, [] {
    return from({farey_unimodularity(300), farey_gap_law(300), farey_min_gap(300), farey_partition_exhaustive(40),
                 farey_sorted_spacing(300, 40)});
  });

  criterion(7, "growth: ratio(N) <= ratio(2^10) (N / 2^10)^0.2, g = mobius, G = mobius^2", 300, [] {
    msi::SweepPlan plan;
    plan.n_values = msi::SweepPlan::parse_n_values("2^10..2^16");
    plan.h_rule = msi::SizeRule::parse("pow:0.4");
    plan.cutoff = "pow:0.3";
    const auto rows = msi::run_sweep(plan);
    Outcome o;
    const double base = rows.front().ratio;
    double worst = 0.0;
    for (const auto& r : rows) {
      const double bound = base * std::pow(static_cast<double>(r.n) / 1024.0, 0.2);
      worst = std::max(worst, r.ratio / bound);
      if (!(r.ratio <= bound)) o.pass = false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "ratio(2^10)=%.4g ratio(2^16)=%.4g worst ratio/bound=%.3f", base, rows.back().ratio,
                  worst);
    o.summary = buf;
    return o;
  });

  criterion(8, "power-cutoff sweep equals the per-x oracle exactly, N <= 100, theta = 1/2", 30, [] {
    return from({power_cutoff_path(100, 0.5)});
  });

  criterion(9, "exponential sum <= min(N, 1/(2||alpha||)), 1000 random alpha, N <= 1e4", 5, [] {
    return from({exp_sum_bound(1000, 10000, 77)});
  });

  criterion(10, "direct integral N = 1e6, h = 1e3, Q = 1e3, one thread", 10, [] {
    const auto cfg = msi::make_config(1'000'000, 1000, msi::SupportCutoff::fixed(1000));
    const auto g = msi::Preset::parse("mobius").table<double>(cfg.table_size());
    const double j = msi::selberg_integral_direct(cfg, g, msi::Parallelism{1});
    Outcome o;
    o.pass = std::isfinite(j) && j >= 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "J=%.10g", j);
    o.summary = buf;
    return o;
  });

  return failures;
}
