// verify.hpp
//
// Property checks over explicit parameter grids. Each check compares two
// independent routes (or a route against a brute-force loop) and returns one
// PropertyResult. The CLI runs them at desk scale; the acceptance binary
// runs the same checks on the full grids.
//
// max_error is the largest observed discrepancy for identities (0 for exact
// ones that hold) and the worst value/bound ratio for bounds (pass iff <= 1).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace msi::verify {

struct PropertyResult {
  std::string property;
  std::uint64_t instances = 0;
  double max_error = 0.0;
  bool pass = true;
  std::string detail;  // first failure, if any
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool pass() const;
};

// {"suite", "pass", "properties": [{property, instances, max_error, pass, detail}]}
std::string to_json(const SuiteReport& report, int indent = 2);

// --- arithmetic and short sums (exact) ---
PropertyResult inversion_round_trip(std::size_t max_n, int random_tables);
PropertyResult majorant_transfer(std::size_t max_n, int random_pairs);
PropertyResult divisor_identity(std::size_t max_n);
PropertyResult two_forms_identity(std::size_t max_n, std::int64_t max_h);
PropertyResult short_sum_linearity(std::size_t max_n, std::int64_t max_h, int trials);
// S_f(x) - M(x) = sum_q g(q) chi_q(x) exactly once Q <= x.
PropertyResult expansion_bridge(std::int64_t max_q, std::int64_t max_h, std::int64_t x_span);
PropertyResult chi_periodicity(std::int64_t max_q, std::int64_t max_h);

// --- spectral ---
PropertyResult chi_expansion_identity(std::int64_t max_q, std::int64_t max_h);  // tol 1e-9 (1 + h)
PropertyResult coefficient_nonnegativity(std::int64_t max_q, std::int64_t max_h);
PropertyResult coefficient_scaling(std::int64_t max_dq, std::int64_t max_h);  // rel 1e-12
PropertyResult parseval_identity(std::int64_t max_q, std::int64_t max_h);  // rel 1e-9
PropertyResult square_sum_bound(std::int64_t max_q, std::int64_t max_h);
PropertyResult ramanujan_triangle(int random_pairs, std::int64_t max_q);

// --- farey ---
PropertyResult farey_unimodularity(std::int64_t max_q);
PropertyResult farey_gap_law(std::int64_t max_q);
PropertyResult farey_min_gap(std::int64_t max_q);         // min gap >= 1/Q^2
PropertyResult farey_partition_exhaustive(std::int64_t max_q);
PropertyResult farey_sorted_spacing(std::int64_t max_q, std::int64_t all_pairs_up_to);

// --- integral ---
struct ReconstructionGrid {
  std::int64_t max_n = 200;
  std::int64_t max_q = 12;
  std::int64_t max_h = 8;
  double tolerance = 1e-8;
};
// Also asserts direct >= 0 and diagonal >= 0 on every grid point.
PropertyResult reconstruction_grid(const ReconstructionGrid& grid);
PropertyResult reconstruction_random(int instances, std::uint64_t seed, double tolerance);
PropertyResult homogeneity(std::int64_t max_n);
// direct == sum_x (sum_{q<=Q} g(q) chi_q(x))^2 in rationals.
PropertyResult ramanujan_form(std::int64_t max_n, std::int64_t max_q);
// With A = 8N every NEAR pair has a strictly positive cosine x-sum.
PropertyResult taylor_positivity(std::int64_t max_n);
// Power-cutoff sweep equals the per-x divisor oracle exactly.
PropertyResult power_cutoff_path(std::int64_t max_n, double theta);

// --- lemma ---
PropertyResult far_part_bound(const ReconstructionGrid& grid);
PropertyResult exp_sum_bound(int samples, std::int64_t max_n, std::uint64_t seed);

// Named suites at desk scale (full = the acceptance grids).
SuiteReport run_suite(const std::string& name, bool full = false);
const std::vector<std::string>& suite_names();

}  // namespace msi::verify
