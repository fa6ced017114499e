// sweep.hpp
//
// Majorant-comparison sweeps across N. Each N yields one row; rows come out
// in plan order and are byte-identical across reruns.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "msi/integral.hpp"

namespace msi {

// An integer-valued rule in N: "pow:E" gives floor(N^E), "fixed:K" gives K.
struct SizeRule {
  enum class Kind { power, fixed };
  Kind kind = Kind::fixed;
  double exponent = 0.0;
  std::int64_t value = 0;

  static SizeRule parse(const std::string& text);
  std::int64_t eval(std::int64_t n) const;
  std::string to_string() const;
};

struct SweepPlan {
  std::vector<std::int64_t> n_values;
  SizeRule h_rule;            // rounded down to an even value >= 2
  std::string cutoff = "pow:0.3";  // pow:E / fixed:Q (fixed support Q(N)) or power:THETA
  std::string g_spec = "mobius";
  std::string G_spec = "mobius-squared";

  // Parses "1024,2048" or a doubling range "2^10..2^16".
  static std::vector<std::int64_t> parse_n_values(const std::string& text);
};

std::int64_t even_floor(std::int64_t h);

// The per-N configuration the plan prescribes (validated).
IntegralConfig sweep_config(const SweepPlan& plan, std::int64_t n);

std::vector<MajorantReport> run_sweep(const SweepPlan& plan, Parallelism par = {});

// Header "N,h,Q,g,G,j_f,j_F,n_h,ratio"; Q is the support bound at 2N + h.
void write_sweep_csv(std::ostream& out, const std::vector<MajorantReport>& rows);

}  // namespace msi
