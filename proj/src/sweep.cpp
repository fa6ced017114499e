#include "msi/sweep.hpp"

#include <ostream>
#include <sstream>

#include "msi/numeric.hpp"

namespace msi {

namespace {

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw DomainError("bad " + what + ": '" + text + "'");
  return v;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw DomainError("bad " + what + ": '" + text + "'");
  return v;
}

std::int64_t parse_power_of_two(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    const auto e = parse_int(text.substr(2), "exponent");
    if (e < 0 || e > 40) throw DomainError("exponent out of range: '" + text + "'");
    return std::int64_t{1} << e;
  }
  return parse_int(text, "N");
}

}  // namespace

SizeRule SizeRule::parse(const std::string& text) {
  SizeRule r;
  if (text.rfind("pow:", 0) == 0) {
    r.kind = Kind::power;
    r.exponent = parse_double(text.substr(4), "exponent");
    if (!(r.exponent > 0.0 && r.exponent <= 1.0)) throw DomainError("exponent must lie in (0, 1]: '" + text + "'");
  } else {
    r.kind = Kind::fixed;
    r.value = parse_int(text.rfind("fixed:", 0) == 0 ? text.substr(6) : text, "size rule");
    if (r.value < 1) throw DomainError("size must be positive: '" + text + "'");
  }
  return r;
}

std::int64_t SizeRule::eval(std::int64_t n) const {
  return kind == Kind::power ? floor_power(n, exponent) : value;
}

std::string SizeRule::to_string() const {
  if (kind == Kind::fixed) return "fixed:" + std::to_string(value);
  std::ostringstream os;
  os << "pow:" << exponent;
  return os.str();
}

std::vector<std::int64_t> SweepPlan::parse_n_values(const std::string& text) {
  std::vector<std::int64_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_power_of_two(text.substr(0, dots));
    const auto hi = parse_power_of_two(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw DomainError("bad N range: '" + text + "'");
    for (std::int64_t n = lo; n <= hi; n *= 2) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto n = parse_power_of_two(item);
    if (n < 1) throw DomainError("N must be positive: '" + item + "'");
    out.push_back(n);
  }
  if (out.empty()) throw DomainError("empty N list");
  return out;
}

std::int64_t even_floor(std::int64_t h) { return std::max<std::int64_t>(2, h - (h % 2)); }

IntegralConfig sweep_config(const SweepPlan& plan, std::int64_t n) {
  const std::int64_t h = even_floor(plan.h_rule.eval(n));
  SupportCutoff cutoff = SupportCutoff::fixed(1);
  if (plan.cutoff.rfind("power:", 0) == 0) {
    cutoff = SupportCutoff::parse(plan.cutoff);
  } else {
    cutoff = SupportCutoff::fixed(std::max<std::int64_t>(1, SizeRule::parse(plan.cutoff).eval(n)));
  }
  auto cfg = make_config(n, h, cutoff);
  cfg.validate();
  return cfg;
}

std::vector<MajorantReport> run_sweep(const SweepPlan& plan, Parallelism par) {
  const auto g = Preset::parse(plan.g_spec);
  const auto big_g = Preset::parse(plan.G_spec);
  // Validate every row before any work so a bad plan fails fast.
  std::vector<IntegralConfig> configs;
  configs.reserve(plan.n_values.size());
  for (const auto n : plan.n_values) configs.push_back(sweep_config(plan, n));
  std::vector<MajorantReport> rows;
  rows.reserve(configs.size());
  for (const auto& cfg : configs) rows.push_back(majorant_compare(cfg, g, big_g, par));
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<MajorantReport>& rows) {
  out << "N,h,Q,g,G,j_f,j_F,n_h,ratio\n";
  for (const auto& r : rows) {
    const auto q = SupportCutoff::parse(r.cutoff).limit_for(2 * r.n, r.h);
    out << r.n << ',' << r.h << ',' << q << ',' << r.g_spec << ',' << r.G_spec << ',' << format_double(r.j_f) << ','
        << format_double(r.j_F) << ',' << format_double(r.n_h) << ',' << format_double(r.ratio) << '\n';
  }
  if (!out) throw ResourceError("failed writing sweep CSV");
}

}  // namespace msi
