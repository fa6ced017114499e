#include <sstream>

#include "doctest.h"
#include "msi/sweep.hpp"

TEST_CASE("size rules") {
  CHECK(msi::SizeRule::parse("pow:0.4").eval(1024) == 16);
  CHECK(msi::SizeRule::parse("pow:0.3").eval(1024) == 8);
  CHECK(msi::SizeRule::parse("fixed:6").eval(99) == 6);
  CHECK(msi::SizeRule::parse("6").eval(99) == 6);
  CHECK_THROWS_AS(msi::SizeRule::parse("pow:2"), msi::DomainError);
  CHECK_THROWS_AS(msi::SizeRule::parse("fixed:x"), msi::DomainError);
  CHECK(msi::even_floor(17) == 16);
  CHECK(msi::even_floor(1) == 2);
  CHECK(msi::even_floor(0) == 2);
}

TEST_CASE("N lists") {
  CHECK(msi::SweepPlan::parse_n_values("2^10..2^13") == std::vector<std::int64_t>{1024, 2048, 4096, 8192});
  CHECK(msi::SweepPlan::parse_n_values("100,2^7,300") == std::vector<std::int64_t>{100, 128, 300});
  CHECK_THROWS_AS(msi::SweepPlan::parse_n_values("2^5..2^3"), msi::DomainError);
  CHECK_THROWS_AS(msi::SweepPlan::parse_n_values(""), msi::DomainError);
}

TEST_CASE("every derived h is even and every Q <= N + h") {
  msi::SweepPlan plan;
  plan.h_rule = msi::SizeRule::parse("pow:0.4");
  for (std::int64_t n = 16; n <= 70000; n = n * 3 / 2) {
    const auto cfg = msi::sweep_config(plan, n);
    CHECK(cfg.h() % 2 == 0);
    CHECK(cfg.max_support() <= n + cfg.h());
  }
}

TEST_CASE("a single-N plan is one majorant comparison") {
  msi::SweepPlan plan;
  plan.n_values = {1024};
  plan.h_rule = msi::SizeRule::parse("pow:0.4");
  const auto rows = msi::run_sweep(plan);
  REQUIRE(rows.size() == 1);
  const auto direct = msi::majorant_compare(msi::make_config(1024, 16, msi::SupportCutoff::fixed(8)),
                                            msi::Preset::parse("mobius"), msi::Preset::parse("mobius-squared"));
  CHECK(rows[0].ratio == direct.ratio);
  CHECK(rows[0].j_f == direct.j_f);
}

TEST_CASE("reruns are byte-identical") {
  msi::SweepPlan plan;
  plan.n_values = msi::SweepPlan::parse_n_values("2^8..2^11");
  plan.h_rule = msi::SizeRule::parse("pow:0.4");
  plan.g_spec = "random:3";
  plan.G_spec = "unit";
  std::ostringstream a, b;
  msi::write_sweep_csv(a, msi::run_sweep(plan, msi::Parallelism{1}));
  msi::write_sweep_csv(b, msi::run_sweep(plan));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("N,h,Q,g,G,j_f,j_F,n_h,ratio\n", 0) == 0);
}

TEST_CASE("power cutoff plans") {
  msi::SweepPlan plan;
  plan.n_values = {400};
  plan.h_rule = msi::SizeRule::parse("fixed:6");
  plan.cutoff = "power:0.5";
  const auto rows = msi::run_sweep(plan);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].cutoff == "power:0.5");
  std::ostringstream out;
  msi::write_sweep_csv(out, rows);
  CHECK(out.str().find("\n400,6,28,mobius,mobius-squared,") != std::string::npos);
}
