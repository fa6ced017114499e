#include <cmath>

#include "doctest.h"
#include "msi/arith.hpp"
#include "msi/spectral.hpp"

using msi::FejerWindow;
using msi::Rational;

TEST_CASE("kernel values") {
  CHECK(msi::fejer_kernel_value(1, 3, FejerWindow(2)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(msi::fejer_kernel_value(1, 4, FejerWindow(2)) == doctest::Approx(2.0).epsilon(1e-15));
  for (std::int64_t h = 2; h <= 50; h += 2) CHECK(msi::fejer_kernel_value(1, 2, FejerWindow(h)) == 0.0);
  CHECK(msi::fejer_kernel_value(0.25, FejerWindow(2)) == doctest::Approx(2.0));
  // Near beta -> 0 the kernel tends to 2h.
  CHECK(msi::fejer_kernel_value(1, 100000, FejerWindow(6)) == doctest::Approx(12.0).epsilon(1e-6));
  CHECK_THROWS_AS(msi::fejer_kernel_value(2.0, FejerWindow(2)), msi::DomainError);
  CHECK_THROWS_AS(msi::fejer_kernel_value(3, 3, FejerWindow(2)), msi::DomainError);
}

TEST_CASE("fejer coefficients") {
  const FejerWindow w(2);
  CHECK(msi::fejer_coefficient(1, 3, w).value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(msi::fejer_coefficient(2, 6, w).value == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  for (std::int64_t h = 2; h <= 30; h += 2) CHECK(msi::fejer_coefficient(1, 2, FejerWindow(h)).value == 0.0);
  CHECK_THROWS_AS(msi::fejer_coefficient(2, 3, w), msi::DomainError);
  CHECK_THROWS_AS(msi::fejer_coefficient(0, 3, w), msi::DomainError);
}

TEST_CASE("chi expansion matches the direct count") {
  const FejerWindow w(2);
  CHECK(msi::chi_tilde_expansion(1, 5, w) == 0.0);
  CHECK(msi::chi_tilde_expansion(3, 3, w) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  for (std::int64_t x = 7; x <= 12; ++x) {
    CHECK(msi::chi_tilde_expansion(6, x, w) ==
          doctest::Approx(msi::to_double(msi::chi_tilde_direct<Rational>(6, x, w))).epsilon(1e-12));
  }
  for (std::int64_t q = 1; q <= 40; ++q) {
    for (std::int64_t h : {2, 8, 14}) {
      const FejerWindow wh(h);
      for (std::int64_t x = h + 1; x <= h + q; ++x) {
        const double direct = msi::to_double(msi::chi_tilde_direct<Rational>(q, x, wh));
        CHECK(std::fabs(msi::chi_tilde_expansion(q, x, wh) - direct) <= 1e-9 * (1.0 + static_cast<double>(h)));
      }
    }
  }
}

TEST_CASE("coefficient square sums") {
  for (std::int64_t h = 2; h <= 40; h += 2) CHECK(msi::coefficient_square_sum(2, FejerWindow(h), false) == 0.0);
  CHECK(msi::coefficient_square_sum(3, FejerWindow(2), false) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  CHECK(msi::coefficient_square_sum(3, FejerWindow(2), true) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  // Reduced residues are a subset of all residues.
  CHECK(msi::coefficient_square_sum(12, FejerWindow(4), true) < msi::coefficient_square_sum(12, FejerWindow(4), false));
  CHECK_THROWS_AS(msi::coefficient_square_sum(1, FejerWindow(2), false), msi::DomainError);
}

TEST_CASE("ramanujan coefficients") {
  const auto delta = msi::Preset::parse("delta1").table<Rational>(10);
  CHECK(msi::ramanujan_coefficient(delta, 1, 10) == 1);
  for (std::int64_t ell = 2; ell <= 10; ++ell) CHECK(msi::ramanujan_coefficient(delta, ell, 10) == 0);

  const auto unit4 = msi::restrict_support(msi::Preset::parse("unit").table<Rational>(4), 4);
  CHECK(msi::ramanujan_coefficient(unit4, 2, 4) == Rational(3, 4));
  const msi::RamanujanTable<Rational> table(unit4, 4);
  CHECK(table.at(2) == Rational(3, 4));
  CHECK(table.at(1) == Rational(1) + Rational(1, 2) + Rational(1, 3) + Rational(1, 4));
  CHECK(table.at(5) == 0);

  const auto unit = msi::Preset::parse("unit").table<Rational>(8);
  CHECK_THROWS_AS(msi::ramanujan_coefficient(unit, 2, 4), msi::PreconditionError);
}
