#include <cmath>
#include <limits>

#include "doctest.h"
#include "msi/numeric.hpp"

using msi::Rational;

TEST_CASE("correctly rounded conversion") {
  CHECK(msi::to_double(Rational(1, 3)) == 1.0 / 3.0);
  CHECK(msi::to_double(Rational(-2, 7)) == -2.0 / 7.0);
  CHECK(msi::to_double(Rational(0)) == 0.0);
  // 1 + 2^-53 is a tie between 1 and 1 + 2^-52: ties go to even.
  Rational tie = Rational(1) + Rational(1, 1UL << 53);
  CHECK(msi::to_double(tie) == 1.0);
  Rational above = tie + Rational(1, 1UL << 60);
  CHECK(msi::to_double(above) == std::nextafter(1.0, 2.0));
}

TEST_CASE("rational parsing and printing") {
  CHECK(msi::parse_rational("3/6") == Rational(1, 2));
  CHECK(msi::parse_rational("-12") == -12);
  CHECK(msi::parse_rational("0.125") == Rational(1, 8));
  CHECK(msi::parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(msi::to_fraction_string(msi::ratio<Rational>(-6, 4)) == "-3/2");
  CHECK(msi::to_fraction_string(Rational(5)) == "5");
  CHECK_THROWS_AS(msi::parse_rational("1/0"), msi::DomainError);
  CHECK_THROWS_AS(msi::parse_rational("abc"), msi::DomainError);
  CHECK(msi::format_double(0.1) == "0.1");
}

TEST_CASE("trigonometry at rational multiples of pi") {
  CHECK(msi::sin_pi_frac(1, 1) == 0.0);
  CHECK(msi::sin_pi_frac(6, 3) == 0.0);
  CHECK(msi::cos_pi_frac(1, 2) == 0.0);
  CHECK(msi::sin_pi_frac(1, 2) == 1.0);
  CHECK(msi::sin_pi_frac(1, 6) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(msi::sin_pi_frac(-1, 6) == doctest::Approx(-0.5).epsilon(1e-15));
  // Large numerators reduce exactly.
  CHECK(msi::sin_pi_frac(2000000000001LL, 1000000000000LL) ==
        doctest::Approx(std::sin(3.141592653589793e-12)).epsilon(1e-12));
  CHECK(msi::dist_to_int(0.75) == 0.25);
  CHECK(msi::dist_to_int(-2.1) == doctest::Approx(0.1));
}

TEST_CASE("summation") {
  std::vector<double> v(1000001, 0.1);
  v[0] = 1e16;
  const double naive = [&] {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }();
  const double pairwise = msi::pairwise_sum(std::span<const double>(v));
  CHECK(std::fabs(pairwise - (1e16 + 100000.0)) <= std::fabs(naive - (1e16 + 100000.0)));
  std::vector<Rational> q = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  CHECK(msi::exact_sum(std::span<const Rational>(q)) == 1);
}
