#include "msi/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace msi {

double to_double(const Rational& q) {
  const double d = q.get_d();
  const Rational dq(d);
  if (dq == q) return d;
  const double up = std::nextafter(d, q > 0 ? HUGE_VAL : -HUGE_VAL);
  const Rational below = abs(q - dq);
  const Rational above = abs(Rational(up) - q);
  if (below < above) return d;
  if (above < below) return up;
  // Tie: keep the candidate with an even significand.
  int exp_d = 0;
  const double mant = std::frexp(d, &exp_d);
  const auto bits = static_cast<std::int64_t>(std::ldexp(std::fabs(mant), 53));
  return (bits % 2 == 0) ? d : up;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw DomainError("not a number: '" + text + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw DomainError("not a number: '" + text + "'");
    const std::string exp_text = text.substr(i + 1);
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw DomainError("bad exponent in '" + text + "'");
    }
    if (used != exp_text.size()) throw DomainError("bad exponent in '" + text + "'");
    scale += exponent;
  }
  mpz_class num(digits, 10);  // base 10: a leading 0 must not mean octal
  mpz_class den = 1;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  if (scale >= 0) {
    num *= pow10;
  } else {
    den = pow10;
  }
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw DomainError("empty value");
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const std::string num_text = trim(text.substr(0, slash));
  const std::string den_text = trim(text.substr(slash + 1));
  mpz_class num;
  mpz_class den;
  if (num.set_str(num_text, 10) != 0 || den.set_str(den_text, 10) != 0) {
    throw DomainError("not a fraction: '" + text + "'");
  }
  if (den == 0) throw DomainError("zero denominator: '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

double pairwise_range(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_range(data, half) + pairwise_range(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_range(values.data(), values.size());
}

Rational exact_sum(std::span<const Rational> values) {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

double sin_pi_frac(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("sin_pi_frac: denominator must be positive");
  const __int128 period = static_cast<__int128>(2) * den;
  __int128 r = static_cast<__int128>(num) % period;
  if (r < 0) r += period;
  double sign = 1.0;
  if (r >= den) {
    r -= den;
    sign = -1.0;
  }
  // r in [0, den): sin(pi r/den) = sin(pi (den - r)/den)
  if (2 * r > den) r = den - r;
  if (r == 0) return 0.0;
  return sign * std::sin(std::numbers::pi * (static_cast<double>(r) / static_cast<double>(den)));
}

double cos_pi_frac(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("cos_pi_frac: denominator must be positive");
  const std::int64_t period = 2 * den;
  std::int64_t r = num % period;
  if (r < 0) r += period;
  // cos(pi a/b) = sin(pi (2a + b)/(2b))
  return sin_pi_frac(2 * r + den, 2 * den);
}

std::int64_t dist_to_int_num(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % den;
  if (r < 0) r += den;
  return std::min(r, den - r);
}

double dist_to_int(double alpha) { return std::fabs(alpha - std::nearbyint(alpha)); }

}  // namespace msi
