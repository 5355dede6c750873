#include <doctest.h>

#include <cmath>

#include "tripack/real.hpp"

using tripack::Precision;
using tripack::Real;

TEST_CASE("precision carries through arithmetic") {
  mpfr_prec_t bits = Precision{50}.bits();
  Real a(2L, bits), b(3L, 64);
  CHECK((a + b).prec() == bits);
  CHECK((b * b).prec() == 64);
  CHECK((a / b).to_double() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("pi matches libm to double precision") {
  Real p = Real::pi(Precision{50}.bits());
  CHECK(std::abs(p.to_double() - M_PI) < 1e-15);
}

TEST_CASE("decimal round trip") {
  mpfr_prec_t bits = Precision{50}.bits();
  Real x = Real::parse("0.12345678901234567890123456789", bits);
  std::string s = x.str(29);
  CHECK(s == "0.12345678901234567890123456789");
  CHECK(Real::parse(s, bits) == x);
  CHECK(Real(0L, bits).str(10) == "0");
  CHECK(Real(-3L, bits).str(10) == "-3");
  Real tiny = Real::pow10(-40, bits);
  CHECK(Real::parse(tiny.str(20), bits).to_double() == doctest::Approx(1e-40));
}

TEST_CASE("string rendering of moderate magnitudes stays plain") {
  mpfr_prec_t bits = Precision{30}.bits();
  CHECK(Real(1.5, bits).str(10) == "1.5");
  CHECK(Real(100L, bits).str(10) == "100");
  CHECK(Real(0.25, bits).str(10) == "0.25");
  CHECK(Real(-0.03125, bits).str(10) == "-0.03125");
}

TEST_CASE("comparisons are exact") {
  mpfr_prec_t bits = Precision{40}.bits();
  Real a(1L, bits);
  Real b = a + Real::pow10(-45, bits);
  CHECK(b > a);
  CHECK(a < b);
  CHECK(a != b);
  CHECK(a == Real(1.0, 64));
}

TEST_CASE("acos clamp accepts roundoff excursions and rejects junk") {
  mpfr_prec_t bits = Precision{50}.bits();
  Real eps = Real::pow10(-45, bits);
  Real just_over = Real(1L, bits) + Real::pow10(-50, bits);
  CHECK(tripack::acos_clamped(just_over, eps).is_zero());
  Real just_under = -just_over;
  CHECK(tripack::acos_clamped(just_under, eps) == Real::pi(bits));
  Real bad = Real(1.001, bits);
  CHECK_THROWS_AS((void)tripack::acos_clamped(bad, eps), std::domain_error);
  Real inside(0.5, bits);
  CHECK(tripack::acos_clamped(inside, eps).to_double() == doctest::Approx(std::acos(0.5)));
}
