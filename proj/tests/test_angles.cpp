#include <doctest.h>

#include <cmath>
#include <random>

#include "tripack/angles.hpp"

using namespace tripack;

namespace {

constexpr int kDigits = 50;
const mpfr_prec_t kBits = Precision{kDigits}.bits();

double unit_draw(std::mt19937& gen) { return (gen() >> 5) * (1.0 / 134217728.0); }

Real dot(const AngleCount& x, const std::array<Real, 6>& a) {
  Real t(0L, a[0].prec());
  for (int i = 0; i < 6; ++i) t += a[static_cast<size_t>(i)] * static_cast<long>(x[i]);
  return t;
}

}  // namespace

TEST_CASE("petal angle of a unit circle flanked by two halves") {
  Real a(1L, kBits), b(0.5, kBits), c(0.5, kBits);
  Real got = petal_angle(a, b, c, kDigits);
  // libm reference for arccos(7/9)
  CHECK(std::abs(got.to_double() - std::acos(7.0 / 9.0)) < 1e-15);
  CHECK(got.str(10) == "0.6796738189");
  // residual of the defining cosine
  Real res = cos(got) - Real(7L, kBits) / 9L;
  CHECK(abs(res) < Real::pow10(-45, kBits));
}

TEST_CASE("petal angle properties on random triples") {
  std::mt19937 gen(20240811);
  for (int it = 0; it < 50; ++it) {
    Real a(0.05 + 0.95 * unit_draw(gen), kBits);
    Real b(0.05 + 0.95 * unit_draw(gen), kBits);
    Real c(0.05 + 0.95 * unit_draw(gen), kBits);
    Real t = petal_angle(a, b, c, kDigits);
    // symmetric in the two neighbors
    CHECK(t == petal_angle(a, c, b, kDigits));
    // invariant under common rescaling
    Real lam(0.1 + 3.0 * unit_draw(gen), kBits);
    Real t2 = petal_angle(a * lam, b * lam, c * lam, kDigits);
    CHECK(abs(t - t2) < Real::pow10(-45, kBits));
    // defining cosine residual
    Real ab = a + b, ac = a + c, bc = b + c;
    Real rhs = (ab * ab + ac * ac - bc * bc) / ((ac * ab) * 2L);
    CHECK(abs(cos(t) - rhs) < Real::pow10(-45, kBits));
    // sine closed form: sin = 2 sqrt(a b c (a+b+c)) / ((a+b)(a+c))
    Real sin_ref = (sqrt(a * b * c * (a + b + c)) * 2L) / (ab * ac);
    CHECK(abs(sin(t) - sin_ref) < Real::pow10(-45, kBits));
  }
}

TEST_CASE("three equal radii always give pi/3") {
  std::mt19937 gen(7);
  for (int it = 0; it < 10; ++it) {
    Real a(0.05 + 0.95 * unit_draw(gen), kBits);
    Real t = petal_angle(a, a, a, kDigits);
    CHECK(abs(t - Real::pi(kBits) / 3L) < Real::pow10(-45, kBits));
  }
}

TEST_CASE("angle vectors use the documented slot layout") {
  Radii x{Real::parse("0.6357", kBits), Real::parse("0.2083", kBits)};
  Real one(1L, kBits);
  auto al = angle_vector(Kind::alpha, x, kDigits);
  auto be = angle_vector(Kind::beta, x, kDigits);
  auto ga = angle_vector(Kind::gamma, x, kDigits);
  Real third = Real::pi(kBits) / 3L;
  CHECK(al[2] == third);
  CHECK(be[1] == third);
  CHECK(ga[0] == third);
  CHECK(al[0] == petal_angle(x.s, one, one, kDigits));
  CHECK(al[5] == petal_angle(x.s, x.r, x.s, kDigits));
  CHECK(be[3] == petal_angle(x.r, one, x.r, kDigits));
  CHECK(ga[4] == petal_angle(one, one, x.s, kDigits));
  // every slot is a genuine angle
  for (int i = 0; i < 6; ++i) {
    CHECK(al[static_cast<size_t>(i)] > Real(0L, kBits));
    CHECK(al[static_cast<size_t>(i)] < Real::pi(kBits));
  }
  // reduced closed forms for the single-size neighbor slots
  CHECK(abs(cos(be[3]) - x.r / (x.r + 1L)) < Real::pow10(-45, kBits));
  CHECK(abs(cos(ga[3]) - 1L / (x.r + 1L)) < Real::pow10(-45, kBits));
  CHECK(abs(cos(al[0]) - (1L - Real(2L, kBits) / ((x.s + 1L) * (x.s + 1L)))) <
        Real::pow10(-45, kBits));
}

TEST_CASE("ray derivative matches centered differences") {
  std::mt19937 gen(991);
  Real h = Real::pow10(-12, kBits);
  Real tol(1e-6, kBits);
  for (int it = 0; it < 120; ++it) {
    Real r(0.05 + 0.9 * unit_draw(gen), kBits);
    Real m(0.05 + 0.9 * unit_draw(gen), kBits);
    AngleCount xi;
    for (int i = 0; i < 6; ++i) xi[i] = static_cast<int>(gen() % 4);
    if (xi.sum() == 0) xi[3] = 1;
    for (Kind k : {Kind::alpha, Kind::beta}) {
      Real rp = r + h, rm = r - h;
      Real fp = dot(xi, angle_vector(k, {rp, m * rp}, kDigits));
      Real fm = dot(xi, angle_vector(k, {rm, m * rm}, kDigits));
      Real fd = (fp - fm) / (h * 2L);
      Real cf = ray_derivative(k, xi, r, m);
      Real denom = abs(cf) > Real(1L, kBits) ? abs(cf) : Real(1L, kBits);
      CHECK(abs(fd - cf) / denom < tol);
    }
  }
}

TEST_CASE("origin limit cosines agree with small-radius evaluation") {
  std::mt19937 gen(3331);
  for (int it = 0; it < 20; ++it) {
    Real m(0.1 + 0.8 * unit_draw(gen), kBits);
    Real t = Real::pow10(-9, kBits);
    for (Kind k : {Kind::alpha, Kind::beta}) {
      auto lim = origin_limit_cosines(k, m);
      auto ang = angle_vector(k, {t, m * t}, kDigits);
      for (size_t i = 0; i < 6; ++i)
        CHECK(abs(cos(ang[i]) - lim[i]) < Real(1e-7, kBits));
    }
  }
}
