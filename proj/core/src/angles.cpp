#include "tripack/angles.hpp"

#include <stdexcept>

namespace tripack {

Real petal_angle(const Real& a, const Real& b, const Real& c, int digits) {
  Real ab = a + b, ac = a + c, bc = b + c;
  Real num = ab * ab + ac * ac - bc * bc;
  Real den = (ac * ab) * 2L;
  Real eps = Real::pow10(5 - digits, num.prec());
  return acos_clamped(num / den, eps);
}

std::array<Real, 6> angle_vector(Kind k, const Radii& x, int digits) {
  mpfr_prec_t bits = x.r.prec();
  Real one(1L, bits);
  Real third_pi = Real::pi(bits) / 3L;
  const Real& r = x.r;
  const Real& s = x.s;
  switch (k) {
    case Kind::alpha:
      return {petal_angle(s, one, one, digits), petal_angle(s, r, r, digits),
              third_pi,                         petal_angle(s, one, r, digits),
              petal_angle(s, one, s, digits),   petal_angle(s, r, s, digits)};
    case Kind::beta:
      return {petal_angle(r, one, one, digits), third_pi,
              petal_angle(r, s, s, digits),     petal_angle(r, one, r, digits),
              petal_angle(r, one, s, digits),   petal_angle(r, r, s, digits)};
    case Kind::gamma:
      return {third_pi,                         petal_angle(one, r, r, digits),
              petal_angle(one, s, s, digits),   petal_angle(one, one, r, digits),
              petal_angle(one, one, s, digits), petal_angle(one, r, s, digits)};
  }
  throw std::invalid_argument("bad kind");
}

Real ray_derivative(Kind k, const AngleCount& xi, const Real& r, const Real& m) {
  // Along s = m r only the angle slots touching the unit circle vary; the
  // pure {r,s} slots are scale invariant.  Slot weights below are the
  // derivatives of the three varying arccos terms.
  mpfr_prec_t bits = r.prec() > m.prec() ? r.prec() : m.prec();
  Real one(1L, bits);
  Real u(bits), v(bits), w(bits);
  if (k == Kind::alpha) {
    Real mr = m * r;
    Real mr1 = mr + 1L;
    u = (m * 2L) / (mr1 * sqrt(mr * (mr + 2L)));
    v = m / (mr1 * sqrt(m * (mr + r + one)));
    w = m / (mr1 * sqrt(mr * 2L + 1L));
  } else if (k == Kind::beta) {
    Real r1 = r + 1L;
    u = (one * 2L) / (r1 * sqrt(r * (r + 2L)));
    v = one / (r1 * sqrt(r * 2L + 1L));
    w = m / (r1 * sqrt(m * (m * r + r + one)));
  } else {
    throw std::invalid_argument("ray_derivative: kind must be alpha or beta");
  }
  return -(u * xi[0] + v * xi[3] + w * xi[4]);
}

std::array<Real, 6> origin_limit_cosines(Kind k, const Real& m) {
  mpfr_prec_t bits = m.prec();
  Real one(1L, bits), zero(0L, bits), half = Real(1L, bits) / 2L;
  Real m1 = m + 1L;
  if (k == Kind::alpha)
    return {-one, one - 2L / (m1 * m1), half, (m - 1L) / m1, zero, m / m1};
  if (k == Kind::beta)
    return {-one, half, one - (m * m * 2L) / (m1 * m1), zero, (1L - m) / m1, one / m1};
  throw std::invalid_argument("origin_limit_cosines: kind must be alpha or beta");
}

}  // namespace tripack
