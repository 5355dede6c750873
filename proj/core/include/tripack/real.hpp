#pragma once

#include <mpfr.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace tripack {

// Decimal digit budget for a computation.  Guard digits are added on top
// before converting to a bit count so that requested digits survive
// cancellation in long angle sums.
struct Precision {
  int digits = 60;

  static constexpr int guard_digits = 15;

  mpfr_prec_t bits() const {
    long d = digits + guard_digits;
    return static_cast<mpfr_prec_t>(d * 3.3219280948873623 + 16.0);
  }
};

// Arbitrary-precision real number backed by an mpfr_t.  Every value carries
// its own precision; binary operations allocate the result at the larger of
// the two operand precisions.  Rounding is always to nearest.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real pi(mpfr_prec_t bits) {
    Real x(bits);
    mpfr_const_pi(x.v_, MPFR_RNDN);
    return x;
  }

  // Parses a decimal string.
  static Real parse(const std::string& s, mpfr_prec_t bits) {
    Real x(bits);
    if (mpfr_set_str(x.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("bad decimal literal: " + s);
    return x;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  // Same value rounded to a different working precision.
  Real to_prec(mpfr_prec_t bits) const {
    Real x(bits);
    mpfr_set(x.v_, v_, MPFR_RNDN);
    return x;
  }

  // Decimal rendering with the given number of significant digits.
  std::string str(int digits) const;

  friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }

  friend Real operator+(const Real& a, long b) { return siop(a, b, mpfr_add_si); }
  friend Real operator-(const Real& a, long b) { return siop(a, b, mpfr_sub_si); }
  friend Real operator*(const Real& a, long b) { return siop(a, b, mpfr_mul_si); }
  friend Real operator/(const Real& a, long b) { return siop(a, b, mpfr_div_si); }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator-(long a, const Real& b) {
    Real x(b.prec());
    mpfr_si_sub(x.v_, a, b.v_, MPFR_RNDN);
    return x;
  }
  friend Real operator/(long a, const Real& b) {
    Real x(b.prec());
    mpfr_si_div(x.v_, a, b.v_, MPFR_RNDN);
    return x;
  }

  Real operator-() const {
    Real x(prec());
    mpfr_neg(x.v_, v_, MPFR_RNDN);
    return x;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Real& a, const Real& b) {
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::strong_ordering operator<=>(const Real& a, long b) {
    int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend Real sqrt(const Real& a) { return unop(a, mpfr_sqrt); }
  friend Real cos(const Real& a) { return unop(a, mpfr_cos); }
  friend Real sin(const Real& a) { return unop(a, mpfr_sin); }
  friend Real acos(const Real& a) { return unop(a, mpfr_acos); }
  friend Real abs(const Real& a) { return unop(a, mpfr_abs); }
  friend Real atan2(const Real& y, const Real& x) {
    Real z(y.prec() > x.prec() ? y.prec() : x.prec());
    mpfr_atan2(z.v_, y.v_, x.v_, MPFR_RNDN);
    return z;
  }
  friend Real floor(const Real& a) {
    Real x(a.prec());
    mpfr_floor(x.v_, a.v_);
    return x;
  }

  // 10^e at this value's precision.
  static Real pow10(long e, mpfr_prec_t bits) {
    Real x(bits);
    mpfr_set_si(x.v_, 10, MPFR_RNDN);
    mpfr_pow_si(x.v_, x.v_, e, MPFR_RNDN);
    return x;
  }

 private:
  using fn2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using fnsi = int (*)(mpfr_ptr, mpfr_srcptr, long, mpfr_rnd_t);
  using fn1 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  static Real binop(const Real& a, const Real& b, fn2 f) {
    Real x(a.prec() > b.prec() ? a.prec() : b.prec());
    f(x.v_, a.v_, b.v_, MPFR_RNDN);
    return x;
  }
  static Real siop(const Real& a, long b, fnsi f) {
    Real x(a.prec());
    f(x.v_, a.v_, b, MPFR_RNDN);
    return x;
  }
  static Real unop(const Real& a, fn1 f) {
    Real x(a.prec());
    f(x.v_, a.v_, MPFR_RNDN);
    return x;
  }

  mpfr_t v_;
};

// arccos with a relative-tolerance clamp at the domain boundary.  Inputs
// outside [-1-eps, 1+eps] raise std::domain_error; inputs within eps of the
// boundary are clamped to the exact endpoint.  eps defaults to 1e-5 of the
// last requested digits, callers pass 10^(5-digits).
Real acos_clamped(const Real& x, const Real& eps);

}  // namespace tripack
