#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tripack/angles.hpp"
#include "tripack/real.hpp"

namespace tripack {

// Dense univariate integer polynomial, coefficients ascending by degree.
struct IntPoly1 {
  std::vector<mpz_class> c;

  IntPoly1() = default;
  IntPoly1(std::initializer_list<long> v);
  explicit IntPoly1(std::vector<mpz_class> v);

  void trim();
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return c.empty(); }
  const mpz_class& leading() const;
  const mpz_class& coeff(int k) const;  // 0 beyond the stored range

  IntPoly1 operator+(const IntPoly1& o) const;
  IntPoly1 operator-(const IntPoly1& o) const;
  IntPoly1 operator*(const IntPoly1& o) const;
  IntPoly1 operator*(const mpz_class& k) const;
  IntPoly1 operator-() const;
  bool operator==(const IntPoly1& o) const { return c == o.c; }

  IntPoly1 derivative() const;
  IntPoly1 pow(unsigned e) const;
  mpz_class content() const;          // nonnegative; 0 only for zero
  IntPoly1 primitive_part() const;    // content and leading sign removed
  IntPoly1 square_free_part() const;  // primitive, same distinct real roots

  // quotient when the division is exact over the integers
  std::optional<IntPoly1> divide_exact(const IntPoly1& d) const;

  mpq_class eval(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;
  Real eval(const Real& x) const;
  mpz_class max_abs_coeff() const;
  std::string str(const std::string& var = "x") const;
};

IntPoly1 gcd(const IntPoly1& a, const IntPoly1& b);

// Bivariate integer polynomial stored by s-degree; each coefficient is a
// polynomial in r.
struct IntPoly2 {
  std::vector<IntPoly1> sc;

  IntPoly2() = default;
  explicit IntPoly2(long k);
  static IntPoly2 monomial(const mpz_class& k, int rdeg, int sdeg);
  static IntPoly2 from_r(const IntPoly1& p);  // embed a polynomial in r

  void trim();
  bool is_zero() const { return sc.empty(); }
  int degree_s() const;
  int degree_r() const;
  long term_count() const;
  mpz_class max_abs_coeff() const;

  IntPoly2 operator+(const IntPoly2& o) const;
  IntPoly2 operator-(const IntPoly2& o) const;
  IntPoly2 operator*(const IntPoly2& o) const;
  IntPoly2 operator*(const mpz_class& k) const;
  IntPoly2 operator-() const;
  bool operator==(const IntPoly2& o) const { return sc == o.sc; }

  std::optional<IntPoly2> divide_exact(const IntPoly2& d) const;

  IntPoly1 subs_diagonal() const;  // s := r
  IntPoly1 subs_r_one() const;     // r := 1, polynomial in s
  // substitute s := m*r, factor out the largest r power, take r = 0;
  // the surviving polynomial in m
  IntPoly1 ray_lowest_coeff() const;

  Real eval(const Real& r, const Real& s) const;
  std::string str() const;
};

// Sum of integer-polynomial terms, each times a subset of square-root
// symbols; symbol i stands for the square root of radicands[i].
struct RadicalPoly {
  std::vector<IntPoly2> radicands;
  std::map<unsigned, IntPoly2> terms;  // bitmask over radicands -> coefficient
  std::string label;

  bool is_zero() const { return terms.empty(); }
  bool radical_free() const;
  long term_count() const;
  IntPoly2 plain() const;  // the mask-0 part; requires radical_free

  RadicalPoly add(const RadicalPoly& o) const;
  RadicalPoly sub(const RadicalPoly& o) const;
  RadicalPoly mul(const RadicalPoly& o) const;  // radicand tables must match
  Real eval(const Real& r, const Real& s) const;
};

struct CosSumExpr {
  RadicalPoly numerator;
  IntPoly2 denominator;  // nonvanishing on the open radius triangle
};

struct term_budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// cos(xi . angle_vector(kind)) - 1 as an exact radical expression
CosSumExpr cos_sum_expr(Kind kind, const AngleCount& xi);

// square away every radical; the result vanishes wherever the input does
IntPoly2 detrig(const RadicalPoly& expr, long term_cap = 5'000'000);

enum class Var { r, s };

// divide out of both polynomials every shared factor from the fixed
// low-degree set arising from cosine denominators and radicands (r, s and
// their unit binomials); returns the product removed
IntPoly2 clear_common_factors(IntPoly2& p, IntPoly2& q);

// resultant of p and q with respect to the chosen variable; throws
// std::runtime_error on a zero resultant (common component), in which case
// the caller clears shared factors and retries
IntPoly1 eliminate(const IntPoly2& p, const IntPoly2& q, Var which);

struct BoundaryPolys {
  IntPoly1 diagonal;  // p(r, r)
  IntPoly1 at_one;    // p(1, s)
  IntPoly1 origin;    // lowest r-order coefficient of p(r, m r), in m
};

BoundaryPolys boundary_polys(Kind kind, const AngleCount& xi, long term_cap = 5'000'000);

enum class Boundary { diagonal, at_one, origin };

// one boundary polynomial at a time, built from the univariate limits of the
// petal cosines instead of specializing the full two-variable detrig; the
// origin limit substitutes r -> 0 with s = m r kept in the slope m
IntPoly1 boundary_poly_direct(Kind kind, const AngleCount& xi, Boundary which,
                              long term_cap = 5'000'000);

struct RatInterval {
  mpq_class lo, hi;
};

// A real root pinned down by a square-free defining polynomial and an
// interval containing exactly that one root, with a sign change across it.
struct AlgebraicNumber {
  IntPoly1 poly;
  RatInterval iv;

  void refine_once();
  void refine_below(const mpq_class& width);
  Real approx(int digits) const;
};

int sturm_count(const IntPoly1& f, const RatInterval& iv);

// isolating intervals for the distinct real roots inside the given interval;
// roots exactly at its endpoints are excluded
std::vector<AlgebraicNumber> isolate_roots(const IntPoly1& f, const RatInterval& within);

// the root of f next to a numeric anchor, isolated in a shrinking dyadic
// window by Descartes counts; scales to degrees where a full Sturm chain
// does not
std::optional<AlgebraicNumber> root_near(const IntPoly1& f, const Real& anchor, int digits);

bool algebraic_equal(const AlgebraicNumber& x, const AlgebraicNumber& y);

}  // namespace tripack
