#include "poly_detail.hpp"

#include <algorithm>

namespace tripack {

namespace {

std::vector<IntPoly1> sturm_chain(const IntPoly1& f) {
  std::vector<IntPoly1> chain;
  chain.push_back(f);
  chain.push_back(f.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const IntPoly1& a = chain[chain.size() - 2];
    const IntPoly1& b = chain.back();
    IntPoly1 r = detail::prem1(a, b);
    // the pseudo multiplier must be taken positive to keep the sign of the
    // true remainder
    int target = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && (target & 1)) r = -r;
    if (r.is_zero()) break;
    mpz_class cont = r.content();
    for (auto& x : r.c) x /= cont;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly1>& chain, const mpq_class& x) {
  int v = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

IntPoly1 linear_at(const mpq_class& e) {
  IntPoly1 lin;
  lin.c = {mpz_class(-e.get_num()), mpz_class(e.get_den())};
  return lin;
}

int variations(const std::vector<mpz_class>& c) {
  int v = 0, prev = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Descartes bound on the number of roots of f in the open interval (lo, hi):
// map onto (0, 1), reverse, shift by one, count sign variations; zero and one
// are exact, endpoint roots are not counted
int descartes_count(const IntPoly1& f, const mpq_class& lo, const mpq_class& hi) {
  int d = f.degree();
  if (d < 1 || lo >= hi) return 0;
  mpq_class w = hi - lo;
  mpz_class D = lo.get_den() * w.get_den();
  mpz_class A = lo.get_num() * w.get_den();
  mpz_class W = w.get_num() * lo.get_den();
  std::vector<mpz_class> c(f.c);
  mpz_class pw = 1;
  for (int i = d; i-- > 0;) {
    pw *= D;
    c[static_cast<size_t>(i)] *= pw;
  }
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j)
      mpz_addmul(c[static_cast<size_t>(j)].get_mpz_t(), A.get_mpz_t(),
                 c[static_cast<size_t>(j) + 1].get_mpz_t());
  pw = 1;
  for (int i = 1; i <= d; ++i) {
    pw *= W;
    c[static_cast<size_t>(i)] *= pw;
  }
  std::reverse(c.begin(), c.end());
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) c[static_cast<size_t>(j)] += c[static_cast<size_t>(j) + 1];
  return variations(c);
}

}  // namespace

int sturm_count(const IntPoly1& f, const RatInterval& iv) {
  if (f.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (iv.lo >= iv.hi) return 0;
  IntPoly1 g = f;
  // factor away rational roots sitting exactly on an endpoint
  for (const mpq_class& e : {iv.lo, iv.hi}) {
    while (g.degree() > 0 && g.sign_at(e) == 0) g = *g.divide_exact(linear_at(e));
  }
  if (g.degree() < 1) return 0;
  std::vector<IntPoly1> chain = sturm_chain(g);
  return sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
}

void AlgebraicNumber::refine_once() {
  mpq_class mid = (iv.lo + iv.hi) / 2;
  int sm = poly.sign_at(mid);
  if (sm == 0) {
    mpq_class w = (iv.hi - iv.lo) / 16;
    iv.lo = mid - w;
    iv.hi = mid + w;
    return;
  }
  if (sm == poly.sign_at(iv.lo))
    iv.lo = mid;
  else
    iv.hi = mid;
}

void AlgebraicNumber::refine_below(const mpq_class& width) {
  while (iv.hi - iv.lo >= width) refine_once();
}

Real AlgebraicNumber::approx(int digits) const {
  AlgebraicNumber tmp = *this;
  mpq_class w(1);
  for (int i = 0; i < digits; ++i) w /= 10;
  tmp.refine_below(w);
  return detail::real_of((tmp.iv.lo + tmp.iv.hi) / 2, Precision{digits}.bits());
}

namespace {

void isolate_rec(const IntPoly1& g, const std::vector<IntPoly1>& chain, const mpq_class& lo,
                 const mpq_class& hi, std::vector<AlgebraicNumber>& out) {
  int count = sign_variations(chain, lo) - sign_variations(chain, hi);
  if (count <= 0) return;
  if (count == 1) {
    out.push_back({g, {lo, hi}});
    return;
  }
  mpq_class mid = (lo + hi) / 2;
  int denom = 3;
  while (g.sign_at(mid) == 0) {
    mid = lo + (hi - lo) / denom;
    ++denom;
  }
  isolate_rec(g, chain, lo, mid, out);
  isolate_rec(g, chain, mid, hi, out);
}

}  // namespace

std::vector<AlgebraicNumber> isolate_roots(const IntPoly1& f, const RatInterval& within) {
  if (f.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
  IntPoly1 g = f.square_free_part();
  mpq_class lo = within.lo, hi = within.hi;
  if (lo >= hi) return {};
  // roots landing exactly on an endpoint are rational; factor them away so
  // they stay excluded without moving the endpoint
  for (const mpq_class& e : {lo, hi}) {
    while (g.degree() > 0 && g.sign_at(e) == 0) g = *g.divide_exact(linear_at(e));
  }
  if (g.degree() < 1) return {};
  std::vector<IntPoly1> chain = sturm_chain(g);
  std::vector<AlgebraicNumber> out;
  isolate_rec(g, chain, lo, hi, out);
  return out;
}

std::optional<AlgebraicNumber> root_near(const IntPoly1& f, const Real& anchor, int digits) {
  if (f.is_zero()) throw std::invalid_argument("root_near of the zero polynomial");
  IntPoly1 g = f.square_free_part();
  if (g.degree() < 1) return std::nullopt;
  mpq_class t = detail::rat_of(anchor);
  // dyadic window, shrunk until the variation count pins a single root; the
  // anchor is far more accurate than the floor width, so the root of interest
  // never escapes
  mpq_class hw(mpz_class(1), mpz_class(1) << 20);
  mpq_class floor_hw(mpz_class(1), mpz_class(1) << static_cast<unsigned>(10 * digits / 3 + 20));
  for (int attempt = 0; attempt < 40; ++attempt) {
    mpq_class lo = t - hw, hi = t + hw;
    if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) {
      hw = hw * 3 / 4;
      continue;
    }
    int n = descartes_count(g, lo, hi);
    if (n == 0) return std::nullopt;
    if (n == 1) return AlgebraicNumber{g, {lo, hi}};
    hw /= 256;
    if (hw < floor_hw) return std::nullopt;
  }
  return std::nullopt;
}

bool algebraic_equal(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  IntPoly1 g = gcd(x.poly, y.poly);
  if (g.degree() < 1) return false;
  mpq_class lo = std::max(x.iv.lo, y.iv.lo);
  mpq_class hi = std::min(x.iv.hi, y.iv.hi);
  if (lo > hi) return false;
  // a common root on the closed border lies in both intervals, so the
  // numbers coincide; with isolating intervals whose endpoints are not
  // roots of the defining polynomials this branch never fires
  if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) return true;
  if (lo == hi) return false;
  return sturm_count(g, {lo, hi}) > 0;
}

}  // namespace tripack
