#include "poly_detail.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace tripack {

namespace detail {

Real real_of(const mpz_class& z, mpfr_prec_t bits) {
  Real x(bits);
  mpfr_set_z(x.raw(), z.get_mpz_t(), MPFR_RNDN);
  return x;
}

Real real_of(const mpq_class& q, mpfr_prec_t bits) {
  Real x(bits);
  mpfr_set_q(x.raw(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

mpq_class rat_of(const Real& x) {
  if (x.is_zero()) return {};
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
  mpq_class q(m);
  if (e > 0) {
    mpz_class sc = 1;
    mpz_mul_2exp(sc.get_mpz_t(), sc.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q *= mpq_class(sc);
  } else if (e < 0) {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    q /= mpq_class(den);
  }
  return q;
}

IntPoly1 prem1(IntPoly1 n, const IntPoly1& d) {
  int target = n.degree() - d.degree() + 1;
  int mults = 0;
  while (!n.is_zero() && n.degree() >= d.degree()) {
    int shift = n.degree() - d.degree();
    mpz_class lead = n.leading();
    n = n * d.leading();
    ++mults;
    for (size_t i = 0; i < d.c.size(); ++i)
      n.c[static_cast<size_t>(shift) + i] -= lead * d.c[i];
    n.trim();
  }
  if (mults < target && !n.is_zero()) {
    mpz_class fix;
    mpz_pow_ui(fix.get_mpz_t(), d.leading().get_mpz_t(), static_cast<unsigned long>(target - mults));
    n = n * fix;
  }
  return n;
}

}  // namespace detail

namespace {

const mpz_class kZero = 0;

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 mod_of(const mpz_class& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

struct PrimeGen {
  mpz_class z;
  PrimeGen() { mpz_ui_pow_ui(z.get_mpz_t(), 2, 62); }
  u64 next() {
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    return static_cast<u64>(mpz_get_ui(z.get_mpz_t()));
  }
};

std::vector<u64> poly_mod(const IntPoly1& f, u64 p) {
  std::vector<u64> out(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) out[i] = mod_of(f.c[i], p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// monic gcd in Z/p, inputs trimmed low-to-high
std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  while (!b.empty()) {
    if (a.size() >= b.size()) {
      u64 invlb = invmod(b.back(), p);
      int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
      for (int i = da; i >= db; --i) {
        u64 t = mulmod(a[static_cast<size_t>(i)], invlb, p);
        if (t)
          for (int j = 0; j < db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            a[k] = submod(a[k], mulmod(t, b[static_cast<size_t>(j)], p), p);
          }
        a[static_cast<size_t>(i)] = 0;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& x : a) x = mulmod(x, inv, p);
  }
  return a;
}

}  // namespace

IntPoly1::IntPoly1(std::initializer_list<long> v) {
  for (long x : v) c.emplace_back(x);
  trim();
}

IntPoly1::IntPoly1(std::vector<mpz_class> v) : c(std::move(v)) { trim(); }

void IntPoly1::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int IntPoly1::degree() const { return static_cast<int>(c.size()) - 1; }

const mpz_class& IntPoly1::leading() const { return c.empty() ? kZero : c.back(); }

const mpz_class& IntPoly1::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return kZero;
  return c[static_cast<size_t>(k)];
}

IntPoly1 IntPoly1::operator+(const IntPoly1& o) const {
  IntPoly1 out;
  out.c.resize(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  out.trim();
  return out;
}

IntPoly1 IntPoly1::operator-(const IntPoly1& o) const {
  IntPoly1 out;
  out.c.resize(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  out.trim();
  return out;
}

IntPoly1 IntPoly1::operator*(const IntPoly1& o) const {
  if (is_zero() || o.is_zero()) return {};
  IntPoly1 out;
  out.c.assign(c.size() + o.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
  out.trim();
  return out;
}

IntPoly1 IntPoly1::operator*(const mpz_class& k) const {
  if (k == 0) return {};
  IntPoly1 out = *this;
  for (auto& x : out.c) x *= k;
  return out;
}

IntPoly1 IntPoly1::operator-() const {
  IntPoly1 out = *this;
  for (auto& x : out.c) x = -x;
  return out;
}

IntPoly1 IntPoly1::derivative() const {
  IntPoly1 out;
  for (size_t i = 1; i < c.size(); ++i) out.c.push_back(c[i] * static_cast<long>(i));
  out.trim();
  return out;
}

IntPoly1 IntPoly1::pow(unsigned e) const {
  IntPoly1 out{{1}};
  IntPoly1 base = *this;
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

mpz_class IntPoly1::content() const {
  mpz_class g = 0;
  for (const auto& x : c) g = gcd(g, x);
  return abs(g);
}

IntPoly1 IntPoly1::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  IntPoly1 out = *this;
  for (auto& x : out.c) x /= g;
  return out;
}

std::optional<IntPoly1> IntPoly1::divide_exact(const IntPoly1& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return IntPoly1{};
  if (degree() < d.degree()) return std::nullopt;
  IntPoly1 rem = *this;
  IntPoly1 quo;
  quo.c.assign(static_cast<size_t>(degree() - d.degree() + 1), mpz_class(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(), d.leading().get_mpz_t());
    if (r != 0) return std::nullopt;
    int shift = rem.degree() - d.degree();
    quo.c[static_cast<size_t>(shift)] = q;
    for (size_t i = 0; i < d.c.size(); ++i) rem.c[static_cast<size_t>(shift) + i] -= q * d.c[i];
    rem.trim();
  }
  if (!rem.is_zero()) return std::nullopt;
  quo.trim();
  return quo;
}

mpq_class IntPoly1::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

int IntPoly1::sign_at(const mpq_class& x) const { return sgn(eval(x)); }

Real IntPoly1::eval(const Real& x) const {
  mpfr_prec_t bits = x.prec();
  Real acc(bits);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + detail::real_of(c[i], bits);
  return acc;
}

mpz_class IntPoly1::max_abs_coeff() const {
  mpz_class m = 0;
  for (const auto& x : c)
    if (abs(x) > m) m = abs(x);
  return m;
}

std::string IntPoly1::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += c[i] > 0 ? " + " : " - ";
    else if (c[i] < 0) out += "-";
    mpz_class a = abs(c[i]);
    if (a != 1 || i == 0) out += a.get_str();
    if (i > 0) {
      if (a != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly1 gcd(const IntPoly1& a, const IntPoly1& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  mpz_class cg = gcd(a.content(), b.content());
  IntPoly1 A = a.primitive_part(), B = b.primitive_part();
  if (A.degree() == 0 || B.degree() == 0) return IntPoly1{{1}} * cg;

  // modular images with CRT: the monic gcd mod p scaled to gcd(lc A, lc B),
  // restarting whenever a prime lowers the image degree; a candidate that
  // exactly divides both inputs is the answer
  mpz_class lcg = gcd(A.leading(), B.leading());
  PrimeGen primes;
  std::vector<mpz_class> C;
  mpz_class M = 1;
  int deg_img = -1, stable = 0;
  for (;;) {
    u64 pr = primes.next();
    if (mod_of(A.leading(), pr) == 0 || mod_of(B.leading(), pr) == 0) continue;
    std::vector<u64> g = gcd_mod(poly_mod(A, pr), poly_mod(B, pr), pr);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return IntPoly1{{1}} * cg;
    if (deg_img >= 0 && dg > deg_img) continue;
    if (deg_img < 0 || dg < deg_img) {
      deg_img = dg;
      C.assign(static_cast<size_t>(dg) + 1, mpz_class(0));
      M = 1;
      stable = 0;
    }
    u64 scale = mod_of(lcg, pr);
    u64 minv = invmod(mod_of(M, pr), pr);
    mpz_class Mnew = M * mpz_class(pr);
    bool changed = false;
    for (size_t i = 0; i < C.size(); ++i) {
      u64 t = mulmod(submod(mulmod(g[i], scale, pr), mod_of(C[i], pr), pr), minv, pr);
      if (t == 0) continue;
      changed = true;
      mpz_class tz = t > pr / 2 ? -mpz_class(pr - t) : mpz_class(t);
      C[i] += M * tz;
      if (C[i] * 2 > Mnew)
        C[i] -= Mnew;
      else if (C[i] * 2 <= -Mnew)
        C[i] += Mnew;
    }
    M = std::move(Mnew);
    if (changed) {
      stable = 0;
      continue;
    }
    if (++stable < 2) continue;
    IntPoly1 cand;
    cand.c = C;
    cand.trim();
    cand = cand.primitive_part();
    if (A.divide_exact(cand) && B.divide_exact(cand)) return cand * cg;
  }
}

IntPoly1 IntPoly1::square_free_part() const {
  if (is_zero()) return {};
  if (degree() < 1) return IntPoly1{{1}};
  IntPoly1 g = tripack::gcd(*this, derivative());
  auto q = divide_exact(g);
  assert(q.has_value());
  return q->primitive_part();
}

IntPoly2::IntPoly2(long k) {
  if (k != 0) sc.push_back(IntPoly1{{k}});
}

IntPoly2 IntPoly2::monomial(const mpz_class& k, int rdeg, int sdeg) {
  IntPoly2 out;
  if (k == 0) return out;
  out.sc.resize(static_cast<size_t>(sdeg) + 1);
  IntPoly1 p;
  p.c.assign(static_cast<size_t>(rdeg) + 1, mpz_class(0));
  p.c.back() = k;
  out.sc.back() = std::move(p);
  return out;
}

IntPoly2 IntPoly2::from_r(const IntPoly1& p) {
  IntPoly2 out;
  if (!p.is_zero()) out.sc.push_back(p);
  return out;
}

void IntPoly2::trim() {
  while (!sc.empty() && sc.back().is_zero()) sc.pop_back();
}

int IntPoly2::degree_s() const { return static_cast<int>(sc.size()) - 1; }

int IntPoly2::degree_r() const {
  int d = -1;
  for (const auto& p : sc) d = std::max(d, p.degree());
  return d;
}

long IntPoly2::term_count() const {
  long n = 0;
  for (const auto& p : sc)
    for (const auto& x : p.c)
      if (x != 0) ++n;
  return n;
}

mpz_class IntPoly2::max_abs_coeff() const {
  mpz_class m = 0;
  for (const auto& p : sc) {
    mpz_class x = p.max_abs_coeff();
    if (x > m) m = x;
  }
  return m;
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const {
  IntPoly2 out;
  out.sc.resize(std::max(sc.size(), o.sc.size()));
  for (size_t i = 0; i < out.sc.size(); ++i) {
    if (i < sc.size()) out.sc[i] = out.sc[i] + sc[i];
    if (i < o.sc.size()) out.sc[i] = out.sc[i] + o.sc[i];
  }
  out.trim();
  return out;
}

IntPoly2 IntPoly2::operator-(const IntPoly2& o) const { return *this + (-o); }

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const {
  if (is_zero() || o.is_zero()) return {};
  IntPoly2 out;
  out.sc.resize(sc.size() + o.sc.size() - 1);
  for (size_t i = 0; i < sc.size(); ++i) {
    if (sc[i].is_zero()) continue;
    for (size_t j = 0; j < o.sc.size(); ++j) {
      if (o.sc[j].is_zero()) continue;
      out.sc[i + j] = out.sc[i + j] + sc[i] * o.sc[j];
    }
  }
  out.trim();
  return out;
}

IntPoly2 IntPoly2::operator*(const mpz_class& k) const {
  if (k == 0) return {};
  IntPoly2 out = *this;
  for (auto& p : out.sc) p = p * k;
  return out;
}

IntPoly2 IntPoly2::operator-() const {
  IntPoly2 out = *this;
  for (auto& p : out.sc) p = -p;
  return out;
}

std::optional<IntPoly2> IntPoly2::divide_exact(const IntPoly2& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return IntPoly2{};
  IntPoly2 rem = *this;
  IntPoly2 quo;
  while (!rem.is_zero() && rem.degree_s() >= d.degree_s()) {
    auto qc = rem.sc.back().divide_exact(d.sc.back());
    if (!qc) return std::nullopt;
    int shift = rem.degree_s() - d.degree_s();
    IntPoly2 term;
    term.sc.resize(static_cast<size_t>(shift) + 1);
    term.sc.back() = *qc;
    quo = quo + term;
    rem = rem - term * d;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quo;
}

IntPoly1 IntPoly2::subs_diagonal() const {
  IntPoly1 out;
  for (size_t j = 0; j < sc.size(); ++j) {
    IntPoly1 shifted;
    shifted.c.assign(j, mpz_class(0));
    shifted.c.insert(shifted.c.end(), sc[j].c.begin(), sc[j].c.end());
    shifted.trim();
    out = out + shifted;
  }
  return out;
}

IntPoly1 IntPoly2::subs_r_one() const {
  IntPoly1 out;
  out.c.resize(sc.size());
  for (size_t j = 0; j < sc.size(); ++j) out.c[j] = sc[j].eval(mpq_class(1)).get_num();
  out.trim();
  return out;
}

IntPoly1 IntPoly2::ray_lowest_coeff() const {
  int d0 = -1;
  for (size_t j = 0; j < sc.size(); ++j)
    for (size_t i = 0; i < sc[j].c.size(); ++i)
      if (sc[j].c[i] != 0) {
        int t = static_cast<int>(i + j);
        if (d0 < 0 || t < d0) d0 = t;
      }
  IntPoly1 out;
  if (d0 < 0) return out;
  out.c.assign(static_cast<size_t>(d0) + 1, mpz_class(0));
  for (size_t j = 0; j < sc.size(); ++j) {
    int i = d0 - static_cast<int>(j);
    if (i >= 0 && i < static_cast<int>(sc[j].c.size())) out.c[j] = sc[j].c[static_cast<size_t>(i)];
  }
  out.trim();
  return out;
}

Real IntPoly2::eval(const Real& r, const Real& s) const {
  mpfr_prec_t bits = std::max(r.prec(), s.prec());
  Real acc(bits);
  for (size_t j = sc.size(); j-- > 0;) acc = acc * s + sc[j].eval(r);
  return acc;
}

std::string IntPoly2::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t j = 0; j < sc.size(); ++j) {
    if (sc[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + sc[j].str("r") + ")";
    if (j > 0) {
      out += "*s";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out;
}

namespace {

// view as univariate in the eliminated variable, coefficients univariate in
// the survivor
std::vector<IntPoly1> oriented(const IntPoly2& p, Var eliminated) {
  std::vector<IntPoly1> out;
  if (eliminated == Var::s) {
    out = p.sc;
  } else {
    out.resize(static_cast<size_t>(p.degree_r()) + 1);
    for (size_t j = 0; j < p.sc.size(); ++j)
      for (size_t i = 0; i < p.sc[j].c.size(); ++i) {
        if (p.sc[j].c[i] == 0) continue;
        if (out[i].c.size() <= j) out[i].c.resize(j + 1, mpz_class(0));
        out[i].c[j] = p.sc[j].c[i];
      }
    for (auto& q : out) q.trim();
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace

IntPoly2 clear_common_factors(IntPoly2& p, IntPoly2& q) {
  auto M = [](long k, int rd, int sd) { return IntPoly2::monomial(k, rd, sd); };
  const IntPoly2 candidates[] = {
      M(1, 1, 0),                // r
      M(1, 0, 1),                // s
      M(1, 0, 0) + M(1, 1, 0),   // 1 + r
      M(1, 0, 0) + M(1, 0, 1),   // 1 + s
      M(1, 1, 0) + M(1, 0, 1),   // r + s
      M(2, 0, 0) + M(1, 1, 0),   // 2 + r
      M(2, 0, 0) + M(1, 0, 1),   // 2 + s
      M(1, 0, 0) + M(2, 1, 0),   // 1 + 2r
      M(1, 0, 0) + M(2, 0, 1),   // 1 + 2s
      M(2, 1, 0) + M(1, 0, 1),   // 2r + s
      M(1, 1, 0) + M(2, 0, 1),   // r + 2s
      M(1, 0, 0) + M(1, 1, 0) + M(1, 0, 1),  // 1 + r + s
  };
  IntPoly2 removed(1);
  for (const auto& f : candidates) {
    for (;;) {
      auto dp = p.divide_exact(f);
      if (!dp) break;
      auto dq = q.divide_exact(f);
      if (!dq) break;
      p = std::move(*dp);
      q = std::move(*dq);
      removed = removed * f;
    }
  }
  return removed;
}

namespace {

std::vector<std::vector<u64>> reduce_coeffs(const std::vector<IntPoly1>& v, u64 p) {
  std::vector<std::vector<u64>> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i].resize(v[i].c.size());
    for (size_t j = 0; j < v[i].c.size(); ++j) out[i][j] = mod_of(v[i].c[j], p);
  }
  return out;
}

u64 horner_mod(const std::vector<u64>& c, u64 x, u64 p) {
  u64 acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = addmod(mulmod(acc, x, p), c[i], p);
  return acc;
}

// resultant in Z/p, inputs dense low-to-high with nonzero leading term,
// Res(A,B) = lc(B)^(dA-dR) * (-1)^(dA*dB) * Res(B, A mod B)
u64 resultant_mod(std::vector<u64> A, std::vector<u64> B, u64 p) {
  u64 res = 1;
  bool neg = false;
  for (;;) {
    int dA = static_cast<int>(A.size()) - 1, dB = static_cast<int>(B.size()) - 1;
    if (dB == 0) {
      res = mulmod(res, powmod(B[0], static_cast<u64>(dA), p), p);
      return neg ? (p - res) % p : res;
    }
    u64 invlb = invmod(B.back(), p);
    for (int i = dA; i >= dB; --i) {
      u64 t = mulmod(A[static_cast<size_t>(i)], invlb, p);
      if (t != 0) {
        for (int j = 0; j < dB; ++j) {
          size_t k = static_cast<size_t>(i - dB + j);
          A[k] = submod(A[k], mulmod(t, B[static_cast<size_t>(j)], p), p);
        }
      }
      A[static_cast<size_t>(i)] = 0;
    }
    while (!A.empty() && A.back() == 0) A.pop_back();
    if (A.empty()) return 0;
    int dR = static_cast<int>(A.size()) - 1;
    res = mulmod(res, powmod(B.back(), static_cast<u64>(dA - dR), p), p);
    if ((dA & 1) && (dB & 1)) neg = !neg;
    std::swap(A, B);
  }
}

// Newton interpolation at increasing integer nodes, arithmetic in Z/p
std::vector<u64> interpolate_mod(const std::vector<long>& xs, std::vector<u64> ys, u64 p) {
  size_t n = xs.size();
  long maxdiff = xs.back() - xs.front();
  std::vector<u64> inv(static_cast<size_t>(maxdiff) + 1, 0);
  if (maxdiff >= 1) inv[1] = 1;
  for (long i = 2; i <= maxdiff; ++i)
    inv[static_cast<size_t>(i)] = mulmod(p - p / static_cast<u64>(i), inv[p % static_cast<u64>(i)], p);
  for (size_t lvl = 1; lvl < n; ++lvl)
    for (size_t i = n; i-- > lvl;) {
      u64 num = submod(ys[i], ys[i - 1], p);
      ys[i] = mulmod(num, inv[static_cast<size_t>(xs[i] - xs[i - lvl])], p);
    }
  std::vector<u64> acc(n, 0), basis(n, 0);
  basis[0] = 1;
  size_t blen = 1;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < blen; ++j) acc[j] = addmod(acc[j], mulmod(ys[i], basis[j], p), p);
    if (i + 1 == n) break;
    u64 a = static_cast<u64>(xs[i]) % p;
    for (size_t j = blen + 1; j-- > 0;) {
      u64 hi = j > 0 ? basis[j - 1] : 0;
      u64 lo = j < blen ? mulmod(a, basis[j], p) : 0;
      basis[j] = submod(hi, lo, p);
    }
    ++blen;
  }
  return acc;
}

// residues mod p of the resultant's coefficients, low-to-high, length bound+1;
// nodes where either leading coefficient vanishes mod p are skipped, so each
// prime may settle on its own node set
std::vector<u64> resultant_coeffs_mod(const std::vector<IntPoly1>& P, const std::vector<IntPoly1>& Q,
                                      int bound, u64 p) {
  auto Pm = reduce_coeffs(P, p);
  auto Qm = reduce_coeffs(Q, p);
  std::vector<long> xs;
  std::vector<u64> ys;
  std::vector<u64> a(Pm.size()), b(Qm.size());
  for (long x = 0; static_cast<int>(xs.size()) < bound + 1; ++x) {
    u64 xm = static_cast<u64>(x) % p;
    for (size_t i = 0; i < Pm.size(); ++i) a[i] = horner_mod(Pm[i], xm, p);
    for (size_t i = 0; i < Qm.size(); ++i) b[i] = horner_mod(Qm[i], xm, p);
    if (a.back() == 0 || b.back() == 0) continue;
    xs.push_back(x);
    ys.push_back(resultant_mod(a, b, p));
  }
  return interpolate_mod(xs, ys, p);
}

}  // namespace

IntPoly1 eliminate(const IntPoly2& p, const IntPoly2& q, Var which) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("eliminate on a zero polynomial");
  std::vector<IntPoly1> P = oriented(p, which), Q = oriented(q, which);
  int dp = static_cast<int>(P.size()) - 1, dq = static_cast<int>(Q.size()) - 1;
  if (dp == 0) return P[0].pow(static_cast<unsigned>(dq));
  if (dq == 0) return Q[0].pow(static_cast<unsigned>(dp));

  auto other_deg = [](const std::vector<IntPoly1>& v) {
    int d = 0;
    for (const auto& x : v) d = std::max(d, x.degree());
    return d;
  };
  int bound = dp * other_deg(Q) + dq * other_deg(P);

  PrimeGen primes;

  // CRT over 62-bit primes with symmetric representatives, stop once two
  // consecutive primes leave every coefficient unchanged
  std::vector<mpz_class> C(static_cast<size_t>(bound) + 1, mpz_class(0));
  mpz_class M = 1;
  int stable = 0;
  while (stable < 2) {
    u64 pr = primes.next();
    std::vector<u64> res = resultant_coeffs_mod(P, Q, bound, pr);
    u64 minv = invmod(mod_of(M, pr), pr);
    mpz_class Mnew = M * primes.z;
    bool changed = false;
    for (size_t i = 0; i < C.size(); ++i) {
      u64 t = mulmod(submod(res[i], mod_of(C[i], pr), pr), minv, pr);
      if (t == 0) continue;
      changed = true;
      mpz_class tz;
      if (t > pr / 2)
        tz = -mpz_class(pr - t);
      else
        tz = mpz_class(t);
      C[i] += M * tz;
      if (C[i] * 2 > Mnew)
        C[i] -= Mnew;
      else if (C[i] * 2 <= -Mnew)
        C[i] += Mnew;
    }
    M = std::move(Mnew);
    stable = changed ? 0 : stable + 1;
  }

  // verify against a fresh prime at a few direct evaluations
  {
    u64 pr = primes.next();
    auto Pm = reduce_coeffs(P, pr);
    auto Qm = reduce_coeffs(Q, pr);
    std::vector<u64> Cm(C.size());
    for (size_t i = 0; i < C.size(); ++i) Cm[i] = mod_of(C[i], pr);
    std::vector<u64> a(Pm.size()), b(Qm.size());
    int checks = 0;
    for (long x = 0; checks < 3; ++x) {
      u64 xm = static_cast<u64>(x) % pr;
      for (size_t i = 0; i < Pm.size(); ++i) a[i] = horner_mod(Pm[i], xm, pr);
      for (size_t i = 0; i < Qm.size(); ++i) b[i] = horner_mod(Qm[i], xm, pr);
      if (a.back() == 0 || b.back() == 0) continue;
      if (resultant_mod(a, b, pr) != horner_mod(Cm, xm, pr))
        throw std::logic_error("resultant interpolation mismatch");
      ++checks;
    }
  }

  IntPoly1 out;
  out.c = std::move(C);
  out.trim();
  if (out.is_zero()) throw std::runtime_error("zero resultant: the inputs share a common component");
  return out;
}

}  // namespace tripack
