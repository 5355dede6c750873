#include "poly_detail.hpp"

#include <algorithm>
#include <array>

namespace tripack {

bool RadicalPoly::radical_free() const {
  for (const auto& [m, p] : terms)
    if (m != 0) return false;
  return true;
}

long RadicalPoly::term_count() const {
  long n = 0;
  for (const auto& [m, p] : terms) n += p.term_count();
  return n;
}

IntPoly2 RadicalPoly::plain() const {
  auto it = terms.find(0);
  return it == terms.end() ? IntPoly2{} : it->second;
}

RadicalPoly RadicalPoly::add(const RadicalPoly& o) const {
  RadicalPoly out;
  out.radicands = radicands;
  out.label = label;
  out.terms = terms;
  for (const auto& [m, p] : o.terms) {
    auto it = out.terms.find(m);
    if (it == out.terms.end())
      out.terms.emplace(m, p);
    else {
      it->second = it->second + p;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

RadicalPoly RadicalPoly::sub(const RadicalPoly& o) const {
  RadicalPoly neg = o;
  for (auto& [m, p] : neg.terms) p = -p;
  return add(neg);
}

RadicalPoly RadicalPoly::mul(const RadicalPoly& o) const {
  RadicalPoly out;
  out.radicands = radicands;
  out.label = label;
  for (const auto& [m1, p1] : terms)
    for (const auto& [m2, p2] : o.terms) {
      IntPoly2 p = p1 * p2;
      unsigned both = m1 & m2;
      for (unsigned b = 0; both >> b; ++b)
        if (both >> b & 1u) p = p * radicands[b];
      unsigned m = m1 ^ m2;
      auto it = out.terms.find(m);
      if (it == out.terms.end())
        out.terms.emplace(m, std::move(p));
      else {
        it->second = it->second + p;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  return out;
}

Real RadicalPoly::eval(const Real& r, const Real& s) const {
  mpfr_prec_t bits = std::max(r.prec(), s.prec());
  Real acc(bits);
  for (const auto& [m, p] : terms) {
    Real t = p.eval(r, s);
    for (unsigned b = 0; m >> b; ++b)
      if (m >> b & 1u) t = t * sqrt(radicands[b].eval(r, s));
    acc = acc + t;
  }
  return acc;
}

namespace {

// cos and sin of one petal angle as exact fractions over a shared
// denominator: cos = N/D, sin = M*sqrt(q)/D
struct SlotTrig {
  IntPoly2 N, D, M, q;
};

IntPoly2 P2(std::initializer_list<std::array<long, 3>> monos) {
  IntPoly2 out;
  for (const auto& m : monos)
    out = out + IntPoly2::monomial(m[0], static_cast<int>(m[1]), static_cast<int>(m[2]));
  return out;
}

SlotTrig slot_trig(Kind kind, int slot) {
  // monomials are {coefficient, r-degree, s-degree}
  switch (kind) {
    case Kind::alpha:
      switch (slot) {
        case 0: return {P2({{-1,0,0},{2,0,1},{1,0,2}}), P2({{1,0,0},{2,0,1},{1,0,2}}),
                        IntPoly2(2), P2({{2,0,1},{1,0,2}})};
        case 1: return {P2({{-1,2,0},{2,1,1},{1,0,2}}), P2({{1,2,0},{2,1,1},{1,0,2}}),
                        P2({{2,1,0}}), P2({{2,1,1},{1,0,2}})};
        case 2: return {IntPoly2(1), IntPoly2(2), IntPoly2(1), IntPoly2(3)};
        case 3: return {P2({{-1,1,0},{1,0,1},{1,1,1},{1,0,2}}), P2({{1,1,0},{1,0,1},{1,1,1},{1,0,2}}),
                        IntPoly2(2), P2({{1,2,1},{1,1,2},{1,1,1}})};
        case 4: return {P2({{1,0,1}}), P2({{1,0,0},{1,0,1}}), IntPoly2(1), P2({{1,0,0},{2,0,1}})};
        case 5: return {P2({{1,0,1}}), P2({{1,1,0},{1,0,1}}), IntPoly2(1), P2({{1,2,0},{2,1,1}})};
      }
      break;
    case Kind::beta:
      switch (slot) {
        case 0: return {P2({{-1,0,0},{2,1,0},{1,2,0}}), P2({{1,0,0},{2,1,0},{1,2,0}}),
                        IntPoly2(2), P2({{2,1,0},{1,2,0}})};
        case 1: return {IntPoly2(1), IntPoly2(2), IntPoly2(1), IntPoly2(3)};
        case 2: return {P2({{-1,0,2},{2,1,1},{1,2,0}}), P2({{1,0,2},{2,1,1},{1,2,0}}),
                        P2({{2,0,1}}), P2({{2,1,1},{1,2,0}})};
        case 3: return {P2({{1,1,0}}), P2({{1,0,0},{1,1,0}}), IntPoly2(1), P2({{1,0,0},{2,1,0}})};
        case 4: return {P2({{-1,0,1},{1,1,0},{1,1,1},{1,2,0}}), P2({{1,1,0},{1,0,1},{1,1,1},{1,2,0}}),
                        IntPoly2(2), P2({{1,2,1},{1,1,2},{1,1,1}})};
        case 5: return {P2({{1,1,0}}), P2({{1,1,0},{1,0,1}}), IntPoly2(1), P2({{2,1,1},{1,0,2}})};
      }
      break;
    case Kind::gamma:
      switch (slot) {
        case 0: return {IntPoly2(1), IntPoly2(2), IntPoly2(1), IntPoly2(3)};
        case 1: return {P2({{-1,2,0},{2,1,0},{1,0,0}}), P2({{1,2,0},{2,1,0},{1,0,0}}),
                        P2({{2,1,0}}), P2({{1,0,0},{2,1,0}})};
        case 2: return {P2({{-1,0,2},{2,0,1},{1,0,0}}), P2({{1,0,2},{2,0,1},{1,0,0}}),
                        P2({{2,0,1}}), P2({{1,0,0},{2,0,1}})};
        case 3: return {IntPoly2(1), P2({{1,0,0},{1,1,0}}), IntPoly2(1), P2({{2,1,0},{1,2,0}})};
        case 4: return {IntPoly2(1), P2({{1,0,0},{1,0,1}}), IntPoly2(1), P2({{2,0,1},{1,0,2}})};
        case 5: return {P2({{1,0,0},{1,1,0},{1,0,1},{-1,1,1}}), P2({{1,0,0},{1,1,0},{1,0,1},{1,1,1}}),
                        IntPoly2(2), P2({{1,1,1},{1,2,1},{1,1,2}})};
      }
      break;
  }
  throw std::invalid_argument("bad slot");
}

// the same data with everything univariate
struct SlotTrig1 {
  IntPoly1 N, D, M, q;
};

// limit of the petal cosines as r -> 0 along s = m r, as functions of m
SlotTrig1 origin_trig(Kind kind, int slot) {
  switch (kind) {
    case Kind::alpha:
      switch (slot) {
        case 0: return {{-1}, {1}, {}, {1}};
        case 1: return {{-1, 2, 1}, {1, 2, 1}, {2}, {0, 2, 1}};
        case 2: return {{1}, {2}, {1}, {3}};
        case 3: return {{-1, 1}, {1, 1}, {2}, {0, 1}};
        case 4: return {{}, {1}, {1}, {1}};
        case 5: return {{0, 1}, {1, 1}, {1}, {1, 2}};
      }
      break;
    case Kind::beta:
      switch (slot) {
        case 0: return {{-1}, {1}, {}, {1}};
        case 1: return {{1}, {2}, {1}, {3}};
        case 2: return {{1, 2, -1}, {1, 2, 1}, {0, 2}, {1, 2}};
        case 3: return {{}, {1}, {1}, {1}};
        case 4: return {{1, -1}, {1, 1}, {2}, {0, 1}};
        case 5: return {{1}, {1, 1}, {1}, {0, 2, 1}};
      }
      break;
    case Kind::gamma:
      break;
  }
  throw std::invalid_argument("bad slot");
}

SlotTrig1 boundary_trig(Kind kind, int slot, Boundary which) {
  if (which == Boundary::origin) return origin_trig(kind, slot);
  SlotTrig t = slot_trig(kind, slot);
  if (which == Boundary::diagonal)
    return {t.N.subs_diagonal(), t.D.subs_diagonal(), t.M.subs_diagonal(), t.q.subs_diagonal()};
  return {t.N.subs_r_one(), t.D.subs_r_one(), t.M.subs_r_one(), t.q.subs_r_one()};
}

}  // namespace

CosSumExpr cos_sum_expr(Kind kind, const AngleCount& xi) {
  if (xi.sum() < 1) throw std::invalid_argument("empty angle tuple");

  std::vector<IntPoly2> table;
  std::array<int, 6> sym{};
  for (int i = 0; i < 6; ++i) {
    sym[static_cast<size_t>(i)] = -1;
    if (!xi[i]) continue;
    IntPoly2 q = slot_trig(kind, i).q;
    for (size_t k = 0; k < table.size(); ++k)
      if (table[k] == q) sym[static_cast<size_t>(i)] = static_cast<int>(k);
    if (sym[static_cast<size_t>(i)] < 0) {
      sym[static_cast<size_t>(i)] = static_cast<int>(table.size());
      table.push_back(q);
    }
  }

  std::string label = kind == Kind::alpha ? "alpha (" : kind == Kind::beta ? "beta (" : "gamma (";
  for (int i = 0; i < 6; ++i) label += std::to_string(xi[i]) + (i < 5 ? "," : ")");

  RadicalPoly cosp, sinp;
  cosp.radicands = sinp.radicands = table;
  cosp.label = sinp.label = label;
  cosp.terms.emplace(0u, IntPoly2(1));
  IntPoly2 den(1);

  for (int i = 0; i < 6; ++i) {
    if (!xi[i]) continue;
    SlotTrig t = slot_trig(kind, i);
    RadicalPoly cn, sn;
    cn.radicands = sn.radicands = table;
    cn.label = sn.label = label;
    cn.terms.emplace(0u, t.N);
    sn.terms.emplace(1u << sym[static_cast<size_t>(i)], t.M);
    for (int k = 0; k < xi[i]; ++k) {
      RadicalPoly nc = cosp.mul(cn).sub(sinp.mul(sn));
      RadicalPoly ns = sinp.mul(cn).add(cosp.mul(sn));
      cosp = std::move(nc);
      sinp = std::move(ns);
      den = den * t.D;
    }
  }

  RadicalPoly one;
  one.radicands = cosp.radicands;
  one.label = cosp.label;
  one.terms.emplace(0u, den);
  CosSumExpr out;
  out.numerator = cosp.sub(one);
  out.denominator = den;
  return out;
}

IntPoly2 detrig(const RadicalPoly& expr, long term_cap) {
  RadicalPoly P = expr;
  for (;;) {
    std::map<unsigned, long> bit_load;
    for (const auto& [m, p] : P.terms)
      for (unsigned b = 0; m >> b; ++b)
        if (m >> b & 1u) bit_load[b] += p.term_count();
    if (bit_load.empty()) return P.plain();

    unsigned pick = bit_load.begin()->first;
    for (const auto& [b, n] : bit_load)
      if (n < bit_load[pick]) pick = b;

    RadicalPoly A, B;
    A.radicands = B.radicands = P.radicands;
    A.label = B.label = P.label;
    for (const auto& [m, p] : P.terms) {
      if (m >> pick & 1u)
        A.terms.emplace(m ^ (1u << pick), p);
      else
        B.terms.emplace(m, p);
    }
    RadicalPoly rad;
    rad.radicands = P.radicands;
    rad.label = P.label;
    rad.terms.emplace(0u, P.radicands[pick]);
    P = A.mul(A).mul(rad).sub(B.mul(B));
    if (P.term_count() > term_cap)
      throw term_budget_error("term budget exceeded (" + std::to_string(P.term_count()) + " > " +
                              std::to_string(term_cap) + ") while clearing radicals of " + P.label);
  }
}

BoundaryPolys boundary_polys(Kind kind, const AngleCount& xi, long term_cap) {
  IntPoly2 p = detrig(cos_sum_expr(kind, xi).numerator, term_cap);
  BoundaryPolys out;
  out.diagonal = p.subs_diagonal();
  out.at_one = p.subs_r_one();
  out.origin = p.ray_lowest_coeff();
  if (out.diagonal.is_zero() || out.at_one.is_zero() || out.origin.is_zero())
    throw std::runtime_error("degenerate zero specialization");
  return out;
}

IntPoly1 boundary_poly_direct(Kind kind, const AngleCount& xi, Boundary which, long term_cap) {
  if (xi.sum() < 1) throw std::invalid_argument("empty angle tuple");
  if (which == Boundary::origin && kind == Kind::gamma)
    throw std::invalid_argument("gamma angles lose the slope in the origin limit");

  std::array<SlotTrig1, 6> tr;
  for (int i = 0; i < 6; ++i)
    if (xi[i]) tr[static_cast<size_t>(i)] = boundary_trig(kind, i, which);

  std::vector<IntPoly2> table;
  std::array<int, 6> sym{};
  for (int i = 0; i < 6; ++i) {
    sym[static_cast<size_t>(i)] = -1;
    if (!xi[i]) continue;
    const SlotTrig1& t = tr[static_cast<size_t>(i)];
    if (t.M.is_zero() || t.q == IntPoly1{1}) continue;
    IntPoly2 q = IntPoly2::from_r(t.q);
    for (size_t k = 0; k < table.size(); ++k)
      if (table[k] == q) sym[static_cast<size_t>(i)] = static_cast<int>(k);
    if (sym[static_cast<size_t>(i)] < 0) {
      sym[static_cast<size_t>(i)] = static_cast<int>(table.size());
      table.push_back(q);
    }
  }

  std::string label = kind == Kind::alpha ? "alpha (" : kind == Kind::beta ? "beta (" : "gamma (";
  for (int i = 0; i < 6; ++i) label += std::to_string(xi[i]) + (i < 5 ? "," : ")");
  label += which == Boundary::diagonal ? " on the diagonal"
           : which == Boundary::at_one ? " at r = 1"
                                       : " at the origin";

  RadicalPoly cosp, sinp;
  cosp.radicands = sinp.radicands = table;
  cosp.label = sinp.label = label;
  cosp.terms.emplace(0u, IntPoly2(1));
  IntPoly1 den{1};

  for (int i = 0; i < 6; ++i) {
    if (!xi[i]) continue;
    const SlotTrig1& t = tr[static_cast<size_t>(i)];
    RadicalPoly cn, sn;
    cn.radicands = sn.radicands = table;
    cn.label = sn.label = label;
    if (!t.N.is_zero()) cn.terms.emplace(0u, IntPoly2::from_r(t.N));
    if (!t.M.is_zero()) {
      int b = sym[static_cast<size_t>(i)];
      sn.terms.emplace(b < 0 ? 0u : 1u << b, IntPoly2::from_r(t.M));
    }
    for (int k = 0; k < xi[i]; ++k) {
      RadicalPoly nc = cosp.mul(cn).sub(sinp.mul(sn));
      RadicalPoly ns = sinp.mul(cn).add(cosp.mul(sn));
      cosp = std::move(nc);
      sinp = std::move(ns);
      den = den * t.D;
    }
  }

  RadicalPoly one;
  one.radicands = table;
  one.label = label;
  one.terms.emplace(0u, IntPoly2::from_r(den));
  IntPoly2 p = detrig(cosp.sub(one), term_cap);
  if (p.degree_s() > 0) throw std::logic_error("univariate boundary expression grew a second variable");
  IntPoly1 out = p.is_zero() ? IntPoly1{} : p.sc[0];
  if (out.is_zero()) throw std::runtime_error("degenerate zero specialization");
  return out;
}

}  // namespace tripack
