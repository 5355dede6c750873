#include "tripack/contours.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

namespace tripack {

namespace {

struct Ctx {
  int digits;
  mpfr_prec_t bits;
  Real pi, two_pi, third_pi, half_pi;

  explicit Ctx(int d)
      : digits(d),
        bits(Precision{d}.bits()),
        pi(Real::pi(Precision{d}.bits())),
        two_pi(pi * 2L),
        third_pi(pi / 3L),
        half_pi(pi / 2L) {}

  Real num(long v) const { return Real(v, bits); }
  Real tol(long e) const { return Real::pow10(e, bits); }
};

// <r,1,1> as a function of one radius
Real ang_r11(const Ctx& cx, const Real& t, int digits) {
  Real one = cx.num(1);
  return petal_angle(t, one, one, digits);
}

// <r,1,r> as a function of one radius
Real ang_r1r(const Ctx& cx, const Real& t, int digits) {
  Real one = cx.num(1);
  return petal_angle(t, one, t, digits);
}

using Fn = std::function<Real(const Real&)>;

// Root of a strictly monotone g on the open interval (lo, hi); endpoints are
// never evaluated.  dec flags a decreasing g.
Real bisect_root(const Fn& g, Real lo, Real hi, bool dec, int iters) {
  for (int i = 0; i < iters; ++i) {
    Real mid = (lo + hi) / 2L;
    int sg = g(mid).sign();
    bool right = dec ? sg > 0 : sg < 0;
    if (right)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2L;
}

// shared diagonal restriction: x0 <r11> + (x3+x4) <r1r> + (x1+x2+x5) pi/3
Fn diag_fn(const Ctx& cx, const AngleCount& x) {
  return [&cx, x](const Real& t) {
    Real acc = cx.third_pi * static_cast<long>(x[1] + x[2] + x[5]) - cx.two_pi;
    if (x[0]) acc += ang_r11(cx, t, cx.digits) * static_cast<long>(x[0]);
    if (x[3] + x[4]) acc += ang_r1r(cx, t, cx.digits) * static_cast<long>(x[3] + x[4]);
    return acc;
  };
}

// s-independent beta components: x0 <r11> + x1 pi/3 + x3 <r1r>
Fn vert_fn(const Ctx& cx, const AngleCount& x) {
  return [&cx, x](const Real& t) {
    Real acc = cx.third_pi * static_cast<long>(x[1]) - cx.two_pi;
    if (x[0]) acc += ang_r11(cx, t, cx.digits) * static_cast<long>(x[0]);
    if (x[3]) acc += ang_r1r(cx, t, cx.digits) * static_cast<long>(x[3]);
    return acc;
  };
}

// origin-slope equation: xi . (limit angles)(m) - 2 pi
Fn slope_fn(const Ctx& cx, Kind k, const AngleCount& x) {
  return [&cx, k, x](const Real& m) {
    std::array<Real, 6> c = origin_limit_cosines(k, m);
    Real eps = cx.tol(5 - cx.digits);
    Real acc = -cx.two_pi;
    for (int i = 0; i < 6; ++i)
      if (x[i]) acc += acos_clamped(c[static_cast<size_t>(i)], eps) * static_cast<long>(x[i]);
    return acc;
  };
}

// contour ordinate at r = 1: alpha side, decreasing in s
Fn at_one_alpha_fn(const Ctx& cx, const AngleCount& x) {
  return [&cx, x](const Real& s) {
    Real one = cx.num(1);
    Real acc = cx.third_pi * static_cast<long>(x[2]) - cx.two_pi;
    if (x[0] + x[1] + x[3])
      acc += petal_angle(s, one, one, cx.digits) * static_cast<long>(x[0] + x[1] + x[3]);
    if (x[4] + x[5])
      acc += petal_angle(s, one, s, cx.digits) * static_cast<long>(x[4] + x[5]);
    return acc;
  };
}

// contour ordinate at r = 1: beta side, increasing in s
Fn at_one_beta_fn(const Ctx& cx, const AngleCount& x) {
  return [&cx, x](const Real& s) {
    Real one = cx.num(1);
    Real acc = cx.third_pi * static_cast<long>(x[0] + x[1] + x[3]) - cx.two_pi;
    if (x[2]) acc += petal_angle(one, s, s, cx.digits) * static_cast<long>(x[2]);
    if (x[4] + x[5])
      acc += petal_angle(one, one, s, cx.digits) * static_cast<long>(x[4] + x[5]);
    return acc;
  };
}

Real f_sparse(const Ctx& cx, Kind k, const AngleCount& xi, const Real& r, const Real& s) {
  Real one = cx.num(1);
  Real acc = cx.num(0);
  for (int i = 0; i < 6; ++i) {
    if (!xi[i]) continue;
    long n = xi[i];
    switch (k) {
      case Kind::alpha:
        switch (i) {
          case 0: acc += petal_angle(s, one, one, cx.digits) * n; break;
          case 1: acc += petal_angle(s, r, r, cx.digits) * n; break;
          case 2: acc += cx.third_pi * n; break;
          case 3: acc += petal_angle(s, one, r, cx.digits) * n; break;
          case 4: acc += petal_angle(s, one, s, cx.digits) * n; break;
          case 5: acc += petal_angle(s, r, s, cx.digits) * n; break;
        }
        break;
      case Kind::beta:
        switch (i) {
          case 0: acc += petal_angle(r, one, one, cx.digits) * n; break;
          case 1: acc += cx.third_pi * n; break;
          case 2: acc += petal_angle(r, s, s, cx.digits) * n; break;
          case 3: acc += petal_angle(r, one, r, cx.digits) * n; break;
          case 4: acc += petal_angle(r, one, s, cx.digits) * n; break;
          case 5: acc += petal_angle(r, r, s, cx.digits) * n; break;
        }
        break;
      case Kind::gamma:
        switch (i) {
          case 0: acc += cx.third_pi * n; break;
          case 1: acc += petal_angle(one, r, r, cx.digits) * n; break;
          case 2: acc += petal_angle(one, s, s, cx.digits) * n; break;
          case 3: acc += petal_angle(one, one, r, cx.digits) * n; break;
          case 4: acc += petal_angle(one, one, s, cx.digits) * n; break;
          case 5: acc += petal_angle(one, r, s, cx.digits) * n; break;
        }
        break;
    }
  }
  return acc;
}

int profile_iters(int digits) { return digits * 4; }

}  // namespace

Real eval_f(Kind k, const AngleCount& xi, const Radii& p, int digits) {
  Ctx cx(digits);
  if (!(p.s.sign() > 0) || !(p.s < p.r) || !(p.r < cx.num(1)))
    throw std::domain_error("radii outside 0 < s < r < 1");
  return f_sparse(cx, k, xi, p.r, p.s);
}

std::optional<Real> phi_eval(const AngleCount& eta, const Real& r, int digits) {
  Ctx cx(digits);
  Real rr = r.to_prec(cx.bits);
  if (diag_fn(cx, eta)(rr).sign() >= 0) return std::nullopt;
  Fn g = [&](const Real& s) { return f_sparse(cx, Kind::alpha, eta, rr, s) - cx.two_pi; };
  return bisect_root(g, cx.num(0), rr, true, profile_iters(digits));
}

std::optional<Real> psi_eval(const AngleCount& zeta, const Real& r, int digits) {
  if (rverticalcont(zeta))
    throw std::invalid_argument("contour is vertical; use vertical_abscissa");
  Ctx cx(digits);
  Real rr = r.to_prec(cx.bits);
  if (vert_fn(cx, zeta)(rr).sign() >= 0) return std::nullopt;  // left of c
  if (diag_fn(cx, zeta)(rr).sign() <= 0) return std::nullopt;  // right of d
  Fn g = [&](const Real& s) { return f_sparse(cx, Kind::beta, zeta, rr, s) - cx.two_pi; };
  return bisect_root(g, cx.num(0), rr, false, profile_iters(digits));
}

Real vertical_abscissa(const AngleCount& zeta, int digits) {
  if (!rverticalcont(zeta))
    throw std::invalid_argument("contour is not vertical");
  Ctx cx(digits);
  return bisect_root(vert_fn(cx, zeta), cx.num(0), cx.num(1), true, profile_iters(digits));
}

ContourProfile profile(Kind kind, const AngleCount& xi, int digits) {
  if (kind == Kind::gamma) throw std::invalid_argument("profiles exist for alpha and beta only");
  Ctx cx(digits);
  int iters = profile_iters(digits);
  ContourProfile P;
  P.kind = kind;
  P.tuple = xi;
  P.digits = digits;
  P.diag_sig = {xi[0], xi[3] + xi[4], xi[1] + xi[2] + xi[5]};
  P.vert_sig = {xi[0], xi[3], xi[1]};
  P.ray = xi.dot({1, 0, 0, 1, 1, 0}) == 0;
  long low = xi.dot({6, 2, 2, 3, 3, 2});

  if (kind == Kind::alpha) {
    P.a_is_zero = low <= 12;
    P.a = P.a_is_zero ? cx.num(0) : bisect_root(diag_fn(cx, xi), cx.num(0), cx.num(1), true, iters);
    if (P.a_is_zero) {
      P.slope_is_one = low == 12;
      P.origin_slope = P.slope_is_one
                           ? cx.num(1)
                           : bisect_root(slope_fn(cx, Kind::alpha, xi), cx.num(0), cx.num(1), true, iters);
    }
    P.value_at_one = P.ray ? P.origin_slope
                           : bisect_root(at_one_alpha_fn(cx, xi), cx.num(0), cx.num(1), true, iters);
    return P;
  }

  P.vertical = rverticalcont(xi);
  long hz = xi.dot({6, 2, 0, 3, 0, 0});
  if (P.vertical) {
    // hz > 12 whenever rbounds holds for a vertical tuple, so a root exists
    P.r_vert = bisect_root(vert_fn(cx, xi), cx.num(0), cx.num(1), true, iters);
    return P;
  }
  P.c_is_zero = hz <= 12;
  P.c = P.c_is_zero ? cx.num(0) : bisect_root(vert_fn(cx, xi), cx.num(0), cx.num(1), true, iters);
  if (P.c_is_zero) {
    P.slope_is_zero = hz == 12;
    P.origin_slope = P.slope_is_zero
                         ? cx.num(0)
                         : bisect_root(slope_fn(cx, Kind::beta, xi), cx.num(0), cx.num(1), false, iters);
  }
  long sum = xi.sum();
  P.d_is_one = sum >= 6;
  P.d = P.d_is_one ? cx.num(1) : bisect_root(diag_fn(cx, xi), cx.num(0), cx.num(1), true, iters);
  if (P.d_is_one) {
    P.value_at_one_is_one = sum == 6;
    if (P.value_at_one_is_one)
      P.value_at_one = cx.num(1);
    else
      P.value_at_one = P.ray ? P.origin_slope
                             : bisect_root(at_one_beta_fn(cx, xi), cx.num(0), cx.num(1), false, iters);
  }
  return P;
}

std::string status_name(InterceptStatus st) {
  switch (st) {
    case InterceptStatus::found: return "found";
    case InterceptStatus::none_definite: return "none";
    case InterceptStatus::ambiguous: return "ambiguous";
  }
  return "?";
}

namespace {

// Solver state for the nested bisection: phi is enclosed by [slo, shi] on the
// current outer bracket, shrinking with it, so the inner solve only ever
// tightens a narrow band.
struct NestedSolver {
  const Ctx& cx;
  const ContourProfile& A;
  const ContourProfile& B;
  Real eps_floor;
  bool exact_phi;  // alpha ray: phi(r) = slope * r with no inner solve

  NestedSolver(const Ctx& c, const ContourProfile& a, const ContourProfile& b)
      : cx(c), A(a), B(b), eps_floor(c.tol(-(c.digits + 6))), exact_phi(a.ray) {}

  Real falpha(const Real& r, const Real& s) const {
    return f_sparse(cx, Kind::alpha, A.tuple, r, s) - cx.two_pi;
  }
  Real fbeta(const Real& r, const Real& s) const {
    return f_sparse(cx, Kind::beta, B.tuple, r, s) - cx.two_pi;
  }

  // Sign of fbeta(r, phi(r)); refines the enclosure [s1, s2] of phi(r) until
  // the sign is locked or the band is below eps_floor (0 = on the crossing).
  int f_sign(const Real& r, Real& s1, Real& s2) const {
    if (exact_phi) {
      Real s = A.origin_slope * r;
      s1 = s2 = s;
      Real v = fbeta(r, s);
      if (abs(v) < eps_floor) return 0;
      return v.sign();
    }
    for (;;) {
      if (fbeta(r, s1).sign() > 0) return 1;
      if (fbeta(r, s2).sign() < 0) return -1;
      if (s2 - s1 < eps_floor) return 0;
      for (int i = 0; i < 8 && !(s2 - s1 < eps_floor); ++i) {
        Real mid = (s1 + s2) / 2L;
        if (falpha(r, mid).sign() > 0)
          s1 = mid;
        else
          s2 = mid;
      }
    }
  }

  // Full-precision phi at r given an enclosure.
  Real phi_refine(const Real& r, Real s1, Real s2) const {
    if (exact_phi) return A.origin_slope * r;
    Real want = cx.tol(-(cx.digits + 6));
    int guard = profile_iters(cx.digits);
    while (s2 - s1 > want && guard-- > 0) {
      Real mid = (s1 + s2) / 2L;
      if (falpha(r, mid).sign() > 0)
        s1 = mid;
      else
        s2 = mid;
    }
    return (s1 + s2) / 2L;
  }
};

struct GapTracker {
  Real best;
  bool any = false;

  void note(const Real& g) {
    Real a = abs(g);
    if (!any || a < best) {
      best = a;
      any = true;
    }
  }
};

// Boundary equations restricted to the diagonal, the vertical line r = 1, or
// the origin ray collapse onto a short basis of angle functions plus pi.
// Each equation is an integer coefficient vector in that basis (scaled by 6);
// proportional vectors describe the same root, so the corresponding boundary
// values coincide exactly and the strict ordering the crossing needs fails.
template <size_t N>
bool proportional(const std::array<long, N>& a, const std::array<long, N>& b) {
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

// basis <t,1,1>, <t,1,t>, pi
std::array<long, 3> diag_coeffs(const AngleCount& x) {
  return {6L * x[0], 6L * (x[3] + x[4]), 2L * (x[1] + x[2] + x[5]) - 12};
}

std::array<long, 3> vert_coeffs(const AngleCount& z) {
  return {6L * z[0], 6L * z[3], 2L * z[1] - 12};
}

// basis <s,1,1>, <s,1,s>, pi after rewriting <1,1,s> and <1,s,s> through the
// tangent-triangle angle sums
std::array<long, 3> at_one_alpha_coeffs(const AngleCount& e) {
  return {6L * (e[0] + e[1] + e[3]), 6L * (e[4] + e[5]), 2L * e[2] - 12};
}

std::array<long, 3> at_one_beta_coeffs(const AngleCount& z) {
  return {-3L * (z[4] + z[5]), -12L * z[2],
          2L * (z[0] + z[1] + z[3]) + 6L * z[2] + 3L * (z[4] + z[5]) - 12};
}

// basis of the three nontrivial slope-equation angles plus pi
std::array<long, 4> origin_alpha_coeffs(const AngleCount& e) {
  return {6L * e[1], 6L * e[3], 6L * e[5], 6L * e[0] + 2L * e[2] + 3L * e[4] - 12};
}

std::array<long, 4> origin_beta_coeffs(const AngleCount& z) {
  return {-3L * z[5], -6L * z[4], -12L * z[2],
          6L * z[0] + 2L * z[1] + 6L * z[2] + 3L * z[3] + 6L * z[4] + 3L * z[5] - 12};
}

}  // namespace

InterceptResult intercept(const ContourProfile& A, const ContourProfile& B, int digits) {
  if (A.kind != Kind::alpha || B.kind != Kind::beta)
    throw std::invalid_argument("intercept wants one alpha and one beta profile");
  Ctx cx(digits);
  InterceptResult R;
  R.pair = {A.tuple, B.tuple};
  Real thresh = cx.tol(-(digits / 2));
  GapTracker gaps;

  auto finish_none = [&](const Real& margin, const char* why) {
    R.status = InterceptStatus::none_definite;
    R.margin = margin;
    R.reason = why;
    return R;
  };
  auto finish_ambiguous = [&](const Real& margin, const char* why) {
    R.status = InterceptStatus::ambiguous;
    R.margin = margin;
    R.reason = why;
    return R;
  };

  NestedSolver solver(cx, A, B);

  auto solve_at = [&](const Real& r_at, Real s1, Real s2) {
    Real s = solver.phi_refine(r_at, s1, s2);
    Real res_a = solver.exact_phi ? cx.num(0) : abs(solver.falpha(r_at, s));
    Real res_b = abs(solver.fbeta(r_at, s));
    Real budget = cx.tol(-(digits - 10));
    if (!(res_a < budget) || !(res_b < budget))
      return finish_ambiguous(res_a < res_b ? res_b : res_a, "residual");
    R.status = InterceptStatus::found;
    R.r = r_at;
    R.s = s;
    R.margin = gaps.any ? gaps.best : thresh;
    R.reason = "solved";
    return R;
  };

  if (B.vertical) {
    if (proportional(diag_coeffs(A.tuple), vert_coeffs(B.tuple)))
      return finish_none(cx.num(0), "vertical abscissa equals diagonal endpoint exactly");
    Real gap = B.r_vert - A.a;
    if (abs(gap) < thresh) return finish_ambiguous(abs(gap), "vertical abscissa vs diagonal endpoint");
    if (gap.sign() < 0) return finish_none(abs(gap), "vertical contour left of phi domain");
    gaps.note(gap);
    // phi(r_vert) exists since r_vert > a; solve it directly
    Real s1 = cx.num(0), s2 = B.r_vert;
    return solve_at(B.r_vert, s1, s2);
  }

  // (a)  a < d
  if (proportional(diag_coeffs(A.tuple), diag_coeffs(B.tuple)))
    return finish_none(cx.num(0), "diagonal endpoints coincide exactly");
  {
    Real gap = B.d - A.a;
    if (abs(gap) < thresh) return finish_ambiguous(abs(gap), "a vs d");
    if (gap.sign() < 0) return finish_none(abs(gap), "phi starts right of psi domain");
    gaps.note(gap);
  }
  // (b)  shared origin: slope comparison
  if (A.a_is_zero && B.c_is_zero) {
    if (proportional(origin_alpha_coeffs(A.tuple), origin_beta_coeffs(B.tuple)))
      return finish_none(cx.num(0), "origin slopes coincide exactly");
    Real gap = A.origin_slope - B.origin_slope;
    if (abs(gap) < thresh) return finish_ambiguous(abs(gap), "origin slopes");
    if (gap.sign() < 0) return finish_none(abs(gap), "psi leaves the origin above phi");
    gaps.note(gap);
  }
  // (c)  both reach r = 1: ordinate comparison
  if (B.d_is_one && !B.value_at_one_is_one) {
    if (proportional(at_one_alpha_coeffs(A.tuple), at_one_beta_coeffs(B.tuple)))
      return finish_none(cx.num(0), "ordinates at one coincide exactly");
    Real gap = B.value_at_one - A.value_at_one;
    if (abs(gap) < thresh) return finish_ambiguous(abs(gap), "ordinates at one");
    if (gap.sign() < 0) return finish_none(abs(gap), "psi ends below phi");
    gaps.note(gap);
  }

  // conditions pass: bracket and bisect the crossing of r -> fbeta(r, phi(r))
  Real lo0 = A.a < B.c ? B.c : A.a;
  Real hi0 = B.d;
  Real width = hi0 - lo0;
  int budget = profile_iters(digits);

  Real rlo = lo0 + width / 16L;
  Real slo = cx.num(0), shi = rlo;
  for (;;) {
    Real s1 = slo, s2 = shi < rlo ? shi : rlo;
    int sg = solver.f_sign(rlo, s1, s2);
    if (sg > 0) {
      slo = s1;
      shi = s2;
      break;
    }
    if (sg == 0) return solve_at(rlo, s1, s2);
    if (--budget <= 0) return finish_ambiguous(rlo - lo0, "no positive bracket end");
    rlo = lo0 + (rlo - lo0) / 16L;
    shi = s2;  // phi(new rlo) <= phi(old rlo) <= s2
  }
  Real rhi = hi0 - width / 16L;
  if (!(rhi > rlo)) rhi = (rlo + hi0) / 2L;
  Real shi_hi = rhi;
  for (;;) {
    Real s1 = slo, s2 = shi_hi < rhi ? shi_hi : rhi;
    int sg = solver.f_sign(rhi, s1, s2);
    if (sg < 0) {
      shi = s2;
      break;
    }
    if (sg == 0) return solve_at(rhi, s1, s2);
    if (--budget <= 0) return finish_ambiguous(hi0 - rhi, "no negative bracket end");
    slo = s1;  // phi(new rhi) >= phi(old rhi) >= s1
    rhi = hi0 - (hi0 - rhi) / 16L;
    shi_hi = rhi;
  }

  Real stop_w = cx.tol(-(digits + 8));
  int iters = profile_iters(digits) + 40;
  while (rhi - rlo > stop_w && iters-- > 0) {
    Real rmid = (rlo + rhi) / 2L;
    Real s1 = slo, s2 = shi < rmid ? shi : rmid;
    int sg = solver.f_sign(rmid, s1, s2);
    if (sg == 0) return solve_at(rmid, s1, s2);
    if (sg > 0) {
      rlo = rmid;
      slo = s1;
    } else {
      rhi = rmid;
      shi = s2;
    }
  }
  Real r_at = (rlo + rhi) / 2L;
  Real s2 = shi < r_at ? shi : r_at;
  return solve_at(r_at, slo, s2);
}

InterceptResult intercept(const TuplePair& pair, int digits) {
  ContourProfile A = profile(Kind::alpha, pair.eta, digits);
  ContourProfile B = profile(Kind::beta, pair.zeta, digits);
  return intercept(A, B, digits);
}

LCatalog compute_L(const std::vector<TuplePair>& pairs, int digits, int jobs) {
  LCatalog cat;
  cat.digits = digits;
  cat.rows.resize(pairs.size());
  if (pairs.empty()) return cat;
  if (jobs < 1) jobs = 1;

  std::vector<AngleCount> etas, zetas;
  for (const TuplePair& p : pairs) {
    etas.push_back(p.eta);
    zetas.push_back(p.zeta);
  }
  auto uniq = [](std::vector<AngleCount>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(etas);
  uniq(zetas);

  std::vector<ContourProfile> aps(etas.size()), bps(zetas.size());
  auto run_pool = [&](size_t n, const std::function<void(size_t)>& work) {
    if (jobs == 1 || n < 2) {
      for (size_t i = 0; i < n; ++i) work(i);
      return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> ts;
    int nt = jobs;
    for (int t = 0; t < nt; ++t)
      ts.emplace_back([&] {
        for (size_t i = next++; i < n; i = next++) work(i);
      });
    for (auto& th : ts) th.join();
  };

  run_pool(etas.size(), [&](size_t i) { aps[i] = profile(Kind::alpha, etas[i], digits); });
  run_pool(zetas.size(), [&](size_t i) { bps[i] = profile(Kind::beta, zetas[i], digits); });

  std::map<AngleCount, const ContourProfile*> amap, bmap;
  for (size_t i = 0; i < etas.size(); ++i) amap[etas[i]] = &aps[i];
  for (size_t i = 0; i < zetas.size(); ++i) bmap[zetas[i]] = &bps[i];

  run_pool(pairs.size(), [&](size_t i) {
    cat.rows[i] = intercept(*amap.at(pairs[i].eta), *bmap.at(pairs[i].zeta), digits);
  });

  refresh_groups(cat);
  return cat;
}

void refresh_groups(LCatalog& cat) {
  int digits = cat.digits;
  cat.found = cat.none = cat.ambiguous = 0;
  cat.groups.clear();
  cat.borderline_groups.clear();

  std::vector<size_t> found_idx;
  for (size_t i = 0; i < cat.rows.size(); ++i) {
    switch (cat.rows[i].status) {
      case InterceptStatus::found:
        ++cat.found;
        found_idx.push_back(i);
        break;
      case InterceptStatus::none_definite: ++cat.none; break;
      case InterceptStatus::ambiguous: ++cat.ambiguous; break;
    }
  }

  std::sort(found_idx.begin(), found_idx.end(), [&](size_t x, size_t y) {
    const InterceptResult& u = cat.rows[x];
    const InterceptResult& v = cat.rows[y];
    if (u.r != v.r) return u.r < v.r;
    if (u.s != v.s) return u.s < v.s;
    return x < y;
  });

  mpfr_prec_t bits = Precision{digits}.bits();
  Real tol = Real::pow10(-(digits / 2), bits);
  for (size_t i : found_idx) {
    const InterceptResult& row = cat.rows[i];
    bool placed = false;
    for (size_t g = cat.groups.size(); g-- > 0;) {
      const InterceptResult& rep = cat.rows[cat.groups[g][0]];
      if (row.r - rep.r > tol) break;
      if (abs(row.s - rep.s) < tol && abs(row.r - rep.r) < tol) {
        cat.groups[g].push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) cat.groups.push_back({i});
  }

  // groups whose internal spread or separation from a neighbor group sits
  // near the tolerance need exact settlement
  auto cheb = [&](const InterceptResult& u, const InterceptResult& v) {
    Real dr = abs(u.r - v.r), ds = abs(u.s - v.s);
    return dr < ds ? ds : dr;
  };
  Real near_lo = tol / 100L, near_hi = tol * 100L;
  for (size_t g = 0; g < cat.groups.size(); ++g) {
    bool flag = false;
    const InterceptResult& rep = cat.rows[cat.groups[g][0]];
    for (size_t j = 1; j < cat.groups[g].size() && !flag; ++j)
      if (cheb(rep, cat.rows[cat.groups[g][j]]) > near_lo) flag = true;
    for (size_t h = g + 1; h < cat.groups.size() && !flag; ++h) {
      const InterceptResult& other = cat.rows[cat.groups[h][0]];
      if (other.r - rep.r > near_hi) break;
      if (cheb(rep, other) < near_hi) flag = true;
    }
    if (flag) cat.borderline_groups.push_back(g);
  }
}

}  // namespace tripack
