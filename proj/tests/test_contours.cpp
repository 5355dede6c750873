#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tripack/contours.hpp"

using namespace tripack;

namespace {

Real two_pi_at(int digits) { return Real::pi(Precision{digits}.bits()) * 2L; }

bool close(const Real& x, double want, double tol) {
  return std::abs(x.to_double() - want) < tol;
}

// the five catalog pairs with published solutions
struct Known {
  AngleCount eta, zeta;
  double r0, s0;
};
const Known known[] = {
    {{0, 0, 0, 1, 1, 3}, {1, 0, 3, 0, 2, 0}, 0.438405, 0.299248},
    {{0, 0, 0, 1, 1, 3}, {0, 0, 3, 2, 2, 0}, 0.822210, 0.468169},
    {{0, 0, 0, 1, 1, 3}, {2, 0, 3, 0, 2, 0}, 0.865150, 0.484497},
    {{0, 0, 0, 2, 2, 0}, {0, 0, 0, 2, 6, 0}, 0.948799, 0.275178},
    {{0, 0, 0, 2, 2, 0}, {1, 1, 0, 2, 2, 0}, 0.667499, 0.237538},
};

}  // namespace

TEST_CASE("corona angle sums evaluate sparsely and exactly on flat tuples") {
  Radii p{Real(0.5, 256), Real(0.25, 256)};
  Real gap = abs(eval_f(Kind::alpha, {0, 0, 6, 0, 0, 0}, p, 50) - two_pi_at(50));
  CHECK(gap < Real::pow10(-60, 256));
  gap = abs(eval_f(Kind::gamma, {6, 0, 0, 0, 0, 0}, p, 50) - two_pi_at(50));
  CHECK(gap < Real::pow10(-60, 256));

  // a published solution point satisfies both corona equations
  Radii q{Real(0.438405, 256), Real(0.299248, 256)};
  CHECK(close(eval_f(Kind::alpha, {0, 0, 0, 1, 1, 3}, q, 50), 2 * 3.14159265358979, 1e-4));
  CHECK(close(eval_f(Kind::beta, {1, 0, 3, 0, 2, 0}, q, 50), 2 * 3.14159265358979, 1e-4));

  CHECK_THROWS_AS(eval_f(Kind::alpha, {1, 1, 1, 1, 1, 1}, Radii{Real(0.3, 128), Real(0.4, 128)}, 30),
                  std::domain_error);
  CHECK_THROWS_AS(eval_f(Kind::alpha, {1, 1, 1, 1, 1, 1}, Radii{Real(1.2, 128), Real(0.4, 128)}, 30),
                  std::domain_error);
}

TEST_CASE("contour ordinates match closed-form solutions") {
  // 6 <r,1,s> = 2 pi forces cos = 1/2, solvable by hand at r = 1/2
  auto s = psi_eval({0, 0, 0, 0, 6, 0}, Real(0.5, 256), 50);
  REQUIRE(s.has_value());
  CHECK(abs(*s - Real(3L, 256) / 10L) < Real::pow10(-45, 256));

  // 3 <r,1,1> = 2 pi puts the diagonal endpoint at 2/sqrt(3) - 1
  ContourProfile p = profile(Kind::alpha, {3, 0, 0, 0, 0, 0}, 50);
  Real want = Real(2L, 256) / sqrt(Real(3L, 256)) - 1L;
  CHECK_FALSE(p.a_is_zero);
  CHECK(abs(p.a - want) < Real::pow10(-45, 256));
  CHECK_FALSE(phi_eval({3, 0, 0, 0, 0, 0}, Real(0.1, 256), 50).has_value());
  auto ph = phi_eval({3, 0, 0, 0, 0, 0}, Real(0.5, 256), 50);
  REQUIRE(ph.has_value());
  Real res = abs(eval_f(Kind::alpha, {3, 0, 0, 0, 0, 0}, {Real(0.5, 256), *ph}, 50) - two_pi_at(50));
  CHECK(res < Real::pow10(-40, 256));

  // same equation reached through the s-independent beta component
  ContourProfile q = profile(Kind::beta, {2, 2, 0, 0, 0, 0}, 50);
  CHECK(q.vertical);
  CHECK(abs(q.r_vert - want) < Real::pow10(-45, 256));
  CHECK(abs(vertical_abscissa({2, 2, 0, 0, 0, 0}, 50) - want) < Real::pow10(-45, 256));
}

TEST_CASE("vertical tuples refuse the ordinate function and vice versa") {
  CHECK_THROWS_AS(psi_eval({1, 2, 0, 2, 0, 0}, Real(0.5, 128), 30), std::invalid_argument);
  CHECK_THROWS_AS(vertical_abscissa({1, 0, 3, 0, 2, 0}, 30), std::invalid_argument);
  CHECK_THROWS_AS(profile(Kind::gamma, {1, 1, 1, 1, 1, 1}, 30), std::invalid_argument);
}

TEST_CASE("domain endpoints follow the integer case splits") {
  // weight 12 exactly: domain reaches the origin with unit slope
  ContourProfile p = profile(Kind::alpha, {0, 0, 0, 1, 1, 3}, 50);
  CHECK(p.a_is_zero);
  CHECK(p.slope_is_one);
  CHECK(p.origin_slope == Real(1L, 64));
  CHECK_FALSE(p.ray);
  CHECK(p.value_at_one.to_double() > 0.0);
  CHECK(p.value_at_one.to_double() < 1.0);

  ContourProfile q = profile(Kind::beta, {1, 0, 3, 0, 2, 0}, 50);
  CHECK_FALSE(q.vertical);
  CHECK(q.c_is_zero);
  CHECK_FALSE(q.slope_is_zero);
  CHECK(q.d_is_one);
  CHECK(q.value_at_one_is_one);

  ContourProfile w = profile(Kind::beta, {0, 0, 0, 0, 6, 0}, 50);
  CHECK(w.c_is_zero);
  CHECK(w.d_is_one);
  CHECK(w.value_at_one_is_one);
  CHECK(abs(w.origin_slope - Real(1L, 256) / 3L) < Real::pow10(-45, 256));

  // no large contact: the contour is an exact ray
  ContourProfile ray = profile(Kind::alpha, {0, 1, 0, 0, 0, 4}, 50);
  CHECK(ray.ray);
  CHECK(ray.a_is_zero);
  CHECK(ray.value_at_one == ray.origin_slope);
  Real m = ray.origin_slope;
  auto at = phi_eval({0, 1, 0, 0, 0, 4}, Real(0.37, 256), 50);
  REQUIRE(at.has_value());
  CHECK(abs(*at - m * Real(0.37, 256)) < Real::pow10(-40, 256));
}

TEST_CASE("published intercepts are reproduced to print precision") {
  for (const Known& k : known) {
    InterceptResult R = intercept(TuplePair{k.eta, k.zeta}, 50);
    REQUIRE(R.status == InterceptStatus::found);
    CHECK(close(R.r, k.r0, 1e-6));
    CHECK(close(R.s, k.s0, 1e-6));
    CHECK(R.margin.sign() > 0);
    Real budget = Real::pow10(-40, Precision{50}.bits());
    CHECK(abs(eval_f(Kind::alpha, k.eta, {R.r, R.s}, 50) - two_pi_at(50)) < budget);
    CHECK(abs(eval_f(Kind::beta, k.zeta, {R.r, R.s}, 50) - two_pi_at(50)) < budget);
  }
}

TEST_CASE("the smallest catalog point sits near 5.8e-5 and still resolves") {
  InterceptResult R = intercept(TuplePair{{0, 0, 1, 1, 1, 1}, {1, 0, 4, 0, 2, 0}}, 50);
  REQUIRE(R.status == InterceptStatus::found);
  CHECK(close(R.r, 5.81261602e-5, 1e-12));
  CHECK(close(R.s, 1.25188787e-5, 1e-12));
}

TEST_CASE("coinciding integer signatures reject without a numeric verdict") {
  ContourProfile A = profile(Kind::alpha, {0, 0, 0, 1, 1, 3}, 40);
  // same diagonal restriction through a vertical tuple
  ContourProfile V = profile(Kind::beta, {0, 3, 0, 2, 0, 0}, 40);
  InterceptResult rv = intercept(A, V, 40);
  CHECK(rv.status == InterceptStatus::none_definite);
  CHECK(rv.margin.is_zero());
  // and through a sloped one
  ContourProfile B = profile(Kind::beta, {0, 0, 3, 2, 0, 0}, 40);
  InterceptResult rb = intercept(A, B, 40);
  CHECK(rb.status == InterceptStatus::none_definite);
  CHECK(rb.margin.is_zero());
}

TEST_CASE("contours stay above a tenth of the diagonal") {
  int digits = 30;
  mpfr_prec_t bits = Precision{digits}.bits();
  Real two_pi = two_pi_at(digits);
  std::vector<AngleCount> etas = enumerate_snec();
  REQUIRE(etas.size() == 55);
  for (const AngleCount& eta : etas) {
    for (int i = 1; i <= 200; ++i) {
      Real r = Real(static_cast<long>(i), bits) / 201L;
      Radii p{r, r / 10L};
      CHECK(eval_f(Kind::alpha, eta, p, digits) > two_pi);
    }
  }
  // 35 mid-corona small-small petals overflow everywhere on the same line
  for (int i = 1; i <= 200; ++i) {
    Real r = Real(static_cast<long>(i), bits) / 201L;
    Real beta3 = petal_angle(r, r / 10L, r / 10L, digits);
    CHECK(beta3 * 35L > two_pi);
  }
}

TEST_CASE("contour ordinate over abscissa is strictly monotone") {
  int digits = 25;
  mpfr_prec_t bits = Precision{digits}.bits();
  AngleCount eta{0, 0, 0, 1, 1, 3};
  Real prev;
  bool first = true;
  for (int i = 2; i <= 38; ++i) {
    Real r = Real(static_cast<long>(i), bits) / 40L;
    auto s = phi_eval(eta, r, digits);
    REQUIRE(s.has_value());
    Real ratio = *s / r;
    if (!first) CHECK(ratio < prev);
    prev = ratio;
    first = false;
  }
  AngleCount zeta{1, 0, 3, 0, 2, 0};
  first = true;
  for (int i = 2; i <= 38; ++i) {
    Real r = Real(static_cast<long>(i), bits) / 40L;
    auto s = psi_eval(zeta, r, digits);
    REQUIRE(s.has_value());
    Real ratio = *s / r;
    if (!first) CHECK(ratio > prev);
    prev = ratio;
    first = false;
  }
}

TEST_CASE("each found pair crosses exactly once along the contour") {
  int digits = 15;
  Real two_pi = two_pi_at(digits);
  for (const Known& k : known) {
    ContourProfile A = profile(Kind::alpha, k.eta, digits);
    ContourProfile B = profile(Kind::beta, k.zeta, digits);
    Real lo = A.a < B.c ? B.c : A.a;
    Real hi = B.d;
    int flips = 0, last = 0;
    const int N = 2000;
    for (int i = 1; i < N; ++i) {
      Real r = lo + (hi - lo) * static_cast<long>(i) / static_cast<long>(N);
      auto s = phi_eval(k.eta, r, digits);
      if (!s) continue;
      int sg = (eval_f(Kind::beta, k.zeta, {r, *s}, digits) - two_pi).sign();
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++flips;
      last = sg;
    }
    CHECK(flips == 1);
  }
}

TEST_CASE("catalog computation is deterministic across workers and input order") {
  std::vector<TuplePair> subset;
  for (const Known& k : known) subset.push_back({k.eta, k.zeta});
  std::vector<TuplePair> K = enumerate_K();
  for (size_t i = 0; i < K.size(); i += K.size() / 45) subset.push_back(K[i]);

  int digits = 30;
  LCatalog one = compute_L(subset, digits, 1);
  LCatalog two = compute_L(subset, digits, 2);
  REQUIRE(one.rows.size() == two.rows.size());
  for (size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].status == two.rows[i].status);
    if (one.rows[i].status == InterceptStatus::found) {
      CHECK(one.rows[i].r == two.rows[i].r);
      CHECK(one.rows[i].s == two.rows[i].s);
    }
  }
  CHECK(one.groups == two.groups);

  std::vector<TuplePair> shuffled = subset;
  std::mt19937 rng(7);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  LCatalog three = compute_L(shuffled, digits, 1);
  for (size_t i = 0; i < shuffled.size(); ++i) {
    size_t j = 0;
    while (!(subset[j].eta == shuffled[i].eta) || !(subset[j].zeta == shuffled[i].zeta)) ++j;
    CHECK(three.rows[i].status == one.rows[j].status);
    if (three.rows[i].status == InterceptStatus::found) {
      CHECK(three.rows[i].r == one.rows[j].r);
      CHECK(three.rows[i].s == one.rows[j].s);
    }
  }

  CHECK(one.found + one.none + one.ambiguous == static_cast<long>(one.rows.size()));
  Real budget = Real::pow10(-(digits - 10), Precision{digits}.bits());
  Real two_pi = two_pi_at(digits);
  for (const InterceptResult& row : one.rows) {
    if (row.status != InterceptStatus::found) continue;
    CHECK(abs(eval_f(Kind::alpha, row.pair.eta, {row.r, row.s}, digits) - two_pi) < budget);
    CHECK(abs(eval_f(Kind::beta, row.pair.zeta, {row.r, row.s}, digits) - two_pi) < budget);
  }
}

TEST_CASE("the five known pairs land in five separate groups") {
  std::vector<TuplePair> subset;
  for (const Known& k : known) subset.push_back({k.eta, k.zeta});
  LCatalog cat = compute_L(subset, 40, 1);
  CHECK(cat.found == 5);
  CHECK(cat.none == 0);
  CHECK(cat.ambiguous == 0);
  CHECK(cat.groups.size() == 5);
  CHECK(cat.borderline_groups.empty());
}

TEST_CASE("status names round-trip") {
  CHECK(status_name(InterceptStatus::found) == "found");
  CHECK(status_name(InterceptStatus::none_definite) == "none");
  CHECK(status_name(InterceptStatus::ambiguous) == "ambiguous");
}
