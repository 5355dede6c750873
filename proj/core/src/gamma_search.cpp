#include "tripack/gamma_search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace tripack {

std::array<long, 6> gamma_bounds(const Radii& point, int digits) {
  std::array<Real, 6> g = angle_vector(Kind::gamma, point, digits);
  Real twopi = Real::pi(g[0].prec()) * 2L;
  std::array<long, 6> caps;
  for (size_t i = 0; i < 6; ++i) caps[i] = static_cast<long>(floor(twopi / g[i]).to_double());
  return caps;
}

namespace {

struct SearchCtx {
  std::array<Real, 6> g;
  std::array<long, 6> caps;
  std::array<Real, 7> sufmax;  // largest sum the slots from i on can contribute
  Real tol;
  std::atomic<std::int64_t> left{0};
  std::atomic<bool> exhausted{false};
};

void dfs(SearchCtx& c, int slot, AngleCount& xi, const Real& residual,
         std::vector<GammaSolution>& out) {
  if (c.left.fetch_sub(1, std::memory_order_relaxed) <= 0) {
    c.exhausted.store(true, std::memory_order_relaxed);
    return;
  }
  if (slot == 6) {
    Real gap = abs(residual);
    if (gap < c.tol && onec(xi)) out.push_back({xi, gap});
    return;
  }
  size_t i = static_cast<size_t>(slot);
  if (residual < -c.tol) return;
  if (c.sufmax[i] < residual - c.tol) return;
  for (long v = 0; v <= c.caps[i]; ++v) {
    if (c.exhausted.load(std::memory_order_relaxed)) return;
    Real next = residual - c.g[i] * v;
    if (next < -c.tol) break;  // larger counts only overshoot further
    xi[slot] = static_cast<int>(v);
    dfs(c, slot + 1, xi, next, out);
    xi[slot] = 0;
  }
}

}  // namespace

GammaResult search(const GammaQuery& query, int jobs) {
  mpfr_prec_t bits = Precision{query.digits}.bits();
  Real floor_tol = Real::pow10(10 - query.digits, bits);
  if (query.tolerance.sign() <= 0 || query.tolerance < floor_tol)
    throw std::invalid_argument("tolerance below the resolution the digit count supports");

  SearchCtx c;
  c.g = angle_vector(Kind::gamma, query.point, query.digits);
  c.caps = gamma_bounds(query.point, query.digits);
  c.tol = query.tolerance;
  c.sufmax[6] = Real(0L, bits);
  for (size_t i = 6; i-- > 0;) c.sufmax[i] = c.sufmax[i + 1] + c.g[i] * c.caps[i];
  c.left.store(query.budget);
  Real twopi = Real::pi(bits) * 2L;

  // one worker branch per count of the always-present pi/3 slot
  size_t branches = static_cast<size_t>(c.caps[0]) + 1;
  std::vector<std::vector<GammaSolution>> parts(branches);
  auto branch = [&](size_t v) {
    AngleCount xi{};
    xi[0] = static_cast<int>(v);
    Real rem = twopi - c.g[0] * static_cast<long>(v);
    if (rem < -c.tol) return;
    dfs(c, 1, xi, rem, parts[v]);
  };
  if (jobs <= 1 || branches < 2) {
    for (size_t v = 0; v < branches; ++v) branch(v);
  } else {
    std::atomic<size_t> nextv{0};
    std::vector<std::thread> ts;
    for (int t = 0; t < jobs; ++t)
      ts.emplace_back([&] {
        for (size_t v = nextv++; v < branches; v = nextv++) branch(v);
      });
    for (auto& th : ts) th.join();
  }

  GammaResult out;
  for (auto& p : parts)
    for (auto& s : p) out.solutions.push_back(std::move(s));
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const GammaSolution& a, const GammaSolution& b) { return a.xi < b.xi; });
  std::int64_t left = c.left.load();
  out.nodes = left >= 0 ? query.budget - left : query.budget;
  out.outcome = c.exhausted.load()          ? GammaOutcome::budget_exceeded
                : out.solutions.empty()     ? GammaOutcome::exhausted_none
                                            : GammaOutcome::found;
  return out;
}

}  // namespace tripack
