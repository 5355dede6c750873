#pragma once

#include <cstdint>
#include <vector>

#include "tripack/angles.hpp"

namespace tripack {

struct GammaQuery {
  Radii point;
  Real tolerance;
  std::int64_t budget = 1'000'000'000;
  int digits = 60;
};

enum class GammaOutcome { found, exhausted_none, budget_exceeded };

struct GammaSolution {
  AngleCount xi;
  Real residual;  // |xi . gamma - 2 pi|
};

struct GammaResult {
  GammaOutcome outcome;
  std::vector<GammaSolution> solutions;  // sorted by xi
  std::int64_t nodes = 0;
};

// componentwise cap floor(2 pi / gamma_i) on any solution around a large
// circle at this point
std::array<long, 6> gamma_bounds(const Radii& point, int digits = 60);

// depth-first search for every xi with onec(xi) and |xi . gamma - 2 pi| <
// tolerance, pruning on the residual against what the remaining slots can
// still contribute; stops early once the node budget runs out and reports
// that honestly
GammaResult search(const GammaQuery& query, int jobs = 1);

}  // namespace tripack
