#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripack/angles.hpp"
#include "tripack/real.hpp"
#include "tripack/tuples.hpp"

namespace tripack {

// Angle sum of one corona equation, xi dot angle_vector(kind, .), skipping
// zero slots.
Real eval_f(Kind kind, const AngleCount& xi, const Radii& p, int digits = 50);

// The unique s in (0,r) with eval_f(alpha, eta, {r,s}) == 2*pi, or nothing
// when the whole s-range stays above 2*pi (r left of the diagonal endpoint).
std::optional<Real> phi_eval(const AngleCount& eta, const Real& r, int digits = 50);

// Beta-side analogue (angle sum increasing in s); throws std::invalid_argument
// for vertical zeta.
std::optional<Real> psi_eval(const AngleCount& zeta, const Real& r, int digits = 50);

// Abscissa of the s-independent beta contour; throws std::invalid_argument
// unless rverticalcont(zeta).
Real vertical_abscissa(const AngleCount& zeta, int digits = 50);

// Domain endpoints and boundary limits of one implicit contour function.
// Exactness flags record decisions made in integer arithmetic; the Real
// fields next to them are then exact values, not approximations.
struct ContourProfile {
  Kind kind = Kind::alpha;
  AngleCount tuple;
  int digits = 50;

  bool vertical = false;  // beta only: contour is a vertical segment
  Real r_vert;            // its abscissa

  bool ray = false;       // no large contact: contour is s = origin_slope * r

  Real a;                 // alpha domain start, phi: (a,1)
  bool a_is_zero = false;
  Real c;                 // beta domain start, psi: (c,d)
  bool c_is_zero = false;
  Real d;                 // beta domain end
  bool d_is_one = false;

  Real origin_slope;      // lim s/r at the origin, when the domain reaches 0
  bool slope_is_one = false;   // alpha: exact boundary case
  bool slope_is_zero = false;  // beta: exact boundary case

  Real value_at_one;      // lim of the contour ordinate at r -> 1
  bool value_at_one_is_one = false;  // beta with tuple sum 6

  // integer signature of the diagonal restriction; equal signatures mean
  // exactly equal diagonal endpoints
  std::array<long, 3> diag_sig{0, 0, 0};
  // signature of the s-independent component sum (vertical abscissa equation)
  std::array<long, 3> vert_sig{0, 0, 0};
};

ContourProfile profile(Kind kind, const AngleCount& xi, int digits = 50);

enum class InterceptStatus { found, none_definite, ambiguous };
std::string status_name(InterceptStatus st);

struct InterceptResult {
  TuplePair pair;
  InterceptStatus status = InterceptStatus::none_definite;
  Real r, s;        // set when found
  Real margin;      // smallest decisive inequality gap met along the decision
  std::string reason;  // which test settled it (or failed to)
};

InterceptResult intercept(const ContourProfile& alpha_side, const ContourProfile& beta_side,
                          int digits = 50);
InterceptResult intercept(const TuplePair& pair, int digits = 50);

struct LCatalog {
  std::vector<InterceptResult> rows;  // one per input pair, input order
  int digits = 50;
  long found = 0, none = 0, ambiguous = 0;
  // found rows clustered by point coincidence within 10^(-digits/2)
  std::vector<std::vector<size_t>> groups;
  // groups whose nearest neighbor or internal spread sits near the tolerance,
  // to be settled exactly
  std::vector<size_t> borderline_groups;
};

LCatalog compute_L(const std::vector<TuplePair>& pairs, int digits = 50, int jobs = 1);

// recompute tallies, groups and borderline flags from rows (after a
// post-pass edited row statuses)
void refresh_groups(LCatalog& cat);

}  // namespace tripack
