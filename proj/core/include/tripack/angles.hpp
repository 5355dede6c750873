#pragma once

#include <array>

#include "tripack/real.hpp"
#include "tripack/tuples.hpp"

namespace tripack {

// Which circle sits at the center of the corona.
enum class Kind { alpha, beta, gamma };  // small, mid, large center

// Radii of the three size classes after scaling the largest to 1.
struct Radii {
  Real r, s;
};

// Half-aperture occupied at the center of a circle of radius a by two
// mutually tangent neighbors of radii b and c, all tangent to the center:
// the angle at the a-center of the triangle with sides a+b, a+c, b+c.
Real petal_angle(const Real& a, const Real& b, const Real& c, int digits);

// The six petal angles around a center of the given kind, indexed like
// AngleCount.  digits controls the boundary clamp for arccos.
std::array<Real, 6> angle_vector(Kind k, const Radii& x, int digits);

// Derivative in r of  t -> xi . angle_vector(k, {r=t, s=m t})  along the ray
// s = m r, in closed form.  Only the angle slots touching the unit circle
// vary along a ray; kinds alpha and beta are supported, gamma throws.
Real ray_derivative(Kind k, const AngleCount& xi, const Real& r, const Real& m);

// Limits of the six angle cosines as r -> 0 along s = m r (alpha and beta).
std::array<Real, 6> origin_limit_cosines(Kind k, const Real& m);

}  // namespace tripack
