#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tripack/angles.hpp"
#include "tripack/tuples.hpp"

namespace tripack {

struct Circle {
  Real x, y;
  SizeClass label;
};

// circles of three radii, the largest scaled to 1; radius follows the label
struct Packing {
  std::vector<Circle> circles;
  Radii radii;
  int digits = 30;

  Real radius_of(SizeClass c) const;
};

struct Box {
  double xmin, ymin, xmax, ymax;
};

Box bounding_box(const Packing& p);

// pairs at center distance equal to the radius sum within tol, indices i < j
std::vector<std::pair<size_t, size_t>> tangent_pairs(const Packing& p, double tol);

struct Corona {
  Packing packing;  // center first, then the neighbors in cycle order
  bool closes;
  Real angle_sum;
};

// center circle at the origin, first neighbor on the positive x axis, each
// following neighbor advanced by the petal angle between the consecutive
// neighbor radii; closes reports whether the petal angles sum to a full turn
Corona build_corona(SizeClass center, const NeighborCycle& cycle, const Radii& radii,
                    int digits = 30, double tol = 1e-9);

// admissible corona angle-counts per center class, already filtered to the
// radii in play by the caller (grow_patch drops entries that do not close)
struct CoronaCatalog {
  std::vector<AngleCount> small, mid, large;

  const std::vector<AngleCount>& for_center(SizeClass c) const;
};

struct GrowReport {
  bool stalled = false;
  long placed = 0;
  long merged = 0;
  std::vector<std::string> stalls;
};

struct GrowResult {
  Packing packing;
  GrowReport report;
};

// fill the region by repeatedly taking the frontier wedge nearest the origin
// and placing the largest circle that stays overlap-free and keeps every
// touched corona completable within the catalog; wedges that cannot be
// filled are reported and skipped
GrowResult grow_patch(const Packing& seed, const Box& region, const Radii& radii,
                      const CoronaCatalog& catalog, int digits = 30, double tol = 1e-9);

struct OverlapViolation {
  size_t i, j;
  double depth;
};

struct CompactnessVerdict {
  size_t index;
  bool compact;
};

struct VerificationReport {
  std::vector<OverlapViolation> violations;
  long tangency_count = 0;
  std::vector<CompactnessVerdict> interior;
  double worst_residual = 0;

  bool valid() const { return violations.empty(); }
};

// overlap scan over a spatial hash plus, for every circle far enough from
// the patch border that its whole corona must be present, a check that the
// tangent neighbors close up all the way around
VerificationReport verify(const Packing& p, double tol = 1e-9, int jobs = 1);

struct SvgStyle {
  double scale = 60;
  bool tangency_overlay = false;
};

std::string render_svg(const Packing& p, const SvgStyle& style = {});

void write_packing_json(const Packing& p, std::ostream& os);
Packing read_packing_json(std::istream& is, int digits = 30);

}  // namespace tripack
