#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tripack/contours.hpp"
#include "tripack/symbolic.hpp"

namespace tripack {

// One row per pair as a JSON object per line; reals as decimal strings.
void write_jsonl(const LCatalog& cat, std::ostream& os);
LCatalog read_jsonl(std::istream& is);

void write_csv(const LCatalog& cat, std::ostream& os);

// Three status counts plus grouping, one line each.
std::string summary_text(const LCatalog& cat);

std::string poly_json(const IntPoly1& p, const std::string& var);
IntPoly1 poly_from_json(const std::string& text);

// Exact certification bundle for one found pair: the two contour polynomials
// (shared low-degree factors divided out), their eliminations, and each
// coordinate pinned as a polynomial root with an isolating interval.
struct Certificate {
  TuplePair pair;
  int digits = 50;
  IntPoly2 alpha_poly, beta_poly;
  IntPoly2 removed;  // shared factor cleared before elimination
  IntPoly1 in_r, in_s;
  AlgebraicNumber root_r, root_s;
  std::string r_dec, s_dec;
};

Certificate certify_pair(const TuplePair& pair, int digits = 50, long term_cap = 5'000'000);
std::string certificate_json(const Certificate& c);

struct ResolveStats {
  long examined = 0;
  long equal_none = 0;   // boundary quantities proved identical, no intercept
  long reran = 0;        // settled by a higher-precision numeric pass
  long unresolved = 0;
  std::vector<std::string> notes;  // one line per examined row
};

// Settle ambiguous rows exactly: the boundary quantities named by the row's
// reason are isolated as algebraic numbers and compared; proved-equal rows
// become no-intercept. Rows the comparison cannot decide are re-solved at
// doubled precision. Tallies and groups are refreshed afterwards.
ResolveStats resolve_ambiguous(LCatalog& cat, long term_cap = 5'000'000);

}  // namespace tripack
