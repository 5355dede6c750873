#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tripack {

// Multiplicity vector of the six unordered neighbor-pair kinds around a
// circle, indexed s<r<1 by size:
//   [0] {1,1}  [1] {r,r}  [2] {s,s}  [3] {1,r}  [4] {1,s}  [5] {r,s}
struct AngleCount {
  std::array<int, 6> v{0, 0, 0, 0, 0, 0};

  int& operator[](int i) { return v[static_cast<size_t>(i)]; }
  int operator[](int i) const { return v[static_cast<size_t>(i)]; }

  long dot(const std::array<int, 6>& w) const {
    long t = 0;
    for (int i = 0; i < 6; ++i) t += static_cast<long>(v[static_cast<size_t>(i)]) * w[static_cast<size_t>(i)];
    return t;
  }
  int sum() const { return v[0] + v[1] + v[2] + v[3] + v[4] + v[5]; }

  auto operator<=>(const AngleCount&) const = default;

  std::string str() const;
  static AngleCount parse(const std::string& csv);
};

// One of the three size classes of a circle.
enum class SizeClass : uint8_t { small = 0, mid = 1, large = 2 };
char size_class_letter(SizeClass c);

// Cyclic sequence of neighbor size classes around a circle.
using NeighborCycle = std::vector<SizeClass>;

// Pair-kind multiplicities of a cyclic sequence.
AngleCount encode_cycle(const NeighborCycle& cycle);

// Whether some cyclic sequence realizes the multiplicities: the multigraph
// on {small, mid, large} with v[0..2] loops and v[3..5] plain edges has an
// Eulerian circuit (nonempty, even degrees, positive-degree part connected).
bool seq_realizable(const AngleCount& x);

// A realizing cyclic sequence (Hierholzer walk); throws std::invalid_argument
// if none exists.
NeighborCycle decode_cycle(const AngleCount& x);

// Parity conditions satisfied by any encoded cycle.
bool mod2(const AngleCount& x);

// Small circle: angle-sum sandwich at the corners of the parameter domain.
bool sbounds(const AngleCount& eta);
// Small circle: excludes the all-small hexagonal corona.
bool snonhex(const AngleCount& eta);
// Small circle: all necessary corona conditions.
bool snec(const AngleCount& eta);

// Mid circle analogues.
bool rbounds(const AngleCount& zeta);
bool rnonhex(const AngleCount& zeta);
// A mid circle touching a large circle cannot also have twelve small ones.
bool rfewlargeneighbors(const AngleCount& zeta);
bool rnec(const AngleCount& zeta);
// Mid corona whose angle function is constant in s.
bool rverticalcont(const AngleCount& zeta);
// Cap on the small-small multiplicity used by the pair enumeration.
bool rboundsextra(const AngleCount& zeta);

// At most six large-small adjacencies around a mid circle; the enumerated
// catalog applies this bound on top of rbounds.
bool rmixedcap(const AngleCount& zeta);

// At least one of the two coronas touches a large circle.
bool srdisjunct(const AngleCount& eta, const AngleCount& zeta);

// Large circle conditions (unit corona).
bool ononhex(const AngleCount& xi);
bool onec(const AngleCount& xi);

// All small-circle tuples passing snec, lexicographically sorted.
std::vector<AngleCount> enumerate_snec();

// All (eta, zeta) pairs with snec(eta), rnec(zeta), rboundsextra(zeta),
// rmixedcap(zeta) and srdisjunct(eta, zeta), lexicographically sorted.
struct TuplePair {
  AngleCount eta, zeta;
  auto operator<=>(const TuplePair&) const = default;
};
std::vector<TuplePair> enumerate_K();

// All mid-circle tuples passing rnec and rboundsextra, sorted. Strictly
// larger than the zeta set of enumerate_K: the rmixedcap cut is not applied.
std::vector<AngleCount> enumerate_rnec_capped();

// Evaluate one of the named corona predicates; throws std::invalid_argument
// for an unknown name. Composite names (snec, rnec, onec) are conjunctions.
bool predicate_by_name(const std::string& name, const AngleCount& xi);

}  // namespace tripack
