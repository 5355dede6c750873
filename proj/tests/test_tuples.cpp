#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "tripack/tuples.hpp"

using namespace tripack;

namespace {

// Every tuple with component sum <= cap, lexicographic order.
std::vector<AngleCount> box(int cap) {
  std::vector<AngleCount> out;
  AngleCount x;
  for (x[0] = 0; x[0] <= cap; ++x[0])
    for (x[1] = 0; x[0] + x[1] <= cap; ++x[1])
      for (x[2] = 0; x[0] + x[1] + x[2] <= cap; ++x[2])
        for (x[3] = 0; x[0] + x[1] + x[2] + x[3] <= cap; ++x[3])
          for (x[4] = 0; x[0] + x[1] + x[2] + x[3] + x[4] <= cap; ++x[4])
            for (x[5] = 0; x.sum() <= cap; ++x[5]) out.push_back(x);
  return out;
}

// Reference for seq_realizable: actually enumerate all cyclic label
// sequences up to the given length and encode them.
std::set<AngleCount> realizable_by_enumeration(int max_len) {
  std::set<AngleCount> seen;
  for (int n = 1; n <= max_len; ++n) {
    std::vector<SizeClass> seq(static_cast<size_t>(n));
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < n; ++i) {
        seq[static_cast<size_t>(i)] = static_cast<SizeClass>(c % 3);
        c /= 3;
      }
      seen.insert(encode_cycle(seq));
    }
  }
  return seen;
}

const AngleCount table55[55] = {
    {0, 0, 0, 1, 1, 3}, {0, 0, 0, 1, 3, 1}, {0, 0, 0, 2, 0, 2}, {0, 0, 0, 2, 2, 0},
    {0, 0, 0, 3, 1, 1}, {0, 0, 0, 4, 0, 0}, {0, 0, 1, 0, 0, 4}, {0, 0, 1, 0, 2, 2},
    {0, 0, 1, 0, 4, 0}, {0, 0, 1, 1, 1, 1}, {0, 0, 1, 2, 0, 2}, {0, 0, 1, 2, 2, 0},
    {0, 0, 2, 1, 1, 1}, {0, 1, 0, 0, 0, 4}, {0, 1, 0, 0, 2, 2}, {0, 1, 0, 1, 1, 1},
    {0, 1, 0, 2, 0, 0}, {0, 1, 0, 2, 0, 2}, {0, 1, 0, 2, 2, 0}, {0, 1, 0, 4, 0, 0},
    {0, 1, 1, 0, 0, 2}, {0, 1, 1, 1, 1, 1}, {0, 1, 2, 0, 0, 2}, {0, 2, 0, 0, 0, 2},
    {0, 2, 0, 1, 1, 1}, {0, 2, 0, 2, 0, 0}, {0, 2, 1, 0, 0, 2}, {0, 3, 0, 0, 0, 0},
    {0, 3, 0, 0, 0, 2}, {0, 3, 0, 2, 0, 0}, {0, 4, 0, 0, 0, 0}, {0, 5, 0, 0, 0, 0},
    {1, 0, 0, 0, 2, 2}, {1, 0, 0, 0, 4, 0}, {1, 0, 0, 1, 1, 1}, {1, 0, 0, 2, 0, 0},
    {1, 0, 0, 2, 0, 2}, {1, 0, 0, 2, 2, 0}, {1, 0, 0, 4, 0, 0}, {1, 0, 1, 0, 2, 0},
    {1, 0, 1, 1, 1, 1}, {1, 0, 2, 0, 2, 0}, {1, 1, 0, 1, 1, 1}, {1, 1, 0, 2, 0, 0},
    {1, 2, 0, 2, 0, 0}, {2, 0, 0, 0, 2, 0}, {2, 0, 0, 1, 1, 1}, {2, 0, 0, 2, 0, 0},
    {2, 0, 1, 0, 2, 0}, {2, 1, 0, 2, 0, 0}, {3, 0, 0, 0, 0, 0}, {3, 0, 0, 0, 2, 0},
    {3, 0, 0, 2, 0, 0}, {4, 0, 0, 0, 0, 0}, {5, 0, 0, 0, 0, 0}};

}  // namespace

TEST_CASE("seq_realizable agrees with cyclic-sequence enumeration up to length 7") {
  std::set<AngleCount> ref = realizable_by_enumeration(7);
  for (const AngleCount& x : box(7)) {
    bool expect = ref.count(x) > 0;
    CHECK_MESSAGE(seq_realizable(x) == expect, x.str());
  }
}

TEST_CASE("decode_cycle round trips and rejects") {
  for (const AngleCount& x : box(7)) {
    if (seq_realizable(x)) {
      NeighborCycle c = decode_cycle(x);
      CHECK(static_cast<int>(c.size()) == x.sum());
      CHECK(encode_cycle(c) == x);
    } else {
      CHECK_THROWS_AS((void)decode_cycle(x), std::invalid_argument);
    }
  }
}

TEST_CASE("encode_cycle on a hand-written cycle") {
  using S = SizeClass;
  NeighborCycle c{S::large, S::mid, S::small, S::mid, S::small};
  AngleCount x = encode_cycle(c);
  CHECK(x == AngleCount{0, 0, 0, 1, 1, 3});
}

TEST_CASE("mod2 equals the even-degree condition of the transition multigraph") {
  for (const AngleCount& x : box(7)) {
    bool even = x.dot({2, 0, 0, 1, 1, 0}) % 2 == 0 && x.dot({0, 2, 0, 1, 0, 1}) % 2 == 0 &&
                x.dot({0, 0, 2, 0, 1, 1}) % 2 == 0;
    CHECK(mod2(x) == even);
  }
}

TEST_CASE("small-corona enumeration matches the frozen table") {
  std::vector<AngleCount> got = enumerate_snec();
  REQUIRE(got.size() == 55);
  for (size_t i = 0; i < 55; ++i) CHECK(got[i] == table55[i]);
}

TEST_CASE("spot predicates") {
  CHECK(snec(AngleCount{0, 0, 1, 0, 2, 2}));
  CHECK_FALSE(snec(AngleCount{0, 0, 5, 0, 0, 0}));  // hexagonal all-small corona
  CHECK(rnec(AngleCount{1, 0, 3, 0, 2, 0}));
  CHECK(rnec(AngleCount{0, 0, 3, 2, 2, 0}));
  CHECK(rnec(AngleCount{0, 0, 0, 2, 6, 0}));
  CHECK(rnec(AngleCount{1, 1, 0, 2, 2, 0}));
  CHECK(rnec(AngleCount{2, 0, 3, 0, 2, 0}));
  CHECK(rnec(AngleCount{1, 0, 4, 0, 2, 0}));
  CHECK_FALSE(rnonhex(AngleCount{0, 6, 0, 0, 0, 0}));
  CHECK(rverticalcont(AngleCount{1, 1, 0, 2, 0, 0}));
  CHECK_FALSE(rverticalcont(AngleCount{1, 0, 3, 0, 2, 0}));
  CHECK(onec(AngleCount{0, 0, 2, 4, 0, 4}));
  CHECK(onec(AngleCount{0, 2, 2, 0, 0, 4}));
  CHECK(onec(AngleCount{2, 1, 1, 2, 0, 2}));
  CHECK_FALSE(ononhex(AngleCount{6, 0, 0, 0, 0, 0}));  // hexagonal unit corona
  CHECK(srdisjunct(AngleCount{0, 0, 0, 1, 1, 3}, AngleCount{0, 1, 0, 0, 0, 4}));
  CHECK_FALSE(srdisjunct(AngleCount{0, 1, 1, 0, 0, 2}, AngleCount{0, 1, 0, 0, 0, 4}));
}

TEST_CASE("capped mid-corona enumeration is stable under a larger box") {
  // re-run the mid-tuple filter over a strictly larger box and compare
  std::vector<AngleCount> got = enumerate_rnec_capped();
  std::set<AngleCount> wide;
  AngleCount z;
  for (z[0] = 0; z[0] <= 7; ++z[0])
    for (z[1] = 0; z[1] <= 7; ++z[1])
      for (z[3] = 0; z[3] <= 7; ++z[3])
        for (z[4] = 0; z[4] <= 14; ++z[4])
          for (z[5] = 0; z[5] <= 14; ++z[5])
            for (z[2] = 0; z[2] <= 36; ++z[2])
              if (rnec(z) && rboundsextra(z)) wide.insert(z);
  CHECK(wide.size() == got.size());
  CHECK(std::set<AngleCount>(got.begin(), got.end()) == wide);
}

TEST_CASE("mixed-adjacency cap cuts exactly the high-count coronas") {
  CHECK(rmixedcap(AngleCount{{0, 0, 0, 2, 6, 0}}));
  CHECK_FALSE(rmixedcap(AngleCount{{0, 0, 0, 0, 8, 0}}));
  // (0,0,0,0,8,0) satisfies every other mid-corona condition
  CHECK(rnec(AngleCount{{0, 0, 0, 0, 8, 0}}));

  std::vector<AngleCount> zetas = enumerate_rnec_capped();
  long cut = 0;
  for (const AngleCount& z : zetas)
    if (!rmixedcap(z)) ++cut;
  CHECK(zetas.size() == 4826);
  CHECK(cut == 175);
}

TEST_CASE("pair enumeration has the expected cardinality") {
  std::vector<TuplePair> pairs = enumerate_K();
  CHECK(pairs.size() == 248395);
  for (size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i - 1] < pairs[i]);
}

TEST_CASE("predicate dispatch by name") {
  AngleCount hex{{0, 0, 0, 0, 8, 0}};
  CHECK(predicate_by_name("rnec", hex));
  CHECK_FALSE(predicate_by_name("rmixedcap", hex));
  CHECK(predicate_by_name("seq", hex));
  CHECK_THROWS_AS(predicate_by_name("bogus", hex), std::invalid_argument);
}
