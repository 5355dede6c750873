#include "tripack/tuples.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tripack {

std::string AngleCount::str() const {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    if (i) out += ',';
    out += std::to_string(v[static_cast<size_t>(i)]);
  }
  return out;
}

AngleCount AngleCount::parse(const std::string& csv) {
  AngleCount x;
  std::stringstream ss(csv);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 6) throw std::invalid_argument("expected 6 components: " + csv);
    x[i++] = std::stoi(tok);
  }
  if (i != 6) throw std::invalid_argument("expected 6 components: " + csv);
  return x;
}

char size_class_letter(SizeClass c) {
  switch (c) {
    case SizeClass::small: return 's';
    case SizeClass::mid: return 'r';
    case SizeClass::large: return '1';
  }
  return '?';
}

namespace {

int pair_index(SizeClass a, SizeClass b) {
  int i = static_cast<int>(a), j = static_cast<int>(b);
  if (i > j) std::swap(i, j);
  // (i,j) with small=0, mid=1, large=2
  if (i == 2) return 0;           // {1,1}
  if (i == 1 && j == 1) return 1; // {r,r}
  if (i == 0 && j == 0) return 2; // {s,s}
  if (i == 1 && j == 2) return 3; // {1,r}
  if (i == 0 && j == 2) return 4; // {1,s}
  return 5;                       // {r,s}
}

// vertex order used by the Eulerian walk: 0 small, 1 mid, 2 large
struct Multigraph {
  long adj[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  explicit Multigraph(const AngleCount& x) {
    adj[2][2] = x[0];
    adj[1][1] = x[1];
    adj[0][0] = x[2];
    adj[1][2] = adj[2][1] = x[3];
    adj[0][2] = adj[2][0] = x[4];
    adj[0][1] = adj[1][0] = x[5];
  }
  long degree(int v) const { return 2 * adj[v][v] + adj[v][(v + 1) % 3] + adj[v][(v + 2) % 3]; }
};

}  // namespace

AngleCount encode_cycle(const NeighborCycle& cycle) {
  AngleCount x;
  size_t n = cycle.size();
  for (size_t i = 0; i < n; ++i) x[pair_index(cycle[i], cycle[(i + 1) % n])]++;
  return x;
}

bool seq_realizable(const AngleCount& x) {
  if (x.sum() == 0) return false;
  Multigraph g(x);
  for (int v = 0; v < 3; ++v)
    if (g.degree(v) % 2 != 0) return false;
  // positive-degree vertices must form one component under non-loop edges
  int root = -1;
  for (int v = 0; v < 3; ++v)
    if (g.degree(v) > 0) { root = v; break; }
  bool seen[3] = {false, false, false};
  seen[root] = true;
  for (int pass = 0; pass < 3; ++pass)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b && seen[a] && g.adj[a][b] > 0) seen[b] = true;
  for (int v = 0; v < 3; ++v)
    if (g.degree(v) > 0 && !seen[v]) return false;
  return true;
}

NeighborCycle decode_cycle(const AngleCount& x) {
  if (!seq_realizable(x)) throw std::invalid_argument("no cyclic sequence realizes " + x.str());
  Multigraph g(x);
  int start = 2;
  while (g.degree(start) == 0) --start;
  std::vector<int> stack{start}, circuit;
  while (!stack.empty()) {
    int v = stack.back();
    if (g.degree(v) > 0) {
      int u = 0;
      while (g.adj[v][u] == 0) ++u;
      g.adj[v][u]--;
      if (u != v) g.adj[u][v]--;
      stack.push_back(u);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  circuit.pop_back();  // closing vertex repeats the first
  NeighborCycle cycle(circuit.size());
  for (size_t i = 0; i < circuit.size(); ++i) cycle[i] = static_cast<SizeClass>(circuit[i]);
  return cycle;
}

bool mod2(const AngleCount& x) {
  return x.dot({2, 0, 0, 1, 1, 0}) % 2 == 0 && x.dot({0, 2, 0, 1, 0, 1}) % 2 == 0 &&
         x.dot({0, 0, 2, 0, 1, 1}) % 2 == 0;
}

bool sbounds(const AngleCount& eta) {
  return eta.dot({1, 1, 1, 1, 1, 1}) < 6 && eta.dot({6, 6, 2, 6, 3, 3}) > 12;
}

bool snonhex(const AngleCount& eta) { return eta.dot({1, 1, 0, 1, 1, 1}) != 0; }

bool snec(const AngleCount& eta) {
  return sbounds(eta) && snonhex(eta) && seq_realizable(eta) && mod2(eta);
}

bool rbounds(const AngleCount& zeta) {
  return zeta.dot({1, 1, 0, 1, 0, 0}) < 6 && zeta.dot({6, 2, 2, 3, 3, 2}) > 12 &&
         zeta.dot({2, 2, 0, 2, 1, 1}) <= 12;
}

bool rnonhex(const AngleCount& zeta) { return zeta.dot({1, 0, 1, 1, 1, 1}) != 0; }

bool rfewlargeneighbors(const AngleCount& zeta) {
  return zeta.dot({2, 0, 0, 1, 1, 0}) == 0 || zeta.dot({2, 2, 0, 2, 1, 1}) < 12;
}

bool rnec(const AngleCount& zeta) {
  return rbounds(zeta) && rnonhex(zeta) && seq_realizable(zeta) && mod2(zeta) &&
         rfewlargeneighbors(zeta);
}

bool rverticalcont(const AngleCount& zeta) { return zeta.dot({0, 0, 1, 0, 1, 1}) == 0; }

bool rboundsextra(const AngleCount& zeta) { return zeta[2] < 35; }

bool rmixedcap(const AngleCount& zeta) { return zeta[4] <= 6; }

bool srdisjunct(const AngleCount& eta, const AngleCount& zeta) {
  return eta.dot({1, 0, 0, 1, 1, 0}) != 0 || zeta.dot({1, 0, 0, 1, 1, 0}) != 0;
}

bool ononhex(const AngleCount& xi) { return xi.dot({0, 1, 1, 1, 1, 1}) != 0 && xi[0] < 6; }

bool onec(const AngleCount& xi) { return ononhex(xi) && seq_realizable(xi) && mod2(xi); }

std::vector<AngleCount> enumerate_snec() {
  std::vector<AngleCount> out;
  AngleCount x;
  // sum < 6 by the first sbounds inequality
  for (x[0] = 0; x[0] <= 5; ++x[0])
    for (x[1] = 0; x[0] + x[1] <= 5; ++x[1])
      for (x[2] = 0; x[0] + x[1] + x[2] <= 5; ++x[2])
        for (x[3] = 0; x[0] + x[1] + x[2] + x[3] <= 5; ++x[3])
          for (x[4] = 0; x[0] + x[1] + x[2] + x[3] + x[4] <= 5; ++x[4])
            for (x[5] = 0; x.sum() <= 5; ++x[5])
              if (snec(x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AngleCount> enumerate_rnec_capped() {
  std::vector<AngleCount> out;
  AngleCount z;
  // zeta[0]+zeta[1]+zeta[3] < 6 and 2(zeta[0]+zeta[1]+zeta[3])+zeta[4]+zeta[5] <= 12
  // bound the box; zeta[2] <= 34 from rboundsextra
  for (z[0] = 0; z[0] <= 5; ++z[0])
    for (z[1] = 0; z[0] + z[1] <= 5; ++z[1])
      for (z[3] = 0; z[0] + z[1] + z[3] <= 5; ++z[3]) {
        int cap = 12 - 2 * (z[0] + z[1] + z[3]);
        for (z[4] = 0; z[4] <= cap; ++z[4])
          for (z[5] = 0; z[4] + z[5] <= cap; ++z[5])
            for (z[2] = 0; z[2] <= 34; ++z[2])
              if (rnec(z) && rboundsextra(z)) out.push_back(z);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TuplePair> enumerate_K() {
  std::vector<AngleCount> etas = enumerate_snec();
  std::vector<AngleCount> zetas = enumerate_rnec_capped();
  std::array<int, 6> large_contact{1, 0, 0, 1, 1, 0};
  std::vector<TuplePair> out;
  for (const AngleCount& e : etas) {
    bool e_large = e.dot(large_contact) != 0;
    for (const AngleCount& z : zetas) {
      if (!rmixedcap(z)) continue;
      if (e_large || z.dot(large_contact) != 0) out.push_back({e, z});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool predicate_by_name(const std::string& name, const AngleCount& xi) {
  if (name == "seq") return seq_realizable(xi);
  if (name == "mod2") return mod2(xi);
  if (name == "sbounds") return sbounds(xi);
  if (name == "snonhex") return snonhex(xi);
  if (name == "snec") return snec(xi);
  if (name == "rbounds") return rbounds(xi);
  if (name == "rnonhex") return rnonhex(xi);
  if (name == "rfewlargeneighbors") return rfewlargeneighbors(xi);
  if (name == "rnec") return rnec(xi);
  if (name == "rverticalcont") return rverticalcont(xi);
  if (name == "rboundsextra") return rboundsextra(xi);
  if (name == "rmixedcap") return rmixedcap(xi);
  if (name == "ononhex") return ononhex(xi);
  if (name == "onec") return onec(xi);
  throw std::invalid_argument("unknown predicate: " + name);
}

}  // namespace tripack
