#include "latcon/core.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace latcon {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_poset: return "NotAPoset";
    case errc::no_meet: return "NoMeet";
    case errc::no_join: return "NoJoin";
    case errc::mixed_lattices: return "MixedLattices";
    case errc::not_in_lattice: return "NotInLattice";
    case errc::not_distributive: return "NotDistributive";
    case errc::not_meet_preserving: return "NotMeetPreserving";
    case errc::not_join_preserving: return "NotJoinPreserving";
    case errc::not_bounded: return "NotBounded";
    case errc::misaligned: return "Misaligned";
    case errc::theorem_violation: return "TheoremViolation";
    case errc::regression_failure: return "RegressionFailure";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::unknown_property: return "UnknownProperty";
    case errc::size_too_large: return "SizeTooLarge";
    case errc::trivial_algebra: return "TrivialAlgebra";
    case errc::bad_input: return "BadInput";
  }
  return "Error";
}

uint64_t next_lattice_id() {
  static std::atomic<uint64_t> counter{1};
  return counter.fetch_add(1);
}

namespace {

void set_bit(std::vector<uint64_t>& rows, int words, int i, int j) {
  rows[size_t(i) * words + (j >> 6)] |= uint64_t(1) << (j & 63);
}

int popcount_row(const std::vector<uint64_t>& rows, int words, int i) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += __builtin_popcountll(rows[size_t(i) * words + w]);
  return c;
}

// Greatest element of the candidate set `cand` (a word-row of length
// `words`), or -1. Relies on `pos` being a linear extension: the greatest
// element of any subset, when it exists, has the largest topo position.
int greatest_of(const Lattice& L, const uint64_t* cand) {
  int best = -1;
  for (int w = 0; w < L.words; ++w) {
    uint64_t m = cand[w];
    while (m) {
      int j = w * 64 + __builtin_ctzll(m);
      m &= m - 1;
      if (best < 0 || L.pos[j] > L.pos[best]) best = j;
    }
  }
  if (best < 0) return -1;
  // verify dominance: cand subset of down(best)
  const uint64_t* db = L.down_row(best);
  for (int w = 0; w < L.words; ++w)
    if (cand[w] & ~db[w]) return -1;
  return best;
}

int least_of(const Lattice& L, const uint64_t* cand) {
  int best = -1;
  for (int w = 0; w < L.words; ++w) {
    uint64_t m = cand[w];
    while (m) {
      int j = w * 64 + __builtin_ctzll(m);
      m &= m - 1;
      if (best < 0 || L.pos[j] < L.pos[best]) best = j;
    }
  }
  if (best < 0) return -1;
  const uint64_t* ub = L.up_row(best);
  for (int w = 0; w < L.words; ++w)
    if (cand[w] & ~ub[w]) return -1;
  return best;
}

}  // namespace

Lattice validate_lattice(const LatticeInput& input) {
  Lattice L;
  L.name = input.name;
  int n = input.n;
  if (n == 0) n = input.has_leq ? int(input.leq.size()) : int(input.labels.size());
  if (n <= 0) throw error(errc::bad_input, "empty element set");
  L.n = n;
  L.labels = input.labels;
  if (L.labels.empty()) {
    for (int i = 0; i < n; ++i) L.labels.push_back("e" + std::to_string(i));
  }
  if (int(L.labels.size()) != n)
    throw error(errc::bad_input, "label count does not match element count");
  L.words = (n + 63) / 64;
  L.up_.assign(size_t(n) * L.words, 0);
  L.down_.assign(size_t(n) * L.words, 0);

  if (input.has_leq) {
    if (int(input.leq.size()) != n)
      throw error(errc::bad_input, "leq matrix size mismatch");
    for (int i = 0; i < n; ++i) {
      if (int(input.leq[i].size()) != n)
        throw error(errc::bad_input, "leq row size mismatch");
      if (!input.leq[i][i])
        throw error(errc::not_a_poset, "not reflexive at " + L.labels[i], i, i);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (input.leq[i][j]) {
          if (i != j && input.leq[j][i])
            throw error(errc::not_a_poset,
                        "not antisymmetric: " + L.labels[i] + " and " + L.labels[j], i, j);
          set_bit(L.up_, L.words, i, j);
          set_bit(L.down_, L.words, j, i);
        }
    // transitivity: i <= j implies up(j) subset of up(i)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && L.leq(i, j))
          for (int w = 0; w < L.words; ++w)
            if (L.up_row(j)[w] & ~L.up_row(i)[w])
              throw error(errc::not_a_poset,
                          "not transitive through " + L.labels[i] + " <= " + L.labels[j], i, j);
  } else {
    // reachability closure of the cover DAG
    std::vector<std::vector<int>> above(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : input.covers) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw error(errc::bad_input, "cover index out of range");
      if (a == b) throw error(errc::not_a_poset, "self-loop at " + L.labels[a], a, a);
      above[a].push_back(b);
      ++indeg[b];
    }
    // Kahn order; a leftover node means a cycle
    std::vector<int> order, deg = indeg;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 0) order.push_back(i);
    for (size_t k = 0; k < order.size(); ++k)
      for (int b : above[order[k]])
        if (--deg[b] == 0) order.push_back(b);
    if (int(order.size()) != n) {
      int w = 0;
      while (deg[w] == 0) ++w;
      throw error(errc::not_a_poset, "cover cycle through " + L.labels[w], w, w);
    }
    for (int k = n - 1; k >= 0; --k) {
      int i = order[k];
      set_bit(L.up_, L.words, i, i);
      for (int b : above[i])
        for (int w = 0; w < L.words; ++w)
          L.up_[size_t(i) * L.words + w] |= L.up_[size_t(b) * L.words + w];
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (L.leq(i, j)) set_bit(L.down_, L.words, j, i);
  }

  // |down(.)| is strictly monotone along <, so sorting by it gives a
  // linear extension
  L.topo.resize(n);
  std::iota(L.topo.begin(), L.topo.end(), 0);
  std::vector<int> dsz(n);
  for (int i = 0; i < n; ++i) dsz[i] = popcount_row(L.down_, L.words, i);
  std::stable_sort(L.topo.begin(), L.topo.end(),
                   [&](int a, int b) { return dsz[a] < dsz[b]; });
  L.pos.resize(n);
  for (int k = 0; k < n; ++k) L.pos[L.topo[k]] = k;

  L.meet_.assign(size_t(n) * n, 0);
  L.join_.assign(size_t(n) * n, 0);
  std::vector<uint64_t> cand(L.words);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      for (int w = 0; w < L.words; ++w)
        cand[w] = L.down_row(a)[w] & L.down_row(b)[w];
      int m = greatest_of(L, cand.data());
      if (m < 0)
        throw error(errc::no_meet, L.labels[a] + " and " + L.labels[b] + " have no glb", a, b);
      L.meet_[size_t(a) * n + b] = L.meet_[size_t(b) * n + a] = m;
      for (int w = 0; w < L.words; ++w)
        cand[w] = L.up_row(a)[w] & L.up_row(b)[w];
      int j = least_of(L, cand.data());
      if (j < 0)
        throw error(errc::no_join, L.labels[a] + " and " + L.labels[b] + " have no lub", a, b);
      L.join_[size_t(a) * n + b] = L.join_[size_t(b) * n + a] = j;
    }

  L.bottom = L.topo[0];
  L.top = L.topo[n - 1];
  L.id = next_lattice_id();
  return L;
}

Lattice lattice_from_covers(std::string name, std::vector<std::string> labels,
                            std::vector<std::pair<int, int>> covers) {
  LatticeInput in;
  in.name = std::move(name);
  in.labels = std::move(labels);
  in.covers = std::move(covers);
  return validate_lattice(in);
}

Lattice chain_lattice(int k) {
  if (k < 1) throw error(errc::bad_input, "chain needs at least one element");
  LatticeInput in;
  in.name = "chain" + std::to_string(k);
  for (int i = 0; i < k; ++i) in.labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < k; ++i) in.covers.push_back({i, i + 1});
  return validate_lattice(in);
}

Lattice mk_lattice(int k) {
  if (k < 1) throw error(errc::bad_input, "M_k needs k >= 1");
  LatticeInput in;
  in.name = "M" + std::to_string(k);
  in.labels.push_back("0");
  for (int i = 1; i <= k; ++i) in.labels.push_back("a" + std::to_string(i));
  in.labels.push_back("1");
  for (int i = 1; i <= k; ++i) {
    in.covers.push_back({0, i});
    in.covers.push_back({i, k + 1});
  }
  return validate_lattice(in);
}

CoverList hasse(const Lattice& L) {
  CoverList out;
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (!L.lt(a, b)) continue;
      bool cover = true;
      for (int c = 0; cover && c < L.n; ++c)
        if (c != a && c != b && L.lt(a, c) && L.lt(c, b)) cover = false;
      if (cover) out.push_back({a, b});
    }
  return out;
}

bool is_distributive(const Lattice& L) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      for (int z = 0; z < L.n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

bool is_modular(const Lattice& L) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      for (int z = 0; z < L.n; ++z)
        if (L.leq(x, z) && L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z))
          return false;
  return true;
}

bool is_chain(const Lattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = a + 1; b < L.n; ++b)
      if (!L.comparable(a, b)) return false;
  return true;
}

bool is_complemented(const Lattice& L) {
  for (int x = 0; x < L.n; ++x) {
    bool found = false;
    for (int y = 0; !found && y < L.n; ++y)
      if (L.meet(x, y) == L.bottom && L.join(x, y) == L.top) found = true;
    if (!found) return false;
  }
  return true;
}

bool is_relatively_complemented(const Lattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (!L.leq(a, b)) continue;
      for (int x = 0; x < L.n; ++x) {
        if (!(L.leq(a, x) && L.leq(x, b))) continue;
        bool found = false;
        for (int y = 0; !found && y < L.n; ++y) {
          if (!(L.leq(a, y) && L.leq(y, b))) continue;
          if (L.meet(x, y) == a && L.join(x, y) == b) found = true;
        }
        if (!found) return false;
      }
    }
  return true;
}

bool is_boolean_lattice(const Lattice& L) {
  return is_distributive(L) && is_complemented(L);
}

std::vector<int> cut_points(const Lattice& L) {
  std::vector<int> out;
  for (int c = 0; c < L.n; ++c) {
    if (c == L.bottom || c == L.top) continue;
    bool all = true;
    for (int x = 0; all && x < L.n; ++x)
      if (!L.comparable(c, x)) all = false;
    if (all) out.push_back(c);
  }
  return out;
}

std::string to_dot(const Lattice& L) {
  std::ostringstream os;
  os << "digraph \"" << (L.name.empty() ? "lattice" : L.name) << "\" {\n";
  os << "  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < L.n; ++i)
    os << "  n" << i << " [label=\"" << L.labels[i] << "\"];\n";
  for (auto [a, b] : hasse(L)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace latcon
