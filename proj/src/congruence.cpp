#include "latcon/congruence.hpp"

#include <algorithm>
#include <unordered_set>

namespace latcon {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
  Partition to_partition() {
    for (int i = 0; i < int(parent.size()); ++i) parent[i] = find(i);
    return Partition::from_map(parent);
  }
};

Partition saturate(const Lattice& L, std::span<const std::pair<int, int>> seeds) {
  UnionFind uf(L.n);
  std::vector<std::pair<int, int>> work;
  for (auto [a, b] : seeds)
    if (uf.unite(a, b)) work.push_back({a, b});
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int z = 0; z < L.n; ++z) {
      int p = L.meet(x, z), q = L.meet(y, z);
      if (uf.unite(p, q)) work.push_back({p, q});
      p = L.join(x, z);
      q = L.join(y, z);
      if (uf.unite(p, q)) work.push_back({p, q});
    }
  }
  return uf.to_partition();
}

}  // namespace

bool is_congruence(const Lattice& L, const Partition& p) {
  if (p.size() != L.n) throw error(errc::bad_input, "partition size mismatch");
  // checking each element against its block minimum suffices
  for (int x = 0; x < L.n; ++x) {
    int r = p.rep[x];
    if (r == x) continue;
    for (int z = 0; z < L.n; ++z) {
      if (!p.same(L.meet(x, z), L.meet(r, z))) return false;
      if (!p.same(L.join(x, z), L.join(r, z))) return false;
    }
  }
  return true;
}

Partition principal_congruence(const Lattice& L, int a, int b) {
  if (a < 0 || a >= L.n || b < 0 || b >= L.n)
    throw error(errc::bad_input, "element index out of range");
  std::pair<int, int> seed[1] = {{a, b}};
  return saturate(L, seed);
}

Partition generated_congruence(const Lattice& L,
                               std::span<const std::pair<int, int>> pairs) {
  return saturate(L, pairs);
}

std::vector<std::pair<int, int>> partition_pairs(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.size(); ++i)
    if (p.rep[i] != i) out.push_back({p.rep[i], i});
  return out;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  int n = p.size();
  // pair-code (rep_p, rep_q) with a timestamped scratch table
  std::vector<int> out(n);
  std::vector<int> first(size_t(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    size_t code = size_t(p.rep[i]) * n + q.rep[i];
    if (first[code] < 0) first[code] = i;
    out[i] = first[code];
  }
  return Partition(std::move(out));
}

Partition partition_join(const Partition& p, const Partition& q) {
  int n = p.size();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    uf.unite(i, p.rep[i]);
    uf.unite(i, q.rep[i]);
  }
  return uf.to_partition();
}

namespace {
void check_same_lattice(const Lattice& L, const Congruence& c1, const Congruence& c2) {
  if (c1.lattice_id != L.id || c2.lattice_id != L.id)
    throw error(errc::mixed_lattices, "congruences live on different lattices");
}
}  // namespace

Congruence congruence_meet(const Lattice& L, const Congruence& c1, const Congruence& c2) {
  check_same_lattice(L, c1, c2);
  return {L.id, partition_meet(c1.part, c2.part)};
}

Congruence congruence_join(const Lattice& L, const Congruence& c1, const Congruence& c2) {
  check_same_lattice(L, c1, c2);
  Partition j = partition_join(c1.part, c2.part);
  // the equivalence-join of two congruences is already compatible
  if (!is_congruence(L, j))
    throw error(errc::theorem_violation, "join of congruences not compatible");
  return {L.id, j};
}

int ConLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(cons.begin(), cons.end(), p);
  if (it == cons.end() || !(*it == p)) return -1;
  return int(it - cons.begin());
}

std::vector<int> ConLattice::interval_above(int theta) const {
  if (theta < 0 || theta >= size())
    throw error(errc::not_in_lattice, "congruence index out of range");
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cons[theta].refines(cons[i])) out.push_back(i);
  return out;
}

ConLattice enumerate_con(const Lattice& L) {
  std::unordered_set<Partition, PartitionHash> seen;
  std::vector<Partition> pool;
  auto add = [&](Partition p) {
    if (seen.insert(p).second) pool.push_back(std::move(p));
  };
  add(Partition::singletons(L.n));
  for (int a = 0; a < L.n; ++a)
    for (int b = a + 1; b < L.n; ++b) add(principal_congruence(L, a, b));

  // close under binary join, frontier-style
  size_t frontier_begin = 0;
  while (frontier_begin < pool.size()) {
    size_t frontier_end = pool.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i)
      for (size_t j = 0; j < frontier_end; ++j) {
        Partition jn = partition_join(pool[i], pool[j]);
        if (!seen.count(jn)) {
          seen.insert(jn);
          pool.push_back(std::move(jn));
        }
      }
    frontier_begin = frontier_end;
  }

  ConLattice out;
  out.lattice_id = L.id;
  out.cons = std::move(pool);
  std::sort(out.cons.begin(), out.cons.end());

  int m = int(out.cons.size());
  LatticeInput in;
  in.name = "Con(" + (L.name.empty() ? "L" : L.name) + ")";
  in.n = m;
  in.has_leq = true;
  in.leq.assign(m, std::vector<uint8_t>(m, 0));
  for (int i = 0; i < m; ++i) {
    in.labels.push_back(out.cons[i].block_text());
    for (int j = 0; j < m; ++j)
      in.leq[i][j] = out.cons[i].refines(out.cons[j]) ? 1 : 0;
  }
  out.order = validate_lattice(in);
  out.delta = out.index_of(Partition::singletons(L.n));
  out.nabla = out.index_of(Partition::one_block(L.n));
  return out;
}

IntervalLattice interval_lattice(const ConLattice& conL, int theta) {
  IntervalLattice out;
  out.members = conL.interval_above(theta);
  int m = int(out.members.size());
  LatticeInput in;
  in.name = "[" + conL.cons[theta].block_text() + ")";
  in.n = m;
  in.has_leq = true;
  in.leq.assign(m, std::vector<uint8_t>(m, 0));
  for (int i = 0; i < m; ++i) {
    in.labels.push_back(conL.cons[out.members[i]].block_text());
    for (int j = 0; j < m; ++j)
      in.leq[i][j] = conL.cons[out.members[i]].refines(conL.cons[out.members[j]]) ? 1 : 0;
  }
  out.order = validate_lattice(in);
  return out;
}

Quotient quotient(const Lattice& L, const Partition& theta) {
  if (!is_congruence(L, theta))
    throw error(errc::bad_input, "partition is not a congruence");
  auto blocks = theta.blocks();
  int m = int(blocks.size());
  Quotient q;
  q.proj.assign(L.n, -1);
  for (int b = 0; b < m; ++b)
    for (int e : blocks[b]) q.proj[e] = b;

  LatticeInput in;
  in.name = (L.name.empty() ? "L" : L.name) + "/theta";
  in.n = m;
  for (int b = 0; b < m; ++b) {
    std::string lab = "{";
    for (size_t k = 0; k < blocks[b].size(); ++k)
      lab += (k ? "," : "") + L.labels[blocks[b][k]];
    lab += "}";
    in.labels.push_back(lab);
  }
  in.has_leq = true;
  in.leq.assign(m, std::vector<uint8_t>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int x = blocks[a][0], y = blocks[b][0];
      in.leq[a][b] = theta.same(L.meet(x, y), x) ? 1 : 0;
    }
  q.lat = validate_lattice(in);
  return q;
}

Partition project_congruence(const Quotient& q, const Partition& lambda) {
  int m = q.lat.n;
  std::vector<int> first(lambda.size(), -1), rep(m, -1);
  for (int e = 0; e < lambda.size(); ++e) {
    int r = lambda.rep[e];
    if (first[r] < 0) first[r] = q.proj[e];
    if (rep[q.proj[e]] >= 0 && rep[q.proj[e]] != first[r])
      throw error(errc::bad_input, "congruence does not contain the quotient kernel");
    rep[q.proj[e]] = first[r];
  }
  return Partition::from_map(rep);
}

}  // namespace latcon
