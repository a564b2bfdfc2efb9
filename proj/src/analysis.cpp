#include "latcon/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "latcon/construct.hpp"
#include "latcon/filters.hpp"
#include "latcon/io.hpp"
#include "latcon/spectra.hpp"

namespace latcon {

namespace {

// splitmix64; std:: distributions are not byte-stable across libraries
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return int(next() % uint64_t(n)); }
  bool coin(int percent) { return below(100) < percent; }
};

Lattice downset_lattice(Rng& rng, int min_size, int max_size) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int m = 1 + rng.below(7);
    std::vector<std::vector<char>> lt(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (rng.coin(40)) lt[i][j] = 1;
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (lt[i][k] && lt[k][j]) lt[i][j] = 1;
    // enumerate down-sets of the poset
    std::vector<uint32_t> downsets;
    for (uint32_t s = 0; s < (1u << m); ++s) {
      bool closed = true;
      for (int j = 0; closed && j < m; ++j)
        if (s >> j & 1)
          for (int i = 0; closed && i < m; ++i)
            if (lt[i][j] && !(s >> i & 1)) closed = false;
      if (closed) downsets.push_back(s);
    }
    int n = int(downsets.size());
    if (n < min_size || n > max_size) continue;
    LatticeInput in;
    in.name = "downset" + std::to_string(n);
    in.n = n;
    in.has_leq = true;
    in.leq.assign(n, std::vector<uint8_t>(n, 0));
    for (int a = 0; a < n; ++a) {
      in.labels.push_back("d" + std::to_string(a));
      for (int b = 0; b < n; ++b)
        in.leq[a][b] = (downsets[a] & ~downsets[b]) == 0 ? 1 : 0;
    }
    return validate_lattice(in);
  }
  throw error(errc::bad_input, "down-set sampling failed for the given bounds");
}

Lattice modular_mix(Rng& rng, int max_size) {
  auto leaf = [&]() {
    int k = 1 + rng.below(4);
    return std::make_shared<const Lattice>(mk_lattice(k));
  };
  std::shared_ptr<const Lattice> cur = leaf();
  for (int step = 0; step < 3; ++step) {
    if (!rng.coin(70)) break;
    auto next = leaf();
    if (rng.coin(50)) {
      if (cur->n * next->n > max_size) break;
      cur = direct_product({cur, next}).lat;
    } else {
      if (cur->n + next->n - 1 > max_size) break;
      cur = ordinal_sum({cur, next}).lat;
    }
  }
  return *cur;
}

}  // namespace

std::vector<Lattice> generate(const GeneratorSpec& spec, int count) {
  Rng rng(spec.seed);
  std::vector<Lattice> out;
  for (int i = 0; i < count; ++i) {
    switch (spec.family) {
      case Family::chain: {
        int span = spec.max_size - spec.min_size + 1;
        out.push_back(chain_lattice(spec.min_size + (i % std::max(1, span))));
        break;
      }
      case Family::downset:
        out.push_back(downset_lattice(rng, std::max(2, spec.min_size), spec.max_size));
        break;
      case Family::mk: {
        int klo = std::max(1, spec.min_size - 2);
        int khi = std::max(klo, spec.max_size - 2);
        out.push_back(mk_lattice(klo + rng.below(khi - klo + 1)));
        break;
      }
      case Family::small_random: {
        int n = std::min(7, spec.max_size);
        int lo = std::max(1, std::min(n, spec.min_size));
        int size = lo + rng.below(n - lo + 1);
        const auto& all = all_lattices(size);
        out.push_back(all[rng.below(int(all.size()))]);
        break;
      }
      case Family::modular_mix:
        out.push_back(modular_mix(rng, spec.max_size));
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// exhaustive enumeration up to isomorphism

namespace {

std::vector<uint64_t> element_invariants(const Lattice& L) {
  auto covers = hasse(L);
  std::vector<std::vector<int>> lower(L.n), upper(L.n);
  for (auto [a, b] : covers) {
    upper[a].push_back(b);
    lower[b].push_back(a);
  }
  std::vector<uint64_t> inv(L.n);
  for (int i = 0; i < L.n; ++i) {
    int d = 0, u = 0;
    for (int j = 0; j < L.n; ++j) {
      if (L.leq(j, i)) ++d;
      if (L.leq(i, j)) ++u;
    }
    inv[i] = (uint64_t(d) << 32) | (uint64_t(u) << 16) |
             (uint64_t(lower[i].size()) << 8) | upper[i].size();
  }
  for (int round = 0; round < 3; ++round) {
    std::vector<uint64_t> next(L.n);
    for (int i = 0; i < L.n; ++i) {
      uint64_t h = inv[i] * 0x9e3779b97f4a7c15ull + 12345;
      std::vector<uint64_t> lo, hi;
      for (int j : lower[i]) lo.push_back(inv[j]);
      for (int j : upper[i]) hi.push_back(inv[j]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      for (uint64_t v : lo) h = h * 1099511628211ull + v;
      h = h * 31 + 7;
      for (uint64_t v : hi) h = h * 1099511628211ull + v;
      next[i] = h;
    }
    inv = next;
  }
  return inv;
}

uint64_t certificate(const Lattice& L) {
  auto inv = element_invariants(L);
  std::sort(inv.begin(), inv.end());
  uint64_t h = uint64_t(L.n) * 1469598103934665603ull;
  for (uint64_t v : inv) h = h * 1099511628211ull + v;
  return h;
}

bool iso_backtrack(const Lattice& A, const Lattice& B,
                   const std::vector<uint64_t>& ia, const std::vector<uint64_t>& ib,
                   std::vector<int>& map, std::vector<char>& used, int k) {
  if (k == A.n) return true;
  int a = A.topo[k];
  for (int b = 0; b < B.n; ++b) {
    if (used[b] || ia[a] != ib[b]) continue;
    bool ok = true;
    for (int k2 = 0; ok && k2 < k; ++k2) {
      int a2 = A.topo[k2];
      if (A.leq(a, a2) != B.leq(b, map[a2]) || A.leq(a2, a) != B.leq(map[a2], b)) ok = false;
    }
    if (!ok) continue;
    map[a] = b;
    used[b] = 1;
    if (iso_backtrack(A, B, ia, ib, map, used, k + 1)) return true;
    used[b] = 0;
  }
  return false;
}

}  // namespace

bool lattices_isomorphic(const Lattice& A, const Lattice& B) {
  if (A.n != B.n) return false;
  auto ia = element_invariants(A), ib = element_invariants(B);
  auto sa = ia, sb = ib;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(A.n, -1);
  std::vector<char> used(A.n, 0);
  return iso_backtrack(A, B, ia, ib, map, used, 0);
}

namespace {

// DFS over strict down-set masks in a fixed linear extension; a bounded
// finite meet-semilattice is automatically a lattice, so only meets are
// constrained during the walk.
void lattice_dfs(int n, int i, std::vector<uint32_t>& D,
                 const std::function<void(const std::vector<uint32_t>&)>& emit) {
  if (i == n - 1) {
    D[n - 1] = (uint32_t(1) << (n - 1)) - 1;
    emit(D);
    return;
  }
  uint32_t universe = (uint32_t(1) << i) - 1;
  // masks containing the bottom, down-closed, meets defined
  for (uint32_t m = 1; m <= universe; m += 2) {  // bit 0 always present
    bool ok = true;
    for (int j = 1; ok && j < i; ++j)
      if (m >> j & 1) {
        if ((D[j] & ~m) != 0) ok = false;  // down-closure
      }
    for (int j = 1; ok && j < i; ++j) {
      if (m >> j & 1) continue;  // comparable, meet is j
      uint32_t common = m & D[j];
      // index order is a linear extension, so a greatest element of
      // `common` has to be its highest-index member
      if (common == 0) {
        ok = false;
        continue;
      }
      int c = 31 - __builtin_clz(common);
      if ((common & ~(D[c] | (uint32_t(1) << c))) != 0) ok = false;
    }
    if (!ok) continue;
    D[i] = m;
    lattice_dfs(n, i + 1, D, emit);
  }
}

Lattice lattice_from_masks(int n, const std::vector<uint32_t>& D) {
  LatticeInput in;
  in.name = "L" + std::to_string(n);
  in.n = n;
  in.has_leq = true;
  in.leq.assign(n, std::vector<uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    in.labels.push_back("e" + std::to_string(i));
    in.leq[i][i] = 1;
    for (int j = 0; j < i; ++j)
      if (D[i] >> j & 1) in.leq[j][i] = 1;
  }
  return validate_lattice(in);
}

}  // namespace

const std::vector<Lattice>& all_lattices(int n) {
  static std::map<int, std::vector<Lattice>> cache;
  if (n < 1 || n > 7)
    throw error(errc::size_too_large, "exhaustive enumeration is provided for 1..7 elements");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Lattice> reps;
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  if (n == 1) {
    reps.push_back(lattice_from_masks(1, {0}));
  } else {
    std::vector<uint32_t> D(n, 0);
    lattice_dfs(n, 1, D, [&](const std::vector<uint32_t>& masks) {
      Lattice cand = lattice_from_masks(n, masks);
      uint64_t cert = certificate(cand);
      auto& bucket = buckets[cert];
      for (int idx : bucket)
        if (lattices_isomorphic(cand, reps[idx])) return;
      bucket.push_back(int(reps.size()));
      reps.push_back(std::move(cand));
    });
  }
  auto [pos, inserted] = cache.emplace(n, std::move(reps));
  return pos->second;
}

SubdirectResult subdirectly_irreducible(const Lattice& L, const ConLattice& conL) {
  if (L.n <= 1) throw error(errc::trivial_algebra, "one-element lattice");
  SubdirectResult out;
  std::vector<int> minimal;
  for (int i = 0; i < conL.size(); ++i) {
    if (i == conL.delta) continue;
    bool is_min = true;
    for (int j = 0; is_min && j < conL.size(); ++j)
      if (j != conL.delta && j != i && conL.cons[j].refines(conL.cons[i])) is_min = false;
    if (is_min) minimal.push_back(i);
  }
  out.irreducible = minimal.size() == 1;
  if (out.irreducible) out.monolith = minimal[0];

  // cross-checks: delta strictly meet-irreducible, and delta in Spec
  bool smi = strictly_meet_irreducible(conL, conL.delta);
  SpectrumReport sr = classify(L, conL);
  bool in_spec = sr.in_spec(conL.delta);
  if (smi != out.irreducible || in_spec != out.irreducible)
    throw error(errc::theorem_violation,
                "subdirect irreducibility characterizations disagree on " + L.name);
  return out;
}

std::vector<std::vector<int>> enumerate_morphism_maps(const Lattice& dom, const Lattice& cod,
                                                      bool surjective_only,
                                                      bool bounded_only) {
  double total = 1;
  for (int i = 0; i < dom.n; ++i) total *= cod.n;
  if (total > 2e7)
    throw error(errc::size_too_large, "morphism enumeration space too large");
  std::vector<std::vector<int>> out;
  std::vector<int> f(dom.n, 0);
  while (true) {
    bool ok = true;
    if (bounded_only)
      ok = f[dom.bottom] == cod.bottom && f[dom.top] == cod.top;
    for (int x = 0; ok && x < dom.n; ++x)
      for (int y = x + 1; ok && y < dom.n; ++y)
        if (f[dom.meet(x, y)] != cod.meet(f[x], f[y]) ||
            f[dom.join(x, y)] != cod.join(f[x], f[y]))
          ok = false;
    if (ok && surjective_only) {
      std::vector<char> hit(cod.n, 0);
      for (int v : f) hit[v] = 1;
      for (int b = 0; ok && b < cod.n; ++b)
        if (!hit[b]) ok = false;
    }
    if (ok) out.push_back(f);
    int i = dom.n - 1;
    while (i >= 0 && ++f[i] == cod.n) f[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<std::vector<int>> enumerate_sublattices(const Lattice& L) {
  if (L.n > 16) throw error(errc::size_too_large, "sublattice enumeration capped at 16");
  std::vector<std::vector<int>> out;
  for (uint32_t s = 1; s < (1u << L.n); ++s) {
    bool closed = true;
    for (int a = 0; closed && a < L.n; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = a; closed && b < L.n; ++b) {
        if (!(s >> b & 1)) continue;
        if (!(s >> L.meet(a, b) & 1) || !(s >> L.join(a, b) & 1)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<int> elems;
    for (int i = 0; i < L.n; ++i)
      if (s >> i & 1) elems.push_back(i);
    out.push_back(std::move(elems));
  }
  return out;
}

// ---------------------------------------------------------------------
// sweeps

namespace {

std::string describe(const Lattice& L) {
  std::ostringstream os;
  os << (L.name.empty() ? "L" : L.name) << " (n=" << L.n << ", covers=";
  os << lattice_to_json(L)["covers"].dump() << ")";
  return os.str();
}

using LatticeProperty = std::function<std::string(const Lattice&)>;  // empty = pass

// Removes doubly irreducible non-extremal elements while the property
// still fails; such removals leave a sublattice.
Lattice shrink_counterexample(const Lattice& L0, const LatticeProperty& prop) {
  Lattice cur = L0;
  bool progressed = true;
  while (progressed && cur.n > 2) {
    progressed = false;
    auto covers = hasse(cur);
    std::vector<int> up(cur.n, 0), down(cur.n, 0);
    for (auto [a, b] : covers) {
      ++up[a];
      ++down[b];
    }
    for (int x = 0; x < cur.n; ++x) {
      if (x == cur.bottom || x == cur.top || up[x] != 1 || down[x] != 1) continue;
      LatticeInput in;
      in.name = cur.name + "-";
      in.n = cur.n - 1;
      in.has_leq = true;
      in.leq.assign(in.n, std::vector<uint8_t>(in.n, 0));
      std::vector<int> keep;
      for (int i = 0; i < cur.n; ++i)
        if (i != x) keep.push_back(i);
      for (int a = 0; a < in.n; ++a) {
        in.labels.push_back(cur.labels[keep[a]]);
        for (int b = 0; b < in.n; ++b)
          in.leq[a][b] = cur.leq(keep[a], keep[b]) ? 1 : 0;
      }
      try {
        Lattice smaller = validate_lattice(in);
        if (!prop(smaller).empty()) {
          cur = std::move(smaller);
          progressed = true;
          break;
        }
      } catch (const error&) {
      }
    }
  }
  return cur;
}

SweepReport run_lattice_property(const std::string& id, const LatticeProperty& prop,
                                 const std::vector<Lattice>& instances) {
  SweepReport rep;
  rep.property = id;
  for (const auto& L : instances) {
    ++rep.instances;
    std::string why = prop(L);
    if (!why.empty()) {
      ++rep.failures;
      if (rep.first_counterexample.empty()) {
        Lattice small = shrink_counterexample(L, prop);
        rep.first_counterexample = describe(small) + ": " + prop(small);
      }
    }
  }
  return rep;
}

struct AnalysisCache {
  std::unordered_map<uint64_t, AnalyzedLattice> by_id;
  const AnalyzedLattice& get(const Lattice& L) {
    auto it = by_id.find(L.id);
    if (it != by_id.end()) return it->second;
    auto an = analyze(std::make_shared<const Lattice>(L));
    return by_id.emplace(L.id, std::move(an)).first->second;
  }
};

std::string check_spec_max_con2(const AnalyzedLattice& an) {
  if (an.sr.spec != an.sr.max) return "Spec != Max";
  if (an.sr.max != an.sr.con2) return "Max != Con2";
  return "";
}

std::vector<Lattice> lattices_upto(int max_n) {
  std::vector<Lattice> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& L : all_lattices(n)) out.push_back(L);
  return out;
}

std::set<Partition> to_set(const ConLattice& con, const std::vector<int>& idx) {
  std::set<Partition> out;
  for (int i : idx) out.insert(con.cons[i]);
  return out;
}

}  // namespace

std::vector<std::string> sweep_property_names() {
  return {
      "distributive-spec-eq", "chain-spec-eq",       "modular-conbool",
      "cardquomax-gap",       "oracle-con",          "con2-prime-filters",
      "phi-smallest",         "surjective-admissibility",
      "surjective-concorrespondence", "surjective-moreonadm-literal",
      "bounded-morflat",      "im01-admissible",     "pullback-cardinality",
      "bounded-distributive-cod", "ftheta-admissibility",
      "quotient-interval-iso", "speccat",
      "ftheta-identity",      "admembed",            "embedsdired",
      "product-decomposition", "ordsum-decomposition", "prodsum-morphism-admissibility",
  };
}

SweepReport sweep(const std::string& id, const GeneratorSpec& spec, int count) {
  AnalysisCache cache;

  if (id == "distributive-spec-eq") {
    GeneratorSpec gs = spec;
    gs.family = Family::downset;
    auto instances = generate(gs, count);
    return run_lattice_property(id, [&](const Lattice& L) -> std::string {
      if (!is_distributive(L)) return "generator produced a non-distributive lattice";
      return check_spec_max_con2(cache.get(L));
    }, instances);
  }

  if (id == "chain-spec-eq") {
    std::vector<Lattice> instances;
    for (int n = std::max(1, spec.min_size); n <= spec.max_size; ++n)
      instances.push_back(chain_lattice(n));
    return run_lattice_property(id, [&](const Lattice& L) -> std::string {
      const auto& an = cache.get(L);
      if (an.con.size() != (1 << (L.n - 1))) return "chain congruence count is not 2^(n-1)";
      if (L.n >= 2) return check_spec_max_con2(an);
      return "";
    }, instances);
  }

  if (id == "modular-conbool") {
    GeneratorSpec gs = spec;
    gs.family = Family::modular_mix;
    auto instances = generate(gs, count);
    return run_lattice_property(id, [&](const Lattice& L) -> std::string {
      if (!is_modular(L)) return "generator produced a non-modular lattice";
      const auto& an = cache.get(L);
      if (an.sr.spec != an.sr.max) return "Spec != Max";
      if (!con_is_boolean(an.con)) return "Con(L) not Boolean";
      return "";
    }, instances);
  }

  if (id == "cardquomax-gap") {
    SweepReport rep;
    rep.property = id;
    bool saw2 = false, saw5 = false;
    for (const auto& L : lattices_upto(std::min(6, spec.max_size))) {
      ++rep.instances;
      const auto& an = cache.get(L);
      for (int mu : an.sr.max) {
        int k = an.sr.evidence[mu].class_count;
        if (k == 2) saw2 = true;
        if (k >= 5) saw5 = true;
        if (k == 3 || k == 4) {
          ++rep.failures;
          if (rep.first_counterexample.empty())
            rep.first_counterexample = describe(L) + ": maximal congruence " +
                                       an.con.cons[mu].block_text() + " has quotient size " +
                                       std::to_string(k);
        }
      }
    }
    if (!saw2 || !saw5) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample = "expected maximal quotient sizes 2 and >=5 to occur";
    }
    return rep;
  }

  if (id == "oracle-con") {
    auto instances = lattices_upto(std::min(7, spec.max_size));
    return run_lattice_property(id, [&](const Lattice& L) -> std::string {
      std::set<Partition> brute;
      for (const auto& p : all_partitions(L.n))
        if (is_congruence(L, p)) brute.insert(p);
      const auto& an = cache.get(L);
      std::set<Partition> fast(an.con.cons.begin(), an.con.cons.end());
      if (fast != brute) return "join-closure disagrees with partition filtering";
      return "";
    }, instances);
  }

  if (id == "con2-prime-filters") {
    std::vector<Lattice> instances = lattices_upto(std::min(6, spec.max_size));
    GeneratorSpec gs = spec;
    gs.family = Family::downset;
    for (auto& L : generate(gs, count)) instances.push_back(std::move(L));
    return run_lattice_property(id, [&](const Lattice& L) -> std::string {
      const auto& an = cache.get(L);
      auto via = con2_via_prime_filters(L);
      std::set<Partition> got(via.begin(), via.end());
      if (got != to_set(an.con, an.sr.con2)) return "prime-filter route misses Con2";
      return "";
    }, instances);
  }

  if (id == "phi-smallest") {
    GeneratorSpec gs = spec;
    gs.family = Family::downset;
    auto instances = generate(gs, count);
    return run_lattice_property(id, [&](const Lattice& L) -> std::string {
      const auto& an = cache.get(L);
      for (const auto& F : all_filters(L)) {
        Partition phi = phi_embedding(L, F);
        // least congruence having F as the class of the top
        const Partition* least = nullptr;
        for (const auto& c : an.con.cons) {
          uint64_t cls = 0;
          for (int i = 0; i < L.n; ++i)
            if (c.same(i, L.top)) cls |= uint64_t(1) << i;
          if (cls != F.mask) continue;
          if (!least || c.refines(*least)) least = &c;
        }
        if (!least || !(phi == *least)) return "phi(F) is not the least congruence with class F";
      }
      return "";
    }, instances);
  }

  if (id == "surjective-admissibility" || id == "surjective-concorrespondence" ||
      id == "surjective-moreonadm-literal") {
    SweepReport rep;
    rep.property = id;
    auto lats = lattices_upto(std::min(5, spec.max_size));
    for (const auto& A : lats)
      for (const auto& B : lats) {
        const auto& an_a = cache.get(A);
        const auto& an_b = cache.get(B);
        for (auto& fmap : enumerate_morphism_maps(A, B, true, false)) {
          ++rep.instances;
          Morphism f = validate_morphism(an_a.lat, an_b.lat, fmap, false);
          std::string why;
          if (id == "surjective-admissibility") {
            auto adm = check_admissibility(f, an_a, an_b);
            if (!adm.admissible) why = "not admissible: " + adm.spec_witness;
            else if (!adm.max_admissible) why = "not Max-admissible: " + adm.max_witness;
          } else if (id == "surjective-concorrespondence") {
            // images of congruences exhaust Con(B); above the kernel the
            // correspondence also carries Max onto Max
            Partition ker = kernel(f);
            std::set<Partition> images, max_above_ker;
            for (const auto& phi : an_a.con.cons)
              images.insert(direct_image(f, phi).part);
            for (int mu : an_a.sr.max)
              if (ker.refines(an_a.con.cons[mu]))
                max_above_ker.insert(direct_image(f, an_a.con.cons[mu]).part);
            std::set<Partition> con_b(an_b.con.cons.begin(), an_b.con.cons.end());
            if (images != con_b) why = "f(Con(A)) != Con(B)";
            else if (max_above_ker != to_set(an_b.con, an_b.sr.max))
              why = "f(Max(A) above Ker) != Max(B)";
          } else {
            std::set<Partition> max_images;
            for (int mu : an_a.sr.max)
              max_images.insert(direct_image(f, an_a.con.cons[mu]).part);
            if (max_images != to_set(an_b.con, an_b.sr.max)) why = "f(Max(A)) != Max(B)";
          }
          if (!why.empty()) {
            ++rep.failures;
            if (rep.first_counterexample.empty()) {
              std::ostringstream os;
              os << describe(A) << " -> " << describe(B) << " map [";
              for (size_t t = 0; t < fmap.size(); ++t) os << (t ? "," : "") << fmap[t];
              os << "]: " << why;
              rep.first_counterexample = os.str();
            }
          }
        }
      }
    return rep;
  }

  if (id == "bounded-morflat") {
    SweepReport rep;
    rep.property = id;
    auto lats = lattices_upto(std::min(5, spec.max_size));
    for (const auto& A : lats)
      for (const auto& B : lats) {
        const auto& an_a = cache.get(A);
        const auto& an_b = cache.get(B);
        for (auto& fmap : enumerate_morphism_maps(A, B, false, true)) {
          ++rep.instances;
          Morphism f = validate_morphism(an_a.lat, an_b.lat, fmap, true);
          std::string why;
          for (int i = 0; why.empty() && i < an_b.con.size(); ++i) {
            Partition pulled = inverse_image(f, an_b.con.cons[i]);
            bool psi_nabla = i == an_b.con.nabla;
            bool pull_nabla = pulled.classes() == 1;
            if (psi_nabla != pull_nabla) why = "(f*)^-1({nabla}) != {nabla}";
            else if (an_b.sr.in_con2(i) && pulled.classes() != 2)
              why = "f*(Con2) left Con2";
          }
          if (!why.empty()) {
            ++rep.failures;
            if (rep.first_counterexample.empty())
              rep.first_counterexample = describe(A) + " -> " + describe(B) + ": " + why;
          }
        }
      }
    return rep;
  }

  if (id == "im01-admissible" || id == "pullback-cardinality" ||
      id == "bounded-distributive-cod" || id == "ftheta-admissibility") {
    SweepReport rep;
    rep.property = id;
    auto lats = lattices_upto(std::min(4, spec.max_size));
    for (const auto& A : lats)
      for (const auto& B : lats) {
        const auto& an_a = cache.get(A);
        const auto& an_b = cache.get(B);
        bool bounded_only = id != "pullback-cardinality" && id != "ftheta-admissibility";
        for (auto& fmap : enumerate_morphism_maps(A, B, false, bounded_only)) {
          Morphism f = validate_morphism(an_a.lat, an_b.lat, fmap, bounded_only);
          std::string why;
          if (id == "im01-admissible") {
            auto img = f.image();
            std::vector<int> bounds{B.bottom, B.top};
            std::sort(bounds.begin(), bounds.end());
            bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
            if (img != bounds) continue;
            ++rep.instances;
            auto adm = check_admissibility(f, an_a, an_b);
            if (!adm.admissible || !adm.max_admissible)
              why = "two-valued morphism not (Max-)admissible";
            for (int psi = 0; why.empty() && psi < an_b.con.size(); ++psi)
              if (psi != an_b.con.nabla && inverse_image(f, an_b.con.cons[psi]).classes() != 2)
                why = "pullback of a proper congruence is not two-class";
          } else if (id == "pullback-cardinality") {
            ++rep.instances;
            for (int psi = 0; why.empty() && psi < an_b.con.size(); ++psi) {
              int pulled = inverse_image(f, an_b.con.cons[psi]).classes();
              int orig = an_b.con.cons[psi].classes();
              if (pulled > orig) why = "|dom/f*(psi)| exceeds |cod/psi|";
              if (f.surjective() && pulled != orig)
                why = "|dom/f*(psi)| != |cod/psi| for surjective f";
            }
          } else if (id == "bounded-distributive-cod") {
            if (!is_distributive(B)) continue;
            ++rep.instances;
            auto adm = check_admissibility(f, an_a, an_b);
            if (!adm.admissible || !adm.max_admissible)
              why = "morphism into a bounded distributive lattice not (Max-)admissible";
          } else {
            ++rep.instances;
            auto adm = check_admissibility(f, an_a, an_b);
            bool all_adm = true, all_max = true;
            for (int t = 0; t < an_a.con.size(); ++t) {
              InducedQuotient iq = induced_quotient_morphism(f, an_a.con.cons[t]);
              auto an_dq = analyze(std::make_shared<const Lattice>(iq.dom_q.lat));
              auto an_cq = analyze(std::make_shared<const Lattice>(iq.cod_q.lat));
              auto qadm = check_admissibility(iq.f_theta, an_dq, an_cq);
              all_adm = all_adm && qadm.admissible;
              all_max = all_max && qadm.max_admissible;
            }
            if (adm.admissible != all_adm)
              why = "f admissible differs from all f_(theta) admissible";
            else if (adm.max_admissible != all_max)
              why = "f Max-admissible differs from all f_(theta) Max-admissible";
          }
          if (!why.empty()) {
            ++rep.failures;
            if (rep.first_counterexample.empty())
              rep.first_counterexample = describe(A) + " -> " + describe(B) + ": " + why;
          }
        }
      }
    return rep;
  }

  if (id == "quotient-interval-iso" || id == "speccat") {
    SweepReport rep;
    rep.property = id;
    for (const auto& L : lattices_upto(std::min(6, spec.max_size))) {
      const auto& an = cache.get(L);
      for (int t = 0; t < an.con.size(); ++t) {
        ++rep.instances;
        Quotient q = quotient(L, an.con.cons[t]);
        auto qan = analyze(std::make_shared<const Lattice>(q.lat));
        std::string why;
        if (id == "quotient-interval-iso") {
          auto up = an.con.interval_above(t);
          if (int(up.size()) != qan.con.size()) why = "|Con(L/theta)| != |[theta)|";
          for (size_t i = 0; why.empty() && i < up.size(); ++i) {
            Partition pi = project_congruence(q, an.con.cons[up[i]]);
            if (qan.con.index_of(pi) < 0) why = "gamma/theta missing from Con(L/theta)";
            for (size_t j = 0; why.empty() && j < up.size(); ++j) {
              Partition pj = project_congruence(q, an.con.cons[up[j]]);
              if (an.con.cons[up[i]].refines(an.con.cons[up[j]]) != pi.refines(pj))
                why = "gamma -> gamma/theta does not preserve order";
            }
          }
        } else {
          std::set<Partition> got;
          for (int mu : qan.sr.max) got.insert(qan.con.cons[mu]);
          std::set<Partition> want;
          for (int mu : an.sr.max)
            if (an.con.cons[t].refines(an.con.cons[mu]))
              want.insert(project_congruence(q, an.con.cons[mu]));
          if (got != want) why = "Max(L/theta) != {mu/theta}";
        }
        if (!why.empty()) {
          ++rep.failures;
          if (rep.first_counterexample.empty())
            rep.first_counterexample =
                describe(L) + " theta=" + an.con.cons[t].block_text() + ": " + why;
        }
      }
    }
    return rep;
  }

  if (id == "ftheta-identity" || id == "admembed") {
    SweepReport rep;
    rep.property = id;
    int cap = std::min(5, spec.max_size);
    auto lats = lattices_upto(cap);
    for (const auto& A : lats)
      for (const auto& B : lats) {
        const auto& an_a = cache.get(A);
        const auto& an_b = cache.get(B);
        for (auto& fmap : enumerate_morphism_maps(A, B, false, false)) {
          ++rep.instances;
          Morphism f = validate_morphism(an_a.lat, an_b.lat, fmap, false);
          std::string why;
          if (id == "ftheta-identity") {
            for (int t = 0; why.empty() && t < an_a.con.size(); ++t) {
              InducedQuotient iq = induced_quotient_morphism(f, an_a.con.cons[t]);
              for (const auto& lambda : an_b.con.cons) {
                if (!iq.cg_image.refines(lambda)) continue;
                Partition lhs = inverse_image(iq.f_theta, project_congruence(iq.cod_q, lambda));
                Partition rhs = project_congruence(iq.dom_q, inverse_image(f, lambda));
                if (!(lhs == rhs)) {
                  why = "f_(theta)*(lambda/Cg) != f*(lambda)/theta";
                  break;
                }
              }
            }
          } else {
            Factorization fac = embedding_factorization(f);
            auto an_img = analyze(fac.image);
            auto adm_f = check_admissibility(f, an_a, an_b);
            auto adm_i = check_admissibility(fac.embed, an_img, an_b);
            if (adm_f.admissible != adm_i.admissible)
              why = "f admissible differs from embedding admissible";
            else if (adm_f.max_admissible != adm_i.max_admissible)
              why = "f Max-admissible differs from embedding Max-admissible";
          }
          if (!why.empty()) {
            ++rep.failures;
            if (rep.first_counterexample.empty())
              rep.first_counterexample = describe(A) + " -> " + describe(B) + ": " + why;
          }
        }
      }
    return rep;
  }

  if (id == "embedsdired") {
    SweepReport rep;
    rep.property = id;
    for (const auto& L : lattices_upto(std::min(6, spec.max_size))) {
      if (L.n < 2) continue;
      const auto& an = cache.get(L);
      if (!subdirectly_irreducible(L, an.con).irreducible) continue;
      for (const auto& elems : enumerate_sublattices(L)) {
        if (elems.size() < 2) continue;
        ++rep.instances;
        LatticeInput in;
        in.n = int(elems.size());
        in.name = L.name + "-sub";
        in.has_leq = true;
        in.leq.assign(in.n, std::vector<uint8_t>(in.n, 0));
        for (int a = 0; a < in.n; ++a) {
          in.labels.push_back(L.labels[elems[a]]);
          for (int b = 0; b < in.n; ++b)
            in.leq[a][b] = L.leq(elems[a], elems[b]) ? 1 : 0;
        }
        auto S = std::make_shared<const Lattice>(validate_lattice(in));
        std::vector<int> emb(elems.begin(), elems.end());
        Morphism inc = validate_morphism(S, an.lat, emb, false);
        auto an_s = analyze(S);
        auto adm = check_admissibility(inc, an_s, an);
        if (!adm.admissible) continue;  // hypothesis of the statement
        if (!subdirectly_irreducible(*S, an_s.con).irreducible) {
          ++rep.failures;
          if (rep.first_counterexample.empty())
            rep.first_counterexample =
                describe(L) + " sublattice " + describe(*S) + " not subdirectly irreducible";
        }
      }
    }
    return rep;
  }

  if (id == "product-decomposition" || id == "ordsum-decomposition") {
    SweepReport rep;
    rep.property = id;
    GeneratorSpec gs = spec;
    gs.family = Family::small_random;
    gs.max_size = std::min(5, spec.max_size);
    auto pool = generate(gs, std::max(2, count));
    for (size_t i = 0; i + 1 < pool.size(); i += 2) {
      auto A = std::make_shared<const Lattice>(pool[i]);
      auto B = std::make_shared<const Lattice>(pool[i + 1]);
      try {
        DecompReport dr = id == "product-decomposition"
                              ? verify_product_con(direct_product({A, B}))
                              : verify_sum_con(ordinal_sum({A, B}));
        ++rep.instances;
        if (!dr.pass()) {
          ++rep.failures;
          if (rep.first_counterexample.empty()) rep.first_counterexample = dr.text();
        }
      } catch (const error& e) {
        if (e.code != errc::size_too_large) throw;
      }
    }
    return rep;
  }

  if (id == "prodsum-morphism-admissibility") {
    SweepReport rep;
    rep.property = id;
    auto lats = lattices_upto(std::min(3, spec.max_size));
    std::vector<Morphism> pool;
    for (const auto& A : lats)
      for (const auto& B : lats) {
        const auto& an_a = cache.get(A);
        const auto& an_b = cache.get(B);
        for (auto& fmap : enumerate_morphism_maps(A, B, false, true))
          pool.push_back(validate_morphism(an_a.lat, an_b.lat, fmap, true));
      }
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = 0; j < pool.size(); j += 3) {
        const Morphism& f1 = pool[i];
        const Morphism& f2 = pool[j];
        if (f1.dom->n * f2.dom->n > 9 || f1.cod->n * f2.cod->n > 9) continue;
        ++rep.instances;
        Morphism comps[2] = {f1, f2};
        auto adm1 = check_admissibility(f1, cache.get(*f1.dom), cache.get(*f1.cod));
        auto adm2 = check_admissibility(f2, cache.get(*f2.dom), cache.get(*f2.cod));
        std::string why;
        {
          ProductMorphism pm = product_morphism(comps);
          auto adm = check_admissibility(pm.f, cache.get(*pm.dom.lat), cache.get(*pm.cod.lat));
          if (adm.admissible != (adm1.admissible && adm2.admissible))
            why = "product admissibility does not match components";
          if (why.empty() && adm.max_admissible != (adm1.max_admissible && adm2.max_admissible))
            why = "product Max-admissibility does not match components";
        }
        if (why.empty()) {
          SumMorphism sm = sum_morphism(comps);
          auto adm = check_admissibility(sm.f, cache.get(*sm.dom.lat), cache.get(*sm.cod.lat));
          if (adm.admissible != (adm1.admissible && adm2.admissible))
            why = "sum admissibility does not match components";
          if (why.empty() && adm.max_admissible != (adm1.max_admissible && adm2.max_admissible))
            why = "sum Max-admissibility does not match components";
        }
        if (!why.empty()) {
          ++rep.failures;
          if (rep.first_counterexample.empty())
            rep.first_counterexample = describe(*f1.dom) + "/" + describe(*f2.dom) + ": " + why;
        }
      }
    return rep;
  }

  throw error(errc::unknown_property, id);
}

std::string SweepReport::text() const {
  std::ostringstream os;
  os << property << ": " << instances << " instances, " << failures << " failures";
  if (!first_counterexample.empty()) os << "\n  first counterexample: " << first_counterexample;
  return os.str();
}

}  // namespace latcon
