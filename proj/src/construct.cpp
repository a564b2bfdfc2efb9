#include "latcon/construct.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "latcon/spectra.hpp"

namespace latcon {

int Product::index_of(std::span<const int> tuple) const {
  int idx = 0;
  for (size_t i = 0; i < factors.size(); ++i) idx += tuple[i] * stride[i];
  return idx;
}

std::vector<int> Product::tuple_of(int index) const {
  std::vector<int> t(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    t[i] = index / stride[i];
    index %= stride[i];
  }
  return t;
}

Product direct_product(std::vector<std::shared_ptr<const Lattice>> factors) {
  if (factors.empty()) throw error(errc::bad_input, "product needs a factor");
  Product P;
  P.factors = std::move(factors);
  int k = int(P.factors.size());
  P.stride.assign(k, 1);
  for (int i = k - 2; i >= 0; --i)
    P.stride[i] = P.stride[i + 1] * P.factors[i + 1]->n;
  int n = P.stride[0] * P.factors[0]->n;

  LatticeInput in;
  {
    std::ostringstream nm;
    for (int i = 0; i < k; ++i)
      nm << (i ? "x" : "") << (P.factors[i]->name.empty() ? "L" : P.factors[i]->name);
    in.name = nm.str();
  }
  in.n = n;
  in.has_leq = true;
  in.leq.assign(n, std::vector<uint8_t>(n, 0));
  std::vector<int> ta, tb;
  for (int a = 0; a < n; ++a) {
    ta = P.tuple_of(a);
    std::string lab = "(";
    for (int i = 0; i < k; ++i)
      lab += (i ? "," : "") + P.factors[i]->labels[ta[i]];
    lab += ")";
    in.labels.push_back(lab);
    for (int b = 0; b < n; ++b) {
      tb = P.tuple_of(b);
      bool le = true;
      for (int i = 0; le && i < k; ++i)
        if (!P.factors[i]->leq(ta[i], tb[i])) le = false;
      in.leq[a][b] = le ? 1 : 0;
    }
  }
  P.lat = std::make_shared<const Lattice>(validate_lattice(in));
  return P;
}

Partition product_congruence(const Product& P, std::span<const Partition> parts) {
  int k = int(P.factors.size());
  if (int(parts.size()) != k)
    throw error(errc::misaligned, "congruence count does not match factor count");
  for (int i = 0; i < k; ++i)
    if (parts[i].size() != P.factors[i]->n)
      throw error(errc::misaligned, "congruence does not fit factor " + std::to_string(i));
  int n = P.lat->n;
  std::vector<int> rep(n);
  std::vector<int> t(k);
  for (int a = 0; a < n; ++a) {
    t = P.tuple_of(a);
    for (int i = 0; i < k; ++i) t[i] = parts[i].rep[t[i]];
    rep[a] = P.index_of(t);
  }
  Partition p = Partition::from_map(rep);
  int expect = 1;
  for (int i = 0; i < k; ++i) expect *= parts[i].classes();
  if (p.classes() != expect)
    throw error(errc::theorem_violation, "product congruence class count mismatch");
  return p;
}

int OrdinalSum::index_of(int summand, int local) const {
  return offset[summand] + local;
}

OrdinalSum ordinal_sum(std::vector<std::shared_ptr<const Lattice>> summands) {
  if (summands.empty()) throw error(errc::bad_input, "ordinal sum needs a summand");
  OrdinalSum S;
  S.summands = std::move(summands);
  int k = int(S.summands.size());
  // Summands are laid out in topo position, so the glue index
  // offset[i] + n_i - 1 == offset[i+1] names both the top of summand i
  // and the bottom of summand i+1.
  std::vector<std::vector<int>> order(k);
  for (int i = 0; i < k; ++i) order[i] = S.summands[i]->topo;
  S.offset.assign(k, 0);
  int n = 0;
  for (int i = 0; i < k; ++i) {
    S.offset[i] = n - (i > 0 ? 1 : 0);
    n += S.summands[i]->n - (i > 0 ? 1 : 0);
  }

  LatticeInput in;
  {
    std::ostringstream nm;
    for (int i = 0; i < k; ++i)
      nm << (i ? "(+)" : "") << (S.summands[i]->name.empty() ? "L" : S.summands[i]->name);
    in.name = nm.str();
  }
  in.n = n;
  in.labels.assign(n, "");
  for (int i = 0; i < k; ++i)
    for (int p = (i > 0 ? 1 : 0); p < S.summands[i]->n; ++p)
      in.labels[S.offset[i] + p] = S.summands[i]->labels[order[i][p]] +
                                   (k > 1 ? "'" + std::to_string(i) : "");
  in.has_leq = true;
  in.leq.assign(n, std::vector<uint8_t>(n, 0));
  // within a summand: the summand's order; across: lower summand below upper
  auto where = [&](int g) {
    for (int i = k - 1; i >= 0; --i)
      if (g >= S.offset[i] + (i > 0 ? 1 : 0)) return i;
    return 0;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ia = where(a), ib = where(b);
      // the glue element belongs to both neighbours; normalize to lower
      if (ia < ib) {
        in.leq[a][b] = 1;
      } else if (ia > ib) {
        in.leq[a][b] = 0;
      } else {
        int la = order[ia][a - S.offset[ia]], lb = order[ib][b - S.offset[ib]];
        in.leq[a][b] = S.summands[ia]->leq(la, lb) ? 1 : 0;
      }
    }
  S.lat = std::make_shared<const Lattice>(validate_lattice(in));
  return S;
}

Partition sum_congruence(const OrdinalSum& S, std::span<const Partition> parts) {
  int k = int(S.summands.size());
  if (int(parts.size()) != k)
    throw error(errc::misaligned, "congruence count does not match summand count");
  for (int i = 0; i < k; ++i)
    if (parts[i].size() != S.summands[i]->n)
      throw error(errc::misaligned, "congruence does not fit summand " + std::to_string(i));
  int n = S.lat->n;
  // map each summand element to its global index (topo relabeling)
  std::vector<std::vector<int>> glob(k);
  for (int i = 0; i < k; ++i) {
    glob[i].assign(S.summands[i]->n, 0);
    for (int p = 0; p < S.summands[i]->n; ++p)
      glob[i][S.summands[i]->topo[p]] = S.offset[i] + p;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int e = 0; e < S.summands[i]->n; ++e)
      if (parts[i].rep[e] != e)
        pairs.push_back({glob[i][parts[i].rep[e]], glob[i][e]});
  // plain union suffices: glue identifications are already shared indices
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  };
  for (auto [a, b] : pairs) {
    int ra = find(a), rb = find(b);
    if (ra != rb) rep[std::max(ra, rb)] = std::min(ra, rb);
  }
  for (int i = 0; i < n; ++i) rep[i] = find(i);
  Partition p = Partition::from_map(rep);
  int expect = 1 - k;
  for (int i = 0; i < k; ++i) expect += parts[i].classes();
  if (p.classes() != expect)
    throw error(errc::theorem_violation, "sum congruence class count mismatch");
  return p;
}

namespace {

struct SpectraSets {
  std::set<Partition> spec, max, con2, all;
};

SpectraSets spectra_sets(const ConLattice& con, const SpectrumReport& sr) {
  SpectraSets s;
  for (const auto& c : con.cons) s.all.insert(c);
  for (int i : sr.spec) s.spec.insert(con.cons[i]);
  for (int i : sr.max) s.max.insert(con.cons[i]);
  for (int i : sr.con2) s.con2.insert(con.cons[i]);
  return s;
}

std::string DecompReportText(const DecompReport& r) {
  std::ostringstream os;
  os << r.construction << ": |Con| = " << r.con_size
     << ", combined congruences " << (r.con_matches ? "match" : "MISMATCH")
     << ", spec " << (r.spec_ok ? "ok" : "VIOLATION")
     << ", max " << (r.max_ok ? "ok" : "VIOLATION")
     << ", con2 " << (r.con2_ok ? "ok" : "VIOLATION");
  if (!r.witness.empty()) os << "\n  witness: " << r.witness;
  return os.str();
}

}  // namespace

std::string DecompReport::text() const { return DecompReportText(*this); }

DecompReport verify_product_con(const Product& P, int max_size) {
  if (P.lat->n > max_size)
    throw error(errc::size_too_large,
                "product size " + std::to_string(P.lat->n) + " above the verification bound");
  int k = int(P.factors.size());
  std::vector<AnalyzedLattice> facts;
  for (auto& f : P.factors) facts.push_back(analyze(f));
  AnalyzedLattice whole = analyze(P.lat);

  DecompReport rep;
  rep.construction = P.lat->name;
  rep.con_size = whole.con.size();

  // all tuples of factor congruences
  std::set<Partition> combined, spec_c, max_c, con2_c;
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<Partition> parts;
    for (int i = 0; i < k; ++i) parts.push_back(facts[i].con.cons[idx[i]]);
    Partition p = product_congruence(P, parts);
    combined.insert(p);
    // exactly one coordinate non-nabla, classified in its factor
    int nontrivial = -1;
    bool single = true;
    for (int i = 0; i < k; ++i)
      if (idx[i] != facts[i].con.nabla) {
        if (nontrivial >= 0) single = false;
        nontrivial = i;
      }
    if (single && nontrivial >= 0) {
      if (facts[nontrivial].sr.in_spec(idx[nontrivial])) spec_c.insert(p);
      if (facts[nontrivial].sr.in_max(idx[nontrivial])) max_c.insert(p);
      if (facts[nontrivial].sr.in_con2(idx[nontrivial])) con2_c.insert(p);
    }
    int i = k - 1;
    while (i >= 0 && ++idx[i] == facts[i].con.size()) idx[i--] = 0;
    if (i < 0) break;
  }

  SpectraSets got = spectra_sets(whole.con, whole.sr);
  rep.con_matches = got.all == combined;
  rep.spec_ok = got.spec == spec_c;
  rep.max_ok = got.max == max_c;
  rep.con2_ok = got.con2 == con2_c;
  if (!rep.pass()) rep.witness = "combined sets differ from enumerate_con classification";
  return rep;
}

DecompReport verify_sum_con(const OrdinalSum& S, int max_size) {
  if (S.lat->n > max_size)
    throw error(errc::size_too_large,
                "sum size " + std::to_string(S.lat->n) + " above the verification bound");
  int k = int(S.summands.size());
  std::vector<AnalyzedLattice> facts;
  for (auto& f : S.summands) facts.push_back(analyze(f));
  AnalyzedLattice whole = analyze(S.lat);

  DecompReport rep;
  rep.construction = S.lat->name;
  rep.con_size = whole.con.size();

  std::set<Partition> combined, spec_c, max_c, con2_c;
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<Partition> parts;
    for (int i = 0; i < k; ++i) parts.push_back(facts[i].con.cons[idx[i]]);
    Partition p = sum_congruence(S, parts);
    combined.insert(p);
    int nontrivial = -1;
    bool single = true;
    for (int i = 0; i < k; ++i)
      if (idx[i] != facts[i].con.nabla) {
        if (nontrivial >= 0) single = false;
        nontrivial = i;
      }
    if (single && nontrivial >= 0) {
      if (facts[nontrivial].sr.in_spec(idx[nontrivial])) spec_c.insert(p);
      if (facts[nontrivial].sr.in_max(idx[nontrivial])) max_c.insert(p);
      if (facts[nontrivial].sr.in_con2(idx[nontrivial])) con2_c.insert(p);
    }
    int i = k - 1;
    while (i >= 0 && ++idx[i] == facts[i].con.size()) idx[i--] = 0;
    if (i < 0) break;
  }

  SpectraSets got = spectra_sets(whole.con, whole.sr);
  rep.con_matches = got.all == combined;
  rep.spec_ok = got.spec == spec_c;
  rep.max_ok = got.max == max_c;
  rep.con2_ok = got.con2 == con2_c;
  if (!rep.pass()) rep.witness = "combined sets differ from enumerate_con classification";
  return rep;
}

ProductMorphism product_morphism(std::span<const Morphism> fs) {
  if (fs.empty()) throw error(errc::bad_input, "product morphism needs a component");
  ProductMorphism out;
  std::vector<std::shared_ptr<const Lattice>> doms, cods;
  for (const auto& f : fs) {
    if (!f.validated) throw error(errc::bad_input, "component is not a morphism");
    doms.push_back(f.dom);
    cods.push_back(f.cod);
  }
  out.dom = direct_product(std::move(doms));
  out.cod = direct_product(std::move(cods));
  int n = out.dom.lat->n;
  std::vector<int> map(n), t;
  for (int a = 0; a < n; ++a) {
    t = out.dom.tuple_of(a);
    for (size_t i = 0; i < fs.size(); ++i) t[i] = fs[i].map[t[i]];
    map[a] = out.cod.index_of(t);
  }
  out.f = validate_morphism(out.dom.lat, out.cod.lat, std::move(map), false);
  return out;
}

SumMorphism sum_morphism(std::span<const Morphism> fs) {
  if (fs.empty()) throw error(errc::bad_input, "sum morphism needs a component");
  SumMorphism out;
  std::vector<std::shared_ptr<const Lattice>> doms, cods;
  for (const auto& f : fs) {
    if (!f.validated) throw error(errc::bad_input, "component is not a morphism");
    if (!f.bounded) throw error(errc::not_bounded, "sum morphism needs bounded components");
    doms.push_back(f.dom);
    cods.push_back(f.cod);
  }
  out.dom = ordinal_sum(std::move(doms));
  out.cod = ordinal_sum(std::move(cods));
  int n = out.dom.lat->n;
  std::vector<int> map(n, -1);
  for (size_t i = 0; i < fs.size(); ++i) {
    const Lattice& D = *fs[i].dom;
    const Lattice& C = *fs[i].cod;
    for (int p = 0; p < D.n; ++p) {
      int local = D.topo[p];
      int g_dom = out.dom.offset[i] + p;
      int g_cod = out.cod.offset[i] + C.pos[fs[i].map[local]];
      if (map[g_dom] >= 0 && map[g_dom] != g_cod)
        throw error(errc::misaligned, "sum morphism disagrees on a glue element");
      map[g_dom] = g_cod;
    }
  }
  out.f = validate_morphism(out.dom.lat, out.cod.lat, std::move(map), false);
  return out;
}

}  // namespace latcon
