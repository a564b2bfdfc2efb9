#include "latcon/spectra.hpp"

#include <algorithm>
#include <sstream>

namespace latcon {

namespace {

std::vector<int> covers_above(const Lattice& order, int x) {
  std::vector<int> out;
  for (int y = 0; y < order.n; ++y) {
    if (!order.lt(x, y)) continue;
    bool cover = true;
    for (int z = 0; cover && z < order.n; ++z)
      if (z != x && z != y && order.lt(x, z) && order.lt(z, y)) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

bool member(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

bool SpectrumReport::in_spec(int i) const { return member(spec, i); }
bool SpectrumReport::in_max(int i) const { return member(max, i); }
bool SpectrumReport::in_con2(int i) const { return member(con2, i); }

bool meet_irreducible(const ConLattice& conL, int theta) {
  const Lattice& o = conL.order;
  for (int a = 0; a < o.n; ++a)
    for (int b = a + 1; b < o.n; ++b)
      if (o.meet(a, b) == theta && a != theta && b != theta) return false;
  return true;
}

bool strictly_meet_irreducible(const ConLattice& conL, int theta) {
  return covers_above(conL.order, theta).size() == 1;
}

SpectrumReport classify(const Lattice& L, const ConLattice& conL) {
  if (L.id != conL.lattice_id)
    throw error(errc::mixed_lattices, "congruence lattice belongs to a different lattice");
  const Lattice& o = conL.order;
  int m = conL.size();
  SpectrumReport sr;
  sr.lattice_id = conL.lattice_id;
  sr.evidence.resize(m);

  // one pass over all meets marks the reducible elements
  std::vector<char> reducible(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int v = o.meet(a, b);
      if (v != a && v != b) reducible[v] = 1;
    }

  for (int i = 0; i < m; ++i) {
    auto& ev = sr.evidence[i];
    ev.meet_irreducible = !reducible[i];
    ev.class_count = conL.cons[i].classes();
    auto cov = covers_above(o, i);
    ev.unique_successor = cov.size() == 1 ? cov[0] : -1;

    bool proper = i != conL.nabla;
    bool by_irred = proper && ev.meet_irreducible;
    bool by_successor = ev.unique_successor >= 0;
    if (by_irred != by_successor)
      throw error(errc::theorem_violation,
                  "spec characterizations disagree at " + conL.cons[i].block_text());
    if (by_irred) sr.spec.push_back(i);
    if (ev.class_count == 2) sr.con2.push_back(i);
    if (proper) {
      bool maximal = true;
      for (int j = 0; maximal && j < m; ++j)
        if (j != i && j != conL.nabla && o.lt(i, j)) maximal = false;
      if (maximal) {
        // [theta) must be the two-element interval {theta, nabla}
        if (conL.interval_above(i).size() != 2)
          throw error(errc::theorem_violation,
                      "maximal congruence with [theta) != {theta, nabla}");
        sr.max.push_back(i);
      }
    }
  }
  return sr;
}

bool con_is_boolean(const ConLattice& conL) {
  return is_boolean_lattice(conL.order);
}

namespace {

std::string set_text(const ConLattice& conL, const std::vector<int>& s) {
  std::string out = "{";
  for (size_t k = 0; k < s.size(); ++k)
    out += (k ? ", " : "") + conL.cons[s[k]].block_text();
  return out + "}";
}

void check_identity(ClassTheoremReport& rep, const std::string& hyp,
                    const std::string& id, const ConLattice& conL,
                    const std::vector<int>& lhs, const std::vector<int>& rhs) {
  ClassTheoremReport::Item item;
  item.hypothesis = hyp;
  item.identity = id;
  item.pass = lhs == rhs;
  if (!item.pass)
    item.witness = set_text(conL, lhs) + " vs " + set_text(conL, rhs);
  rep.all_pass = rep.all_pass && item.pass;
  rep.items.push_back(std::move(item));
}

}  // namespace

ClassTheoremReport verify_class_theorems(const Lattice& L, const ConLattice& conL,
                                         bool pentagon_composed) {
  SpectrumReport sr = classify(L, conL);
  ClassTheoremReport rep;

  bool distributive = is_distributive(L);
  bool chain = is_chain(L);
  bool modular = is_modular(L);
  bool relcomp = is_relatively_complemented(L);

  if (distributive)
    check_identity(rep, "bounded distributive", "Spec = Max = Con2", conL, sr.spec, sr.max);
  if (distributive)
    check_identity(rep, "bounded distributive", "Max = Con2", conL, sr.max, sr.con2);
  if (chain) {
    check_identity(rep, "chain", "Spec = Max", conL, sr.spec, sr.max);
    check_identity(rep, "chain", "Max = Con2", conL, sr.max, sr.con2);
  }
  if (modular || relcomp) {
    check_identity(rep, modular ? "finite modular" : "relatively complemented",
                   "Spec = Max", conL, sr.spec, sr.max);
    ClassTheoremReport::Item item;
    item.hypothesis = modular ? "finite modular" : "relatively complemented";
    item.identity = "Con(L) Boolean";
    item.pass = con_is_boolean(conL);
    if (!item.pass) item.witness = "congruence lattice is not Boolean";
    rep.all_pass = rep.all_pass && item.pass;
    rep.items.push_back(std::move(item));
  }
  if (pentagon_composed)
    check_identity(rep, "composed from chains/distributive/pentagon", "Max = Con2",
                   conL, sr.max, sr.con2);

  if (rep.items.empty()) {
    ClassTheoremReport::Item item;
    item.hypothesis = "none";
    item.identity = "no class theorem applies";
    item.pass = true;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

std::string spectrum_text(const Lattice& L, const ConLattice& conL,
                          const SpectrumReport& sr) {
  std::ostringstream os;
  os << "lattice " << (L.name.empty() ? "L" : L.name) << " (" << L.n << " elements)\n";
  os << "Con: " << conL.size() << " congruences\n";
  for (int i = 0; i < conL.size(); ++i) {
    os << "  #" << i << "  " << conL.cons[i].block_text(L.labels)
       << "  classes=" << sr.evidence[i].class_count;
    if (i == conL.delta) os << "  [delta]";
    if (i == conL.nabla) os << "  [nabla]";
    if (sr.in_spec(i)) os << "  spec";
    if (sr.in_max(i)) os << "  max";
    if (sr.in_con2(i)) os << "  con2";
    os << "\n";
  }
  auto line = [&](const char* tag, const std::vector<int>& s) {
    os << tag << " = {";
    for (size_t k = 0; k < s.size(); ++k)
      os << (k ? ", " : "") << "#" << s[k];
    os << "}\n";
  };
  line("Spec", sr.spec);
  line("Max", sr.max);
  line("Con2", sr.con2);
  os << "Con boolean: " << (con_is_boolean(conL) ? "yes" : "no") << "\n";
  return os.str();
}

std::string con_dot(const Lattice& L, const ConLattice& conL, const SpectrumReport& sr) {
  std::ostringstream os;
  os << "digraph \"Con(" << (L.name.empty() ? "L" : L.name) << ")\" {\n";
  os << "  rankdir=BT;\n  node [shape=box, style=filled];\n";
  for (int i = 0; i < conL.size(); ++i) {
    const char* color = "white";
    if (sr.in_con2(i)) color = "gold";
    else if (sr.in_max(i)) color = "orange";
    else if (sr.in_spec(i)) color = "lightblue";
    os << "  c" << i << " [label=\"" << conL.cons[i].block_text(L.labels)
       << "\", fillcolor=" << color << "];\n";
  }
  for (auto [a, b] : hasse(conL.order)) os << "  c" << a << " -> c" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace latcon
