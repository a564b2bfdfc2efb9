#include "latcon/morphism.hpp"

#include <algorithm>

namespace latcon {

bool Morphism::surjective() const {
  return int(image().size()) == cod->n;
}

std::vector<int> Morphism::image() const {
  std::vector<int> img(map);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

namespace {

void check_map_shape(const Lattice& dom, const Lattice& cod, const std::vector<int>& map) {
  if (int(map.size()) != dom.n)
    throw error(errc::bad_input, "map length does not match domain size");
  for (int v : map)
    if (v < 0 || v >= cod.n)
      throw error(errc::bad_input, "map value out of codomain range");
}

// Returns the first violated equation, or empty.
std::string morphism_defect(const Lattice& A, const Lattice& B,
                            const std::vector<int>& f, errc* code, int* wa, int* wb) {
  for (int x = 0; x < A.n; ++x)
    for (int y = x + 1; y < A.n; ++y) {
      if (f[A.meet(x, y)] != B.meet(f[x], f[y])) {
        *code = errc::not_meet_preserving;
        *wa = x;
        *wb = y;
        return "f(" + A.labels[x] + " ^ " + A.labels[y] + ") != f(" + A.labels[x] +
               ") ^ f(" + A.labels[y] + ")";
      }
      if (f[A.join(x, y)] != B.join(f[x], f[y])) {
        *code = errc::not_join_preserving;
        *wa = x;
        *wb = y;
        return "f(" + A.labels[x] + " v " + A.labels[y] + ") != f(" + A.labels[x] +
               ") v f(" + A.labels[y] + ")";
      }
    }
  return "";
}

}  // namespace

Morphism validate_morphism(std::shared_ptr<const Lattice> dom,
                           std::shared_ptr<const Lattice> cod,
                           std::vector<int> map, bool require_bounded) {
  check_map_shape(*dom, *cod, map);
  errc code = errc::bad_input;
  int wa = -1, wb = -1;
  std::string defect = morphism_defect(*dom, *cod, map, &code, &wa, &wb);
  if (!defect.empty()) throw error(code, defect, wa, wb);
  bool bounded = map[dom->bottom] == cod->bottom && map[dom->top] == cod->top;
  if (require_bounded && !bounded)
    throw error(errc::not_bounded, "map does not preserve the bounds");
  Morphism f;
  f.dom = std::move(dom);
  f.cod = std::move(cod);
  f.map = std::move(map);
  f.bounded = bounded;
  f.validated = true;
  return f;
}

Morphism unchecked_map(std::shared_ptr<const Lattice> dom,
                       std::shared_ptr<const Lattice> cod, std::vector<int> map) {
  check_map_shape(*dom, *cod, map);
  errc code = errc::bad_input;
  int wa = -1, wb = -1;
  Morphism f;
  f.defect = morphism_defect(*dom, *cod, map, &code, &wa, &wb);
  f.bounded = map[dom->bottom] == cod->bottom && map[dom->top] == cod->top;
  f.validated = f.defect.empty();
  f.dom = std::move(dom);
  f.cod = std::move(cod);
  f.map = std::move(map);
  return f;
}

Partition inverse_image(const Morphism& f, const Partition& psi) {
  if (psi.size() != f.cod->n)
    throw error(errc::misaligned, "congruence lives on a different lattice");
  std::vector<int> first(f.cod->n, -1), rep(f.dom->n);
  for (int a = 0; a < f.dom->n; ++a) {
    int r = psi.rep[f.map[a]];
    if (first[r] < 0) first[r] = a;
    rep[a] = first[r];
  }
  return Partition(std::move(rep));
}

Partition kernel(const Morphism& f) {
  return inverse_image(f, Partition::singletons(f.cod->n));
}

DirectImage direct_image(const Morphism& f, const Partition& phi) {
  if (phi.size() != f.dom->n)
    throw error(errc::misaligned, "congruence lives on a different lattice");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < f.dom->n; ++a)
    if (phi.rep[a] != a) pairs.push_back({f.map[phi.rep[a]], f.map[a]});
  DirectImage out;
  out.exact = f.surjective();
  out.part = generated_congruence(*f.cod, pairs);
  return out;
}

AnalyzedLattice analyze(std::shared_ptr<const Lattice> L) {
  AnalyzedLattice a;
  a.lat = std::move(L);
  a.con = enumerate_con(*a.lat);
  a.sr = classify(*a.lat, a.con);
  return a;
}

AdmissibilityReport check_admissibility(const Morphism& f, const AnalyzedLattice& dom,
                                        const AnalyzedLattice& cod) {
  if (dom.lat->id != f.dom->id || cod.lat->id != f.cod->id)
    throw error(errc::mixed_lattices, "analysis does not match the morphism");
  AdmissibilityReport rep;
  auto classify_pullback = [&](int psi_idx, bool* ok, std::string* witness,
                               const std::vector<int>& target, const char* set_name) {
    Partition pulled = inverse_image(f, cod.con.cons[psi_idx]);
    int idx = is_congruence(*dom.lat, pulled) ? dom.con.index_of(pulled) : -1;
    bool inside = idx >= 0 && std::binary_search(target.begin(), target.end(), idx);
    if (!inside && *ok) {
      *ok = false;
      *witness = "f*(" + cod.con.cons[psi_idx].block_text(cod.lat->labels) + ") = " +
                 pulled.block_text(dom.lat->labels) + " is not in " + set_name;
    }
  };
  for (int psi : cod.sr.spec)
    classify_pullback(psi, &rep.admissible, &rep.spec_witness, dom.sr.spec, "Spec(dom)");
  for (int psi : cod.sr.max)
    classify_pullback(psi, &rep.max_admissible, &rep.max_witness, dom.sr.max, "Max(dom)");
  return rep;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.cod->id != g.dom->id)
    throw error(errc::mixed_lattices, "composition domains do not line up");
  std::vector<int> map(f.dom->n);
  for (int a = 0; a < f.dom->n; ++a) map[a] = g.map[f.map[a]];
  if (f.validated && g.validated)
    return validate_morphism(f.dom, g.cod, std::move(map), false);
  return unchecked_map(f.dom, g.cod, std::move(map));
}

Morphism identity_morphism(std::shared_ptr<const Lattice> L) {
  std::vector<int> map(L->n);
  for (int i = 0; i < L->n; ++i) map[i] = i;
  return validate_morphism(L, L, std::move(map), false);
}

Factorization embedding_factorization(const Morphism& f) {
  if (!f.validated)
    throw error(errc::bad_input, "factorization needs a genuine morphism");
  Factorization out;
  out.image_elements = f.image();
  int m = int(out.image_elements.size());
  std::vector<int> back(f.cod->n, -1);
  for (int k = 0; k < m; ++k) back[out.image_elements[k]] = k;

  LatticeInput in;
  in.name = "im(" + (f.dom->name.empty() ? "f" : f.dom->name) + ")";
  in.n = m;
  in.has_leq = true;
  in.leq.assign(m, std::vector<uint8_t>(m, 0));
  for (int a = 0; a < m; ++a) {
    in.labels.push_back(f.cod->labels[out.image_elements[a]]);
    for (int b = 0; b < m; ++b)
      in.leq[a][b] = f.cod->leq(out.image_elements[a], out.image_elements[b]) ? 1 : 0;
  }
  out.image = std::make_shared<const Lattice>(validate_lattice(in));

  std::vector<int> onto(f.dom->n), embed(m);
  for (int a = 0; a < f.dom->n; ++a) onto[a] = back[f.map[a]];
  for (int k = 0; k < m; ++k) embed[k] = out.image_elements[k];
  out.onto = validate_morphism(f.dom, out.image, std::move(onto), false);
  out.embed = validate_morphism(out.image, f.cod, std::move(embed), false);
  for (int a = 0; a < f.dom->n; ++a)
    if (out.embed.map[out.onto.map[a]] != f.map[a])
      throw error(errc::theorem_violation, "factorization does not compose to f");
  return out;
}

InducedQuotient induced_quotient_morphism(const Morphism& f, const Partition& theta) {
  if (!f.validated)
    throw error(errc::bad_input, "induced quotient needs a genuine morphism");
  InducedQuotient out;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < f.dom->n; ++a)
    if (theta.rep[a] != a) pairs.push_back({f.map[theta.rep[a]], f.map[a]});
  out.cg_image = generated_congruence(*f.cod, pairs);
  out.dom_q = quotient(*f.dom, theta);
  out.cod_q = quotient(*f.cod, out.cg_image);

  std::vector<int> qmap(out.dom_q.lat.n, -1);
  for (int a = 0; a < f.dom->n; ++a) {
    int from = out.dom_q.proj[a], to = out.cod_q.proj[f.map[a]];
    if (qmap[from] >= 0 && qmap[from] != to)
      throw error(errc::theorem_violation, "induced quotient map not well defined");
    qmap[from] = to;
  }
  auto domq = std::make_shared<const Lattice>(out.dom_q.lat);
  auto codq = std::make_shared<const Lattice>(out.cod_q.lat);
  out.f_theta = validate_morphism(domq, codq, std::move(qmap), false);
  // commuting square: p_Cg(f(a)) == f_theta(p_theta(a))
  for (int a = 0; a < f.dom->n; ++a)
    if (out.cod_q.proj[f.map[a]] != out.f_theta.map[out.dom_q.proj[a]])
      throw error(errc::theorem_violation, "induced quotient square does not commute");
  return out;
}

}  // namespace latcon
