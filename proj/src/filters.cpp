#include "latcon/filters.hpp"

#include <algorithm>

namespace latcon {

namespace {
void require_small(const Lattice& L) {
  if (L.n > 64)
    throw error(errc::size_too_large, "filter enumeration capped at 64 elements");
}
}  // namespace

std::vector<int> FilterSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

FilterSet principal_filter(const Lattice& L, int x) {
  require_small(L);
  FilterSet f;
  f.is_filter = true;
  f.generator = x;
  for (int y = 0; y < L.n; ++y)
    if (L.leq(x, y)) f.mask |= uint64_t(1) << y;
  return f;
}

FilterSet principal_ideal(const Lattice& L, int x) {
  require_small(L);
  FilterSet f;
  f.is_filter = false;
  f.generator = x;
  for (int y = 0; y < L.n; ++y)
    if (L.leq(y, x)) f.mask |= uint64_t(1) << y;
  return f;
}

// Finite lattices only have principal filters: a nonempty meet-closed
// upset contains the meet of all its members.
std::vector<FilterSet> all_filters(const Lattice& L) {
  require_small(L);
  std::vector<FilterSet> out;
  for (int x = 0; x < L.n; ++x) out.push_back(principal_filter(L, x));
  return out;
}

std::vector<FilterSet> proper_filters(const Lattice& L) {
  std::vector<FilterSet> out;
  for (auto& f : all_filters(L))
    if (f.generator != L.bottom) out.push_back(f);
  return out;
}

std::vector<FilterSet> prime_filters(const Lattice& L) {
  std::vector<FilterSet> out;
  for (auto& f : proper_filters(L)) {
    int x = f.generator;
    bool prime = true;
    for (int a = 0; prime && a < L.n; ++a)
      for (int b = a; prime && b < L.n; ++b)
        if (L.leq(x, L.join(a, b)) && !L.leq(x, a) && !L.leq(x, b)) prime = false;
    if (prime) out.push_back(f);
  }
  return out;
}

std::vector<FilterSet> maximal_filters(const Lattice& L) {
  // [x) is a maximal proper filter exactly when x is an atom
  std::vector<FilterSet> out;
  for (auto& f : proper_filters(L)) {
    bool atom = true;
    for (int y = 0; atom && y < L.n; ++y)
      if (L.lt(y, f.generator) && y != L.bottom) atom = false;
    if (atom && f.generator != L.bottom) out.push_back(f);
  }
  return out;
}

std::vector<FilterSet> all_ideals(const Lattice& L) {
  require_small(L);
  std::vector<FilterSet> out;
  for (int x = 0; x < L.n; ++x) out.push_back(principal_ideal(L, x));
  return out;
}

std::vector<FilterSet> proper_ideals(const Lattice& L) {
  std::vector<FilterSet> out;
  for (auto& f : all_ideals(L))
    if (f.generator != L.top) out.push_back(f);
  return out;
}

std::vector<FilterSet> prime_ideals(const Lattice& L) {
  std::vector<FilterSet> out;
  for (auto& f : proper_ideals(L)) {
    int x = f.generator;
    bool prime = true;
    for (int a = 0; prime && a < L.n; ++a)
      for (int b = a; prime && b < L.n; ++b)
        if (L.leq(L.meet(a, b), x) && !L.leq(a, x) && !L.leq(b, x)) prime = false;
    if (prime) out.push_back(f);
  }
  return out;
}

std::vector<FilterSet> maximal_ideals(const Lattice& L) {
  std::vector<FilterSet> out;
  for (auto& f : proper_ideals(L)) {
    bool coatom = true;
    for (int y = 0; coatom && y < L.n; ++y)
      if (L.lt(f.generator, y) && y != L.top) coatom = false;
    if (coatom && f.generator != L.top) out.push_back(f);
  }
  return out;
}

Partition phi_embedding(const Lattice& L, const FilterSet& F) {
  if (!F.is_filter) throw error(errc::bad_input, "phi expects a filter");
  if (!is_distributive(L))
    throw error(errc::not_distributive, "phi is defined on distributive lattices");
  std::vector<int> rep(L.n);
  for (int i = 0; i < L.n; ++i) rep[i] = i;
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < x; ++y) {
      bool related = false;
      for (int a = 0; !related && a < L.n; ++a)
        if (F.contains(a) && L.meet(x, a) == L.meet(y, a)) related = true;
      if (related) {
        // transitive by distributivity; resolve through the smaller rep
        int rx = rep[x], ry = rep[y];
        int lo = std::min(rx, ry), hi = std::max(rx, ry);
        for (int i = 0; i < L.n; ++i)
          if (rep[i] == hi) rep[i] = lo;
      }
    }
  Partition p = Partition::from_map(rep);
  if (!is_congruence(L, p))
    throw error(errc::theorem_violation, "phi image is not a congruence");
  // F is the class of the top
  uint64_t cls = 0;
  for (int i = 0; i < L.n; ++i)
    if (p.same(i, L.top)) cls |= uint64_t(1) << i;
  if (cls != F.mask)
    throw error(errc::theorem_violation, "phi(F) does not have F as the top class");
  return p;
}

Partition chi_embedding(const Lattice& L, const FilterSet& I) {
  if (I.is_filter) throw error(errc::bad_input, "chi expects an ideal");
  if (!is_distributive(L))
    throw error(errc::not_distributive, "chi is defined on distributive lattices");
  std::vector<int> rep(L.n);
  for (int i = 0; i < L.n; ++i) rep[i] = i;
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < x; ++y) {
      bool related = false;
      for (int a = 0; !related && a < L.n; ++a)
        if (I.contains(a) && L.join(x, a) == L.join(y, a)) related = true;
      if (related) {
        int rx = rep[x], ry = rep[y];
        int lo = std::min(rx, ry), hi = std::max(rx, ry);
        for (int i = 0; i < L.n; ++i)
          if (rep[i] == hi) rep[i] = lo;
      }
    }
  Partition p = Partition::from_map(rep);
  if (!is_congruence(L, p))
    throw error(errc::theorem_violation, "chi image is not a congruence");
  uint64_t cls = 0;
  for (int i = 0; i < L.n; ++i)
    if (p.same(i, L.bottom)) cls |= uint64_t(1) << i;
  if (cls != I.mask)
    throw error(errc::theorem_violation, "chi(I) does not have I as the bottom class");
  return p;
}

std::vector<Partition> con2_via_prime_filters(const Lattice& L) {
  std::vector<Partition> out;
  for (auto& P : prime_filters(L)) {
    std::vector<int> rep(L.n, -1);
    int in_min = -1, out_min = -1;
    for (int i = 0; i < L.n; ++i) {
      if (P.contains(i)) {
        if (in_min < 0) in_min = i;
        rep[i] = in_min;
      } else {
        if (out_min < 0) out_min = i;
        rep[i] = out_min;
      }
    }
    out.push_back(Partition(std::move(rep)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace latcon
