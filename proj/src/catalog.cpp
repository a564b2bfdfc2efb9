#include "latcon/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>

#include "latcon/analysis.hpp"
#include "latcon/filters.hpp"
#include "latcon/io.hpp"

namespace latcon {

namespace fs = std::filesystem;
using nlohmann::json;

std::string default_data_dir() {
  if (const char* env = std::getenv("LATCON_DATA_DIR")) return env;
#ifdef LATCON_DATA_DIR
  return LATCON_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

std::vector<std::string> names_in(const std::string& dir) {
  std::vector<std::string> out;
  if (!fs::exists(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::string> lattice_fixture_names(const std::string& data_dir) {
  return names_in(data_dir + "/lattices");
}

std::vector<std::string> morphism_fixture_names(const std::string& data_dir) {
  return names_in(data_dir + "/morphisms");
}

namespace {

// One shared instance per fixture name, so separately loaded morphisms
// and lattices agree on lattice identity.
std::shared_ptr<const Lattice> cached_lattice(const std::string& key, const json& j) {
  static std::map<std::string, std::shared_ptr<const Lattice>> cache;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto L = std::make_shared<const Lattice>(lattice_from_json(j));
  cache.emplace(key, L);
  return L;
}

}  // namespace

Fixture load_fixture(const std::string& name, const std::string& data_dir) {
  std::string lat_path = data_dir + "/lattices/" + name + ".json";
  std::string mor_path = data_dir + "/morphisms/" + name + ".json";
  Fixture fix;
  fix.name = name;
  if (fs::exists(lat_path)) {
    json j = read_json_file(lat_path);
    fix.lattice = cached_lattice(lat_path, j);
    if (j.contains("expected")) fix.expected = j["expected"];
    if (j.contains("aliases"))
      for (auto& [alias, blocks] : j["aliases"].items())
        fix.aliases.emplace(alias, partition_from_json(fix.lattice->n, blocks));
    return fix;
  }
  if (fs::exists(mor_path)) {
    json j = read_json_file(mor_path);
    fix.is_morphism = true;
    Fixture dom = load_fixture(j.at("dom").get<std::string>(), data_dir);
    Fixture cod = load_fixture(j.at("cod").get<std::string>(), data_dir);
    auto map = j.at("map").get<std::vector<int>>();
    fix.morphism = unchecked_map(dom.lattice, cod.lattice, std::move(map));
    fix.lattice = dom.lattice;
    if (j.contains("expected")) fix.expected = j["expected"];
    return fix;
  }
  throw error(errc::unknown_fixture, name + " (searched " + data_dir + ")");
}

std::map<std::string, std::string> alias_by_blocktext(const Fixture& fix) {
  std::map<std::string, std::string> out;
  for (const auto& [name, part] : fix.aliases) out[part.block_text()] = name;
  return out;
}

namespace {

struct Checker {
  RegressionReport& rep;
  const std::string& fixture;

  void item(const std::string& field, bool pass, std::string got = "", std::string want = "") {
    rep.items.push_back({fixture, field, pass, std::move(got), std::move(want)});
    rep.all_pass = rep.all_pass && pass;
  }

  void eq_bool(const std::string& field, bool got, bool want) {
    item(field, got == want, got ? "true" : "false", want ? "true" : "false");
  }

  void eq_int(const std::string& field, int got, int want) {
    item(field, got == want, std::to_string(got), std::to_string(want));
  }
};

std::set<Partition> partition_set(int n, const json& arr) {
  std::set<Partition> out;
  for (const auto& j : arr) out.insert(partition_from_json(n, j));
  return out;
}

std::set<Partition> selected(const ConLattice& con, const std::vector<int>& idx) {
  std::set<Partition> out;
  for (int i : idx) out.insert(con.cons[i]);
  return out;
}

std::string set_text(const std::set<Partition>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : s) {
    out += (first ? "" : ", ") + p.block_text();
    first = false;
  }
  return out + "}";
}

void check_lattice_fixture(const Fixture& fix, RegressionReport& rep) {
  Checker ck{rep, fix.name};
  const json& exp = fix.expected;
  const Lattice& L = *fix.lattice;
  AnalyzedLattice an = analyze(fix.lattice);

  if (exp.contains("con_size")) ck.eq_int("con_size", an.con.size(), exp["con_size"].get<int>());
  if (exp.contains("con")) {
    auto want = partition_set(L.n, exp["con"]);
    std::set<Partition> got(an.con.cons.begin(), an.con.cons.end());
    ck.item("con", got == want, set_text(got), set_text(want));
  }
  auto check_set = [&](const char* field, const std::vector<int>& idx) {
    if (!exp.contains(field)) return;
    auto want = partition_set(L.n, exp[field]);
    auto got = selected(an.con, idx);
    ck.item(field, got == want, set_text(got), set_text(want));
  };
  check_set("spec", an.sr.spec);
  check_set("max", an.sr.max);
  check_set("con2", an.sr.con2);

  // the prime-filter route to the two-class congruences always applies
  {
    auto via = con2_via_prime_filters(L);
    std::set<Partition> got(via.begin(), via.end());
    ck.item("con2_via_prime_filters", got == selected(an.con, an.sr.con2),
            set_text(got), set_text(selected(an.con, an.sr.con2)));
  }

  if (exp.contains("con_boolean"))
    ck.eq_bool("con_boolean", con_is_boolean(an.con), exp["con_boolean"].get<bool>());
  if (exp.contains("distributive"))
    ck.eq_bool("distributive", is_distributive(L), exp["distributive"].get<bool>());
  if (exp.contains("modular"))
    ck.eq_bool("modular", is_modular(L), exp["modular"].get<bool>());
  if (exp.contains("relatively_complemented"))
    ck.eq_bool("relatively_complemented", is_relatively_complemented(L),
               exp["relatively_complemented"].get<bool>());
  if (exp.contains("spec_eq_max"))
    ck.eq_bool("spec_eq_max", an.sr.spec == an.sr.max, exp["spec_eq_max"].get<bool>());

  if (exp.contains("subdirectly_irreducible")) {
    auto sub = subdirectly_irreducible(L, an.con);
    ck.eq_bool("subdirectly_irreducible", sub.irreducible,
               exp["subdirectly_irreducible"].get<bool>());
    if (exp.contains("monolith")) {
      Partition want = partition_from_json(L.n, exp["monolith"]);
      bool ok = sub.irreducible && an.con.cons[sub.monolith] == want;
      ck.item("monolith", ok,
              sub.irreducible ? an.con.cons[sub.monolith].block_text() : "(none)",
              want.block_text());
    }
  }

  if (exp.contains("smi_elements")) {
    // strictly meet-irreducible elements of the lattice itself
    auto covers = hasse(L);
    std::vector<int> succ_count(L.n, 0);
    for (auto [a, b] : covers) ++succ_count[a];
    std::set<std::string> got;
    for (int i = 0; i < L.n; ++i)
      if (succ_count[i] == 1) got.insert(L.labels[i]);
    std::set<std::string> want;
    for (const auto& s : exp["smi_elements"]) want.insert(s.get<std::string>());
    std::string g, w;
    for (auto& s : got) g += s + " ";
    for (auto& s : want) w += s + " ";
    ck.item("smi_elements", got == want, g, w);
  }
  if (exp.contains("coatoms")) {
    std::set<std::string> got;
    for (int i = 0; i < L.n; ++i) {
      bool coatom = i != L.top;
      for (int y = 0; coatom && y < L.n; ++y)
        if (L.lt(i, y) && y != L.top) coatom = false;
      if (coatom && i != L.top) got.insert(L.labels[i]);
    }
    std::set<std::string> want;
    for (const auto& s : exp["coatoms"]) want.insert(s.get<std::string>());
    std::string g, w;
    for (auto& s : got) g += s + " ";
    for (auto& s : want) w += s + " ";
    ck.item("coatoms", got == want, g, w);
  }
}

void check_morphism_fixture(const Fixture& fix, RegressionReport& rep) {
  Checker ck{rep, fix.name};
  const json& exp = fix.expected;
  const Morphism& f = *fix.morphism;
  AnalyzedLattice dom = analyze(f.dom);
  AnalyzedLattice cod = analyze(f.cod);

  if (exp.contains("valid")) ck.eq_bool("valid", f.validated, exp["valid"].get<bool>());
  if (exp.contains("bounded")) ck.eq_bool("bounded", f.bounded, exp["bounded"].get<bool>());

  AdmissibilityReport adm = check_admissibility(f, dom, cod);
  if (exp.contains("admissible"))
    ck.eq_bool("admissible", adm.admissible, exp["admissible"].get<bool>());
  if (exp.contains("max_admissible"))
    ck.eq_bool("max_admissible", adm.max_admissible, exp["max_admissible"].get<bool>());

  if (exp.contains("kernel")) {
    Partition want = partition_from_json(f.dom->n, exp["kernel"]);
    Partition got = kernel(f);
    ck.item("kernel", got == want, got.block_text(), want.block_text());
  }
  if (exp.contains("inverse_images")) {
    for (const auto& pair : exp["inverse_images"]) {
      Partition psi = partition_from_json(f.cod->n, pair.at("psi"));
      Partition want = partition_from_json(f.dom->n, pair.at("image"));
      Partition got = inverse_image(f, psi);
      ck.item("f*(" + psi.block_text() + ")", got == want, got.block_text(),
              want.block_text());
    }
  }
  if (exp.contains("pullback_bijective") && exp["pullback_bijective"].get<bool>()) {
    // f* maps Con(cod) bijectively onto Con(dom), respecting order
    std::set<Partition> image;
    bool order_ok = true;
    for (int i = 0; i < cod.con.size(); ++i) {
      Partition pi = inverse_image(f, cod.con.cons[i]);
      image.insert(pi);
      for (int j = 0; j < cod.con.size(); ++j) {
        Partition pj = inverse_image(f, cod.con.cons[j]);
        if (cod.con.cons[i].refines(cod.con.cons[j]) != pi.refines(pj)) order_ok = false;
      }
    }
    std::set<Partition> want(dom.con.cons.begin(), dom.con.cons.end());
    ck.item("pullback_bijective", image == want && order_ok, set_text(image), set_text(want));
  }
  if (exp.contains("pullback_max_onto") && exp["pullback_max_onto"].get<bool>()) {
    std::set<Partition> image;
    for (int i : cod.sr.max) image.insert(inverse_image(f, cod.con.cons[i]));
    auto want = selected(dom.con, dom.sr.max);
    ck.item("pullback_max_onto", image == want, set_text(image), set_text(want));
  }
}

}  // namespace

std::string RegressionReport::text() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "  ok   " : "  FAIL ") << it.fixture << "." << it.field;
    if (!it.pass) os << "\n         got:  " << it.got << "\n         want: " << it.want;
    os << "\n";
  }
  os << (all_pass ? "regression: all green" : "regression: FAILURES") << "\n";
  return os.str();
}

RegressionReport run_regression(const std::string& data_dir) {
  RegressionReport rep;
  for (const auto& name : lattice_fixture_names(data_dir)) {
    Fixture fix = load_fixture(name, data_dir);
    check_lattice_fixture(fix, rep);
  }
  for (const auto& name : morphism_fixture_names(data_dir)) {
    Fixture fix = load_fixture(name, data_dir);
    check_morphism_fixture(fix, rep);
  }
  return rep;
}

}  // namespace latcon
