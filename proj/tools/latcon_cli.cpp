// Command-line front end: load lattices and morphisms in the JSON
// interchange form, compute congruence lattices and spectra, check
// admissibility, build products and ordinal sums, verify the
// decomposition reports, and run the fixture regression and property
// sweeps. Exit codes: 0 success, 1 property/regression failure, 2 input
// error.

#include <filesystem>
#include <iostream>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"
#include "latcon/analysis.hpp"
#include "latcon/catalog.hpp"
#include "latcon/construct.hpp"
#include "latcon/filters.hpp"
#include "latcon/io.hpp"
#include "latcon/spectra.hpp"

using namespace latcon;
using nlohmann::json;

namespace {

std::string g_data_dir;
std::string g_format = "text";
bool g_pentagon_composed = false;

bool json_mode() { return g_format == "json"; }

// A lattice argument is either a file path or a fixture name.
std::shared_ptr<const Lattice> resolve_lattice(const std::string& ref) {
  if (std::filesystem::exists(ref))
    return std::make_shared<const Lattice>(load_lattice_file(ref));
  return load_fixture(ref, g_data_dir).lattice;
}

std::map<std::string, std::string> aliases_for(const std::string& ref) {
  try {
    Fixture fix = load_fixture(std::filesystem::path(ref).stem().string(), g_data_dir);
    return alias_by_blocktext(fix);
  } catch (const error&) {
    return {};
  }
}

std::string display(const Partition& p, const std::map<std::string, std::string>& alias) {
  auto it = alias.find(p.block_text());
  if (it != alias.end()) return it->second + " = " + p.block_text();
  return p.block_text();
}

void emit_dot(const std::string& dot, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << dot;
  else
    write_text_file(path, dot);
}

int cmd_validate(const std::string& file, const std::string& dot) {
  auto L = resolve_lattice(file);
  if (json_mode()) {
    json j = lattice_to_json(*L);
    j["valid"] = true;
    j["bottom"] = L->bottom;
    j["top"] = L->top;
    j["distributive"] = is_distributive(*L);
    j["modular"] = is_modular(*L);
    j["chain"] = is_chain(*L);
    j["boolean"] = is_boolean_lattice(*L);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "valid lattice: " << L->name << " (" << L->n << " elements, "
              << hasse(*L).size() << " cover pairs)\n";
    std::cout << "  bottom " << L->labels[L->bottom] << ", top " << L->labels[L->top] << "\n";
    std::cout << "  distributive " << (is_distributive(*L) ? "yes" : "no") << ", modular "
              << (is_modular(*L) ? "yes" : "no") << ", chain "
              << (is_chain(*L) ? "yes" : "no") << ", boolean "
              << (is_boolean_lattice(*L) ? "yes" : "no") << "\n";
    auto cuts = cut_points(*L);
    if (!cuts.empty()) {
      std::cout << "  ordinal-sum cut points:";
      for (int c : cuts) std::cout << " " << L->labels[c];
      std::cout << "\n";
    }
  }
  if (!dot.empty()) emit_dot(to_dot(*L), dot);
  return 0;
}

int cmd_con(const std::string& file, const std::string& dot) {
  auto L = resolve_lattice(file);
  AnalyzedLattice an = analyze(L);
  auto alias = aliases_for(file);
  if (json_mode()) {
    json j;
    j["lattice"] = L->name;
    j["count"] = an.con.size();
    json cons = json::array();
    for (const auto& c : an.con.cons) cons.push_back(partition_to_json(c));
    j["congruences"] = cons;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Con(" << L->name << "): " << an.con.size() << " congruences\n";
    for (int i = 0; i < an.con.size(); ++i)
      std::cout << "  #" << i << "  " << display(an.con.cons[i], alias) << "\n";
  }
  if (!dot.empty()) emit_dot(con_dot(*L, an.con, an.sr), dot);
  return 0;
}

int cmd_spectra(const std::string& file) {
  auto L = resolve_lattice(file);
  AnalyzedLattice an = analyze(L);
  auto alias = aliases_for(file);
  if (json_mode()) {
    json j;
    j["lattice"] = L->name;
    j["con_size"] = an.con.size();
    auto dump_set = [&](const std::vector<int>& s) {
      json arr = json::array();
      for (int i : s) arr.push_back(partition_to_json(an.con.cons[i]));
      return arr;
    };
    j["spec"] = dump_set(an.sr.spec);
    j["max"] = dump_set(an.sr.max);
    j["con2"] = dump_set(an.sr.con2);
    j["con_boolean"] = con_is_boolean(an.con);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << spectrum_text(*L, an.con, an.sr);
  auto show = [&](const char* tag, const std::vector<int>& s) {
    std::cout << tag << ":";
    for (int i : s) std::cout << "  " << display(an.con.cons[i], alias);
    std::cout << "\n";
  };
  show("Spec", an.sr.spec);
  show("Max ", an.sr.max);
  show("Con2", an.sr.con2);
  std::cout << "prime filters:";
  for (const auto& P : prime_filters(*L)) {
    std::cout << " {";
    bool first = true;
    for (int e : P.elements()) {
      std::cout << (first ? "" : ",") << L->labels[e];
      first = false;
    }
    std::cout << "}";
  }
  std::cout << "\n";
  return 0;
}

Morphism load_morphism_arg(const std::string& file) {
  if (std::filesystem::exists(file)) {
    json j = read_json_file(file);
    auto dom = resolve_lattice(j.at("dom").get<std::string>());
    auto cod = resolve_lattice(j.at("cod").get<std::string>());
    return unchecked_map(dom, cod, j.at("map").get<std::vector<int>>());
  }
  Fixture fix = load_fixture(file, g_data_dir);
  if (!fix.is_morphism) throw error(errc::bad_input, file + " is not a morphism");
  return *fix.morphism;
}

int cmd_morphism(const std::string& file, const std::string& check) {
  Morphism f = load_morphism_arg(file);
  AnalyzedLattice dom = analyze(f.dom), cod = analyze(f.cod);
  AdmissibilityReport rep = check_admissibility(f, dom, cod);
  if (json_mode()) {
    json j;
    j["dom"] = f.dom->name;
    j["cod"] = f.cod->name;
    j["valid_morphism"] = f.validated;
    if (!f.validated) j["defect"] = f.defect;
    j["bounded"] = f.bounded;
    j["surjective"] = f.surjective();
    j["kernel"] = partition_to_json(kernel(f));
    if (check != "maxadm") j["admissible"] = rep.admissible;
    if (check != "adm") j["max_admissible"] = rep.max_admissible;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "morphism " << f.dom->name << " -> " << f.cod->name << "\n";
  std::cout << "  u    :";
  for (int a = 0; a < f.dom->n; ++a) std::cout << " " << f.dom->labels[a];
  std::cout << "\n  f(u) :";
  for (int a = 0; a < f.dom->n; ++a) std::cout << " " << f.cod->labels[f.map[a]];
  std::cout << "\n";
  if (!f.validated) std::cout << "  not a lattice morphism: " << f.defect << "\n";
  std::cout << "  bounded: " << (f.bounded ? "yes" : "no")
            << "; surjective: " << (f.surjective() ? "yes" : "no") << "\n";
  std::cout << "  kernel: " << kernel(f).block_text(f.dom->labels) << "\n";
  if (check == "adm" || check == "both") {
    std::cout << "  admissible: " << (rep.admissible ? "yes" : "no") << "\n";
    if (!rep.admissible) std::cout << "    witness: " << rep.spec_witness << "\n";
  }
  if (check == "maxadm" || check == "both") {
    std::cout << "  max-admissible: " << (rep.max_admissible ? "yes" : "no") << "\n";
    if (!rep.max_admissible) std::cout << "    witness: " << rep.max_witness << "\n";
  }
  return 0;
}

int cmd_quotient(const std::string& file, const std::string& theta_text) {
  auto L = resolve_lattice(file);
  Partition theta = parse_block_text(L->n, theta_text);
  if (!is_congruence(*L, theta))
    throw error(errc::bad_input, "theta is not a congruence of " + L->name);
  Quotient q = quotient(*L, theta);
  if (json_mode())
    std::cout << lattice_to_json(q.lat).dump(2) << "\n";
  else {
    std::cout << "quotient " << L->name << "/" << theta.block_text() << ": " << q.lat.n
              << " elements\n";
    for (int b = 0; b < q.lat.n; ++b) std::cout << "  " << b << " = " << q.lat.labels[b] << "\n";
  }
  return 0;
}

int cmd_product(const std::vector<std::string>& files, bool ordsum) {
  std::vector<std::shared_ptr<const Lattice>> parts;
  for (const auto& f : files) parts.push_back(resolve_lattice(f));
  Lattice out = ordsum ? *ordinal_sum(parts).lat : *direct_product(parts).lat;
  std::cout << lattice_to_json(out).dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& what, const std::vector<std::string>& files, int max_size) {
  if (what == "product" || what == "ordsum") {
    std::vector<std::shared_ptr<const Lattice>> parts;
    for (const auto& f : files) parts.push_back(resolve_lattice(f));
    DecompReport rep = what == "product"
                           ? verify_product_con(direct_product(parts), max_size)
                           : verify_sum_con(ordinal_sum(parts), max_size);
    if (json_mode()) {
      json j;
      j["construction"] = rep.construction;
      j["con_size"] = rep.con_size;
      j["pass"] = rep.pass();
      if (!rep.witness.empty()) j["witness"] = rep.witness;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << rep.text() << "\n";
    }
    return rep.pass() ? 0 : 1;
  }
  if (what == "class") {
    if (files.empty()) throw error(errc::bad_input, "verify class needs a lattice");
    auto L = resolve_lattice(files[0]);
    ConLattice con = enumerate_con(*L);
    ClassTheoremReport rep = verify_class_theorems(*L, con, g_pentagon_composed);
    for (const auto& it : rep.items) {
      std::cout << (it.pass ? "  ok   " : "  FAIL ") << "[" << it.hypothesis << "] "
                << it.identity;
      if (!it.witness.empty()) std::cout << "  (" << it.witness << ")";
      std::cout << "\n";
    }
    return rep.all_pass ? 0 : 1;
  }
  throw error(errc::bad_input, "verify expects product, ordsum or class");
}

int cmd_fixtures(bool run, bool list) {
  if (list || !run) {
    std::cout << "lattices:";
    for (const auto& n : lattice_fixture_names(g_data_dir)) std::cout << " " << n;
    std::cout << "\nmorphisms:";
    for (const auto& n : morphism_fixture_names(g_data_dir)) std::cout << " " << n;
    std::cout << "\n";
    if (!run) return 0;
  }
  RegressionReport rep = run_regression(g_data_dir);
  if (json_mode()) {
    json j;
    j["all_pass"] = rep.all_pass;
    json items = json::array();
    for (const auto& it : rep.items)
      items.push_back({{"fixture", it.fixture},
                       {"field", it.field},
                       {"pass", it.pass},
                       {"got", it.got},
                       {"want", it.want}});
    j["items"] = items;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.text();
  }
  return rep.all_pass ? 0 : 1;
}

int cmd_sweep(const std::string& property, const std::string& family, int count,
              uint64_t seed, int min_size, int max_size) {
  GeneratorSpec gs;
  gs.seed = seed;
  gs.min_size = min_size;
  gs.max_size = max_size;
  std::map<std::string, Family> fams{{"chain", Family::chain},
                                     {"downset", Family::downset},
                                     {"mk", Family::mk},
                                     {"small", Family::small_random},
                                     {"modular", Family::modular_mix}};
  auto it = fams.find(family);
  if (it == fams.end()) throw error(errc::bad_input, "unknown family " + family);
  gs.family = it->second;
  SweepReport rep;
  try {
    rep = sweep(property, gs, count);
  } catch (const error& e) {
    if (e.code != errc::unknown_property) throw;
    std::cerr << "error: " << e.what() << "\nknown properties:";
    for (const auto& n : sweep_property_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  if (json_mode()) {
    json j;
    j["property"] = rep.property;
    j["instances"] = rep.instances;
    j["failures"] = rep.failures;
    j["pass"] = rep.pass();
    if (!rep.first_counterexample.empty()) j["counterexample"] = rep.first_counterexample;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.text() << "\n";
  }
  return rep.pass() ? 0 : 1;
}

int cmd_subdirect(const std::string& file) {
  auto L = resolve_lattice(file);
  ConLattice con = enumerate_con(*L);
  SubdirectResult r = subdirectly_irreducible(*L, con);
  if (json_mode()) {
    json j;
    j["lattice"] = L->name;
    j["subdirectly_irreducible"] = r.irreducible;
    if (r.irreducible) j["monolith"] = partition_to_json(con.cons[r.monolith]);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << L->name << ": "
              << (r.irreducible ? "subdirectly irreducible" : "not subdirectly irreducible");
    if (r.irreducible)
      std::cout << ", monolith " << con.cons[r.monolith].block_text(L->labels);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-lattice congruence toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--data-dir", g_data_dir, "fixture directory")->envname("LATCON_DATA_DIR");
  app.add_option("--format", g_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  g_data_dir = default_data_dir();

  std::string file, dot, theta, check = "both", property, family = "downset", what;
  std::vector<std::string> files;
  int count = 100, min_size = 2, max_size = 12;
  uint64_t seed = 1;
  bool run = false, list = false;

  auto* validate = app.add_subcommand("validate", "validate a lattice file");
  validate->add_option("file", file)->required();
  validate->add_option("--dot", dot, "write the Hasse diagram in DOT form");

  auto* con = app.add_subcommand("con", "enumerate the congruence lattice");
  con->add_option("file", file)->required();
  con->add_option("--dot", dot, "write Con(L) in DOT form, colored by classification");

  auto* spectra = app.add_subcommand("spectra", "classify Spec/Max/Con2");
  spectra->add_option("file", file)->required();

  auto* morphism = app.add_subcommand("morphism", "check a morphism");
  morphism->add_option("file", file)->required();
  morphism->add_option("--check", check)->check(CLI::IsMember({"adm", "maxadm", "both"}));

  auto* quot = app.add_subcommand("quotient", "build a quotient lattice");
  quot->add_option("file", file)->required();
  quot->add_option("--theta", theta, "congruence in block form, e.g. [[0,1],[2]]")->required();

  auto* product = app.add_subcommand("product", "direct product of lattices");
  product->add_option("files", files)->required()->expected(-1);

  auto* ordsum = app.add_subcommand("ordsum", "ordinal sum of bounded lattices");
  ordsum->add_option("files", files)->required()->expected(-1);

  auto* verify = app.add_subcommand("verify", "verify decomposition/class theorems");
  verify->add_option("what", what, "product | ordsum | class")->required();
  verify->add_option("files", files)->expected(-1);
  verify->add_option("--max-size", max_size);
  verify->add_flag("--pentagon-composed", g_pentagon_composed,
                   "assert Max = Con2 for lattices composed from chains, bounded "
                   "distributive lattices and pentagons");

  auto* fixtures = app.add_subcommand("fixtures", "list fixtures / run the regression");
  fixtures->add_flag("--run", run);
  fixtures->add_flag("--list", list);

  auto* sweepc = app.add_subcommand("sweep", "run a property sweep");
  sweepc->add_option("--property", property)->required();
  sweepc->add_option("--family", family, "chain|downset|mk|small|modular");
  sweepc->add_option("--count", count);
  sweepc->add_option("--seed", seed);
  sweepc->add_option("--min-size", min_size);
  sweepc->add_option("--max-size", max_size);

  auto* subdirect = app.add_subcommand("subdirect", "subdirect irreducibility");
  subdirect->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file, dot);
    if (*con) return cmd_con(file, dot);
    if (*spectra) return cmd_spectra(file);
    if (*morphism) return cmd_morphism(file, check);
    if (*quot) return cmd_quotient(file, theta);
    if (*product) return cmd_product(files, false);
    if (*ordsum) return cmd_product(files, true);
    if (*verify) return cmd_verify(what, files, max_size);
    if (*fixtures) return cmd_fixtures(run, list);
    if (*sweepc) return cmd_sweep(property, family, count, seed, min_size, max_size);
    if (*subdirect) return cmd_subdirect(file);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
