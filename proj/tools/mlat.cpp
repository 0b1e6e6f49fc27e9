// Command-line front end: verify, lattice, constants, orbits, table1, chein.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mlat/catalog.hpp"
#include "mlat/chein.hpp"
#include "mlat/hasse.hpp"
#include "mlat/lattice.hpp"
#include "mlat/paige.hpp"
#include "mlat/verify.hpp"

using namespace mlat;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned threads_from_env() {
  const char* v = std::getenv("MLAT_THREADS");
  if (!v || !*v)
    return 0;
  try {
    return static_cast<unsigned>(std::stoul(v));
  } catch (const std::exception&) {
    throw UsageError(std::string("MLAT_THREADS must be a non-negative integer, got '") + v + "'");
  }
}

int cmd_verify(const std::string& section) {
  verify::Context ctx(threads_from_env());
  Report r;
  if (section.empty()) {
    r = verify::run_all(ctx);
  } else {
    const auto names = verify::sections();
    if (std::find(names.begin(), names.end(), section) == names.end())
      throw UsageError("unknown section '" + section + "'");
    r = verify::run_section(section, ctx);
  }
  std::cout << r.render();
  return r.ok() ? 0 : 1;
}

int cmd_lattice(const std::string& out, const std::string& path) {
  lattice::Analysis a(threads_from_env());
  const lattice::Figure2 f = lattice::figure2_data(a);
  const std::string text = out == "json" ? lattice::export_json(f) : lattice::export_dot(f);
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot write " + path);
  file << text;
  if (!file.flush())
    throw std::runtime_error("cannot write " + path);
  return 0;
}

// A subloop argument: a type name, an orbit label, or generators separated by
// spaces or semicolons.
struct SubArg {
  std::string label;
  std::vector<ElementSet> sets;  // one per orbit (or the single subloop)
  std::vector<std::string> names;
  IsoType type = IsoType::Other;
};

SubArg resolve_sub(const lattice::Analysis& a, const std::string& text) {
  const hasse::SubloopCensus& c = a.census();
  SubArg s;
  s.label = text;
  if (auto k = c.orbit_by_label(text)) {
    s.type = c.orbit_type(*k);
    s.sets.push_back(c.orbit_rep(*k));
    s.names.push_back(c.orbit_label(*k));
    return s;
  }
  if (auto t = parse_iso_type(text)) {
    s.type = *t;
    for (std::size_t k : c.orbits_of_type(*t)) {
      s.sets.push_back(c.orbit_rep(k));
      s.names.push_back(c.orbit_label(k));
    }
    if (s.sets.empty())
      throw UsageError("no subloop of type " + text);
    return s;
  }
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ';', ' ');
  std::istringstream in(spaced);
  std::vector<Element> gens;
  for (std::string tok; in >> tok;) {
    try {
      gens.push_back(a.loop().resolve(tok));
    } catch (const std::invalid_argument& e) {
      throw UsageError("unknown type, orbit or element '" + tok + "'");
    }
  }
  if (gens.empty())
    throw UsageError("empty --sub");
  const ElementSet h = closure(a.loop().table(), gens);
  const std::size_t idx = *c.find(h);
  s.type = c.type(idx);
  s.sets.push_back(h);
  s.names.push_back("<" + text + "> in " + c.orbit_label(c.orbit_of(idx)));
  return s;
}

int cmd_constants(const std::string& sub, const std::string& sup) {
  lattice::Analysis a(threads_from_env());
  const hasse::SubloopCensus& c = a.census();
  const SubArg lower = resolve_sub(a, sub);

  std::vector<std::size_t> sup_orbits;
  IsoType sup_type;
  if (auto k = c.orbit_by_label(sup)) {
    sup_orbits.push_back(*k);
    sup_type = c.orbit_type(*k);
  } else if (auto t = parse_iso_type(sup)) {
    sup_type = *t;
    sup_orbits = c.orbits_of_type(*t);
  } else {
    throw UsageError("unknown type or orbit '" + sup + "'");
  }

  const std::size_t l_glb = hasse::abstract_count(c, lower.type, sup_type);
  std::cout << std::left << std::setw(22) << "sub" << std::setw(8) << "sup" << std::setw(8) << "l_glb"
            << std::setw(8) << "l_iso" << "l_orb\n";
  for (std::size_t i = 0; i < lower.sets.size(); ++i) {
    const std::size_t l_iso = hasse::count_copies_above(c, lower.sets[i], sup_type);
    for (std::size_t k : sup_orbits)
      std::cout << std::setw(22) << lower.names[i] << std::setw(8) << c.orbit_label(k) << std::setw(8) << l_glb
                << std::setw(8) << l_iso << hasse::count_orbit_above(c, lower.sets[i], k) << "\n";
    if (sup_orbits.empty())
      std::cout << std::setw(22) << lower.names[i] << std::setw(8) << sup << std::setw(8) << l_glb << std::setw(8)
                << l_iso << "-\n";
  }
  return 0;
}

int cmd_orbits() {
  lattice::Analysis a(threads_from_env());
  const hasse::SubloopCensus& c = a.census();
  std::cout << std::left << std::setw(6) << "orbit" << std::setw(6) << "type" << std::setw(7) << "order"
            << std::setw(8) << "copies" << "representative\n";
  for (const lattice::NamedRep& rep : lattice::named_representatives()) {
    if (rep.label == "C")
      continue;
    const std::size_t k = *c.orbit_by_label(rep.label);
    std::string gens;
    for (const std::string& g : rep.generators)
      gens += (gens.empty() ? "" : ", ") + g;
    std::cout << std::setw(6) << rep.label << std::setw(6) << to_string(c.orbit_type(k)) << std::setw(7)
              << c.orbit_rep(k).size() << std::setw(8) << c.orbit_size(k) << "<" << (gens.empty() ? "e" : gens)
              << ">\n";
  }
  return 0;
}

int cmd_table1(bool csv) {
  const auto cells = paige::table1(paige::paige2());
  std::cout << (csv ? paige::table1_csv(cells) : paige::table1_grid(cells));
  return 0;
}

int cmd_chein(const std::string& group) {
  auto type = parse_iso_type(group);
  const auto groups = catalog::groups();
  if (!type || std::find(groups.begin(), groups.end(), *type) == groups.end())
    throw UsageError("unknown group '" + group + "'");
  const CayleyTable& g = catalog::table(*type);
  const CayleyTable m = chein::chein_double(g);
  std::cout << "M(" << group << ",2), " << m.size() << " elements, " << (is_associative(m) ? "" : "non")
            << "associative\n";
  std::cout << emit_cayley(m);
  const std::string name = "M(" + group + ")";
  for (std::size_t k : {2u, 3u, 4u, 6u})
    std::cout << "l[C" << k << ":" << name << "] = " << chein::count_cyclic(m, k) << "\n";
  for (unsigned k : {2u, 3u})
    std::cout << "l[E" << (1u << k) << ":" << name << "] = " << chein::count_elementary_abelian(m, k) << "\n";
  const Report r = chein::verify_m2n_lemma(g, group);
  std::cout << r.render();
  return r.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subloop lattice of the Paige loop M*(2)"};
  app.require_subcommand(1);

  std::string section;
  auto* verify = app.add_subcommand("verify", "Run the checks; exit 0 iff all pass");
  verify->add_option("--section", section, "zorn, loopcore, paige, table1, chein, autgroup, hasse or lattice");

  std::string out = "json", path;
  auto* lat = app.add_subcommand("lattice", "Export the orbit lattice with Hasse constants");
  lat->add_option("--out", out, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  lat->add_option("--path", path, "output file (stdout if omitted)");

  std::string sub, sup;
  auto* constants = app.add_subcommand("constants", "l[A:B], l_iso[A:B:C] and l_orb[A:B:C]");
  constants->add_option("--sub", sub, "type, orbit label (E4+) or generators (\"x0 u1\")")->required();
  constants->add_option("--sup", sup, "type or orbit label")->required();

  auto* orbits = app.add_subcommand("orbits", "Orbits of Aut(C) on proper subloops");

  bool csv = false;
  auto* table1 = app.add_subcommand("table1", "Orders of products with the involutions");
  table1->add_flag("--csv", csv, "CSV instead of the grid");

  std::string group;
  auto* chein = app.add_subcommand("chein", "Chein double M(G,2) of a catalog group");
  chein->add_option("--group", group, "C2, C3, C4, E4, C2xC4, S3, E8 or A4")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify)
      return cmd_verify(section);
    if (*lat)
      return cmd_lattice(out, path);
    if (*constants)
      return cmd_constants(sub, sup);
    if (*orbits)
      return cmd_orbits();
    if (*table1)
      return cmd_table1(csv);
    if (*chein)
      return cmd_chein(group);
  } catch (const UsageError& e) {
    std::cerr << "mlat: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mlat: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
