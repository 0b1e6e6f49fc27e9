// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance <path to mlat binary> <scratch directory>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "mlat/catalog.hpp"
#include "mlat/chein.hpp"
#include "mlat/hasse.hpp"
#include "mlat/lattice.hpp"
#include "mlat/verify.hpp"

using namespace mlat;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome loop_construction() {
  const paige::PaigeLoop& c = paige::paige2();
  const OrderProfile p = order_profile(c.table());
  const bool moufang = is_moufang(c.table());
  std::ostringstream d;
  d << "|C| = " << c.size() << ", involutions " << c.involutions().size() << ", order 3 "
    << c.order3_elements().size() << ", Moufang " << (moufang ? "yes" : "no");
  const bool ok = c.size() == 120 && c.involutions().size() == 63 && c.order3_elements().size() == 56 &&
                  p == OrderProfile{{1, 1}, {2, 63}, {3, 56}} && moufang;
  return {ok, d.str()};
}

Outcome table1() {
  const auto cells = paige::table1(paige::paige2());
  const std::string got = paige::table1_csv(cells);
  const std::string want(verify::expected_table1_csv());
  std::istringstream a(got), b(want);
  std::size_t rows = 0, diff = 0;
  for (std::string la, lb; std::getline(a, la) && std::getline(b, lb);) {
    ++rows;
    diff += la != lb;
  }
  std::ostringstream d;
  d << rows - 1 << " cells compared, " << diff << " differ";
  return {got == want && rows == 64, d.str()};
}

Outcome census(const lattice::Analysis& a) {
  const hasse::SubloopCensus& c = a.census();
  const std::pair<IsoType, std::size_t> want[] = {
      {IsoType::C2, 63}, {IsoType::C3, 28}, {IsoType::E4, 315}, {IsoType::S3, 336},
      {IsoType::E8, 63}, {IsoType::A4, 63}, {IsoType::MS3, 112}, {IsoType::MA4, 63},
  };
  bool ok = c.size() == 1045;
  std::ostringstream d;
  for (auto [t, n] : want) {
    const std::size_t got = hasse::count_copies(c, t);
    ok = ok && got == n;
    d << to_string(t) << " " << got << ", ";
  }
  d << "total " << c.size();
  return {ok, d.str()};
}

Outcome orbits(const lattice::Analysis& a) {
  const hasse::SubloopCensus& c = a.census();
  const paige::PaigeLoop& loop = a.loop();
  bool ok = true;
  for (IsoType t : c.types_present()) {
    const std::size_t n = c.orbits_of_type(t).size();
    ok = ok && n == (t == IsoType::E4 ? 2u : 1u);
  }
  auto orbit_of_named = [&](std::initializer_list<const char*> names) {
    std::vector<Element> g;
    for (const char* n : names)
      g.push_back(loop.named(n));
    return c.orbit_of(*c.find(closure(loop.table(), g)));
  };
  const std::size_t plus = orbit_of_named({"x0", "u1"}), minus = orbit_of_named({"x0", "u2"});
  ok = ok && c.orbit_size(plus) == 63 && c.orbit_size(minus) == 252;
  ok = ok && c.orbit_label(plus) == "E4+" && c.orbit_label(minus) == "E4-";
  std::ostringstream d;
  d << c.orbits().orbits.size() << " orbits; <x0,u1> in orbit of size " << c.orbit_size(plus)
    << ", <x0,u2> in orbit of size " << c.orbit_size(minus);
  return {ok, d.str()};
}

Outcome oracle_equivalence(const lattice::Analysis& a) {
  const aut::AutGroup full = aut::full_aut_search(a.loop());
  const bool same = a.group().same_elements(full);
  std::ostringstream d;
  d << "generated " << a.group().order() << ", searched " << full.order() << ", "
    << (same ? "identical" : "different");
  return {same && full.order() == a.group().order(), d.str()};
}

Outcome hasse_constants(const lattice::Analysis& a) {
  const Report pub = hasse::verify_published_constants(a.loop(), a.census());
  const Report ids = hasse::verify_identities(a.census());
  const Report lemma = hasse::verify_counting_lemma(a.census());
  std::ostringstream d;
  d << "quoted constants " << pub.checks().size() - pub.failures() << "/" << pub.checks().size()
    << ", identity checks " << ids.checks().size() - ids.failures() << "/" << ids.checks().size()
    << ", orbit lemma " << lemma.checks().size() - lemma.failures() << "/" << lemma.checks().size();
  return {pub.ok() && ids.ok() && lemma.ok(), d.str()};
}

Outcome global_properties(const lattice::Analysis& a) {
  const hasse::SubloopCensus& c = a.census();
  std::set<std::size_t> orders;
  for (const ElementSet& s : c.subloops())
    orders.insert(s.size());
  const bool lagrange = lattice::check_strong_lagrange(c);
  const bool cauchy = lattice::check_weak_cauchy(c);
  std::ostringstream d;
  d << "strong Lagrange " << lagrange << ", weak Cauchy " << cauchy << ", orders 5/16/48 present "
    << orders.contains(5) << orders.contains(16) << orders.contains(48);
  const bool ok = lagrange && !cauchy && !orders.contains(5) && !orders.contains(16) && !orders.contains(48);
  return {ok, d.str()};
}

Outcome chein_module() {
  const CayleyTable& s3 = catalog::table(IsoType::S3);
  const CayleyTable& a4 = catalog::table(IsoType::A4);
  const Report rs = chein::verify_m2n_lemma(s3, "S3");
  const Report ra = chein::verify_m2n_lemma(a4, "A4");
  const std::size_t e4_ms3 = chein::count_elementary_abelian(chein::chein_double(s3), 2);
  const std::size_t e4_ma4 = chein::count_elementary_abelian(chein::chein_double(a4), 2);
  const paige::PaigeLoop& c = paige::paige2();
  const bool pres_s3 = chein::check_relations(
      c.table(), {{"x", c.named("x0")}, {"y", c.named("x1")}, {"u", c.named("u0")}}, chein::ms3_relators());
  const bool pres_a4 = chein::check_relations(
      c.table(), {{"x", c.named("x0")}, {"y", c.named("z0")}, {"u", c.named("u1")}}, chein::ma4_relators());
  std::ostringstream d;
  d << "lemma M(S3) " << (rs.ok() ? "ok" : "fails") << ", M(A4) " << (ra.ok() ? "ok" : "fails")
    << ", l[E4:M(S3)] = " << e4_ms3 << ", l[E4:M(A4)] = " << e4_ma4 << ", relators " << pres_s3 << pres_a4;
  return {rs.ok() && ra.ok() && e4_ms3 == 9 && e4_ma4 == 19 && pres_s3 && pres_a4, d.str()};
}

Outcome c2xc4_fixture() {
  const chein::C2xC4Demo demo = chein::subgroup_lattice_demo_c2xc4();
  std::ostringstream d;
  d << "l_iso[A:C4] = " << demo.copies_c4_above_a << ", l_iso[A':C4] = " << demo.copies_c4_above_a_prime;
  return {demo.copies_c4_above_a == 2 && demo.copies_c4_above_a_prime == 0 && demo.report.ok(), d.str()};
}

Outcome determinism(const std::string& cli, const fs::path& dir, const lattice::Analysis& a) {
  fs::create_directories(dir);
  const fs::path first = dir / "lattice1.json", second = dir / "lattice2.json";
  fs::remove(first);
  fs::remove(second);
  int rc = 0;
  for (const fs::path& p : {first, second}) {
    const std::string cmd = "\"" + cli + "\" lattice --out json --path \"" + p.string() + "\"";
    rc |= std::system(cmd.c_str());
  }
  const std::string x = read_file(first), y = read_file(second);
  // In-process cross-check: a single-threaded rebuild exports the same bytes.
  const lattice::Analysis serial(1);
  const std::string in_process = lattice::export_json(lattice::figure2_data(serial));
  std::ostringstream d;
  d << "two CLI runs " << (x == y ? "identical" : "differ") << " (" << x.size() << " bytes), threaded vs serial "
    << (lattice::export_json(lattice::figure2_data(a)) == in_process ? "identical" : "differ");
  const bool ok = rc == 0 && !x.empty() && x == y && x == in_process;
  return {ok, d.str()};
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <mlat binary> <scratch dir>\n";
    return 2;
  }
  const auto start = std::chrono::steady_clock::now();
  const lattice::Analysis a(0);

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"loop construction", loop_construction},
      {"table 1", table1},
      {"type census", [&] { return census(a); }},
      {"orbits", [&] { return orbits(a); }},
      {"oracle equivalence", [&] { return oracle_equivalence(a); }},
      {"Hasse constants", [&] { return hasse_constants(a); }},
      {"global properties", [&] { return global_properties(a); }},
      {"Chein module", chein_module},
      {"C2xC4 fixture", c2xc4_fixture},
      {"determinism", [&] { return determinism(argv[1], argv[2], a); }},
  };

  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << k << " " << name << ": " << o.detail << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (10 - failed) << "/10 criteria passed in " << std::fixed << std::setprecision(1) << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
