#include "mlat/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mlat/autgroup.hpp"
#include "mlat/catalog.hpp"
#include "mlat/chein.hpp"
#include "mlat/hasse.hpp"
#include "mlat/paige.hpp"
#include "mlat/zorn.hpp"

namespace mlat::catalog {
std::string_view embedded_fixture(std::string_view name);
}

namespace mlat::verify {

using zorn::VMatrix;

std::span<const std::string_view> sections() {
  static constexpr std::array<std::string_view, 8> names{"zorn",  "loopcore", "paige", "table1",
                                                         "chein", "autgroup", "hasse", "lattice"};
  return names;
}

const lattice::Analysis& Context::analysis() {
  if (!analysis_)
    analysis_ = std::make_unique<lattice::Analysis>(threads_);
  return *analysis_;
}

std::string_view expected_table1_csv() { return catalog::embedded_fixture("table1.csv"); }

std::string_view non_moufang_loop_text() {
  return "5 0\n"
         "0 1 2 3 4\n"
         "1 0 3 4 2\n"
         "2 4 0 1 3\n"
         "3 2 4 0 1\n"
         "4 3 1 2 0\n";
}

namespace {

Report zorn_section() {
  Report r("zorn");
  std::vector<VMatrix> units;
  for (int p = 0; p < 256; ++p) {
    const VMatrix m = VMatrix::from_packed(static_cast<std::uint8_t>(p));
    if (zorn::det(m) == 1)
      units.push_back(m);
  }
  r.expect_eq("zorn.unit_norm_count", std::size_t{120}, units.size(), Basis::Published, "order q^3(q^4-1) at q=2");
  std::map<int, std::size_t> orders;
  bool powers_agree = true, inverse_ok = true, shape_ok = true, roundtrip = true;
  for (const VMatrix m : units) {
    const int o = zorn::element_order(m);
    ++orders[o];
    powers_agree = powers_agree && zorn::order_by_powers(m) == o;
    inverse_ok = inverse_ok && zorn::vm_mul(m, zorn::inverse(m)) == VMatrix::identity() &&
                 zorn::vm_mul(zorn::inverse(m), m) == VMatrix::identity();
    if (o == 2)
      shape_ok = shape_ok && m == VMatrix::involution(m.alpha(), m.beta());
    if (o == 3)
      shape_ok = shape_ok && m == VMatrix::order3(m.alpha(), m.beta(), m.a());
    roundtrip = roundtrip && zorn::parse(zorn::format(m)) == m && zorn::parse(zorn::format_raw(m)) == m;
  }
  r.expect_eq("zorn.involutions", std::size_t{63}, orders[2], Basis::Published, "element orders");
  r.expect_eq("zorn.order_3", std::size_t{56}, orders[3], Basis::Published, "element orders");
  r.expect_true("zorn.order_by_diagonal_matches_powers", powers_agree, Basis::Derived, "repeated multiplication");
  r.expect_true("zorn.inverse_swaps_diagonal", inverse_ok, Basis::Derived, "x x^-1 = x^-1 x = e");
  r.expect_true("zorn.shorthand_shapes", shape_ok, Basis::Derived, "inv/tri normal forms");
  r.expect_true("zorn.format_parse_roundtrip", roundtrip, Basis::Derived, "text notation");
  bool mult = true;
  for (int p = 0; p < 256; ++p)
    for (int q = 0; q < 256; ++q) {
      const VMatrix x = VMatrix::from_packed(static_cast<std::uint8_t>(p));
      const VMatrix y = VMatrix::from_packed(static_cast<std::uint8_t>(q));
      mult = mult && zorn::det(zorn::vm_mul(x, y)) == (zorn::det(x) & zorn::det(y));
    }
  r.expect_true("zorn.det_multiplicative", mult, Basis::Derived, "norm is multiplicative");
  r.expect_eq("zorn.x0x1", std::string("tri(011,110,1)"),
              zorn::format(zorn::vm_mul(zorn::parse("inv(111,111)"), zorn::parse("inv(110,100)"))), Basis::Published,
              "x0 x1 = y0");
  return r;
}

Report loopcore_section() {
  Report r("loopcore");
  const CayleyTable& t = paige::paige2().table();
  r.expect_true("loopcore.paige_moufang", is_moufang(t), Basis::Published, "Moufang identity on all triples");
  r.expect_true("loopcore.paige_nonassociative", !is_associative(t), Basis::Published, "nonassociative");
  r.expect_true("loopcore.paige_noncommutative", !is_commutative(t), Basis::Derived, "nonassociative");
  r.expect_true("loopcore.paige_diassociative", is_diassociative(t), Basis::Derived, "Moufang loops are diassociative");
  r.expect_true("loopcore.order_profile", order_profile(t) == OrderProfile{{1, 1}, {2, 63}, {3, 56}},
                Basis::Published, "element orders");
  r.expect_true("loopcore.emit_parse_roundtrip", parse_cayley(emit_cayley(t)) == t, Basis::Derived, "text format");
  r.expect_eq("loopcore.closure_of_nothing", std::size_t{1}, closure(t, {}).size(), Basis::Derived, "{e}");
  bool catalog_ok = true;
  for (IsoType g : catalog::groups())
    catalog_ok = catalog_ok && classify(catalog::table(g)) == g;
  r.expect_true("loopcore.catalog_classifies_to_itself", catalog_ok, Basis::Derived, "fixtures");
  const CayleyTable five = parse_cayley(non_moufang_loop_text());
  r.expect_true("loopcore.order5_loop_not_moufang", !is_moufang(five), Basis::Derived,
                "Moufang loops of order < 12 are groups");
  bool rejected = false;
  try {
    parse_cayley("3 0\n0 1 2\n1 1 0\n2 0 1\n");
  } catch (const CayleyError&) {
    rejected = true;
  }
  r.expect_true("loopcore.rejects_non_latin", rejected, Basis::Derived, "Latin square check");
  return r;
}

Report paige_section() {
  Report r("paige");
  const paige::PaigeLoop& c = paige::paige2();
  const CayleyTable& t = c.table();
  r.expect_eq("paige.size", std::size_t{120}, c.size(), Basis::Published, "order of M*(2)");
  r.expect_eq("paige.named.x0", std::string("inv(111,111)"), t.label(c.named("x0")), Basis::Published, "x0");
  r.expect_eq("paige.named.y0", std::string("tri(011,110,1)"), t.label(c.named("y0")), Basis::Published, "y0");
  r.expect_eq("paige.named.u2", std::string("inv(100,010)"), t.label(c.named("u2")), Basis::Published, "u2");

  const auto invs = c.involutions();
  const auto tris = c.order3_elements();
  std::size_t pair_mismatch = 0;
  for (Element x : invs)
    for (Element y : invs) {
      if (x == y)
        continue;
      const IsoType direct = classify(t, closure(t, {x, y}));
      const IsoType predicted =
          paige::involution_pair_type(c, x, y) == paige::PairType::E4 ? IsoType::E4 : IsoType::S3;
      pair_mismatch += direct != predicted;
    }
  r.expect_eq("paige.involution_pair_criterion", std::size_t{0}, pair_mismatch, Basis::Published,
              "dot-product criterion for two involutions");
  std::size_t mixed_mismatch = 0;
  for (Element z : tris)
    for (Element x : invs)
      mixed_mismatch += paige::mixed_order_criterion(c, z, x) != (element_order(t, t.mul(z, x)) == 2);
  r.expect_eq("paige.mixed_order_criterion", std::size_t{0}, mixed_mismatch, Basis::Published,
              "order of zx for z of order 3");
  r.expect_true("paige.pair[x0,u1]=E4",
                paige::involution_pair_type(c, c.named("x0"), c.named("u1")) == paige::PairType::E4,
                Basis::Published, "E4+ representative");
  r.expect_true("paige.pair[x0,x1]=S3",
                paige::involution_pair_type(c, c.named("x0"), c.named("x1")) == paige::PairType::S3,
                Basis::Published, "S3 generated by x0, x1");
  r.expect_true("paige.mixed[z0,x0]=false", !paige::mixed_order_criterion(c, c.named("z0"), c.named("x0")),
                Basis::Published, "o(x0 z0) = 3");

  std::size_t no_involution = 0;
  for (Element x : tris)
    for (Element y : tris) {
      const ElementSet cx = closure(t, {x});
      if (cx.contains(y))
        continue;
      const ElementSet h = closure(t, {x, y});
      bool has = false;
      h.for_each([&](Element g) { has = has || element_order(t, g) == 2; });
      no_involution += !has;
    }
  r.expect_eq("paige.two_order3_force_involution", std::size_t{0}, no_involution, Basis::Published,
              "subloop of two order-3 elements");
  auto in_some_s3 = [&](Element x, const std::vector<Element>& partners) {
    return std::any_of(partners.begin(), partners.end(),
                       [&](Element y) { return classify(t, closure(t, {x, y})) == IsoType::S3; });
  };
  r.expect_true("paige.every_involution_in_s3",
                std::all_of(invs.begin(), invs.end(), [&](Element x) { return in_some_s3(x, invs); }),
                Basis::Published, "involutions lie in copies of S3");
  r.expect_true("paige.every_order3_in_s3",
                std::all_of(tris.begin(), tris.end(), [&](Element z) { return in_some_s3(z, invs); }),
                Basis::Published, "order-3 elements lie in copies of S3");
  return r;
}

Report table1_section() {
  Report r("table1");
  const auto cells = paige::table1(paige::paige2());
  const std::string got = paige::table1_csv(cells);
  const std::string want(expected_table1_csv());
  auto lines = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
      out.push_back(l);
    return out;
  };
  const auto g = lines(got), w = lines(want);
  r.expect_eq("table1.rows", std::size_t{64}, g.size(), Basis::Published, "63 involutions plus header");
  std::size_t differing = 0;
  for (std::size_t i = 0; i < std::max(g.size(), w.size()); ++i)
    differing += i >= g.size() || i >= w.size() || g[i] != w[i];
  r.expect_eq("table1.differing_rows", std::size_t{0}, differing, Basis::Published, "Table 1");
  auto cell = [&](const char* a, const char* b) {
    const std::size_t i = zorn::parse_vec(a).bits() * 8u + zorn::parse_vec(b).bits();
    std::string s;
    for (int v : cells[i].orders)
      s += v == 0 ? "." : std::to_string(v);
    return s;
  };
  r.expect_eq("table1.cell[001,001]", std::string("223212"), cell("001", "001"), Basis::Published,
              "Table 1 row 001 column 001");
  r.expect_eq("table1.cell[000,001]", std::string("3..3.."), cell("000", "001"), Basis::Published,
              "Table 1 row 000 column 001");
  r.expect_eq("table1.cell[111,111]", std::string("......"), cell("111", "111"), Basis::Published,
              "x0 is left blank");
  return r;
}

Report chein_section() {
  Report r("chein");
  const CayleyTable& s3 = catalog::table(IsoType::S3);
  const CayleyTable& a4 = catalog::table(IsoType::A4);
  r.append(chein::verify_m2n_lemma(s3, "S3"));
  r.append(chein::verify_m2n_lemma(a4, "A4"));
  bool all_moufang = true;
  for (IsoType g : catalog::groups())
    all_moufang = all_moufang && is_moufang(chein::chein_double(catalog::table(g)));
  r.expect_true("chein.every_double_moufang", all_moufang, Basis::Derived, "M(G,2) is Moufang");
  const CayleyTable ms3 = chein::chein_double(s3), ma4 = chein::chein_double(a4);
  r.expect_eq("chein.classify[M(S3)]", IsoType::MS3, classify(ms3), Basis::Derived, "reference tables");
  r.expect_eq("chein.classify[M(A4)]", IsoType::MA4, classify(ma4), Basis::Derived, "reference tables");
  r.expect_eq("chein.l[E4:MS3]", std::size_t{9}, chein::count_elementary_abelian(ms3, 2), Basis::Published,
              "E4 inside M(S3)");
  r.expect_eq("chein.l[E4:MA4]", std::size_t{19}, chein::count_elementary_abelian(ma4, 2), Basis::Published,
              "E4 inside M(A4)");

  const paige::PaigeLoop& c = paige::paige2();
  const CayleyTable& t = c.table();
  const std::map<std::string, Element> g1{{"x", c.named("x0")}, {"y", c.named("x1")}, {"u", c.named("u0")}};
  const std::map<std::string, Element> g2{{"x", c.named("x0")}, {"y", c.named("z0")}, {"u", c.named("u1")}};
  r.expect_true("chein.relators[M(S3)](x0,x1,u0)", chein::check_relations(t, g1, chein::ms3_relators()),
                Basis::Published, "presentation of M(S3)");
  r.expect_true("chein.relators[M(A4)](x0,z0,u1)", chein::check_relations(t, g2, chein::ma4_relators()),
                Basis::Published, "presentation of M(A4)");
  r.expect_eq("chein.type<x0,x1,u0>", IsoType::MS3, classify(t, closure(t, {c.named("x0"), c.named("x1"), c.named("u0")})),
              Basis::Published, "presentation of M(S3)");
  r.expect_eq("chein.type<x0,z0,u1>", IsoType::MA4, classify(t, closure(t, {c.named("x0"), c.named("z0"), c.named("u1")})),
              Basis::Published, "presentation of M(A4)");
  r.append(chein::subgroup_lattice_demo_c2xc4().report);
  return r;
}

Report autgroup_section(const lattice::Analysis& a) {
  Report r("autgroup");
  const paige::PaigeLoop& c = a.loop();
  const CayleyTable& t = c.table();
  const aut::AutGroup& g = a.group();
  const aut::AutGroup full = aut::full_aut_search(c);
  r.expect_eq("aut.generated_order", std::size_t{12096}, g.order(), Basis::Derived, "BFS closure of the generators");
  r.expect_eq("aut.full_search_order", std::size_t{12096}, full.order(), Basis::Derived, "backtracking search");
  r.expect_true("aut.same_group", g.same_elements(full), Basis::Derived, "two independent computations");
  r.expect_true("aut.full_search_all_automorphisms",
                std::all_of(full.elements().begin(), full.elements().end(),
                            [&](const aut::LoopPerm& p) { return aut::is_automorphism(t, p.image); }),
                Basis::Derived, "homomorphism check");

  const Element x0 = c.named("x0");
  r.expect_true("aut.lie_identity", aut::lie_auto(c, aut::BitMatrix3::identity()) == aut::identity_perm(t.size()),
                Basis::Derived, "identity lifts to identity");
  r.expect_true("aut.lie_zero_rejected", !aut::lie_auto(c, aut::BitMatrix3{}), Basis::Derived, "singular map");
  bool perms_fix_x0 = true;
  std::array<int, 3> pi{1, 2, 3};
  do
    perms_fix_x0 = perms_fix_x0 && aut::perm_auto(c, pi)(x0) == x0;
  while (std::next_permutation(pi.begin(), pi.end()));
  r.expect_true("aut.permutations_fix_x0", perms_fix_x0, Basis::Published, "x0 is invariant under permutations");
  r.expect_eq("aut.perm(12)[inv(100,100)]", std::string("inv(010,010)"),
              t.label(aut::perm_auto(c, {2, 1, 3})(c.resolve("inv(100,100)"))), Basis::Derived, "coordinate swap");
  const aut::LoopPerm delta = aut::delta_auto(c);
  r.expect_true("aut.delta_automorphism", aut::is_automorphism(t, delta.image), Basis::Published,
                "delta is an automorphism in characteristic 2");
  r.expect_eq("aut.delta[x0]", x0, delta(x0), Basis::Derived, "x0 is symmetric");
  r.expect_eq("aut.delta[y0]", std::string("tri(110,011,0)"), t.label(delta(c.named("y0"))), Basis::Derived,
              "swap of diagonal and vectors");
  r.expect_true("aut.delta_involution", aut::compose(delta, delta) == aut::identity_perm(t.size()), Basis::Derived,
                "delta twice");

  std::size_t conj_autos = 0, conj_on_order3 = 0;
  for (Element x = 0; x < t.size(); ++x)
    if (aut::conj_auto(t, x)) {
      ++conj_autos;
      conj_on_order3 += element_order(t, x) == 3;
    }
  r.expect_eq("aut.conjugations_that_are_automorphisms", std::string("e+56"),
              std::string(conj_autos == conj_on_order3 + 1 ? "e+" : "?+") + std::to_string(conj_on_order3),
              Basis::Published, "conjugation is an automorphism iff o(x) = 3");
  bool bracketing = true;
  for (Element x : c.order3_elements())
    for (Element y = 0; y < t.size(); ++y)
      bracketing = bracketing && t.mul(t.mul(t.inverse(x), y), x) == t.mul(t.inverse(x), t.mul(y, x));
  r.expect_true("aut.conjugation_bracketing", bracketing, Basis::Derived, "(x^-1 y)x = x^-1(yx)");
  const auto witness = aut::conj_auto(t, c.resolve("tri(001,101,1)"));
  r.expect_true("aut.conj[tri(001,101,1)](inv(100,100))=x0", witness && (*witness)(c.resolve("inv(100,100)")) == x0,
                Basis::Published, "transitivity on involutions");
  const aut::LoopPerm phi = aut::phi_auto(c);
  r.expect_eq("aut.phi[x0]", x0, phi(x0), Basis::Published, "phi fixes x0");
  r.expect_eq("aut.phi[u4]", c.named("u1"), phi(c.named("u4")), Basis::Published, "phi(u4) = u1");
  r.expect_eq("aut.phi[u3]", c.named("u2"), phi(c.named("u3")), Basis::Published, "phi(u3) = u2");

  std::vector<aut::Generator> small;
  pi = {1, 2, 3};
  do
    small.push_back({"perm", aut::perm_auto(c, pi)});
  while (std::next_permutation(pi.begin(), pi.end()));
  small.push_back({"delta", delta});
  r.expect_eq("aut.permutations_and_delta_order", std::size_t{12}, aut::generate_group(t, small).order(),
              Basis::Derived, "S3 x C2");

  const hasse::SubloopCensus& census = a.census();
  for (IsoType type : {IsoType::C2, IsoType::C3, IsoType::E4, IsoType::S3, IsoType::E8, IsoType::A4, IsoType::MS3,
                       IsoType::MA4}) {
    std::string sizes;
    for (std::size_t k : census.orbits_of_type(type))
      sizes += (sizes.empty() ? "" : "+") + std::to_string(census.orbit_size(k));
    const std::string want = type == IsoType::E4 ? "63+252" : std::to_string(hasse::count_copies(census, type));
    // Orbits are listed by representative; normalise the E4 order.
    if (type == IsoType::E4 && sizes == "252+63")
      sizes = "63+252";
    r.expect_eq("aut.orbits[" + to_string(type) + "]", want, sizes, Basis::Published, "orbits of Aut(C)");
  }
  const ElementSet c2 = closure(t, {x0});
  const ElementSet other = closure(t, {c.resolve("inv(100,100)")});
  r.expect_true("aut.mapping[<inv(100,100)>-><x0>]", aut::mapping_auto(g, other, c2).has_value(), Basis::Published,
                "transitivity on involutions");
  const ElementSet e4p = closure(t, {x0, c.named("u1")}), e4m = closure(t, {x0, c.named("u2")});
  r.expect_true("aut.no_mapping[E4-->E4+]", !aut::mapping_auto(g, e4m, e4p).has_value(), Basis::Published,
                "two E4 orbits");

  // Images of subloops under the generators keep their constants.
  std::size_t moved = 0;
  for (const aut::Generator& gen : g.generators())
    for (std::size_t i = 0; i < census.size(); i += 7) {
      const ElementSet img = gen.perm.apply(census.subloops()[i]);
      for (IsoType type : census.types_present())
        moved += hasse::count_copies_above(census, census.subloops()[i], type) !=
                 hasse::count_copies_above(census, img, type);
    }
  r.expect_eq("aut.constants_invariant_under_generators", std::size_t{0}, moved, Basis::Derived,
              "automorphisms preserve containment");
  return r;
}

Report hasse_section(const lattice::Analysis& a) {
  Report r("hasse");
  r.append(hasse::verify_counting_lemma(a.census()));
  r.append(hasse::verify_identities(a.census()));
  r.append(hasse::verify_published_constants(a.loop(), a.census()));
  return r;
}

} // namespace

Report run_section(std::string_view name, Context& ctx) {
  if (name == "zorn")
    return zorn_section();
  if (name == "loopcore")
    return loopcore_section();
  if (name == "paige")
    return paige_section();
  if (name == "table1")
    return table1_section();
  if (name == "chein")
    return chein_section();
  if (name == "autgroup")
    return autgroup_section(ctx.analysis());
  if (name == "hasse")
    return hasse_section(ctx.analysis());
  if (name == "lattice")
    return lattice::verify_lattice(ctx.analysis());
  throw std::invalid_argument("unknown section '" + std::string(name) + "'");
}

Report run_all(Context& ctx) {
  Report r("verify");
  for (std::string_view s : sections())
    r.append(run_section(s, ctx));
  return r;
}

} // namespace mlat::verify
