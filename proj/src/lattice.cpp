#include "mlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "mlat/subloops.hpp"

namespace mlat::lattice {

using hasse::SubloopCensus;

LatticeGraph covering_graph(const SubloopCensus& c) {
  LatticeGraph g;
  g.lower.resize(c.size());
  g.upper.resize(c.size());
  const auto& subs = c.subloops();
  for (std::size_t i = 0; i < c.size(); ++i) {
    // above(i) is in census order, hence by increasing size.
    std::vector<std::size_t> cand;
    for (std::size_t j : c.above(i))
      if (j != i)
        cand.push_back(j);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const std::size_t j = cand[a];
      bool covers = true;
      for (std::size_t b = 0; b < a && covers; ++b) {
        const std::size_t k = cand[b];
        if (subs[k].size() < subs[j].size() && subs[k].is_subset_of(subs[j]))
          covers = false;
      }
      if (covers) {
        g.upper[i].push_back(j);
        g.lower[j].push_back(i);
      }
    }
  }
  return g;
}

Analysis::Analysis(unsigned threads)
    : loop_(&paige::paige2()),
      group_(aut::generate_group(loop_->table(), aut::paige_generators(*loop_))),
      census_(std::make_unique<SubloopCensus>(loop_->table(), enumerate_subloops(loop_->table(), threads), group_)),
      graph_(covering_graph(*census_)) {}

bool check_strong_lagrange(const SubloopCensus& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j : c.above(i))
      if (c.subloops()[j].size() % c.subloops()[i].size() != 0)
        return false;
  return true;
}

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace

bool check_weak_cauchy(const SubloopCensus& c, std::size_t i) {
  const ElementSet& s = c.subloops()[i];
  for (std::size_t p : prime_divisors(s.size())) {
    bool found = false;
    for (std::size_t j = 0; j < c.size() && !found; ++j)
      found = c.subloops()[j].size() == p && c.subloops()[j].is_subset_of(s);
    if (!found)
      return false;
  }
  return true;
}

bool check_weak_cauchy(const SubloopCensus& c) { return check_weak_cauchy(c, c.size() - 1); }

std::vector<std::size_t> primes_with_subloops(const SubloopCensus& c) {
  std::set<std::size_t> out;
  for (const ElementSet& s : c.subloops())
    if (s.size() > 1 && prime_divisors(s.size()) == std::vector<std::size_t>{s.size()})
      out.insert(s.size());
  return {out.begin(), out.end()};
}

std::size_t e8_commuting_extensions(const SubloopCensus& c) {
  const CayleyTable& t = c.table();
  std::size_t found = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.type(i) != IsoType::E8)
      continue;
    const ElementSet& e8 = c.subloops()[i];
    const auto members = e8.members();
    for (Element y = 0; y < t.size(); ++y) {
      if (e8.contains(y) || element_order(t, y) != 2)
        continue;
      if (std::all_of(members.begin(), members.end(), [&](Element x) { return t.mul(x, y) == t.mul(y, x); }))
        ++found;
    }
  }
  return found;
}

std::span<const NamedRep> named_representatives() {
  static const std::vector<NamedRep> reps{
      {"1", {}},
      {"C2", {"x0"}},
      {"C3", {"y0"}},
      {"E4+", {"x0", "u1"}},
      {"E4-", {"x0", "u2"}},
      {"S3", {"x0", "y0"}},
      {"E8", {"x0", "u1", "u2"}},
      {"A4", {"x0", "z0"}},
      {"MS3", {"x0", "y0", "u0"}},
      {"MA4", {"x0", "z0", "u1"}},
      {"C", {}},
  };
  return reps;
}

ElementSet named_subloop(const paige::PaigeLoop& loop, const NamedRep& rep) {
  if (rep.label == "C")
    return full_set(loop.table());
  std::vector<Element> gens;
  for (const std::string& g : rep.generators)
    gens.push_back(loop.named(g));
  return closure(loop.table(), gens);
}

Figure2 figure2_data(const Analysis& a) {
  const SubloopCensus& c = a.census();
  const auto& orbits = c.orbits().orbits;
  const std::size_t top = c.size() - 1;

  Figure2 f;
  f.elements = c.table().size();

  std::vector<std::size_t> order(orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k)
    order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return c.orbit_rep(x).size() < c.orbit_rep(y).size();
  });

  std::map<std::string, ElementSet> named;
  for (const NamedRep& r : named_representatives())
    named.emplace(r.label, named_subloop(a.loop(), r));

  std::vector<std::size_t> node_of(orbits.size());
  for (std::size_t k : order) {
    FigureNode n;
    n.id = f.nodes.size();
    n.orbit_index = k;
    n.order = c.orbit_rep(k).size();
    n.type = c.orbit_type(k);
    n.orbit = c.orbit_label(k);
    n.size = c.orbit_size(k);
    auto it = named.find(n.orbit);
    const ElementSet& rep = it != named.end() && c.find(it->second) && c.orbit_of(*c.find(it->second)) == k
                                ? it->second
                                : c.orbit_rep(k);
    n.representative = rep.members();
    node_of[k] = n.id;
    f.nodes.push_back(std::move(n));
  }

  const auto& graph = a.graph();
  for (const FigureNode& na : f.nodes)
    for (const FigureNode& nb : f.nodes) {
      if (na.id >= nb.id)
        continue;
      const std::size_t ka = na.orbit_index, kb = nb.orbit_index;
      const ElementSet& rep_a = c.orbit_rep(ka);
      const std::size_t ia = orbits[ka].representative;
      const std::size_t l_orb = hasse::count_orbit_above(c, rep_a, kb);
      // Orbits are Aut-invariant, so looking at covers of one representative
      // is enough.
      const auto& up = graph.upper[ia];
      const bool maximal = std::any_of(up.begin(), up.end(), [&](std::size_t j) { return c.orbit_of(j) == kb; });
      const bool trivial_end = na.order == 1 || orbits[kb].representative == top;
      const bool edge = trivial_end ? maximal : l_orb > 0;
      if (!edge)
        continue;
      f.edges.push_back({na.id, nb.id, hasse::abstract_count(c, na.type, nb.type), l_orb, maximal});
    }
  std::sort(f.edges.begin(), f.edges.end(),
            [](const FigureEdge& x, const FigureEdge& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
  return f;
}

std::string export_json(const Figure2& f) {
  nlohmann::ordered_json j;
  j["elements"] = f.elements;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const FigureNode& n : f.nodes) {
    nlohmann::ordered_json node;
    node["id"] = n.id;
    node["order"] = n.order;
    node["type"] = to_string(n.type);
    node["orbit"] = n.orbit;
    node["size"] = n.size;
    node["representative"] = n.representative;
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const FigureEdge& e : f.edges) {
    nlohmann::ordered_json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["l_glb"] = e.l_glb;
    edge["l_orb"] = e.l_orb;
    edge["maximal"] = e.maximal;
    j["edges"].push_back(std::move(edge));
  }
  return j.dump(2) + "\n";
}

std::string export_dot(const Figure2& f) {
  std::string out = "graph subloops {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const FigureNode& n : f.nodes)
    out += "  n" + std::to_string(n.id) + " [label=\"" + n.orbit + "\\n" + std::to_string(n.size) + "\"];\n";
  for (const FigureEdge& e : f.edges) {
    out += "  n" + std::to_string(e.from) + " -- n" + std::to_string(e.to) + " [label=\"" + std::to_string(e.l_glb) +
           ":" + std::to_string(e.l_orb) + "\"";
    if (e.maximal)
      out += ", style=bold";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

Report verify_lattice(const Analysis& a) {
  Report r("subloop lattice");
  const SubloopCensus& c = a.census();
  const paige::PaigeLoop& loop = a.loop();
  const CayleyTable& t = loop.table();

  // Census by type.
  const std::pair<IsoType, std::size_t> census[] = {
      {IsoType::C2, 63}, {IsoType::C3, 28}, {IsoType::E4, 315}, {IsoType::S3, 336},
      {IsoType::E8, 63}, {IsoType::A4, 63}, {IsoType::MS3, 112}, {IsoType::MA4, 63},
  };
  std::size_t total = 2;
  for (auto [type, n] : census) {
    r.expect_eq("census." + to_string(type), n, hasse::count_copies(c, type), Basis::Published, "list of subloops");
    total += n;
  }
  r.expect_eq("census.total", total, c.size(), Basis::Derived, "sum of the type counts");
  std::set<IsoType> kinds;
  for (std::size_t i = 0; i < c.size(); ++i)
    kinds.insert(c.type(i));
  r.expect_eq("census.types", std::size_t{10}, kinds.size(), Basis::Published, "list of subloops");
  r.expect_true("census.no_other_types", !kinds.contains(IsoType::Other) && !kinds.contains(IsoType::C4) &&
                                             !kinds.contains(IsoType::C6) && !kinds.contains(IsoType::C2xC4),
                Basis::Published, "list of subloops");

  // Orbits.
  r.expect_eq("orbits.count", std::size_t{11}, c.orbits().orbits.size(), Basis::Published,
              "transitive except on E4");
  for (const NamedRep& rep : named_representatives()) {
    const ElementSet s = named_subloop(loop, rep);
    auto idx = c.find(s);
    const bool ok = idx && c.orbit_label(c.orbit_of(*idx)) == rep.label;
    r.expect_true("orbits.representative[" + rep.label + "]", ok, Basis::Published, "orbit representatives");
  }
  std::size_t orbit_sum_mismatch = 0;
  for (IsoType type : c.types_present()) {
    std::size_t sum = 0;
    for (std::size_t k : c.orbits_of_type(type))
      sum += c.orbit_size(k);
    orbit_sum_mismatch += sum != hasse::count_copies(c, type);
  }
  r.expect_eq("orbits.sizes_sum_to_census", std::size_t{0}, orbit_sum_mismatch, Basis::Derived,
              "orbits partition each type");

  // Closure of the enumeration under the generators.
  bool closed = true;
  for (const aut::Generator& g : a.group().generators())
    for (const ElementSet& s : c.subloops())
      if (!c.find(g.perm.apply(s)))
        closed = false;
  r.expect_true("enumeration.aut_closed", closed, Basis::Derived, "automorphisms permute subloops");

  // Global properties.
  r.expect_true("global.strong_lagrange", check_strong_lagrange(c), Basis::Published, "strong Lagrange property");
  r.expect_true("global.weak_cauchy_fails", !check_weak_cauchy(c), Basis::Published, "no subloop of order 5");
  r.expect_eq("global.primes_with_subloops", std::string("2,3"),
              [&] {
                std::string s;
                for (std::size_t p : primes_with_subloops(c))
                  s += (s.empty() ? "" : ",") + std::to_string(p);
                return s;
              }(),
              Basis::Published, "proper subloop orders are 2^r 3^s");
  bool proper_weak_cauchy = true;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    proper_weak_cauchy = proper_weak_cauchy && check_weak_cauchy(c, i);
  r.expect_true("global.proper_subloops_weak_cauchy", proper_weak_cauchy, Basis::Published,
                "small Moufang loops have weak Cauchy");
  std::set<std::size_t> orders;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    orders.insert(c.subloops()[i].size());
  r.expect_true("global.proper_orders", orders == std::set<std::size_t>{1, 2, 3, 4, 6, 8, 12, 24}, Basis::Published,
                "possible subloop orders");
  r.expect_true("global.no_order_5_16_48", !orders.contains(5) && !orders.contains(16) && !orders.contains(48),
                Basis::Published, "no E16, weak Cauchy fails");
  r.expect_eq("global.e8_commuting_extensions", std::size_t{0}, e8_commuting_extensions(c), Basis::Published,
              "no copies of E16");
  {
    const Element x0 = loop.named("x0"), u1 = loop.named("u1"), u2 = loop.named("u2");
    const ElementSet e8 = closure(t, {x0, u1, u2});
    std::size_t outside = 0;
    for (Element y : loop.involutions())
      if (!e8.contains(y) && t.mul(x0, y) == t.mul(y, x0) && t.mul(u1, y) == t.mul(y, u1) &&
          t.mul(u2, y) == t.mul(y, u2))
        ++outside;
    r.expect_eq("global.involutions_commuting_with_<x0,u1,u2>", std::size_t{0}, outside, Basis::Published,
                "no copies of E16");
  }

  // E4 orbit separation and E8 contents.
  {
    const std::size_t plus = *c.orbit_by_label("E4+");
    bool separated = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c.type(i) != IsoType::E4)
        continue;
      const auto& up = c.above(i);
      const bool in_a4 = std::any_of(up.begin(), up.end(), [&](std::size_t j) { return c.type(j) == IsoType::A4; });
      separated = separated && in_a4 == (c.orbit_of(i) == plus);
    }
    r.expect_true("e4.in_a4_iff_plus", separated, Basis::Published, "E4 orbit criterion");
    const std::size_t minus = *c.orbit_by_label("E4-");
    bool every_e8 = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c.type(i) != IsoType::E8)
        continue;
      bool has = false;
      for (std::size_t j = 0; j < c.size() && !has; ++j)
        has = c.orbit_of(j) == minus && c.subloops()[j].is_subset_of(c.subloops()[i]);
      every_e8 = every_e8 && has;
    }
    r.expect_true("e8.contains_e4_minus", every_e8, Basis::Published, "E8 contains an E4-");
  }

  // Every S3 contains an involution with zero diagonal.
  {
    bool all = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c.type(i) != IsoType::S3)
        continue;
      bool has = false;
      c.subloops()[i].for_each([&](Element x) {
        const auto m = loop.matrix(x);
        has = has || (element_order(t, x) == 2 && m.a() == 0);
      });
      all = all && has;
    }
    r.expect_true("s3.zero_diagonal_involution", all, Basis::Published, "involutions in copies of S3");
  }

  // Covering relation.
  const LatticeGraph& g = a.graph();
  std::size_t atoms_c2 = 0, atoms_c3 = 0;
  for (std::size_t j : g.upper[0]) {
    atoms_c2 += c.type(j) == IsoType::C2;
    atoms_c3 += c.type(j) == IsoType::C3;
  }
  r.expect_eq("covers.atoms", std::string("63+28"),
              std::to_string(atoms_c2) + "+" + std::to_string(atoms_c3) +
                  (g.upper[0].size() == atoms_c2 + atoms_c3 ? "" : "+other"),
              Basis::Derived, "atoms are cyclic of prime order");
  bool e8_not_maximal = true;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.type(i) == IsoType::E8)
      for (std::size_t j : g.upper[i])
        e8_not_maximal = e8_not_maximal && c.type(j) == IsoType::MA4;
  r.expect_true("covers.e8_only_below_ma4", e8_not_maximal, Basis::Published, "E8 is not maximal in C");
  bool divides = true;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j : g.upper[i])
      divides = divides && c.subloops()[j].size() % c.subloops()[i].size() == 0;
  r.expect_true("covers.orders_divide", divides, Basis::Derived, "strong Lagrange");
  {
    std::set<IsoType> top;
    for (std::size_t j : g.lower[c.size() - 1])
      top.insert(c.type(j));
    r.expect_true("covers.maximal_subloops_of_C", top == std::set<IsoType>{IsoType::MS3, IsoType::MA4},
                  Basis::Derived, "covers of the top");
  }

  // Figure 2.
  const Figure2 f = figure2_data(a);
  r.expect_eq("figure2.nodes", std::size_t{11}, f.nodes.size(), Basis::Derived, "9 classes plus bottom and top");
  auto edge = [&](std::string_view from, std::string_view to) -> const FigureEdge* {
    for (const FigureEdge& e : f.edges)
      if (f.nodes[e.from].orbit == from && f.nodes[e.to].orbit == to)
        return &e;
    return nullptr;
  };
  auto node = [&](std::string_view label) -> const FigureNode* {
    for (const FigureNode& n : f.nodes)
      if (n.orbit == label)
        return &n;
    return nullptr;
  };
  r.expect_eq("figure2.size[E4+]", std::size_t{63}, node("E4+") ? node("E4+")->size : 0, Basis::Published,
              "E4 orbit sizes");
  r.expect_eq("figure2.size[E4-]", std::size_t{252}, node("E4-") ? node("E4-")->size : 0, Basis::Published,
              "E4 orbit sizes");
  const FigureEdge* s3_ms3 = edge("S3", "MS3");
  r.expect_eq("figure2.edge[S3:MS3]", std::string("3:1"),
              s3_ms3 ? std::to_string(s3_ms3->l_glb) + ":" + std::to_string(s3_ms3->l_orb) : std::string("none"),
              Basis::Published, "S3 inside M(S3)");
  const FigureEdge* e8_c = edge("E8", "C");
  r.expect_true("figure2.no_thick_edge[E8:C]", e8_c == nullptr || !e8_c->maximal, Basis::Published,
                "E8 is not maximal in C");
  const FigureEdge* e8_ma4 = edge("E8", "MA4");
  r.expect_true("figure2.thick_edge[E8:MA4]", e8_ma4 != nullptr && e8_ma4->maximal, Basis::Derived,
                "E8 covered by M(A4)");
  r.expect_true("figure2.deterministic", export_json(f) == export_json(figure2_data(a)), Basis::Derived,
                "serialization is a function of the data");
  return r;
}

} // namespace mlat::lattice
