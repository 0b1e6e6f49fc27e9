#include <gtest/gtest.h>

#include <json.hpp>

#include "mlat/lattice.hpp"

using namespace mlat;
using namespace mlat::lattice;

namespace {

const Analysis& analysis() {
  static const Analysis a(0);
  return a;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1))
    ++n;
  return n;
}

} // namespace

TEST(Lattice, CoversMatchBruteForce) {
  const auto& c = analysis().census();
  const auto& subs = c.subloops();
  const LatticeGraph& g = analysis().graph();
  ASSERT_EQ(g.lower.size(), subs.size());
  for (std::size_t i = 0; i < subs.size(); i += 7) {
    std::vector<std::size_t> lower;
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (j == i || !subs[j].is_subset_of(subs[i]))
        continue;
      bool cover = true;
      for (std::size_t k = 0; k < subs.size() && cover; ++k)
        if (k != i && k != j && subs[j].is_subset_of(subs[k]) && subs[k].is_subset_of(subs[i]))
          cover = false;
      if (cover)
        lower.push_back(j);
    }
    auto got = g.lower[i];
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, lower) << i;
  }
}

TEST(Lattice, UpperIsTransposeOfLower) {
  const LatticeGraph& g = analysis().graph();
  std::size_t down = 0, up = 0;
  for (std::size_t i = 0; i < g.lower.size(); ++i) {
    down += g.lower[i].size();
    up += g.upper[i].size();
    for (std::size_t j : g.lower[i])
      EXPECT_NE(std::find(g.upper[j].begin(), g.upper[j].end(), i), g.upper[j].end());
  }
  EXPECT_EQ(down, up);
}

TEST(Lattice, MaximalSubloopsOfWholeLoop) {
  const auto& c = analysis().census();
  const LatticeGraph& g = analysis().graph();
  std::map<IsoType, std::size_t> types;
  for (std::size_t j : g.lower.back())
    ++types[c.type(j)];
  // MS3 and MA4 are maximal; E8 is not (it sits in an MA4).
  EXPECT_EQ(types[IsoType::MS3], 112u);
  EXPECT_EQ(types[IsoType::MA4], 63u);
  EXPECT_EQ(types.count(IsoType::E8), 0u);
}

TEST(Lattice, GlobalProperties) {
  const auto& c = analysis().census();
  EXPECT_TRUE(check_strong_lagrange(c));
  // 5 divides 120 but no subloop has order 5.
  EXPECT_FALSE(check_weak_cauchy(c));
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    EXPECT_TRUE(check_weak_cauchy(c, i));
  EXPECT_EQ(primes_with_subloops(c), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(e8_commuting_extensions(c), 0u);
}

TEST(Lattice, NamedRepresentativesAreOrbitReps) {
  const auto& c = analysis().census();
  const auto& loop = analysis().loop();
  const auto reps = named_representatives();
  EXPECT_EQ(reps.size(), 11u);
  for (const NamedRep& r : reps) {
    const ElementSet s = named_subloop(loop, r);
    const auto idx = c.find(s);
    ASSERT_TRUE(idx.has_value()) << r.label;
    EXPECT_EQ(c.orbit_label(c.orbit_of(*idx)), r.label);
  }
}

TEST(Lattice, JsonSchema) {
  const Figure2 f = figure2_data(analysis());
  const auto j = nlohmann::json::parse(export_json(f));
  EXPECT_EQ(j.at("elements").get<int>(), 120);
  ASSERT_EQ(j.at("nodes").size(), 11u);
  for (const auto& n : j.at("nodes"))
    for (const char* key : {"id", "order", "type", "orbit", "size", "representative"})
      EXPECT_TRUE(n.contains(key)) << key;
  ASSERT_EQ(j.at("edges").size(), f.edges.size());
  for (const auto& e : j.at("edges")) {
    for (const char* key : {"from", "to", "l_glb", "l_orb", "maximal"})
      EXPECT_TRUE(e.contains(key)) << key;
    EXPECT_LT(e.at("from").get<int>(), e.at("to").get<int>());
  }
  std::size_t total = 0;
  for (const auto& n : j.at("nodes"))
    total += n.at("size").get<std::size_t>();
  EXPECT_EQ(total, 1045u);
}

TEST(Lattice, EdgesAgreeWithCensus) {
  const auto& c = analysis().census();
  const Figure2 f = figure2_data(analysis());
  for (const FigureEdge& e : f.edges) {
    const FigureNode& a = f.nodes[e.from];
    const FigureNode& b = f.nodes[e.to];
    EXPECT_EQ(e.l_orb, hasse::count_orbit_above(c, c.orbit_rep(a.orbit_index), b.orbit_index));
    EXPECT_EQ(e.l_glb, hasse::abstract_count(c, a.type, b.type));
    EXPECT_GT(e.l_orb, 0u);
    EXPECT_EQ(b.order % a.order, 0u);
  }
  auto has_edge = [&](const std::string& a, const std::string& b) {
    for (const FigureEdge& e : f.edges)
      if (f.nodes[e.from].orbit == a && f.nodes[e.to].orbit == b)
        return true;
    return false;
  };
  EXPECT_FALSE(has_edge("E8", "C"));
  EXPECT_TRUE(has_edge("E8", "MA4"));
  EXPECT_TRUE(has_edge("MA4", "C"));
  EXPECT_FALSE(has_edge("E4-", "A4"));
  EXPECT_TRUE(has_edge("E4+", "A4"));
}

TEST(Lattice, DotOutput) {
  const Figure2 f = figure2_data(analysis());
  const std::string dot = export_dot(f);
  EXPECT_EQ(dot.rfind("graph subloops {", 0), 0u);
  std::size_t maximal = 0;
  for (const FigureEdge& e : f.edges)
    maximal += e.maximal;
  EXPECT_EQ(count_of(dot, "style=bold"), maximal);
  EXPECT_EQ(count_of(dot, " -- "), f.edges.size());
  for (const FigureNode& n : f.nodes)
    EXPECT_NE(dot.find("\"" + n.orbit + "\\n" + std::to_string(n.size) + "\""), std::string::npos) << n.orbit;
}

TEST(Lattice, ExportsAreDeterministicAcrossThreadCounts) {
  const Analysis one(1);
  const Figure2 a = figure2_data(one);
  const Figure2 b = figure2_data(analysis());
  EXPECT_EQ(export_json(a), export_json(b));
  EXPECT_EQ(export_dot(a), export_dot(b));
}

TEST(Lattice, ReportPasses) {
  const Report r = verify_lattice(analysis());
  EXPECT_TRUE(r.ok()) << r.render();
}
