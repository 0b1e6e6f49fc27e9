#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mlat/catalog.hpp"
#include "mlat/loop.hpp"
#include "mlat/paige.hpp"
#include "mlat/subloops.hpp"
#include "mlat/verify.hpp"

using namespace mlat;

namespace {

// Same loop with element i renamed perm[i]; the identity moves along.
CayleyTable relabel(const CayleyTable& t, const std::vector<Element>& perm) {
  const std::size_t n = t.size();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      cells[perm[x] * n + perm[y]] = perm[t.mul(x, y)];
  return CayleyTable(n, perm[t.identity()], std::move(cells));
}

// Closure by iterating over all pairs until nothing changes.
ElementSet naive_closure(const CayleyTable& t, const std::vector<Element>& gens) {
  std::vector<bool> in(t.size(), false);
  in[t.identity()] = true;
  for (Element g : gens)
    in[g] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (Element x = 0; x < t.size(); ++x)
      for (Element y = 0; y < t.size(); ++y)
        if (in[x] && in[y] && !in[t.mul(x, y)])
          in[t.mul(x, y)] = grew = true;
  }
  ElementSet s(t.size());
  for (Element x = 0; x < t.size(); ++x)
    if (in[x])
      s.insert(x);
  return s;
}

} // namespace

TEST(ElementSet, BasicsAcrossWidths) {
  for (std::size_t n : {5u, 120u, 200u}) {
    ElementSet s(n);
    EXPECT_TRUE(s.empty());
    EXPECT_TRUE(s.insert(3));
    EXPECT_FALSE(s.insert(3));
    s.insert(static_cast<Element>(n - 1));
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE(s.contains(static_cast<Element>(n - 1)));
    EXPECT_EQ(s.members(), (std::vector<Element>{3, static_cast<Element>(n - 1)}));
    ElementSet t(n);
    t.insert(3);
    EXPECT_TRUE(t.is_subset_of(s));
    EXPECT_FALSE(s.is_subset_of(t));
    EXPECT_EQ(s.intersect(t), t);
  }
}

TEST(ElementSet, LexOrderMatchesSortedMemberLists) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> bit(0, 3);
  for (int i = 0; i < 2000; ++i) {
    ElementSet a(130), b(130);
    for (Element x = 0; x < 130; ++x) {
      if (bit(rng) == 0)
        a.insert(x);
      if (bit(rng) == 0)
        b.insert(x);
    }
    EXPECT_EQ(lex_less(a, b), a.members() < b.members());
  }
}

TEST(CayleyTable, RejectsBadTables) {
  EXPECT_THROW(parse_cayley("2 0\n0 1\n1 1\n"), CayleyError);  // row not a permutation
  EXPECT_THROW(parse_cayley("2 0\n0 1\n0 1\n"), CayleyError);  // column repeats
  EXPECT_THROW(parse_cayley("2 0\n1 0\n0 1\n"), CayleyError);  // 0 is not the identity
  EXPECT_THROW(parse_cayley("2 0\n0 1\n"), CayleyError);       // missing row
  EXPECT_THROW(parse_cayley("2 0\n0 1\n1 2\n"), CayleyError);  // entry out of range
  EXPECT_THROW(parse_cayley("x 0\n"), CayleyError);
  EXPECT_THROW(parse_cayley("2 0\n0 1\n1 0\n5\n"), CayleyError);
}

TEST(CayleyTable, ErrorLocation) {
  try {
    parse_cayley("3 0\n0 1 2\n1 1 0\n2 0 1\n");
    FAIL() << "expected CayleyError";
  } catch (const CayleyError& e) {
    EXPECT_EQ(e.row(), 1);
  }
}

TEST(CayleyTable, EmitParseRoundTrip) {
  for (IsoType g : catalog::groups()) {
    const CayleyTable& t = catalog::table(g);
    EXPECT_EQ(parse_cayley(emit_cayley(t)), t) << to_string(g);
  }
  const CayleyTable& c = paige::paige2().table();
  EXPECT_EQ(parse_cayley(emit_cayley(c)), c);
}

TEST(Closure, EmptyGivesIdentity) {
  const CayleyTable& t = catalog::table(IsoType::S3);
  const ElementSet s = closure(t, {});
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.contains(t.identity()));
}

TEST(Closure, AgreesWithNaiveFixpointOnRandomSubsets) {
  const CayleyTable& t = paige::paige2().table();
  std::mt19937 rng(1);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(t.size() - 1));
  for (int i = 0; i < 60; ++i) {
    std::vector<Element> gens;
    for (int k = i % 3; k >= 0; --k)
      gens.push_back(pick(rng));
    const ElementSet fast = closure(t, gens);
    EXPECT_EQ(fast, naive_closure(t, gens));
    // Closed, contains the generators, idempotent.
    for (Element g : gens)
      EXPECT_TRUE(fast.contains(g));
    EXPECT_EQ(closure(t, fast.members()), fast);
  }
}

TEST(Closure, ExtendMatchesFullClosure) {
  const CayleyTable& t = paige::paige2().table();
  std::mt19937 rng(2);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(t.size() - 1));
  for (int i = 0; i < 100; ++i) {
    const Element a = pick(rng), b = pick(rng);
    EXPECT_EQ(extend_closure(t, closure(t, {a}), b), closure(t, {a, b}));
  }
}

TEST(Properties, CatalogGroups) {
  for (IsoType g : catalog::groups()) {
    const CayleyTable& t = catalog::table(g);
    EXPECT_TRUE(is_associative(t)) << to_string(g);
    EXPECT_TRUE(is_moufang(t)) << to_string(g);
  }
  EXPECT_TRUE(is_commutative(catalog::table(IsoType::C2xC4)));
  EXPECT_FALSE(is_commutative(catalog::table(IsoType::S3)));
}

TEST(Properties, NonMoufangLoopOfOrderFive) {
  const CayleyTable t = parse_cayley(verify::non_moufang_loop_text());
  EXPECT_FALSE(is_moufang(t));
  EXPECT_FALSE(is_associative(t));
  EXPECT_EQ(classify(t), IsoType::Other);
}

TEST(Properties, PaigeLoop) {
  const CayleyTable& t = paige::paige2().table();
  EXPECT_TRUE(is_moufang(t));
  EXPECT_FALSE(is_associative(t));
  EXPECT_TRUE(is_diassociative(t));
  EXPECT_EQ(order_profile(t), (OrderProfile{{1, 1}, {2, 63}, {3, 56}}));
}

TEST(Classify, CatalogAndDoubles) {
  for (IsoType g : catalog::groups())
    EXPECT_EQ(classify(catalog::table(g)), g);
  EXPECT_EQ(classify(catalog::table(IsoType::MS3)), IsoType::MS3);
  EXPECT_EQ(classify(catalog::table(IsoType::MA4)), IsoType::MA4);
  EXPECT_EQ(classify(paige::paige2().table()), IsoType::Ambient);
}

TEST(Classify, InvariantUnderRelabelling) {
  std::mt19937 rng(3);
  for (IsoType g : {IsoType::C4, IsoType::E4, IsoType::S3, IsoType::A4, IsoType::MS3, IsoType::MA4}) {
    const CayleyTable& t = catalog::table(g);
    std::vector<Element> perm(t.size());
    std::iota(perm.begin(), perm.end(), Element{0});
    for (int i = 0; i < 5; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const CayleyTable r = relabel(t, perm);
      EXPECT_EQ(classify(r), g) << to_string(g);
      EXPECT_TRUE(are_isomorphic(t, r).has_value());
    }
  }
}

TEST(Isomorphism, DistinguishesSameOrder) {
  EXPECT_FALSE(are_isomorphic(catalog::table(IsoType::C4), catalog::table(IsoType::E4)).has_value());
  EXPECT_FALSE(are_isomorphic(catalog::table(IsoType::A4), catalog::table(IsoType::MS3)).has_value());
  EXPECT_FALSE(are_isomorphic(catalog::table(IsoType::E8), catalog::table(IsoType::C2xC4)).has_value());
}

TEST(Isomorphism, CountsAutomorphismsOfSmallGroups) {
  // |Aut(S3)| = 6, |Aut(E4)| = 6, |Aut(C4)| = 2, |Aut(A4)| = 24.
  const std::pair<IsoType, std::size_t> cases[] = {
      {IsoType::S3, 6}, {IsoType::E4, 6}, {IsoType::C4, 2}, {IsoType::A4, 24}};
  for (auto [g, expected] : cases) {
    const CayleyTable& t = catalog::table(g);
    const auto gens = generating_set(t);
    std::size_t n = 0;
    for_each_isomorphism(t, gens, t, [&](std::span<const Element>) {
      ++n;
      return true;
    });
    EXPECT_EQ(n, expected) << to_string(g);
  }
}

TEST(IsoType, NamesRoundTrip) {
  for (IsoType t : {IsoType::Trivial, IsoType::C2, IsoType::C3, IsoType::C4, IsoType::E4, IsoType::C6, IsoType::S3,
                    IsoType::E8, IsoType::C2xC4, IsoType::A4, IsoType::MS3, IsoType::MA4, IsoType::Ambient})
    EXPECT_EQ(parse_iso_type(to_string(t)), t);
  EXPECT_EQ(parse_iso_type("M(S3)"), IsoType::MS3);
  EXPECT_FALSE(parse_iso_type("Q8").has_value());
}

TEST(Subloops, SmallGroupCounts) {
  // Subgroup counts: S3 has 6, A4 has 10, E8 has 16, C2xC4 has 8.
  EXPECT_EQ(enumerate_subloops(catalog::table(IsoType::S3)).size(), 6u);
  EXPECT_EQ(enumerate_subloops(catalog::table(IsoType::A4)).size(), 10u);
  EXPECT_EQ(enumerate_subloops(catalog::table(IsoType::E8)).size(), 16u);
  EXPECT_EQ(enumerate_subloops(catalog::table(IsoType::C2xC4)).size(), 8u);
}

TEST(Subloops, ThreadCountDoesNotChangeResult) {
  const CayleyTable& t = catalog::table(IsoType::MA4);
  EXPECT_EQ(enumerate_subloops(t, 1), enumerate_subloops(t, 4));
}
