#include <gtest/gtest.h>

#include "mlat/catalog.hpp"
#include "mlat/chein.hpp"
#include "mlat/paige.hpp"
#include "mlat/subloops.hpp"

using namespace mlat;

namespace {

// Doubling written case by case:
//   (g,0)(h,0) = (gh,0)       (g,0)(h,1) = (hg,1)
//   (g,1)(h,0) = (gh^-1,1)    (g,1)(h,1) = (h^-1 g,0)
Element ref_double_mul(const CayleyTable& g, Element x, Element y) {
  const Element n = static_cast<Element>(g.size());
  const Element a = x % n, b = y % n;
  const bool i = x >= n, j = y >= n;
  if (!i && !j)
    return g.mul(a, b);
  if (!i && j)
    return n + g.mul(b, a);
  if (i && !j)
    return n + g.mul(a, g.inverse(b));
  return g.mul(g.inverse(b), a);
}

std::vector<Element> elements_of_order(const CayleyTable& t, int k) {
  std::vector<Element> out;
  for (Element x = 0; x < t.size(); ++x)
    if (element_order(t, x) == k)
      out.push_back(x);
  return out;
}

} // namespace

TEST(Chein, DoublingMatchesCaseFormula) {
  for (IsoType type : catalog::groups()) {
    const CayleyTable& g = catalog::table(type);
    const CayleyTable m = chein::chein_double(g);
    ASSERT_EQ(m.size(), 2 * g.size());
    for (Element x = 0; x < m.size(); ++x)
      for (Element y = 0; y < m.size(); ++y)
        ASSERT_EQ(m.mul(x, y), ref_double_mul(g, x, y)) << to_string(type);
  }
}

TEST(Chein, RejectsNonGroups) {
  EXPECT_THROW(chein::chein_double(catalog::table(IsoType::MS3)), std::invalid_argument);
}

TEST(Chein, DoubleOfAbelianIsAbelianGroup) {
  const CayleyTable m = chein::chein_double(catalog::table(IsoType::E4));
  EXPECT_TRUE(is_associative(m));
  EXPECT_EQ(classify(m), IsoType::E8);
  EXPECT_FALSE(is_associative(chein::chein_double(catalog::table(IsoType::S3))));
}

TEST(Chein, DoublesMatchCatalogTypes) {
  EXPECT_EQ(classify(chein::chein_double(catalog::table(IsoType::S3))), IsoType::MS3);
  EXPECT_EQ(classify(chein::chein_double(catalog::table(IsoType::A4))), IsoType::MA4);
}

TEST(Chein, CountsInSmallDoubles) {
  const CayleyTable ms3 = chein::chein_double(catalog::table(IsoType::S3));
  // 3 involutions in S3, 6 in the coset: 9 copies of C2.
  EXPECT_EQ(chein::count_cyclic(ms3, 2), 9u);
  EXPECT_EQ(chein::count_cyclic(ms3, 3), 1u);
  EXPECT_EQ(chein::count_elementary_abelian(ms3, 0), 1u);
  const CayleyTable e8 = chein::chein_double(catalog::table(IsoType::E4));
  EXPECT_EQ(chein::count_elementary_abelian(e8, 2), 7u);
  EXPECT_EQ(chein::count_elementary_abelian(e8, 3), 1u);
}

TEST(Chein, LemmaHoldsForEveryCatalogGroup) {
  for (IsoType type : catalog::groups()) {
    const Report r = chein::verify_m2n_lemma(catalog::table(type), to_string(type));
    EXPECT_TRUE(r.ok()) << r.render();
  }
}

TEST(Chein, RelatorsHoldInDoubles) {
  const CayleyTable& s3 = catalog::table(IsoType::S3);
  const CayleyTable ms3 = chein::chein_double(s3);
  const auto inv = elements_of_order(s3, 2);
  const Element u = static_cast<Element>(s3.size() + s3.identity());
  EXPECT_TRUE(chein::check_relations(ms3, {{"x", inv[0]}, {"y", inv[1]}, {"u", u}}, chein::ms3_relators()));

  const CayleyTable& a4 = catalog::table(IsoType::A4);
  const CayleyTable ma4 = chein::chein_double(a4);
  const Element x = elements_of_order(a4, 2)[0];
  bool found = false;
  for (Element y : elements_of_order(a4, 3))
    if (element_order(a4, a4.mul(x, y)) == 3) {
      const Element uu = static_cast<Element>(a4.size() + a4.identity());
      EXPECT_TRUE(chein::check_relations(ma4, {{"x", x}, {"y", y}, {"u", uu}}, chein::ma4_relators()));
      found = true;
      break;
    }
  EXPECT_TRUE(found);
}

TEST(Chein, RelatorsHoldForNamedPaigeElements) {
  const auto& c = paige::paige2();
  const CayleyTable& t = c.table();
  EXPECT_TRUE(chein::check_relations(t, {{"x", c.named("x0")}, {"y", c.named("x1")}, {"u", c.named("u0")}},
                                     chein::ms3_relators()));
  EXPECT_TRUE(chein::check_relations(t, {{"x", c.named("x0")}, {"y", c.named("z0")}, {"u", c.named("u1")}},
                                     chein::ma4_relators()));
  EXPECT_EQ(classify(t, closure(t, {c.named("x0"), c.named("x1"), c.named("u0")})), IsoType::MS3);
  EXPECT_EQ(classify(t, closure(t, {c.named("x0"), c.named("z0"), c.named("u1")})), IsoType::MA4);
}

TEST(CheinWords, Grammar) {
  const auto& c = paige::paige2();
  const CayleyTable& t = c.table();
  const Element x0 = c.named("x0"), x1 = c.named("x1"), z0 = c.named("z0");
  const std::map<std::string, Element> g{{"x0", x0}, {"x1", x1}, {"z0", z0}, {"x", x0}, {"y", x1}};
  EXPECT_EQ(chein::evaluate_word(t, g, "x0x1"), t.mul(x0, x1));
  EXPECT_EQ(chein::evaluate_word(t, g, "x0 * x1"), t.mul(x0, x1));
  EXPECT_EQ(chein::evaluate_word(t, g, "xy"), t.mul(x0, x1));
  EXPECT_EQ(chein::evaluate_word(t, g, "e"), t.identity());
  EXPECT_EQ(chein::evaluate_word(t, g, "z0^-1"), t.inverse(z0));
  EXPECT_EQ(chein::evaluate_word(t, g, "z0^0"), t.identity());
  EXPECT_EQ(chein::evaluate_word(t, g, "z0^3"), t.identity());
  // Left to right, not right to left.
  EXPECT_EQ(chein::evaluate_word(t, g, "x0 x1 z0"), t.mul(t.mul(x0, x1), z0));
  EXPECT_EQ(chein::evaluate_word(t, g, "x0 (x1 z0)"), t.mul(x0, t.mul(x1, z0)));
}

TEST(CheinWords, Errors) {
  const CayleyTable& t = paige::paige2().table();
  const std::map<std::string, Element> g{{"x", 1}};
  EXPECT_THROW(chein::evaluate_word(t, g, "q"), chein::RelatorError);
  EXPECT_THROW(chein::evaluate_word(t, g, "(x"), chein::RelatorError);
  EXPECT_THROW(chein::evaluate_word(t, g, "x^"), chein::RelatorError);
  EXPECT_THROW(chein::evaluate_word(t, g, ""), chein::RelatorError);
  EXPECT_THROW(chein::evaluate_word(t, g, "x)"), chein::RelatorError);
  EXPECT_THROW(chein::evaluate_word(t, {{"x", 500}}, "x"), chein::RelatorError);
}

TEST(Chein, C2xC4Demo) {
  const chein::C2xC4Demo d = chein::subgroup_lattice_demo_c2xc4();
  EXPECT_EQ(d.subgroups.size(), 8u);
  EXPECT_EQ(d.copies_c4_above_a, 2u);
  EXPECT_EQ(d.copies_c4_above_a_prime, 0u);
  EXPECT_FALSE(d.a_and_a_prime_in_same_orbit);
  EXPECT_TRUE(d.report.ok());
}

TEST(Chein, DoubledSubloopsSplitEvenlyAcrossCoset) {
  const CayleyTable& a4 = catalog::table(IsoType::A4);
  const CayleyTable m = chein::chein_double(a4);
  for (const ElementSet& h : enumerate_subloops(m)) {
    std::size_t low = 0, high = 0;
    h.for_each([&](Element x) { (x < a4.size() ? low : high)++; });
    if (high > 0) {
      EXPECT_EQ(low, high);
    }
  }
}
