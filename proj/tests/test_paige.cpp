#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mlat/paige.hpp"
#include "mlat/zorn.hpp"

using namespace mlat;
using namespace mlat::zorn;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Table 1 straight from matrix arithmetic, without the loop table.
std::string table1_oracle() {
  const VMatrix x0 = parse("inv(111,111)"), x1 = parse("inv(110,100)"), y0 = parse("tri(011,110,1)");
  const VMatrix z0 = parse("tri(110,100,0)"), u1 = parse("inv(001,001)"), u2 = parse("inv(100,010)");
  const VMatrix conj = vm_mul(vm_mul(inverse(z0), x0), z0);
  auto o = [](VMatrix a, VMatrix x) { return std::to_string(order_by_powers(vm_mul(a, x))); };
  std::string out = "alpha,beta,x0x,x1x,y0x,conj,u1x,u2x\n";
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 0; b < 8; ++b) {
      const FVec3 al(static_cast<std::uint8_t>(a)), be(static_cast<std::uint8_t>(b));
      const VMatrix x = VMatrix::involution(al, be);
      if (x == VMatrix::identity())
        continue;
      std::string f[6];
      if (x != x0) {
        f[0] = o(x0, x);
        f[3] = o(conj, x);
        if (f[0] == "2") {
          f[1] = o(x1, x);
          f[4] = o(u1, x);
          f[5] = o(u2, x);
          if (f[1] == "2")
            f[2] = o(y0, x);
        }
      }
      out += format_vec(al) + "," + format_vec(be);
      for (const auto& s : f)
        out += "," + s;
      out += "\n";
    }
  return out;
}

} // namespace

TEST(Paige, SizeAndIdentity) {
  const auto& c = paige::paige2();
  EXPECT_EQ(c.size(), 120u);
  EXPECT_EQ(c.matrix(c.table().identity()), VMatrix::identity());
  EXPECT_EQ(c.involutions().size(), 63u);
  EXPECT_EQ(c.order3_elements().size(), 56u);
}

TEST(Paige, TableAgreesWithMatrixProduct) {
  const auto& c = paige::paige2();
  for (Element x = 0; x < c.size(); ++x)
    for (Element y = 0; y < c.size(); ++y)
      ASSERT_EQ(c.matrix(c.table().mul(x, y)), vm_mul(c.matrix(x), c.matrix(y)));
}

TEST(Paige, IndexIsRankAmongPackedUnits) {
  const auto& c = paige::paige2();
  for (Element x = 1; x < c.size(); ++x)
    EXPECT_LT(c.matrix(x - 1).packed(), c.matrix(x).packed());
  EXPECT_FALSE(c.index_of(VMatrix::from_packed(0)).has_value());
  EXPECT_THROW(c.at(VMatrix::from_packed(0)), std::invalid_argument);
}

TEST(Paige, NamedElements) {
  const auto& c = paige::paige2();
  const CayleyTable& t = c.table();
  EXPECT_EQ(c.names().size(), 17u);
  EXPECT_EQ(c.named("e"), t.identity());
  for (const std::string& n : c.names()) {
    const int o = element_order(t, c.named(n));
    const int want = n == "e" ? 1 : (n[0] == 'x' || n[0] == 'u') ? 2 : 3;
    EXPECT_EQ(o, want) << n;
  }
  EXPECT_EQ(t.mul(c.named("x0"), c.named("x1")), c.named("y0"));
  EXPECT_THROW(c.named("w9"), std::invalid_argument);
}

TEST(Paige, ResolveAcceptsNamesIndicesAndNotation) {
  const auto& c = paige::paige2();
  EXPECT_EQ(c.resolve("x0"), c.named("x0"));
  EXPECT_EQ(c.resolve("5"), Element{5});
  EXPECT_EQ(c.resolve("inv(110,100)"), c.named("x1"));
  EXPECT_THROW(c.resolve("120"), std::invalid_argument);
  EXPECT_THROW(c.resolve("zz"), std::invalid_argument);
}

TEST(Paige, Table1MatchesOracleAndData) {
  const std::string got = paige::table1_csv(paige::table1(paige::paige2()));
  EXPECT_EQ(got, table1_oracle());
  EXPECT_EQ(got, read_file(std::string(MLAT_DATA_DIR) + "/table1.csv"));
}

TEST(Paige, Table1GridHasEightBlockRows) {
  const std::string grid = paige::table1_grid(paige::table1(paige::paige2()));
  EXPECT_FALSE(grid.empty());
  EXPECT_NE(grid.find("111"), std::string::npos);
}

TEST(Paige, InvolutionPairCriterionMatchesClosure) {
  const auto& c = paige::paige2();
  const auto inv = c.involutions();
  for (Element x : inv)
    for (Element y : inv) {
      if (x == y)
        continue;
      const std::size_t n = closure(c.table(), {x, y}).size();
      ASSERT_TRUE(n == 4 || n == 6);
      EXPECT_EQ(paige::involution_pair_type(c, x, y), n == 4 ? paige::PairType::E4 : paige::PairType::S3);
    }
  EXPECT_THROW(paige::involution_pair_type(c, inv[0], inv[0]), std::invalid_argument);
  EXPECT_THROW(paige::involution_pair_type(c, inv[0], c.named("y0")), std::invalid_argument);
}

TEST(Paige, MixedOrderCriterionMatchesOrders) {
  const auto& c = paige::paige2();
  const CayleyTable& t = c.table();
  for (Element z : c.order3_elements())
    for (Element x : c.involutions())
      EXPECT_EQ(paige::mixed_order_criterion(c, z, x), element_order(t, t.mul(z, x)) == 2);
  EXPECT_THROW(paige::mixed_order_criterion(c, c.named("x0"), c.named("x1")), std::invalid_argument);
}
