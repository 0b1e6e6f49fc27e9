#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/loop.hpp"
#include "mlat/zorn.hpp"

namespace mlat::paige {

/// The Paige loop M*(2): the 120 unit-norm Zorn matrices over F2 under Zorn
/// multiplication. Element i is the i-th smallest packed VMatrix.
class PaigeLoop {
public:
  PaigeLoop();

  const CayleyTable& table() const { return table_; }
  std::size_t size() const { return table_.size(); }

  zorn::VMatrix matrix(Element x) const { return matrices_[x]; }
  /// Index of a unit-norm matrix; nullopt for singular ones.
  std::optional<Element> index_of(zorn::VMatrix m) const;
  /// As index_of, but throws std::invalid_argument.
  Element at(zorn::VMatrix m) const;

  /// Elements named in the analysis: x0..x5, y0, z0, u0..u5, v0, v1, and e.
  /// Throws std::invalid_argument for an unknown name.
  Element named(std::string_view name) const;
  static const std::vector<std::string>& names();

  /// Parses a name from names(), a decimal index, or element notation.
  Element resolve(std::string_view token) const;

  std::vector<Element> involutions() const;
  std::vector<Element> order3_elements() const;

private:
  CayleyTable table_;
  std::vector<zorn::VMatrix> matrices_;
  std::array<int, 256> index_{};
};

/// The shared instance; built on first use.
const PaigeLoop& paige2();

/// Inputs to Table 1 besides the involution itself.
struct Table1Cell {
  zorn::FVec3 alpha;
  zorn::FVec3 beta;
  Element x = 0;
  bool is_identity = false;
  /// o(x0 x), o(x1 x), o(y0 x), o((z0^-1 x0 z0) x), o(u1 x), o(u2 x); 0 = blank.
  std::array<int, 6> orders{};
};

/// All 64 cells in row-major (alpha, beta) order, alpha and beta running
/// 000..111. Blank rules: nothing for e and x0; o(x1 x), o(u1 x), o(u2 x)
/// only when o(x0 x) = 2; o(y0 x) only when additionally o(x1 x) = 2.
std::vector<Table1Cell> table1(const PaigeLoop& c);

/// 8x8 grid, two text lines per cell, as laid out in the published table.
std::string table1_grid(const std::vector<Table1Cell>& cells);

/// CSV with header `alpha,beta,x0x,x1x,y0x,conj,u1x,u2x`; one line per
/// involution (the identity cell is omitted), blanks as empty fields.
std::string table1_csv(const std::vector<Table1Cell>& cells);

enum class PairType { E4, S3 };

/// Type of <x, y> for distinct involutions, read off the dot products:
/// E4 iff alpha.delta = beta.gamma. Throws std::invalid_argument unless x, y
/// are distinct involutions.
PairType involution_pair_type(const PaigeLoop& c, Element x, Element y);

/// For z of order 3 and an involution x: o(zx) = 2 iff
/// alpha.phi + beta.epsilon equals the diagonal of x. Throws
/// std::invalid_argument on wrong orders.
bool mixed_order_criterion(const PaigeLoop& c, Element z, Element x);

} // namespace mlat::paige
