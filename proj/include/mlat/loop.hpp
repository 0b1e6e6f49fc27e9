#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/element_set.hpp"

namespace mlat {

/// Raised for malformed or invalid Cayley tables. Row and column are
/// zero-based; -1 means the location does not apply.
class CayleyError : public std::runtime_error {
public:
  CayleyError(const std::string& what, int row = -1, int column = -1);
  int row() const { return row_; }
  int column() const { return column_; }

private:
  int row_;
  int column_;
};

/// A finite loop as a full multiplication table. Immutable once built; the
/// constructor rejects anything that is not a loop with the given identity.
class CayleyTable {
public:
  CayleyTable() = default;
  CayleyTable(std::size_t n, Element identity, std::vector<Element> cells,
              std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  Element identity() const { return id_; }
  Element mul(Element x, Element y) const { return cells_[x * n_ + y]; }
  std::span<const Element> row(Element x) const { return {cells_.data() + x * n_, n_}; }
  std::span<const Element> cells() const { return cells_; }

  /// The y with xy = e. Two-sided in every loop this project deals with.
  Element inverse(Element x) const { return inverse_[x]; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(Element x) const;
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.n_ == b.n_ && a.id_ == b.id_ && a.cells_ == b.cells_;
  }

private:
  std::size_t n_ = 0;
  Element id_ = 0;
  std::vector<Element> cells_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

/// Text form: first line `n id`, then n rows of n whitespace-separated indices.
CayleyTable parse_cayley(std::string_view text);
std::string emit_cayley(const CayleyTable& table);

ElementSet full_set(const CayleyTable& table);

/// Smallest product-closed subset containing gens and the identity. In a
/// finite loop this is the generated subloop.
ElementSet closure(const CayleyTable& table, std::span<const Element> gens);
ElementSet closure(const CayleyTable& table, std::initializer_list<Element> gens);

/// closure(H u {g}) for an already closed H; only pairs touching new
/// elements are multiplied.
ElementSet extend_closure(const CayleyTable& table, const ElementSet& closed, Element g);

/// The subloop S as a table of its own; element i of the result is the i-th
/// smallest member of S.
CayleyTable induced(const CayleyTable& table, const ElementSet& subloop);

int element_order(const CayleyTable& table, Element x);
std::vector<int> element_orders(const CayleyTable& table);

using OrderProfile = std::map<int, std::size_t>;
OrderProfile order_profile(const CayleyTable& table);
OrderProfile order_profile(const CayleyTable& table, const ElementSet& subset);

bool is_moufang(const CayleyTable& table);
bool is_associative(const CayleyTable& table);
bool is_associative(const CayleyTable& table, const ElementSet& subset);
bool is_commutative(const CayleyTable& table);
bool is_commutative(const CayleyTable& table, const ElementSet& subset);
bool is_diassociative(const CayleyTable& table);

/// Greedy generating set: repeatedly adjoin the element of largest order
/// outside the current closure (lowest index on ties).
std::vector<Element> generating_set(const CayleyTable& table);

/// Enumerate bijective homomorphisms from -> to determined by the images of
/// gens, which must generate `from`. Images are chosen by backtracking and
/// pruned by element order and by consistency of the partially defined map
/// on the closure of the generators assigned so far. visit receives the full
/// image array and returns false to stop the search.
void for_each_isomorphism(const CayleyTable& from, std::span<const Element> gens, const CayleyTable& to,
                          const std::function<bool(std::span<const Element>)>& visit);

std::optional<std::vector<Element>> are_isomorphic(const CayleyTable& a, const CayleyTable& b);

/// Isomorphism types that occur in this project. Other covers everything
/// outside the catalog.
enum class IsoType {
  Trivial,
  C2,
  C3,
  C4,
  E4,
  C6,
  S3,
  E8,
  C2xC4,
  A4,
  MS3,
  MA4,
  Ambient,
  Other,
};

std::string to_string(IsoType t);
/// Accepts the names printed by to_string (plus "M(S3)", "M(A4)", "1", "C").
std::optional<IsoType> parse_iso_type(std::string_view name);

struct Fingerprint {
  std::size_t order = 0;
  OrderProfile profile;
  bool associative = false;
  bool commutative = false;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const CayleyTable& table, const ElementSet& subloop);
Fingerprint fingerprint(const CayleyTable& table);

/// Classify the subloop S of table. Associative types are fixed by their
/// fingerprint; nonassociative catalog types of order <= 24 are confirmed by
/// an explicit isomorphism with the reference Chein double. Ambient is the
/// 120-element Paige loop, identified by fingerprint.
IsoType classify(const CayleyTable& table, const ElementSet& subloop);
IsoType classify(const CayleyTable& table);

} // namespace mlat
