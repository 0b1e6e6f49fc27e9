#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <string>
#include <vector>

#include "mlat/loop.hpp"
#include "mlat/paige.hpp"

namespace mlat::aut {

/// A loop automorphism stored as its image array, optionally with the word of
/// generator ids (in application order) that produced it.
struct LoopPerm {
  std::vector<Element> image;
  std::vector<std::uint32_t> word;

  Element operator()(Element x) const { return image[x]; }
  ElementSet apply(const ElementSet& s) const;

  friend bool operator==(const LoopPerm& a, const LoopPerm& b) { return a.image == b.image; }
};

LoopPerm identity_perm(std::size_t n);
/// (f o g)(x) = f(g(x)); words concatenate as g's word then f's.
LoopPerm compose(const LoopPerm& f, const LoopPerm& g);
LoopPerm inverse(const LoopPerm& f);

/// True iff image is a bijection with image(xy) = image(x) image(y) for all x, y.
bool is_automorphism(const CayleyTable& table, std::span<const Element> image);

/// Linear map of F2^3; row i gives output coordinate i as a mask over the
/// input coordinates (bit 2 = first coordinate, as in FVec3).
struct BitMatrix3 {
  std::array<std::uint8_t, 3> rows{};

  zorn::FVec3 apply(zorn::FVec3 v) const;
  bool invertible() const;

  static BitMatrix3 identity();
  /// Coordinate permutation (c1, c2, c3) -> (c_{pi[0]}, c_{pi[1]}, c_{pi[2]}),
  /// pi 1-based.
  static BitMatrix3 permutation(std::array<int, 3> pi);
};

/// Lift of a Lie-algebra automorphism of (F2^3, +, x): fixes the diagonal and
/// applies f to both vectors. nullopt unless f is invertible and preserves the
/// cross product; the lifted map is also checked to be a loop automorphism.
std::optional<LoopPerm> lie_auto(const paige::PaigeLoop& c, const BitMatrix3& f);

/// Coordinate permutation automorphism, pi 1-based as in BitMatrix3::permutation.
LoopPerm perm_auto(const paige::PaigeLoop& c, std::array<int, 3> pi);

/// (a, alpha, beta, b) -> (b, beta, alpha, a).
LoopPerm delta_auto(const paige::PaigeLoop& c);

/// y -> (x^-1 y) x when that map is an automorphism, nullopt otherwise.
std::optional<LoopPerm> conj_auto(const CayleyTable& table, Element x);

/// conj by v1^-1 after conj by v0; fixes x0.
LoopPerm phi_auto(const paige::PaigeLoop& c);

struct Generator {
  std::string name;
  LoopPerm perm;
};

/// Finite permutation group acting on loop elements. Elements are kept in BFS
/// order from the identity; parent links turn any element into a generator
/// word.
class AutGroup {
public:
  AutGroup() = default;

  std::size_t order() const { return elements_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<LoopPerm>& elements() const { return elements_; }

  std::optional<std::size_t> find(std::span<const Element> image) const;
  bool contains(std::span<const Element> image) const { return find(image).has_value(); }

  /// Word of element i, rebuilt from parent links (empty if unknown).
  std::vector<std::uint32_t> word(std::size_t i) const;
  std::string format_word(std::span<const std::uint32_t> word) const;

  /// Same elements, ignoring order and words.
  bool same_elements(const AutGroup& other) const;

  /// Permutations whose orbits are the group's orbits: the generators when
  /// there are any, else every element.
  std::vector<const LoopPerm*> orbit_generators() const;

private:
  friend AutGroup generate_group(const CayleyTable&, std::vector<Generator>);
  friend AutGroup full_aut_search(const paige::PaigeLoop&);

  void add(LoopPerm p, std::ptrdiff_t parent, std::int64_t via);

  struct ImageHash {
    std::size_t operator()(const std::vector<Element>& v) const;
  };

  std::vector<Generator> generators_;
  std::vector<LoopPerm> elements_;
  std::vector<std::ptrdiff_t> parent_;
  std::vector<std::int64_t> via_;
  std::unordered_map<std::vector<Element>, std::size_t, ImageHash> index_;
};

/// BFS closure of the generators under composition; element k+1 is gen o
/// (some earlier element). Throws std::invalid_argument if a generator is not
/// an automorphism of table.
AutGroup generate_group(const CayleyTable& table, std::vector<Generator> gens);

/// The three families used for the Paige loop: the six coordinate
/// permutations, delta, and conjugation by each element of order 3.
std::vector<Generator> paige_generators(const paige::PaigeLoop& c);

/// Every automorphism of the Paige loop, found by backtracking on the images
/// of a generating set (x0, z0, u1, w) with w the first element outside
/// <x0, z0, u1>. Independent of the generator families above.
AutGroup full_aut_search(const paige::PaigeLoop& c);

struct Orbit {
  std::size_t representative = 0;  // index into the subloop list
  std::vector<std::size_t> members;
};

struct OrbitPartition {
  std::vector<std::size_t> orbit_of;  // subloop index -> orbit index
  std::vector<Orbit> orbits;          // sorted by (size, representative)
};

class EnumerationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Orbits of the group on a list of subloops closed under the action. The
/// representative of an orbit is its lexicographically least member. Throws
/// EnumerationError if some image is missing from the list.
OrbitPartition orbits_on_subloops(const AutGroup& group, std::span<const ElementSet> subloops);

/// An element mapping B onto A, the first in BFS order (hence with a shortest
/// word); nullopt if A and B lie in different orbits.
std::optional<LoopPerm> mapping_auto(const AutGroup& group, const ElementSet& b, const ElementSet& a);

} // namespace mlat::aut
