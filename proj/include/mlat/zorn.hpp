#pragma once

// Split octonions over F2 written as Zorn vector matrices
//
//     | a      alpha |
//     | beta   b     |
//
// with a, b in F2 and alpha, beta in F2^3. Everything is packed into a byte so
// that an element doubles as its own canonical index.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mlat::zorn {

/// Vector of F2^3. Bit 2 holds the first coordinate, so the literal 0b110
/// is the vector written "110".
class FVec3 {
public:
  constexpr FVec3() = default;
  constexpr explicit FVec3(std::uint8_t bits) : bits_(bits & 0x7u) {}
  constexpr FVec3(int c1, int c2, int c3)
      : bits_(static_cast<std::uint8_t>(((c1 & 1) << 2) | ((c2 & 1) << 1) | (c3 & 1))) {}

  constexpr std::uint8_t bits() const { return bits_; }

  /// Coordinate i in {1, 2, 3}.
  constexpr int coord(int i) const { return (bits_ >> (3 - i)) & 1; }

  /// Integer (not mod 2) number of nonzero coordinates.
  constexpr int weight() const { return coord(1) + coord(2) + coord(3); }

  constexpr bool is_zero() const { return bits_ == 0; }

  constexpr FVec3 operator+(FVec3 o) const { return FVec3(static_cast<std::uint8_t>(bits_ ^ o.bits_)); }
  constexpr FVec3 operator*(int s) const { return (s & 1) ? *this : FVec3{}; }

  constexpr auto operator<=>(const FVec3&) const = default;

private:
  std::uint8_t bits_ = 0;
};

constexpr int dot(FVec3 x, FVec3 y) {
  unsigned v = x.bits() & y.bits();
  return static_cast<int>((v ^ (v >> 1) ^ (v >> 2)) & 1u);
}

constexpr FVec3 cross(FVec3 x, FVec3 y) {
  // Signs vanish in characteristic 2.
  return FVec3((x.coord(2) * y.coord(3)) ^ (x.coord(3) * y.coord(2)),
               (x.coord(3) * y.coord(1)) ^ (x.coord(1) * y.coord(3)),
               (x.coord(1) * y.coord(2)) ^ (x.coord(2) * y.coord(1)));
}

/// Zorn vector matrix over F2. The packed byte is laid out as
/// (a, alpha1, alpha2, alpha3, beta1, beta2, beta3, b) from the most
/// significant bit down, which fixes the canonical element numbering.
class VMatrix {
public:
  constexpr VMatrix() = default;
  constexpr VMatrix(int a, FVec3 alpha, FVec3 beta, int b)
      : packed_(static_cast<std::uint8_t>(((a & 1) << 7) | (alpha.bits() << 4) | (beta.bits() << 1) |
                                          (b & 1))) {}

  static constexpr VMatrix from_packed(std::uint8_t p) {
    VMatrix m;
    m.packed_ = p;
    return m;
  }

  static constexpr VMatrix identity() { return VMatrix(1, FVec3{}, FVec3{}, 1); }

  /// Involution with vectors alpha, beta; the diagonal is forced to 1 + alpha.beta.
  static constexpr VMatrix involution(FVec3 alpha, FVec3 beta) {
    int d = 1 ^ dot(alpha, beta);
    return VMatrix(d, alpha, beta, d);
  }

  /// Order-3 element with top-left entry a and bottom-right entry 1 + a.
  static constexpr VMatrix order3(FVec3 alpha, FVec3 beta, int a) {
    return VMatrix(a, alpha, beta, 1 ^ (a & 1));
  }

  constexpr std::uint8_t packed() const { return packed_; }
  constexpr int a() const { return (packed_ >> 7) & 1; }
  constexpr FVec3 alpha() const { return FVec3(static_cast<std::uint8_t>((packed_ >> 4) & 0x7u)); }
  constexpr FVec3 beta() const { return FVec3(static_cast<std::uint8_t>((packed_ >> 1) & 0x7u)); }
  constexpr int b() const { return packed_ & 1; }

  constexpr auto operator<=>(const VMatrix&) const = default;

private:
  std::uint8_t packed_ = 0;
};

/// Zorn multiplication. Subtraction is addition in characteristic 2.
constexpr VMatrix vm_mul(VMatrix x, VMatrix y) {
  const int a = x.a(), b = x.b(), c = y.a(), d = y.b();
  const FVec3 al = x.alpha(), be = x.beta(), ga = y.alpha(), de = y.beta();
  return VMatrix((a & c) ^ dot(al, de),
                 ga * a + al * d + cross(be, de),
                 be * c + de * b + cross(al, ga),
                 dot(be, ga) ^ (b & d));
}

constexpr int det(VMatrix x) { return (x.a() & x.b()) ^ dot(x.alpha(), x.beta()); }

/// Inverse of a unit-norm matrix: swap the diagonal, keep the vectors.
/// Throws std::domain_error when det(x) = 0.
VMatrix inverse(VMatrix x);

/// Order of a unit-norm element read off the diagonal: 1 for e, 2 when a = b,
/// 3 when a != b. Throws std::domain_error when det(x) = 0.
int element_order(VMatrix x);

/// Order by repeated multiplication; returns 0 if x^k != e for k <= limit.
int order_by_powers(VMatrix x, int limit = 12);

/// Text forms: `[a|a1a2a3|b1b2b3|b]`, `inv(a1a2a3,b1b2b3)`, `tri(a1a2a3,b1b2b3,a)`.
/// format() prefers the shorthands for unit-norm elements.
std::string format(VMatrix x);
std::string format_raw(VMatrix x);
std::string format_vec(FVec3 v);

/// Accepts any of the three text forms. Throws std::invalid_argument on
/// malformed text, or when a shorthand does not describe an element of the
/// stated order.
VMatrix parse(std::string_view text);
FVec3 parse_vec(std::string_view text);

} // namespace mlat::zorn
