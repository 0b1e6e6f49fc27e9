#include "mlat/zorn.hpp"

#include <cctype>
#include <vector>

namespace mlat::zorn {

VMatrix inverse(VMatrix x) {
  if (det(x) == 0)
    throw std::domain_error("inverse: singular vector matrix " + format_raw(x));
  return VMatrix(x.b(), x.alpha(), x.beta(), x.a());
}

int element_order(VMatrix x) {
  if (det(x) == 0)
    throw std::domain_error("element_order: singular vector matrix " + format_raw(x));
  if (x == VMatrix::identity())
    return 1;
  return x.a() == x.b() ? 2 : 3;
}

int order_by_powers(VMatrix x, int limit) {
  VMatrix p = x;
  for (int k = 1; k <= limit; ++k) {
    if (p == VMatrix::identity())
      return k;
    p = vm_mul(p, x);
  }
  return 0;
}

std::string format_vec(FVec3 v) {
  std::string s(3, '0');
  for (int i = 1; i <= 3; ++i)
    s[static_cast<std::size_t>(i - 1)] = static_cast<char>('0' + v.coord(i));
  return s;
}

std::string format_raw(VMatrix x) {
  return "[" + std::to_string(x.a()) + "|" + format_vec(x.alpha()) + "|" + format_vec(x.beta()) + "|" +
         std::to_string(x.b()) + "]";
}

std::string format(VMatrix x) {
  if (det(x) == 0 || x == VMatrix::identity())
    return format_raw(x);
  if (x.a() == x.b())
    return "inv(" + format_vec(x.alpha()) + "," + format_vec(x.beta()) + ")";
  return "tri(" + format_vec(x.alpha()) + "," + format_vec(x.beta()) + "," + std::to_string(x.a()) + ")";
}

FVec3 parse_vec(std::string_view text) {
  if (text.size() != 3)
    throw std::invalid_argument("expected three binary digits, got '" + std::string(text) + "'");
  int c[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw std::invalid_argument("expected three binary digits, got '" + std::string(text) + "'");
    c[i] = text[i] - '0';
  }
  return FVec3(c[0], c[1], c[2]);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_bit(std::string_view s) {
  s = trim(s);
  if (s != "0" && s != "1")
    throw std::invalid_argument("expected a single bit, got '" + std::string(s) + "'");
  return s[0] - '0';
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

} // namespace

VMatrix parse(std::string_view text) {
  const std::string_view t = trim(text);
  auto fail = [&](const std::string& why) -> VMatrix {
    throw std::invalid_argument("cannot parse element '" + std::string(text) + "': " + why);
  };

  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
    auto parts = split(t.substr(1, t.size() - 2), '|');
    if (parts.size() != 4)
      return fail("expected [a|alpha|beta|b]");
    return VMatrix(parse_bit(parts[0]), parse_vec(parts[1]), parse_vec(parts[2]), parse_bit(parts[3]));
  }

  const bool is_inv = t.starts_with("inv(");
  const bool is_tri = t.starts_with("tri(");
  if ((!is_inv && !is_tri) || t.back() != ')')
    return fail("unknown notation");
  auto args = split(t.substr(4, t.size() - 5), ',');

  if (is_inv) {
    if (args.size() != 2)
      return fail("inv takes two vectors");
    VMatrix x = VMatrix::involution(parse_vec(args[0]), parse_vec(args[1]));
    if (x == VMatrix::identity())
      return fail("inv(000,000) is the identity, not an involution");
    return x;
  }
  if (args.size() != 3)
    return fail("tri takes two vectors and a bit");
  VMatrix x = VMatrix::order3(parse_vec(args[0]), parse_vec(args[1]), parse_bit(args[2]));
  if (det(x) != 1)
    return fail("alpha.beta must be 1 for an element of order 3");
  return x;
}

} // namespace mlat::zorn
