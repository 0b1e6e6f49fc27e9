#include "mlat/paige.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace mlat::paige {

using zorn::FVec3;
using zorn::VMatrix;

namespace {

const std::map<std::string, std::string, std::less<>>& name_table() {
  static const std::map<std::string, std::string, std::less<>> t{
      {"e", "[1|000|000|1]"},        {"x0", "inv(111,111)"},       {"x1", "inv(110,100)"},
      {"x2", "inv(010,000)"},        {"x3", "inv(011,100)"},       {"x4", "inv(111,000)"},
      {"x5", "inv(111,101)"},        {"y0", "tri(011,110,1)"},     {"z0", "tri(110,100,0)"},
      {"u0", "inv(000,110)"},        {"u1", "inv(001,001)"},       {"u2", "inv(100,010)"},
      {"u3", "inv(001,111)"},        {"u4", "inv(110,110)"},       {"u5", "inv(011,101)"},
      {"v0", "tri(010,110,0)"},      {"v1", "tri(001,101,0)"},
  };
  return t;
}

} // namespace

PaigeLoop::PaigeLoop() {
  index_.fill(-1);
  for (int p = 0; p < 256; ++p) {
    const VMatrix m = VMatrix::from_packed(static_cast<std::uint8_t>(p));
    if (zorn::det(m) == 1) {
      index_[static_cast<std::size_t>(p)] = static_cast<int>(matrices_.size());
      matrices_.push_back(m);
    }
  }
  const std::size_t n = matrices_.size();
  std::vector<Element> cells(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(zorn::format(matrices_[i]));
    for (std::size_t j = 0; j < n; ++j)
      cells[i * n + j] = static_cast<Element>(index_[zorn::vm_mul(matrices_[i], matrices_[j]).packed()]);
  }
  const Element id = static_cast<Element>(index_[VMatrix::identity().packed()]);
  table_ = CayleyTable(n, id, std::move(cells), std::move(labels));
}

std::optional<Element> PaigeLoop::index_of(VMatrix m) const {
  const int i = index_[m.packed()];
  if (i < 0)
    return std::nullopt;
  return static_cast<Element>(i);
}

Element PaigeLoop::at(VMatrix m) const {
  if (auto i = index_of(m))
    return *i;
  throw std::invalid_argument("not an element of the loop: " + zorn::format_raw(m));
}

Element PaigeLoop::named(std::string_view name) const {
  const auto& t = name_table();
  auto it = t.find(name);
  if (it == t.end())
    throw std::invalid_argument("unknown element name '" + std::string(name) + "'");
  return at(zorn::parse(it->second));
}

const std::vector<std::string>& PaigeLoop::names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : name_table())
      v.push_back(k);
    return v;
  }();
  return n;
}

Element PaigeLoop::resolve(std::string_view token) const {
  if (name_table().contains(token))
    return named(token);
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec == std::errc{} && ptr == token.data() + token.size()) {
    if (v >= size())
      throw std::invalid_argument("element index out of range: " + std::string(token));
    return static_cast<Element>(v);
  }
  return at(zorn::parse(token));
}

std::vector<Element> PaigeLoop::involutions() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (zorn::element_order(matrices_[x]) == 2)
      out.push_back(x);
  return out;
}

std::vector<Element> PaigeLoop::order3_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (zorn::element_order(matrices_[x]) == 3)
      out.push_back(x);
  return out;
}

const PaigeLoop& paige2() {
  static const PaigeLoop loop;
  return loop;
}

std::vector<Table1Cell> table1(const PaigeLoop& c) {
  const CayleyTable& t = c.table();
  const Element x0 = c.named("x0"), x1 = c.named("x1"), y0 = c.named("y0"), z0 = c.named("z0");
  const Element u1 = c.named("u1"), u2 = c.named("u2");
  const Element v = t.mul(t.mul(t.inverse(z0), x0), z0);
  auto ord = [&](Element a, Element x) { return element_order(t, t.mul(a, x)); };

  std::vector<Table1Cell> cells;
  for (std::uint8_t a = 0; a < 8; ++a)
    for (std::uint8_t b = 0; b < 8; ++b) {
      Table1Cell cell;
      cell.alpha = FVec3(a);
      cell.beta = FVec3(b);
      const VMatrix m = VMatrix::involution(cell.alpha, cell.beta);
      cell.x = c.at(m);
      cell.is_identity = m == VMatrix::identity();
      if (!cell.is_identity && cell.x != x0) {
        auto& o = cell.orders;
        o[0] = ord(x0, cell.x);
        o[3] = ord(v, cell.x);
        if (o[0] == 2) {
          o[1] = ord(x1, cell.x);
          o[4] = ord(u1, cell.x);
          o[5] = ord(u2, cell.x);
          if (o[1] == 2)
            o[2] = ord(y0, cell.x);
        }
      }
      cells.push_back(cell);
    }
  return cells;
}

namespace {

std::string entry(int v) { return v == 0 ? std::string(" ") : std::to_string(v); }

} // namespace

std::string table1_grid(const std::vector<Table1Cell>& cells) {
  std::string out = "a\\b ";
  for (std::uint8_t b = 0; b < 8; ++b)
    out += "| " + zorn::format_vec(FVec3(b)) + " ";
  out += "\n";
  for (std::uint8_t a = 0; a < 8; ++a) {
    out += std::string(4, '-');
    for (int b = 0; b < 8; ++b)
      out += "+-----";
    out += "\n";
    for (int line = 0; line < 2; ++line) {
      out += line == 0 ? zorn::format_vec(FVec3(a)) + " " : std::string(4, ' ');
      for (std::uint8_t b = 0; b < 8; ++b) {
        const auto& o = cells[static_cast<std::size_t>(a) * 8 + b].orders;
        out += "| " + entry(o[line * 3]) + entry(o[line * 3 + 1]) + entry(o[line * 3 + 2]) + " ";
      }
      out += "\n";
    }
  }
  return out;
}

std::string table1_csv(const std::vector<Table1Cell>& cells) {
  std::string out = "alpha,beta,x0x,x1x,y0x,conj,u1x,u2x\n";
  for (const Table1Cell& cell : cells) {
    if (cell.is_identity)
      continue;
    out += zorn::format_vec(cell.alpha) + "," + zorn::format_vec(cell.beta);
    for (int v : cell.orders)
      out += "," + (v == 0 ? std::string() : std::to_string(v));
    out += "\n";
  }
  return out;
}

PairType involution_pair_type(const PaigeLoop& c, Element x, Element y) {
  const VMatrix mx = c.matrix(x), my = c.matrix(y);
  if (x == y || zorn::element_order(mx) != 2 || zorn::element_order(my) != 2)
    throw std::invalid_argument("involution_pair_type: need two distinct involutions");
  return zorn::dot(mx.alpha(), my.beta()) == zorn::dot(mx.beta(), my.alpha()) ? PairType::E4 : PairType::S3;
}

bool mixed_order_criterion(const PaigeLoop& c, Element z, Element x) {
  const VMatrix mz = c.matrix(z), mx = c.matrix(x);
  if (zorn::element_order(mz) != 3 || zorn::element_order(mx) != 2)
    throw std::invalid_argument("mixed_order_criterion: need an element of order 3 and an involution");
  return (zorn::dot(mx.alpha(), mz.beta()) ^ zorn::dot(mx.beta(), mz.alpha())) == mx.a();
}

} // namespace mlat::paige
