#include "mlat/loop.hpp"

#include <sstream>

namespace mlat {

CayleyError::CayleyError(const std::string& what, int row, int column)
    : std::runtime_error(what), row_(row), column_(column) {}

namespace {

std::string at(std::size_t row, std::size_t col) {
  return " (row " + std::to_string(row) + ", column " + std::to_string(col) + ")";
}

} // namespace

CayleyTable::CayleyTable(std::size_t n, Element identity, std::vector<Element> cells,
                         std::vector<std::string> labels)
    : n_(n), id_(identity), cells_(std::move(cells)), labels_(std::move(labels)) {
  if (n_ == 0)
    throw CayleyError("empty table");
  if (cells_.size() != n_ * n_)
    throw CayleyError("expected " + std::to_string(n_ * n_) + " entries, got " + std::to_string(cells_.size()));
  if (id_ >= n_)
    throw CayleyError("identity index " + std::to_string(id_) + " out of range");
  if (!labels_.empty() && labels_.size() != n_)
    throw CayleyError("label count does not match table size");

  std::vector<char> seen(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n_; ++c) {
      const Element v = cells_[r * n_ + c];
      if (v >= n_)
        throw CayleyError("entry " + std::to_string(v) + " out of range" + at(r, c), static_cast<int>(r),
                          static_cast<int>(c));
      if (seen[v])
        throw CayleyError("row not a permutation: " + std::to_string(v) + " repeats" + at(r, c),
                          static_cast<int>(r), static_cast<int>(c));
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n_; ++r) {
      const Element v = cells_[r * n_ + c];
      if (seen[v])
        throw CayleyError("column not a permutation: " + std::to_string(v) + " repeats" + at(r, c),
                          static_cast<int>(r), static_cast<int>(c));
      seen[v] = 1;
    }
  }
  for (std::size_t x = 0; x < n_; ++x) {
    if (cells_[id_ * n_ + x] != x)
      throw CayleyError("missing identity: row " + std::to_string(id_) + " is not the identity map" + at(id_, x),
                        static_cast<int>(id_), static_cast<int>(x));
    if (cells_[x * n_ + id_] != x)
      throw CayleyError("missing identity: column " + std::to_string(id_) + " is not the identity map" +
                            at(x, id_),
                        static_cast<int>(x), static_cast<int>(id_));
  }

  inverse_.resize(n_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (cells_[x * n_ + y] == id_)
        inverse_[x] = static_cast<Element>(y);
}

std::string CayleyTable::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

CayleyTable parse_cayley(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line))
    throw CayleyError("malformed header: empty input");
  std::istringstream header(line);
  long long n = -1, id = -1;
  std::string extra;
  if (!(header >> n >> id) || (header >> extra) || n <= 0 || id < 0)
    throw CayleyError("malformed header: expected 'n id', got '" + line + "'");

  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (long long r = 0; r < n; ++r) {
    if (!std::getline(in, line))
      throw CayleyError("missing row " + std::to_string(r), static_cast<int>(r));
    std::istringstream row(line);
    std::string tok;
    long long c = 0;
    while (row >> tok) {
      if (c >= n)
        throw CayleyError("too many entries in row " + std::to_string(r), static_cast<int>(r), static_cast<int>(c));
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0 || v >= n)
        throw CayleyError("bad entry '" + tok + "'" + at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)),
                          static_cast<int>(r), static_cast<int>(c));
      cells.push_back(static_cast<Element>(v));
      ++c;
    }
    if (c != n)
      throw CayleyError("row " + std::to_string(r) + " has " + std::to_string(c) + " entries, expected " +
                            std::to_string(n),
                        static_cast<int>(r));
  }
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw CayleyError("trailing data after " + std::to_string(n) + " rows");
  return CayleyTable(static_cast<std::size_t>(n), static_cast<Element>(id), std::move(cells));
}

std::string emit_cayley(const CayleyTable& table) {
  std::string out = std::to_string(table.size()) + " " + std::to_string(table.identity()) + "\n";
  for (Element x = 0; x < table.size(); ++x) {
    auto r = table.row(x);
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c)
        out += ' ';
      out += std::to_string(r[c]);
    }
    out += '\n';
  }
  return out;
}

ElementSet full_set(const CayleyTable& table) {
  ElementSet s(table.size());
  for (Element x = 0; x < table.size(); ++x)
    s.insert(x);
  return s;
}

namespace {

// Worklist closure. members[0..done) have been multiplied against every
// member before them in both orders; everything after is frontier.
void saturate(const CayleyTable& t, ElementSet& set, std::vector<Element>& members, std::size_t done) {
  const std::size_t n = t.size();
  for (std::size_t i = done; i < members.size(); ++i) {
    if (set.size() == n)
      return;
    const Element a = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element b = members[j];
      const Element ab = t.mul(a, b);
      if (set.insert(ab))
        members.push_back(ab);
      const Element ba = t.mul(b, a);
      if (set.insert(ba))
        members.push_back(ba);
    }
  }
}

} // namespace

ElementSet closure(const CayleyTable& table, std::span<const Element> gens) {
  ElementSet set(table.size());
  std::vector<Element> members;
  members.reserve(table.size());
  set.insert(table.identity());
  members.push_back(table.identity());
  for (Element g : gens)
    if (set.insert(g))
      members.push_back(g);
  saturate(table, set, members, 1);
  return set;
}

ElementSet closure(const CayleyTable& table, std::initializer_list<Element> gens) {
  return closure(table, std::span<const Element>(gens.begin(), gens.size()));
}

ElementSet extend_closure(const CayleyTable& table, const ElementSet& closed, Element g) {
  if (closed.contains(g))
    return closed;
  ElementSet set = closed;
  std::vector<Element> members = closed.members();
  const std::size_t done = members.size();
  members.reserve(table.size());
  set.insert(g);
  members.push_back(g);
  // Pairs inside `closed` need no work; new elements meet everything.
  const std::size_t n = table.size();
  for (std::size_t i = done; i < members.size(); ++i) {
    if (set.size() == n)
      break;
    const Element a = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element b = members[j];
      const Element ab = table.mul(a, b);
      if (set.insert(ab))
        members.push_back(ab);
      const Element ba = table.mul(b, a);
      if (set.insert(ba))
        members.push_back(ba);
    }
  }
  return set;
}

CayleyTable induced(const CayleyTable& table, const ElementSet& subloop) {
  const std::vector<Element> m = subloop.members();
  std::vector<Element> pos(table.size(), static_cast<Element>(-1));
  for (std::size_t i = 0; i < m.size(); ++i)
    pos[m[i]] = static_cast<Element>(i);
  std::vector<Element> cells;
  cells.reserve(m.size() * m.size());
  for (Element x : m)
    for (Element y : m) {
      const Element p = pos[table.mul(x, y)];
      if (p == static_cast<Element>(-1))
        throw CayleyError("induced: subset is not closed under the product");
      cells.push_back(p);
    }
  std::vector<std::string> labels;
  if (table.has_labels())
    for (Element x : m)
      labels.push_back(table.label(x));
  if (pos[table.identity()] == static_cast<Element>(-1))
    throw CayleyError("induced: subset does not contain the identity");
  return CayleyTable(m.size(), pos[table.identity()], std::move(cells), std::move(labels));
}

int element_order(const CayleyTable& table, Element x) {
  Element p = x;
  for (std::size_t k = 1; k <= table.size(); ++k) {
    if (p == table.identity())
      return static_cast<int>(k);
    p = table.mul(p, x);
  }
  throw std::logic_error("element_order: powers never reach the identity");
}

std::vector<int> element_orders(const CayleyTable& table) {
  std::vector<int> out(table.size());
  for (Element x = 0; x < table.size(); ++x)
    out[x] = element_order(table, x);
  return out;
}

OrderProfile order_profile(const CayleyTable& table) { return order_profile(table, full_set(table)); }

OrderProfile order_profile(const CayleyTable& table, const ElementSet& subset) {
  OrderProfile p;
  subset.for_each([&](Element x) { ++p[element_order(table, x)]; });
  return p;
}

bool is_moufang(const CayleyTable& t) {
  const Element n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xyx = t.mul(t.mul(x, y), x);
      for (Element z = 0; z < n; ++z)
        if (t.mul(xyx, z) != t.mul(x, t.mul(y, t.mul(x, z))))
          return false;
    }
  return true;
}

bool is_associative(const CayleyTable& t) { return is_associative(t, full_set(t)); }

bool is_associative(const CayleyTable& t, const ElementSet& s) {
  const std::vector<Element> m = s.members();
  for (Element x : m)
    for (Element y : m) {
      const Element xy = t.mul(x, y);
      for (Element z : m)
        if (t.mul(xy, z) != t.mul(x, t.mul(y, z)))
          return false;
    }
  return true;
}

bool is_commutative(const CayleyTable& t) { return is_commutative(t, full_set(t)); }

bool is_commutative(const CayleyTable& t, const ElementSet& s) {
  const std::vector<Element> m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (t.mul(m[i], m[j]) != t.mul(m[j], m[i]))
        return false;
  return true;
}

bool is_diassociative(const CayleyTable& t) {
  const Element n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      if (!is_associative(t, closure(t, {x, y})))
        return false;
  return true;
}

std::vector<Element> generating_set(const CayleyTable& table) {
  const std::vector<int> ord = element_orders(table);
  std::vector<Element> gens;
  ElementSet current = closure(table, {});
  while (current.size() < table.size()) {
    Element best = 0;
    int best_order = 0;
    for (Element x = 0; x < table.size(); ++x)
      if (!current.contains(x) && ord[x] > best_order) {
        best = x;
        best_order = ord[x];
      }
    gens.push_back(best);
    current = extend_closure(table, current, best);
  }
  return gens;
}

namespace {

constexpr Element kUnmapped = static_cast<Element>(-1);

class IsoSearch {
public:
  IsoSearch(const CayleyTable& from, std::span<const Element> gens, const CayleyTable& to,
            const std::function<bool(std::span<const Element>)>& visit)
      : from_(from), to_(to), gens_(gens.begin(), gens.end()), visit_(visit), from_ord_(element_orders(from)),
        to_ord_(element_orders(to)), image_(from.size(), kUnmapped), used_(to.size(), 0) {}

  void run() {
    if (from_.size() != to_.size())
      return;
    if (closure(from_, gens_).size() != from_.size())
      throw std::invalid_argument("for_each_isomorphism: gens do not generate the source loop");
    assign(from_.identity(), to_.identity());
    if (!propagate())
      return;
    search(0);
  }

private:
  void assign(Element x, Element y) {
    image_[x] = y;
    used_[y] = 1;
    domain_.push_back(x);
  }

  void rollback(std::size_t size) {
    while (domain_.size() > size) {
      used_[image_[domain_.back()]] = 0;
      image_[domain_.back()] = kUnmapped;
      domain_.pop_back();
    }
    processed_ = std::min(processed_, size);
  }

  bool check(Element a, Element b) {
    const Element c = from_.mul(a, b);
    const Element img = to_.mul(image_[a], image_[b]);
    if (image_[c] == kUnmapped) {
      if (used_[img] || from_ord_[c] != to_ord_[img])
        return false;
      assign(c, img);
      return true;
    }
    return image_[c] == img;
  }

  // Close the partial map under products, checking consistency on the way.
  bool propagate() {
    for (; processed_ < domain_.size(); ++processed_) {
      const Element a = domain_[processed_];
      for (std::size_t j = 0; j <= processed_; ++j) {
        const Element b = domain_[j];
        if (!check(a, b) || !check(b, a))
          return false;
      }
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool search(std::size_t k) {
    if (k == gens_.size())
      return visit_(image_);
    const Element g = gens_[k];
    if (image_[g] != kUnmapped)
      return search(k + 1);
    const std::size_t mark = domain_.size();
    for (Element y = 0; y < to_.size(); ++y) {
      if (used_[y] || to_ord_[y] != from_ord_[g])
        continue;
      assign(g, y);
      const bool ok = propagate();
      if (ok && !search(k + 1))
        return false;
      rollback(mark);
    }
    return true;
  }

  const CayleyTable& from_;
  const CayleyTable& to_;
  std::vector<Element> gens_;
  const std::function<bool(std::span<const Element>)>& visit_;
  std::vector<int> from_ord_;
  std::vector<int> to_ord_;
  std::vector<Element> image_;
  std::vector<char> used_;
  std::vector<Element> domain_;
  std::size_t processed_ = 0;
};

} // namespace

void for_each_isomorphism(const CayleyTable& from, std::span<const Element> gens, const CayleyTable& to,
                          const std::function<bool(std::span<const Element>)>& visit) {
  IsoSearch(from, gens, to, visit).run();
}

std::optional<std::vector<Element>> are_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  if (a.size() != b.size() || fingerprint(a) != fingerprint(b))
    return std::nullopt;
  std::optional<std::vector<Element>> found;
  const std::vector<Element> gens = generating_set(a);
  for_each_isomorphism(a, gens, b, [&](std::span<const Element> img) {
    found.emplace(img.begin(), img.end());
    return false;
  });
  return found;
}

std::string to_string(IsoType t) {
  switch (t) {
  case IsoType::Trivial: return "1";
  case IsoType::C2: return "C2";
  case IsoType::C3: return "C3";
  case IsoType::C4: return "C4";
  case IsoType::E4: return "E4";
  case IsoType::C6: return "C6";
  case IsoType::S3: return "S3";
  case IsoType::E8: return "E8";
  case IsoType::C2xC4: return "C2xC4";
  case IsoType::A4: return "A4";
  case IsoType::MS3: return "MS3";
  case IsoType::MA4: return "MA4";
  case IsoType::Ambient: return "C";
  case IsoType::Other: return "Other";
  }
  return "?";
}

std::optional<IsoType> parse_iso_type(std::string_view name) {
  static const std::pair<std::string_view, IsoType> names[] = {
      {"1", IsoType::Trivial},   {"Trivial", IsoType::Trivial}, {"C1", IsoType::Trivial},
      {"C2", IsoType::C2},       {"C3", IsoType::C3},           {"C4", IsoType::C4},
      {"E4", IsoType::E4},       {"C6", IsoType::C6},           {"S3", IsoType::S3},
      {"E8", IsoType::E8},       {"C2xC4", IsoType::C2xC4},     {"A4", IsoType::A4},
      {"MS3", IsoType::MS3},     {"M(S3)", IsoType::MS3},       {"MA4", IsoType::MA4},
      {"M(A4)", IsoType::MA4},   {"C", IsoType::Ambient},       {"Ambient", IsoType::Ambient},
  };
  for (const auto& [n, t] : names)
    if (n == name)
      return t;
  return std::nullopt;
}

Fingerprint fingerprint(const CayleyTable& table, const ElementSet& subloop) {
  return {subloop.size(), order_profile(table, subloop), is_associative(table, subloop),
          is_commutative(table, subloop)};
}

Fingerprint fingerprint(const CayleyTable& table) { return fingerprint(table, full_set(table)); }

} // namespace mlat
