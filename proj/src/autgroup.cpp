#include "mlat/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mlat::aut {

using zorn::FVec3;
using zorn::VMatrix;

ElementSet LoopPerm::apply(const ElementSet& s) const {
  ElementSet out(s.universe());
  s.for_each([&](Element x) { out.insert(image[x]); });
  return out;
}

LoopPerm identity_perm(std::size_t n) {
  LoopPerm p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), Element{0});
  return p;
}

LoopPerm compose(const LoopPerm& f, const LoopPerm& g) {
  LoopPerm h;
  h.image.resize(g.image.size());
  for (std::size_t x = 0; x < g.image.size(); ++x)
    h.image[x] = f.image[g.image[x]];
  h.word = g.word;
  h.word.insert(h.word.end(), f.word.begin(), f.word.end());
  return h;
}

LoopPerm inverse(const LoopPerm& f) {
  LoopPerm h;
  h.image.resize(f.image.size());
  for (std::size_t x = 0; x < f.image.size(); ++x)
    h.image[f.image[x]] = static_cast<Element>(x);
  return h;
}

bool is_automorphism(const CayleyTable& t, std::span<const Element> image) {
  const std::size_t n = t.size();
  if (image.size() != n)
    return false;
  std::vector<char> hit(n, 0);
  for (Element y : image) {
    if (y >= n || hit[y])
      return false;
    hit[y] = 1;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (image[t.mul(x, y)] != t.mul(image[x], image[y]))
        return false;
  return true;
}

FVec3 BitMatrix3::apply(FVec3 v) const {
  return FVec3(zorn::dot(FVec3(rows[0]), v), zorn::dot(FVec3(rows[1]), v), zorn::dot(FVec3(rows[2]), v));
}

bool BitMatrix3::invertible() const {
  // Injective on the eight vectors.
  std::array<bool, 8> seen{};
  for (std::uint8_t v = 0; v < 8; ++v) {
    const std::uint8_t w = apply(FVec3(v)).bits();
    if (seen[w])
      return false;
    seen[w] = true;
  }
  return true;
}

BitMatrix3 BitMatrix3::identity() { return permutation({1, 2, 3}); }

BitMatrix3 BitMatrix3::permutation(std::array<int, 3> pi) {
  BitMatrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    m.rows[i] = static_cast<std::uint8_t>(1u << (3 - pi[i]));
  return m;
}

std::optional<LoopPerm> lie_auto(const paige::PaigeLoop& c, const BitMatrix3& f) {
  if (!f.invertible())
    return std::nullopt;
  for (std::uint8_t a = 0; a < 8; ++a)
    for (std::uint8_t b = 0; b < 8; ++b)
      if (f.apply(zorn::cross(FVec3(a), FVec3(b))) != zorn::cross(f.apply(FVec3(a)), f.apply(FVec3(b))))
        return std::nullopt;
  LoopPerm p;
  p.image.resize(c.size());
  for (Element x = 0; x < c.size(); ++x) {
    const VMatrix m = c.matrix(x);
    p.image[x] = c.at(VMatrix(m.a(), f.apply(m.alpha()), f.apply(m.beta()), m.b()));
  }
  if (!is_automorphism(c.table(), p.image))
    return std::nullopt;
  return p;
}

LoopPerm perm_auto(const paige::PaigeLoop& c, std::array<int, 3> pi) {
  auto p = lie_auto(c, BitMatrix3::permutation(pi));
  if (!p)
    throw std::logic_error("coordinate permutation did not lift to an automorphism");
  return *p;
}

LoopPerm delta_auto(const paige::PaigeLoop& c) {
  LoopPerm p;
  p.image.resize(c.size());
  for (Element x = 0; x < c.size(); ++x) {
    const VMatrix m = c.matrix(x);
    p.image[x] = c.at(VMatrix(m.b(), m.beta(), m.alpha(), m.a()));
  }
  return p;
}

std::optional<LoopPerm> conj_auto(const CayleyTable& t, Element x) {
  LoopPerm p;
  p.image.resize(t.size());
  const Element xi = t.inverse(x);
  for (Element y = 0; y < t.size(); ++y)
    p.image[y] = t.mul(t.mul(xi, y), x);
  if (!is_automorphism(t, p.image))
    return std::nullopt;
  return p;
}

LoopPerm phi_auto(const paige::PaigeLoop& c) {
  const CayleyTable& t = c.table();
  auto inner = conj_auto(t, c.named("v0"));
  auto outer = conj_auto(t, t.inverse(c.named("v1")));
  if (!inner || !outer)
    throw std::logic_error("phi: conjugation by an element of order 3 is not an automorphism");
  return compose(*outer, *inner);
}

std::size_t AutGroup::ImageHash::operator()(const std::vector<Element>& v) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Element x : v)
    h = (h ^ x) * 0x100000001b3ull;
  return h;
}

void AutGroup::add(LoopPerm p, std::ptrdiff_t parent, std::int64_t via) {
  index_.emplace(p.image, elements_.size());
  elements_.push_back(std::move(p));
  parent_.push_back(parent);
  via_.push_back(via);
}

std::optional<std::size_t> AutGroup::find(std::span<const Element> image) const {
  auto it = index_.find(std::vector<Element>(image.begin(), image.end()));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> AutGroup::word(std::size_t i) const {
  std::vector<std::uint32_t> w;
  for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(i); k >= 0 && via_[static_cast<std::size_t>(k)] >= 0;
       k = parent_[static_cast<std::size_t>(k)])
    w.push_back(static_cast<std::uint32_t>(via_[static_cast<std::size_t>(k)]));
  std::reverse(w.begin(), w.end());
  return w;
}

std::string AutGroup::format_word(std::span<const std::uint32_t> word) const {
  if (word.empty())
    return "id";
  std::string out;
  for (std::uint32_t g : word) {
    if (!out.empty())
      out += ", ";
    out += g < generators_.size() ? generators_[g].name : "#" + std::to_string(g);
  }
  return out;
}

bool AutGroup::same_elements(const AutGroup& other) const {
  if (order() != other.order())
    return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const LoopPerm& p) { return other.contains(p.image); });
}

std::vector<const LoopPerm*> AutGroup::orbit_generators() const {
  std::vector<const LoopPerm*> out;
  if (!generators_.empty())
    for (const Generator& g : generators_)
      out.push_back(&g.perm);
  else
    for (const LoopPerm& p : elements_)
      out.push_back(&p);
  return out;
}

AutGroup generate_group(const CayleyTable& table, std::vector<Generator> gens) {
  for (const Generator& g : gens)
    if (!is_automorphism(table, g.perm.image))
      throw std::invalid_argument("generate_group: '" + g.name + "' is not an automorphism");
  AutGroup group;
  group.generators_ = std::move(gens);
  group.add(identity_perm(table.size()), -1, -1);
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    for (std::size_t g = 0; g < group.generators_.size(); ++g) {
      const LoopPerm& cur = group.elements_[i];
      const LoopPerm& gen = group.generators_[g].perm;
      LoopPerm next;
      next.image.resize(cur.image.size());
      for (std::size_t x = 0; x < cur.image.size(); ++x)
        next.image[x] = gen.image[cur.image[x]];
      if (!group.index_.contains(next.image))
        group.add(std::move(next), static_cast<std::ptrdiff_t>(i), static_cast<std::int64_t>(g));
    }
  }
  for (std::size_t i = 0; i < group.elements_.size(); ++i)
    group.elements_[i].word = group.word(i);
  return group;
}

std::vector<Generator> paige_generators(const paige::PaigeLoop& c) {
  std::vector<Generator> gens;
  std::array<int, 3> pi{1, 2, 3};
  do {
    gens.push_back({"perm(" + std::to_string(pi[0]) + std::to_string(pi[1]) + std::to_string(pi[2]) + ")",
                    perm_auto(c, pi)});
  } while (std::next_permutation(pi.begin(), pi.end()));
  gens.push_back({"delta", delta_auto(c)});
  for (Element z : c.order3_elements()) {
    auto p = conj_auto(c.table(), z);
    if (!p)
      throw std::logic_error("conjugation by " + c.table().label(z) + " is not an automorphism");
    gens.push_back({"conj(" + c.table().label(z) + ")", std::move(*p)});
  }
  return gens;
}

AutGroup full_aut_search(const paige::PaigeLoop& c) {
  const CayleyTable& t = c.table();
  std::vector<Element> gens{c.named("x0"), c.named("z0"), c.named("u1")};
  const ElementSet core = closure(t, gens);
  Element w = 0;
  while (core.contains(w))
    ++w;
  gens.push_back(w);

  AutGroup group;
  for_each_isomorphism(t, gens, t, [&](std::span<const Element> image) {
    LoopPerm p;
    p.image.assign(image.begin(), image.end());
    group.add(std::move(p), -1, -1);
    return true;
  });
  return group;
}

OrbitPartition orbits_on_subloops(const AutGroup& group, std::span<const ElementSet> subloops) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> where;
  for (std::size_t i = 0; i < subloops.size(); ++i)
    where.emplace(subloops[i], i);

  // Union-find under the generating permutations.
  std::vector<std::size_t> parent(subloops.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const LoopPerm* p : group.orbit_generators())
    for (std::size_t i = 0; i < subloops.size(); ++i) {
      auto it = where.find(p->apply(subloops[i]));
      if (it == where.end())
        throw EnumerationError("image of subloop " + std::to_string(i) + " is missing from the list");
      const std::size_t a = root(i), b = root(it->second);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }

  std::unordered_map<std::size_t, std::size_t> orbit_of_root;
  OrbitPartition part;
  part.orbit_of.resize(subloops.size());
  for (std::size_t i = 0; i < subloops.size(); ++i) {
    const std::size_t r = root(i);
    auto [it, fresh] = orbit_of_root.emplace(r, part.orbits.size());
    if (fresh)
      part.orbits.push_back({i, {}});
    Orbit& o = part.orbits[it->second];
    o.members.push_back(i);
    if (lex_less(subloops[i], subloops[o.representative]))
      o.representative = i;
  }
  std::sort(part.orbits.begin(), part.orbits.end(), [&](const Orbit& a, const Orbit& b) {
    const ElementSet& x = subloops[a.representative];
    const ElementSet& y = subloops[b.representative];
    if (x.size() != y.size())
      return x.size() < y.size();
    return lex_less(x, y);
  });
  for (std::size_t k = 0; k < part.orbits.size(); ++k)
    for (std::size_t i : part.orbits[k].members)
      part.orbit_of[i] = k;
  return part;
}

std::optional<LoopPerm> mapping_auto(const AutGroup& group, const ElementSet& b, const ElementSet& a) {
  if (a.size() != b.size())
    return std::nullopt;
  for (const LoopPerm& p : group.elements())
    if (p.apply(b) == a)
      return p;
  return std::nullopt;
}

} // namespace mlat::aut
