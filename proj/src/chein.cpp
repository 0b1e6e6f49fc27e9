#include "mlat/chein.hpp"

#include <cctype>

#include "mlat/catalog.hpp"
#include "mlat/subloops.hpp"

namespace mlat::chein {

CayleyTable chein_double(const CayleyTable& g) {
  if (!is_associative(g))
    throw std::invalid_argument("chein_double: input table is not a group");
  const std::size_t n = g.size();
  auto power = [&](Element x, int sign) { return sign > 0 ? x : g.inverse(x); };

  std::vector<Element> cells(4 * n * n);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const int s = j == 0 ? 1 : -1;
      const int t = (i + j) % 2 == 0 ? 1 : -1;
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          const Element prod = power(g.mul(power(x, s), power(y, t)), s);
          cells[(i * n + x) * 2 * n + (j * n + y)] = static_cast<Element>(((i + j) % 2) * n + prod);
        }
    }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 2; ++i)
    for (Element x = 0; x < n; ++x)
      labels.push_back(g.label(x) + (i ? "u" : ""));
  return CayleyTable(2 * n, g.identity(), std::move(cells), std::move(labels));
}

std::size_t count_cyclic(const CayleyTable& loop, std::size_t m) {
  std::vector<ElementSet> seen;
  for (Element x = 0; x < loop.size(); ++x) {
    ElementSet c = closure(loop, {x});
    if (c.size() == m && std::find(seen.begin(), seen.end(), c) == seen.end())
      seen.push_back(std::move(c));
  }
  return seen.size();
}

bool is_elementary_abelian_2(const CayleyTable& loop, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Element x) { ok = ok && loop.mul(x, x) == loop.identity(); });
  // Exponent 2 forces commutativity; associativity still needs checking.
  return ok && is_associative(loop, s);
}

std::size_t count_elementary_abelian(const CayleyTable& loop, unsigned k) {
  std::size_t count = 0;
  for (const ElementSet& h : enumerate_subloops(loop))
    if (h.size() == (std::size_t{1} << k) && is_elementary_abelian_2(loop, h))
      ++count;
  return count;
}

Report verify_m2n_lemma(const CayleyTable& g, const std::string& name) {
  Report r("structural lemma for M(" + name + ",2)");
  const CayleyTable m = chein_double(g);
  const std::size_t n = g.size();
  auto in_g = [n](Element x) { return x < n; };
  const std::string src = "structure of M(G,2)";

  r.expect_true("m2n." + name + ".moufang", is_moufang(m), Basis::Derived, src);
  r.expect_eq("m2n." + name + ".nonassociative_iff_nonabelian", !is_commutative(g), !is_associative(m),
              Basis::Derived, src);

  bool coset_involutions = true;
  for (Element x = static_cast<Element>(n); x < 2 * n; ++x)
    coset_involutions = coset_involutions && element_order(m, x) == 2;
  r.expect_true("m2n." + name + ".coset_all_involutions", coset_involutions, Basis::Derived, src);

  bool coset_products = true;
  for (Element x = 0; x < 2 * n; ++x)
    for (Element y = 0; y < 2 * n; ++y)
      coset_products = coset_products && in_g(m.mul(x, y)) == (in_g(x) == in_g(y));
  r.expect_true("m2n." + name + ".coset_products", coset_products, Basis::Derived, src);

  const std::vector<ElementSet> subs = enumerate_subloops(m);
  ElementSet g_set(2 * n);
  for (Element x = 0; x < n; ++x)
    g_set.insert(x);
  bool balanced = true;
  for (const ElementSet& h : subs) {
    if (h.is_subset_of(g_set))
      continue;
    const std::size_t inside = h.intersect(g_set).size();
    balanced = balanced && 2 * inside == h.size();
  }
  r.expect_true("m2n." + name + ".balanced_intersections", balanced, Basis::Derived, src);

  // (i)
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    const std::size_t in_m = count_cyclic(m, k);
    const std::size_t expected = count_cyclic(g, k) + (k == 2 ? n : 0);
    if (in_m == 0 && expected == 0)
      continue;
    r.expect_eq("m2n." + name + ".i.C" + std::to_string(k), expected, in_m, Basis::Derived, src);
  }

  // (ii)
  const std::vector<ElementSet> g_subs = enumerate_subloops(g);
  bool doubling = true;
  for (const ElementSet& h : g_subs) {
    if (!is_elementary_abelian_2(g, h))
      continue;
    for (Element x = 0; x < n; ++x) {
      ElementSet lifted(2 * n);
      h.for_each([&](Element e) { lifted.insert(e); });
      const ElementSet gen = extend_closure(m, lifted, static_cast<Element>(n + x));
      doubling = doubling && gen.size() == 2 * h.size() && is_elementary_abelian_2(m, gen);
    }
  }
  r.expect_true("m2n." + name + ".ii.elementary_doubling", doubling, Basis::Derived, src);

  // (iii)
  for (unsigned k = 1; (std::size_t{1} << k) <= 2 * n; ++k) {
    const std::size_t in_m = count_elementary_abelian(m, k);
    std::size_t expected = 0;
    const std::size_t half = std::size_t{1} << (k - 1);
    if (n % half == 0)
      expected = count_elementary_abelian(g, k) + count_elementary_abelian(g, k - 1) * n / half;
    r.expect_eq("m2n." + name + ".iii.E" + std::to_string(std::size_t{1} << k), expected, in_m, Basis::Derived,
                src);
  }

  // (iv)
  bool s3 = true;
  const CayleyTable& s3_table = catalog::table(IsoType::S3);
  for (Element x = 0; x < n; ++x) {
    if (element_order(g, x) != 3)
      continue;
    for (Element y = 0; y < n; ++y) {
      const ElementSet gen = closure(m, {x, static_cast<Element>(n + y)});
      s3 = s3 && gen.size() == 6 && are_isomorphic(induced(m, gen), s3_table).has_value();
    }
  }
  r.expect_true("m2n." + name + ".iv.s3_from_order3", s3, Basis::Derived, src);

  // (v)
  const std::size_t c3 = count_cyclic(g, 3);
  std::size_t s3_in_g = 0;
  for (const ElementSet& h : g_subs)
    if (h.size() == 6 && are_isomorphic(induced(g, h), s3_table))
      ++s3_in_g;
  if (c3 != 0 && s3_in_g == 0) {
    std::size_t copies = 0;
    for (const ElementSet& h : subs)
      if (h.size() == n && are_isomorphic(induced(m, h), g))
        ++copies;
    r.expect_eq("m2n." + name + ".v.unique_copy_of_G", std::size_t{1}, copies, Basis::Derived, src);
  }
  return r;
}

namespace {

class WordParser {
public:
  WordParser(const CayleyTable& loop, const std::map<std::string, Element>& gens, std::string_view text)
      : loop_(loop), gens_(gens), text_(text) {}

  Element parse() {
    const Element v = word();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw RelatorError("in word '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_atom_start() {
    skip_space();
    return pos_ < text_.size() && (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])));
  }

  Element word() {
    Element acc = factor();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        acc = loop_.mul(acc, factor());
      } else if (at_atom_start()) {
        acc = loop_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Element factor() {
    Element base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected an exponent");
      const long k = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (negative)
        base = loop_.inverse(base);
      Element p = loop_.identity();
      for (long i = 0; i < k; ++i)
        p = loop_.mul(p, base);
      return p;
    }
    return base;
  }

  Element atom() {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of word");
    if (text_[pos_] == '(') {
      ++pos_;
      const Element v = word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        fail("expected ')'");
      ++pos_;
      return v;
    }
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected a generator name");
    const std::size_t start = pos_++;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (auto it = gens_.find(name); it != gens_.end())
      return it->second;
    if (name == "e")
      return loop_.identity();
    pos_ = start;
    fail("unknown symbol '" + name + "'");
  }

  const CayleyTable& loop_;
  const std::map<std::string, Element>& gens_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Element evaluate_word(const CayleyTable& loop, const std::map<std::string, Element>& gens, std::string_view word) {
  for (const auto& [name, x] : gens)
    if (x >= loop.size())
      throw RelatorError("generator '" + name + "' is not an element of the loop");
  return WordParser(loop, gens, word).parse();
}

bool check_relations(const CayleyTable& loop, const std::map<std::string, Element>& gens,
                     const std::vector<std::string>& relators) {
  bool all = true;
  for (const std::string& r : relators)
    all = evaluate_word(loop, gens, r) == loop.identity() && all;
  return all;
}

const std::vector<std::string>& ms3_relators() {
  static const std::vector<std::string> r{"x^2", "y^2", "(xy)^3", "u^2", "(xu)^2", "(yu)^2", "((xy)u)^2"};
  return r;
}

const std::vector<std::string>& ma4_relators() {
  static const std::vector<std::string> r{"x^2", "y^3", "(xy)^3", "u^2", "(xu)^2", "(yu)^2", "((xy)u)^2"};
  return r;
}

C2xC4Demo subgroup_lattice_demo_c2xc4() {
  const CayleyTable& g = catalog::table(IsoType::C2xC4);
  C2xC4Demo d;
  d.report = Report("subgroups of C2 x C4");
  d.subgroups = enumerate_subloops(g);
  // Element (i, j) of C2 x C4 has index 4i + j.
  d.a = closure(g, {2});
  d.a_prime = closure(g, {4});
  for (const ElementSet& h : d.subgroups) {
    if (classify(g, h) != IsoType::C4)
      continue;
    d.copies_c4_above_a += d.a.is_subset_of(h);
    d.copies_c4_above_a_prime += d.a_prime.is_subset_of(h);
  }

  const std::vector<Element> gens = generating_set(g);
  bool same_orbit = false;
  for_each_isomorphism(g, gens, g, [&](std::span<const Element> f) {
    ElementSet image(g.size());
    d.a.for_each([&](Element x) { image.insert(f[x]); });
    same_orbit = image == d.a_prime;
    return !same_orbit;
  });
  d.a_and_a_prime_in_same_orbit = same_orbit;

  const std::string src = "subgroup lattice of C2 x C4";
  d.report.expect_eq("c2xc4.subgroups", std::size_t{8}, d.subgroups.size(), Basis::Derived, src);
  d.report.expect_eq("c2xc4.a_isomorphic_a_prime", classify(g, d.a), classify(g, d.a_prime), Basis::Derived, src);
  d.report.expect_eq("c2xc4.l_iso[A:C4]", std::size_t{2}, d.copies_c4_above_a, Basis::Published, src);
  d.report.expect_eq("c2xc4.l_iso[A':C4]", std::size_t{0}, d.copies_c4_above_a_prime, Basis::Published, src);
  d.report.expect_true("c2xc4.different_orbits", !d.a_and_a_prime_in_same_orbit, Basis::Derived, src);
  return d;
}

} // namespace mlat::chein
