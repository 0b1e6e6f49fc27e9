#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/loop.hpp"
#include "mlat/report.hpp"

namespace mlat::chein {

/// M(G,2) on G x C2 with (g,i)(h,j) = ((g^s h^t)^s, i+j), s = (-1)^j,
/// t = (-1)^(i+j). (g,0) has index g and (g,1) has index |G| + g, so the coset
/// Gu is the upper half of the index range. Throws std::invalid_argument if
/// G is not associative.
CayleyTable chein_double(const CayleyTable& group);

/// Checks the structural facts about M = M(G,2) for the group G:
///   - every element of Gu is an involution; G.G = Gu.Gu = G, G.Gu = Gu.G = Gu;
///   - |H n G| = |H n Gu| for every subloop H not inside G;
///   - (i)   copies of C_m in M vs G (plus |G| extra involution subgroups);
///   - (ii)  <H, gu> is elementary abelian of order 2|H| for every
///           elementary abelian 2-subgroup H of G and every g;
///   - (iii) copies of E_{2^k} in M vs the closed formula;
///   - (iv)  <g, hu> is S3 whenever g has order 3;
///   - (v)   G occurs exactly once in M when G has a C3 but no S3.
/// Everything is exhaustive; G is small.
Report verify_m2n_lemma(const CayleyTable& group, const std::string& name);

/// Number of cyclic subloops of order m.
std::size_t count_cyclic(const CayleyTable& loop, std::size_t m);

/// Number of elementary abelian subgroups of order 2^k (k = 0 gives 1).
std::size_t count_elementary_abelian(const CayleyTable& loop, unsigned k);

bool is_elementary_abelian_2(const CayleyTable& loop, const ElementSet& subset);

class RelatorError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluates a word over named elements. Grammar:
///   word   := factor { ['*'] factor }      left to right: ((ab)c)d
///   factor := atom [ '^' integer ]         x^k = ((xx)x)..., x^-k = (x^-1)^k
///   atom   := name | 'e' | '(' word ')'
/// A name is a letter followed by digits or underscores, so "xy" is x times y
/// and "x0y0" is x0 times y0. Throws RelatorError on syntax errors and unknown
/// names.
Element evaluate_word(const CayleyTable& loop, const std::map<std::string, Element>& gens, std::string_view word);

/// True iff every relator evaluates to the identity.
bool check_relations(const CayleyTable& loop, const std::map<std::string, Element>& gens,
                     const std::vector<std::string>& relators);

/// Relators of M(S3) and M(A4) on generators x, y, u.
const std::vector<std::string>& ms3_relators();
const std::vector<std::string>& ma4_relators();

/// Subgroups of C2 x C4 and the two Hasse constants for the isomorphic
/// subgroups A = 1 x {0,2} and A' = C2 x 1 below C4 (2 and 0).
struct C2xC4Demo {
  std::vector<ElementSet> subgroups;
  ElementSet a;
  ElementSet a_prime;
  std::size_t copies_c4_above_a = 0;
  std::size_t copies_c4_above_a_prime = 0;
  bool a_and_a_prime_in_same_orbit = true;
  Report report;
};

C2xC4Demo subgroup_lattice_demo_c2xc4();

} // namespace mlat::chein
