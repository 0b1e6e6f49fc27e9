#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mlat/autgroup.hpp"
#include "mlat/hasse.hpp"
#include "mlat/paige.hpp"
#include "mlat/report.hpp"

namespace mlat::lattice {

/// Covering relation on the enumerated subloops (indices into the census).
struct LatticeGraph {
  std::vector<std::vector<std::size_t>> lower;  // maximal subloops of i
  std::vector<std::vector<std::size_t>> upper;  // minimal overloops of i
};

LatticeGraph covering_graph(const hasse::SubloopCensus& c);

/// Everything computed about M*(2): the loop, its automorphism group (from
/// the three generator families), the census of subloops with orbits, and
/// the covering graph.
class Analysis {
public:
  /// threads as for enumerate_subloops (0 = one per hardware thread).
  explicit Analysis(unsigned threads = 1);

  const paige::PaigeLoop& loop() const { return *loop_; }
  const aut::AutGroup& group() const { return group_; }
  const hasse::SubloopCensus& census() const { return *census_; }
  const LatticeGraph& graph() const { return graph_; }

private:
  const paige::PaigeLoop* loop_;
  aut::AutGroup group_;
  std::unique_ptr<hasse::SubloopCensus> census_;
  LatticeGraph graph_;
};

/// Every H <= L among the subloops has |H| dividing |L|.
bool check_strong_lagrange(const hasse::SubloopCensus& c);

/// For every prime p dividing |S|, S has a subloop of order p. Subloop i of
/// the census, or the whole loop.
bool check_weak_cauchy(const hasse::SubloopCensus& c, std::size_t i);
bool check_weak_cauchy(const hasse::SubloopCensus& c);

/// Primes p for which some subloop has order p.
std::vector<std::size_t> primes_with_subloops(const hasse::SubloopCensus& c);

/// Number of (E8 copy, involution outside it) pairs where the involution
/// commutes with all of the E8; zero means no E16.
std::size_t e8_commuting_extensions(const hasse::SubloopCensus& c);

/// Orbit representatives by name: label and generators.
struct NamedRep {
  std::string label;
  std::vector<std::string> generators;
};
std::span<const NamedRep> named_representatives();

/// Subloop generated by the named representative for label (whole loop for
/// "C", {e} for "1").
ElementSet named_subloop(const paige::PaigeLoop& loop, const NamedRep& rep);

struct FigureNode {
  std::size_t id = 0;
  std::size_t order = 0;
  IsoType type = IsoType::Trivial;
  std::string orbit;
  std::size_t size = 0;               // |O(A)|
  std::vector<Element> representative;
  std::size_t orbit_index = 0;        // census orbit
};

struct FigureEdge {
  std::size_t from = 0;  // node ids, from < to in the order
  std::size_t to = 0;
  std::size_t l_glb = 0;  // l[A:B]
  std::size_t l_orb = 0;  // l_orb[A:B:C]
  bool maximal = false;   // some copy of A is maximal in B (thick edge)
};

/// One node per orbit, sorted by (order, orbit index). Nontrivial A < B are
/// joined iff l_orb[A:B:C] > 0; edges from {e} or into the whole loop only
/// when a copy of A is maximal in B.
struct Figure2 {
  std::size_t elements = 0;
  std::vector<FigureNode> nodes;
  std::vector<FigureEdge> edges;
};

Figure2 figure2_data(const Analysis& a);

/// {"elements", "nodes": [{id, order, type, orbit, size, representative}],
///  "edges": [{from, to, l_glb, l_orb, maximal}]}, two-space indent.
std::string export_json(const Figure2& f);
/// Undirected graph, bottom to top; bold edges for maximal inclusions.
std::string export_dot(const Figure2& f);

/// Census, orbits, representatives, global properties and Figure 2 checks.
Report verify_lattice(const Analysis& a);

} // namespace mlat::lattice
