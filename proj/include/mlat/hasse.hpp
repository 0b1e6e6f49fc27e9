#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/autgroup.hpp"
#include "mlat/loop.hpp"
#include "mlat/paige.hpp"
#include "mlat/report.hpp"

namespace mlat::hasse {

/// Every subloop of a loop with its type and its orbit under a group of
/// automorphisms. The table must outlive the census.
class SubloopCensus {
public:
  SubloopCensus(const CayleyTable& table, std::vector<ElementSet> subloops, const aut::AutGroup& group);

  const CayleyTable& table() const { return *table_; }
  const std::vector<ElementSet>& subloops() const { return subloops_; }
  std::size_t size() const { return subloops_.size(); }

  IsoType type(std::size_t i) const { return types_[i]; }
  std::size_t orbit_of(std::size_t i) const { return orbits_.orbit_of[i]; }
  const aut::OrbitPartition& orbits() const { return orbits_; }
  std::size_t orbit_size(std::size_t orbit) const { return orbits_.orbits[orbit].members.size(); }
  const ElementSet& orbit_rep(std::size_t orbit) const {
    return subloops_[orbits_.orbits[orbit].representative];
  }
  IsoType orbit_type(std::size_t orbit) const { return types_[orbits_.orbits[orbit].representative]; }

  /// Type name when the type forms one orbit. E4 orbits are E4+ (inside some
  /// A4) and E4-; any other split gets T#1, T#2, ... in orbit order.
  const std::string& orbit_label(std::size_t orbit) const { return labels_[orbit]; }
  std::optional<std::size_t> orbit_by_label(std::string_view label) const;

  /// Types occurring, by increasing order.
  std::vector<IsoType> types_present() const;
  std::vector<std::size_t> orbits_of_type(IsoType t) const;

  std::optional<std::size_t> find(const ElementSet& s) const;

  /// Indices of the subloops containing s (s need not be a subloop).
  std::vector<std::size_t> containing(const ElementSet& s) const;
  /// Same, for an enumerated subloop i (precomputed).
  const std::vector<std::size_t>& above(std::size_t i) const { return above_[i]; }

private:
  const CayleyTable* table_;
  std::vector<ElementSet> subloops_;
  std::vector<IsoType> types_;
  aut::OrbitPartition orbits_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> by_element_;  // element -> subloops containing it
  std::vector<std::vector<std::size_t>> above_;
};

/// l[B:C]: copies of B in the loop.
std::size_t count_copies(const SubloopCensus& c, IsoType b);

/// l_iso[A:B:C]: copies of B containing A.
std::size_t count_copies_above(const SubloopCensus& c, const ElementSet& a, IsoType b);

/// l_orb[A:B:C]: copies of B containing A and lying in the given orbit.
std::size_t count_orbit_above(const SubloopCensus& c, const ElementSet& a, std::size_t b_orbit);

/// l[A:B] for abstract types: copies of A inside one copy of B, counted on
/// the catalog table of B. For B = Ambient this is count_copies(c, a).
std::size_t abstract_count(const SubloopCensus& c, IsoType a, IsoType b);

struct HasseRecord {
  IsoType sub_type = IsoType::Trivial;
  IsoType sup_type = IsoType::Trivial;
  std::size_t l_glb = 0;                        // l[A:B]
  std::vector<std::size_t> sub_orbits;          // orbits of A-copies
  std::vector<std::size_t> sup_orbits;          // orbits of B-copies
  std::vector<std::size_t> l_iso;               // per sub orbit
  std::vector<std::vector<std::size_t>> l_orb;  // [sub orbit][sup orbit]
};

/// Direct counts for one ordered type pair, on the orbit representatives.
HasseRecord hasse_record(const SubloopCensus& c, IsoType a, IsoType b);

/// Records for every ordered pair of types present.
std::vector<HasseRecord> all_records(const SubloopCensus& c);

/// One CSV line per (sub orbit, sup orbit):
/// sub_type,sup_type,sub_orbit,sup_orbit,l_glb,l_iso,l_orb.
std::string constants_csv(const SubloopCensus& c, const std::vector<HasseRecord>& records);

/// Orbit-mates share l_iso and l_orb for every type and orbit above them.
Report verify_counting_lemma(const SubloopCensus& c);

/// The five counting identities for every ordered type pair. Left and right
/// sides come from different computations: catalog counts and orbit sizes on
/// one side, containment counts in the loop on the other.
Report verify_identities(const SubloopCensus& c);

/// Constants quoted for the Paige loop; c must be its census under the full
/// automorphism group.
Report verify_published_constants(const paige::PaigeLoop& loop, const SubloopCensus& c);

} // namespace mlat::hasse
