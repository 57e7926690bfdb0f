#pragma once

// Representation subrings (spanned by a set of irreducible characters and
// closed under products and duals) correspond one-to-one to closed normal
// subgroups; order isomorphisms are basis bijections preserving fusion.

#include <optional>
#include <span>
#include <vector>

#include "fusionscope/fusion_ring.hpp"

namespace fusionscope {

struct RepresentationSubring {
  const FusionRing* ring = nullptr;
  /// sorted basis indices; always contains the unit
  std::vector<Index> basis;

  bool contains(Index p) const;
  std::size_t size() const { return basis.size(); }
  bool operator==(const RepresentationSubring& other) const { return basis == other.basis; }
};

/// Smallest subring containing seed: worklist closure under duals and
/// product constituents.  On truncated rings the visible constituents of
/// clipped products are still used, since they are genuine.
RepresentationSubring close(const FusionRing& ring, std::span<const Index> seed);

/// True iff basis contains the unit and is closed under duals and products.
bool is_subring(const FusionRing& ring, std::span<const Index> basis);

struct SearchLimits {
  int max_rank = 16;
};

struct SubringLattice {
  /// sorted by size, then lexicographically by basis
  std::vector<RepresentationSubring> subrings;
  /// (i, j) with subrings[i] strictly contained in subrings[j]
  std::vector<std::pair<int, int>> inclusion;

  std::optional<int> find(std::span<const Index> basis) const;
};

/// All representation subrings.  Every subring is a join of closures of
/// single irreps, so the lattice is the join-closure of those.  Throws
/// ResourceLimit when rank exceeds limits.max_rank.
SubringLattice enumerate_subrings(const FusionRing& ring, const SearchLimits& limits = {});

/// The subring as a standalone fusion ring, reindexed in basis order; this
/// is the representation ring of the corresponding quotient group.
FusionRing quotient_ring(const RepresentationSubring& sub);

/// Closure of all constituents of chi_p * chi_{p*}; corresponds to the
/// center.
RepresentationSubring adjoint_subring(const FusionRing& ring);

struct OrderIsomorphism {
  const FusionRing* source = nullptr;
  const FusionRing* target = nullptr;
  /// source basis index -> target basis index
  std::vector<Index> perm;
};

/// Exhaustive check of unit, dual and tensor compatibility.
bool is_order_isomorphism(const FusionRing& source, const FusionRing& target, std::span<const Index> perm);

/// All order automorphisms, sorted by permutation.  Backtracking over basis
/// bijections pruned by isomorphism-invariant fingerprints.
std::vector<OrderIsomorphism> order_automorphisms(const FusionRing& ring, const SearchLimits& limits = {});

/// Some order isomorphism a -> b, or nullopt.
std::optional<OrderIsomorphism> find_order_isomorphism(const FusionRing& a, const FusionRing& b,
                                                       const SearchLimits& limits = {});

/// True iff every order automorphism maps the subring onto itself.  For a
/// connected group this says the corresponding normal subgroup is invariant
/// under all automorphisms; otherwise it is only a ring-level statement.
bool characteristic_check(const FusionRing& ring, const RepresentationSubring& sub, const SearchLimits& limits = {});

}  // namespace fusionscope
