#pragma once

// Abelian groups recoverable from fusion rules: the one-dimensional
// characters (dual of the abelianization G/[G,G]) and the chain group
// (dual of the center Z(G)).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusionscope/abelian_group.hpp"
#include "fusionscope/fusion_ring.hpp"

namespace fusionscope {

/// Basis elements p with chi_p * chi_{p*} = chi_unit, under the fusion
/// product.  Element ids are the ring labels.
///
/// Throws AxiomViolation if two invertibles multiply to anything but a
/// single invertible basis element.
AbelianGroupStructure invertible_characters(const FusionRing& ring);

/// Basis indices of the invertible characters, ascending.
std::vector<Index> invertible_indices(const FusionRing& ring);

struct ChainGroupResult {
  /// irrep index -> class id (index into classes and group elements)
  std::vector<int> class_of;
  /// members of each class, ascending; classes ordered by smallest member
  std::vector<std::vector<Index>> classes;
  AbelianGroupStructure group;
};

/// Chain-equivalence classes of irreducibles and their product.
///
/// Any two constituents of one product chi_p * chi_q are equivalent; the
/// relation is closed transitively with a union-find pass.  On truncated
/// rings only complete pairs participate.  Throws InternalConsistency if
/// the class product is not well defined.
ChainGroupResult chain_group(const FusionRing& ring);

/// The chain group, which is isomorphic to the dual of the center.
AbelianGroupStructure center_dual(const FusionRing& ring);

enum class CheckStatus { pass, fail, not_applicable };

std::string_view to_string(CheckStatus status);

/// Instance check of: if every nonzero fusion multiplicity is odd and some
/// irrep is pseudo-real, the center is nontrivial.
struct CenterCheck {
  CheckStatus status = CheckStatus::not_applicable;
  bool all_multiplicities_odd = false;
  /// first entry with an even multiplicity, if any
  std::optional<FusionEntry> even_witness;
  std::vector<Index> pseudoreal;
  /// order of the chain group; only set when the hypothesis holds
  std::optional<int> chain_group_order;
  std::string summary;
};

/// Throws MalformedInput if an indicator contradicts duality (complex on a
/// self-dual irrep or real/pseudoreal on a non-self-dual one).
CenterCheck check_oddfusion_pseudoreal_center(const FusionRing& ring,
                                              const std::map<Index, FsIndicator>& fs_indicators);

/// Uses the ring's metadata fs_indicators.
CenterCheck check_oddfusion_pseudoreal_center(const FusionRing& ring);

}  // namespace fusionscope
