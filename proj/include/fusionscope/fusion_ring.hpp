#pragma once

// Fusion rings of compact groups: the multiplicities N^r_{p,q} of the
// irreducible decomposition chi_p * chi_q = sum_r N^r_{p,q} chi_r, and the
// ordered ring of generalized characters built on them.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusionscope {

using Index = int;
using Multiplicity = std::int64_t;

/// One nonzero multiplicity N^r_{p,q} = m.
struct FusionEntry {
  Index p = 0;
  Index q = 0;
  Index r = 0;
  Multiplicity m = 0;

  auto operator<=>(const FusionEntry&) const = default;
};

struct Constituent {
  Index irrep = 0;
  Multiplicity mult = 0;

  auto operator<=>(const Constituent&) const = default;
};

enum class FsIndicator { real, complex, pseudoreal };

std::string_view to_string(FsIndicator fs);
std::optional<FsIndicator> parse_fs_indicator(std::string_view text);

/// Optional facts attached to a ring that are not functions of the
/// fusion rules themselves.
struct RingMetadata {
  /// User assertion that the underlying group is connected.
  std::optional<bool> connected;
  /// Truncation bound: the pair (p, q) has its complete product iff
  /// p + q <= complete_below.  Absent means every product is complete.
  std::optional<int> complete_below;
  /// Frobenius-Schur indicators keyed by label.
  std::map<std::string, FsIndicator> fs_indicators;

  bool operator==(const RingMetadata&) const = default;
};

/// Finite-rank commutative fusion data.  Immutable once constructed.
///
/// Entries are normalized to p <= q; supplying both (p, q, r) and (q, p, r)
/// is rejected as a duplicate, so noncommutative data cannot be expressed.
class FusionRing {
 public:
  /// Throws MalformedInput on out-of-range indices, negative
  /// multiplicities, duplicate entries, empty or repeated labels.
  FusionRing(std::string name, std::vector<std::string> labels, Index unit,
             std::vector<Index> dual, std::vector<FusionEntry> entries,
             RingMetadata metadata = {});

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index p) const { return labels_.at(p); }
  std::optional<Index> find_label(std::string_view label) const;

  Index unit() const { return unit_; }
  Index dual(Index p) const { return dual_.at(p); }
  const std::vector<Index>& dual_map() const { return dual_; }

  /// N^r_{p,q}.
  Multiplicity multiplicity(Index p, Index q, Index r) const;
  /// Nonzero constituents of chi_p * chi_q, sorted by index.
  std::span<const Constituent> product(Index p, Index q) const;
  /// Canonical entries: p <= q, sorted lexicographically.
  const std::vector<FusionEntry>& entries() const { return entries_; }

  const RingMetadata& metadata() const { return metadata_; }
  bool is_truncated() const { return metadata_.complete_below.has_value(); }
  /// True iff product(p, q) is the full product (never clipped).
  bool pair_complete(Index p, Index q) const;

  /// Copy with N^r_{p,q} = N^r_{q,p} replaced by m (m = 0 erases).
  FusionRing with_multiplicity(Index p, Index q, Index r, Multiplicity m) const;
  FusionRing with_metadata(RingMetadata metadata) const;
  FusionRing with_name(std::string name) const;

  bool operator==(const FusionRing& other) const;

 private:
  std::size_t pair_slot(Index p, Index q) const {
    return static_cast<std::size_t>(p) * labels_.size() + static_cast<std::size_t>(q);
  }

  std::string name_;
  std::vector<std::string> labels_;
  Index unit_;
  std::vector<Index> dual_;
  std::vector<FusionEntry> entries_;
  RingMetadata metadata_;
  std::vector<std::vector<Constituent>> products_;
};

enum class Axiom { dual_involution, unit_law, commutativity, associativity, duality };

std::string_view to_string(Axiom axiom);

/// One violated axiom together with the first witness found.
struct Violation {
  Axiom axiom;
  /// Indices of the witness; unused slots are -1.  Layout per axiom:
  /// dual_involution (p), unit_law (q, r), commutativity (p, q, r),
  /// associativity (p, q, r, t), duality (p, q).
  std::array<Index, 4> witness{-1, -1, -1, -1};
  std::string detail;
  /// Number of witnesses found for this axiom.
  std::size_t count = 1;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the five fusion-ring axioms exhaustively.  On truncated rings,
/// only pairs and triples whose products are complete are tested.
ValidationReport validate(const FusionRing& ring);

/// Element of the representation ring: integer coefficients over the
/// irreducible basis.  Holds a non-owning reference to its ring, which must
/// outlive it.
class GeneralizedCharacter {
 public:
  GeneralizedCharacter(const FusionRing& ring, std::vector<Multiplicity> coeffs);

  static GeneralizedCharacter zero(const FusionRing& ring);
  static GeneralizedCharacter basis(const FusionRing& ring, Index p);

  const FusionRing& ring() const { return *ring_; }
  const std::vector<Multiplicity>& coeffs() const { return coeffs_; }
  Multiplicity operator[](Index p) const { return coeffs_.at(p); }

  /// In the positive cone: all coefficients nonnegative.
  bool is_character() const;
  bool is_zero() const;

  friend GeneralizedCharacter operator+(const GeneralizedCharacter& a, const GeneralizedCharacter& b);
  friend GeneralizedCharacter operator-(const GeneralizedCharacter& a, const GeneralizedCharacter& b);
  friend GeneralizedCharacter operator*(Multiplicity k, const GeneralizedCharacter& a);
  bool operator==(const GeneralizedCharacter& other) const;

 private:
  const FusionRing* ring_;
  std::vector<Multiplicity> coeffs_;
};

/// Bilinear extension of the fusion product.  Exact; throws
/// std::overflow_error if a coefficient leaves int64.
GeneralizedCharacter multiply(const GeneralizedCharacter& a, const GeneralizedCharacter& b);

/// True iff every pair (p, q) contributing to a * b has a complete product.
bool product_is_complete(const GeneralizedCharacter& a, const GeneralizedCharacter& b);

/// a precedes b in the ring order: b - a lies in the positive cone.
bool leq(const GeneralizedCharacter& a, const GeneralizedCharacter& b);

/// Nonzero (irrep, multiplicity) pairs of a character.  Throws NotACharacter
/// if some coefficient is negative.
std::vector<Constituent> decompose(const GeneralizedCharacter& a);

GeneralizedCharacter dual_char(const GeneralizedCharacter& a);

}  // namespace fusionscope
