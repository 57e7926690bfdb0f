#pragma once

// Text format for fusion rings.  JSON with a fixed canonical layout:
//
//   {
//     "dual": [0, 1],
//     "fusion": [
//       [0, 0, 0, 1],
//       [1, 1, 0, 1]
//     ],
//     "labels": ["1", "1a"],
//     "metadata": {},
//     "name": "Z2",
//     "rank": 2,
//     "unit": 0
//   }
//
// Keys are sorted at every level, fusion quadruples [p, q, r, m] have
// p <= q and are sorted lexicographically.  Unit rows may be omitted: a
// pair (unit, q) with no entries at all reads as chi_unit * chi_q = chi_q.  Metadata may hold
// "complete_below" (integer), "connected" (boolean) and "fs_indicators"
// (label -> "real" | "complex" | "pseudoreal"); nothing else is accepted.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fusionscope/fusion_ring.hpp"

namespace fusionscope {

struct RingDocument {
  std::string name;
  int rank = 0;
  std::vector<std::string> labels;
  Index unit = 0;
  std::vector<Index> dual;
  /// [p, q, r, m] with p <= q, sorted
  std::vector<std::array<std::int64_t, 4>> fusion;
  RingMetadata metadata;

  bool operator==(const RingDocument&) const = default;
};

/// Strict parse.  Throws MalformedInput whose message carries the line and
/// column of the offending value.  Quadruples with p > q are normalized.
RingDocument parse_ring_document(std::string_view text);

/// Canonical text; parse_ring_document(serialize(d)) == d and, for
/// canonical input, serialize(parse(text)) == text.
std::string serialize_ring_document(const RingDocument& doc);

FusionRing to_ring(const RingDocument& doc);
RingDocument from_ring(const FusionRing& ring);

RingDocument read_ring_document_file(const std::string& path);
FusionRing read_ring_file(const std::string& path);

}  // namespace fusionscope
