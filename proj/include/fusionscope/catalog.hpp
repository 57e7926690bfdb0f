#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fusionscope/ring_document.hpp"

namespace fusionscope {

/// Built-in example rings.  Finite groups (trivial, Z2 .. Z6, Z2xZ2, S3, D4,
/// Q8, A4) come from fixtures generated by tools/gen_catalog.py from group
/// multiplication tables; the SU(2) truncations jmax = 1, 2, 5 are exported
/// by the SU(2) engine on demand.
std::vector<RingDocument> catalog();

std::optional<RingDocument> find_catalog_entry(std::string_view name);

}  // namespace fusionscope
