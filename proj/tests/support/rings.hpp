#pragma once

#include <string>
#include <string_view>

#include "fusionscope/catalog.hpp"
#include "fusionscope/errors.hpp"
#include "fusionscope/ring_document.hpp"

namespace testing_support {

inline fusionscope::FusionRing catalog_ring(std::string_view name) {
  auto doc = fusionscope::find_catalog_entry(name);
  if (!doc) throw fusionscope::UsageError("no catalog entry " + std::string(name));
  return fusionscope::to_ring(*doc);
}

}  // namespace testing_support
