#include "fusionscope/catalog.hpp"

#include "catalog_data.hpp"
#include "fusionscope/su2.hpp"

namespace fusionscope {

std::vector<RingDocument> catalog() {
  std::vector<RingDocument> out;
  for (const auto& fixture : detail::kCatalogFixtures) out.push_back(parse_ring_document(fixture.text));
  for (int twice_jmax : {2, 4, 10}) out.push_back(from_ring(su2::export_truncated_ring(twice_jmax)));
  return out;
}

std::optional<RingDocument> find_catalog_entry(std::string_view name) {
  for (auto& doc : catalog())
    if (doc.name == name) return doc;
  return std::nullopt;
}

}  // namespace fusionscope
