#include <doctest.h>

#include <json.hpp>

#include "fusionscope/analysis.hpp"
#include "fusionscope/su2.hpp"
#include "oracles.hpp"
#include "rings.hpp"

using namespace fusionscope;
using testing_support::catalog_ring;

TEST_CASE("every catalog analysis completes under default limits") {
  for (const auto& doc : catalog()) {
    CAPTURE(doc.name);
    const auto report = analyze(to_ring(doc));
    for (const auto& s : report.sections) {
      CAPTURE(s.name);
      CHECK((s.status == SectionStatus::ok || s.status == SectionStatus::violation));
    }
  }
}

TEST_CASE("truncated rings carry warnings in every ring-level section") {
  const auto report = analyze(su2::export_truncated_ring(4));
  CHECK(report.truncated);
  for (const char* name : {"validation", "chain_group", "subrings", "character_solutions", "fp_dimensions"}) {
    CAPTURE(name);
    REQUIRE(report.find(name) != nullptr);
    CHECK_FALSE(report.find(name)->warnings.empty());
  }
  const auto d4 = analyze(catalog_ring("D4"));
  CHECK(d4.find("chain_group")->warnings.empty());
}

TEST_CASE("group-level claims about automorphisms need a connectedness assertion") {
  const auto d4 = analyze(catalog_ring("D4"));
  CHECK(d4.find("adjoint_subring")->lines.back().find("needs metadata connected: true") != std::string::npos);
  const auto su2 = analyze(su2::export_truncated_ring(10));
  CHECK(su2.find("adjoint_subring")->lines.back().find("asserted connected") != std::string::npos);
}

TEST_CASE("JSON rendering is deterministic and complete") {
  const auto ring = catalog_ring("S3");
  const auto a = analyze(ring).to_json();
  CHECK(analyze(ring).to_json() == a);
  const auto json = nlohmann::json::parse(a);
  CHECK(json["ring"] == "S3");
  CHECK(json["sections"]["subrings"]["result"]["count"] == 3);
  CHECK(json["sections"]["chain_group"]["result"]["order"] == 1);
  CHECK(json["sections"]["invertible_characters"]["result"]["invariant_factors"] == std::vector<int>{2});
}

TEST_CASE("format_complex") {
  CHECK(format_complex({1.0, 0.0}) == "1");
  CHECK(format_complex({-0.5, 0.8660254037844386}) == "-0.5+0.866025i");
  CHECK(format_complex({0.0, -2.0}) == "-2i");
  CHECK(format_complex({-1e-15, 0.0}) == "0");
}
