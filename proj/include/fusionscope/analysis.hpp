#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fusionscope/char_solver.hpp"
#include "fusionscope/fusion_ring.hpp"
#include "fusionscope/subrings.hpp"

namespace fusionscope {

struct AnalysisOptions {
  SolverOptions solver;
  SearchLimits limits;
};

enum class SectionStatus { ok, violation, error, resource_limit, skipped };

std::string_view to_string(SectionStatus status);

/// One block of a report: human-readable lines plus the same content as
/// structured data.
struct ReportSection {
  std::string name;
  SectionStatus status = SectionStatus::ok;
  std::vector<std::string> lines;
  std::vector<std::string> warnings;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct AnalysisReport {
  std::string ring_name;
  int rank = 0;
  bool truncated = false;
  std::vector<ReportSection> sections;

  const ReportSection* find(std::string_view name) const;
  std::string to_text() const;
  /// Deterministic for fixed input and options.
  std::string to_json() const;
};

ReportSection validation_section(const FusionRing& ring);
ReportSection invertibles_section(const FusionRing& ring);
ReportSection chain_group_section(const FusionRing& ring);
ReportSection center_check_section(const FusionRing& ring);
ReportSection subrings_section(const FusionRing& ring, const SearchLimits& limits);
ReportSection adjoint_section(const FusionRing& ring, const SearchLimits& limits);
ReportSection automorphisms_section(const FusionRing& ring, const SearchLimits& limits);
ReportSection characters_section(const FusionRing& ring, const SolverOptions& options);
ReportSection fp_dimensions_section(const FusionRing& ring);
ReportSection integer_solutions_section(const FusionRing& ring, const IntegerSearchOptions& options);

/// Every section.  When validation fails the remaining sections are
/// reported as skipped.
AnalysisReport analyze(const FusionRing& ring, const AnalysisOptions& options = {});

/// Formats a complex number compactly, e.g. "1", "-0.5+0.866025i".
std::string format_complex(std::complex<double> z);

}  // namespace fusionscope
