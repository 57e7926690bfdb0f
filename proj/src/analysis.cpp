#include "fusionscope/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fusionscope/errors.hpp"
#include "fusionscope/group_recovery.hpp"

namespace fusionscope {

namespace {

using ojson = nlohmann::ordered_json;

double rounded(double x) {
  const double r = std::round(x * 1e10) / 1e10;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

std::string join_labels(const FusionRing& ring, const std::vector<Index>& basis) {
  std::string out = "{";
  for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? ", " : "") + ring.label(basis[i]);
  return out + "}";
}

ojson label_array(const FusionRing& ring, const std::vector<Index>& basis) {
  ojson arr = ojson::array();
  for (Index p : basis) arr.push_back(ring.label(p));
  return arr;
}

void add_truncation_warning(const FusionRing& ring, ReportSection& s) {
  if (ring.is_truncated())
    s.warnings.push_back("ring is truncated (complete_below = " + std::to_string(*ring.metadata().complete_below) +
                         "); clipped products are excluded where they would mislead");
}

/// Runs body, turning library errors into section statuses.
template <typename Body>
ReportSection guarded(std::string name, Body&& body) {
  ReportSection s;
  s.name = std::move(name);
  try {
    body(s);
  } catch (const ResourceLimit& e) {
    s.status = SectionStatus::resource_limit;
    s.lines = {std::string("resource limit: ") + e.what()};
  } catch (const Error& e) {
    s.status = SectionStatus::error;
    s.lines = {std::string("error: ") + e.what()};
  } catch (const std::overflow_error& e) {
    s.status = SectionStatus::error;
    s.lines = {std::string("error: ") + e.what()};
  }
  if (s.status != SectionStatus::ok && s.status != SectionStatus::violation) s.data["message"] = s.lines.front();
  return s;
}

ojson group_json(const AbelianGroupStructure& g) {
  ojson out;
  out["order"] = g.order();
  out["invariant_factors"] = g.invariant_factors;
  out["structure"] = describe_factors(g.invariant_factors);
  out["elements"] = g.elements;
  return out;
}

}  // namespace

std::string_view to_string(SectionStatus status) {
  switch (status) {
    case SectionStatus::ok:
      return "ok";
    case SectionStatus::violation:
      return "violation";
    case SectionStatus::error:
      return "error";
    case SectionStatus::resource_limit:
      return "resource-limit";
    case SectionStatus::skipped:
      return "skipped";
  }
  return "?";
}

std::string format_complex(std::complex<double> z) {
  const double re = rounded(z.real());
  const double im = rounded(z.imag());
  char buf[64];
  if (std::abs(im) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.6g", re + 0.0);
  } else if (std::abs(re) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.6gi", im);
  } else {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
  }
  return buf;
}

ReportSection validation_section(const FusionRing& ring) {
  return guarded("validation", [&](ReportSection& s) {
    const auto report = validate(ring);
    add_truncation_warning(ring, s);
    s.data["valid"] = report.ok();
    ojson violations = ojson::array();
    if (report.ok()) {
      s.lines.push_back("all axioms hold (dual involution, unit law, commutativity, associativity, duality)");
    } else {
      s.status = SectionStatus::violation;
      for (const auto& v : report.violations) {
        std::vector<Index> witness;
        for (Index i : v.witness)
          if (i >= 0) witness.push_back(i);
        s.lines.push_back(std::string(to_string(v.axiom)) + " violated (" + std::to_string(v.count) +
                          " witnesses); first witness " + join_labels(ring, witness) + ": " + v.detail);
        ojson item;
        item["axiom"] = to_string(v.axiom);
        item["witness"] = witness;
        item["witness_labels"] = label_array(ring, witness);
        item["count"] = v.count;
        item["detail"] = v.detail;
        violations.push_back(item);
      }
    }
    s.data["violations"] = violations;
  });
}

ReportSection invertibles_section(const FusionRing& ring) {
  return guarded("invertible_characters", [&](ReportSection& s) {
    add_truncation_warning(ring, s);
    const auto g = invertible_characters(ring);
    s.data = group_json(g);
    s.lines.push_back("one-dimensional characters " + join_labels(ring, invertible_indices(ring)) + " form " +
                      describe_factors(g.invariant_factors) + ", the dual of the abelianization G/[G,G]");
  });
}

ReportSection chain_group_section(const FusionRing& ring) {
  return guarded("chain_group", [&](ReportSection& s) {
    add_truncation_warning(ring, s);
    const auto cg = chain_group(ring);
    s.data = group_json(cg.group);
    ojson classes = ojson::array();
    for (const auto& cls : cg.classes) classes.push_back(label_array(ring, cls));
    s.data["classes"] = classes;
    s.lines.push_back("chain group " + describe_factors(cg.group.invariant_factors) + " (order " +
                      std::to_string(cg.group.order()) + "), isomorphic to the dual of the center Z(G)");
    for (std::size_t c = 0; c < cg.classes.size(); ++c)
      s.lines.push_back("  class " + cg.group.elements[c] + ": " + join_labels(ring, cg.classes[c]));
  });
}

ReportSection center_check_section(const FusionRing& ring) {
  return guarded("oddfusion_pseudoreal_center", [&](ReportSection& s) {
    const auto check = check_oddfusion_pseudoreal_center(ring);
    if (check.status == CheckStatus::fail) s.status = SectionStatus::violation;
    s.data["status"] = to_string(check.status);
    s.data["all_multiplicities_odd"] = check.all_multiplicities_odd;
    s.data["pseudoreal"] = label_array(ring, check.pseudoreal);
    if (check.chain_group_order) s.data["chain_group_order"] = *check.chain_group_order;
    s.lines.push_back(std::string(to_string(check.status)) + ": " + check.summary);
    if (ring.metadata().fs_indicators.empty())
      s.warnings.push_back("no Frobenius-Schur indicators in metadata; the pseudo-real hypothesis cannot hold");
  });
}

ReportSection subrings_section(const FusionRing& ring, const SearchLimits& limits) {
  return guarded("subrings", [&](ReportSection& s) {
    add_truncation_warning(ring, s);
    const auto lattice = enumerate_subrings(ring, limits);
    s.data["count"] = lattice.subrings.size();
    ojson list = ojson::array();
    s.lines.push_back(std::to_string(lattice.subrings.size()) +
                      " representation subrings, one per closed normal subgroup H (subring = R(G/H))");
    for (std::size_t i = 0; i < lattice.subrings.size(); ++i) {
      const auto& sub = lattice.subrings[i];
      list.push_back(label_array(ring, sub.basis));
      s.lines.push_back("  [" + std::to_string(i) + "] " + join_labels(ring, sub.basis));
    }
    s.data["subrings"] = list;
    ojson inclusion = ojson::array();
    for (const auto& [a, b] : lattice.inclusion) inclusion.push_back({a, b});
    s.data["inclusion"] = inclusion;
  });
}

ReportSection adjoint_section(const FusionRing& ring, const SearchLimits& limits) {
  return guarded("adjoint_subring", [&](ReportSection& s) {
    add_truncation_warning(ring, s);
    const auto adj = adjoint_subring(ring);
    s.data["basis"] = label_array(ring, adj.basis);
    s.lines.push_back("adjoint subring " + join_labels(ring, adj.basis) +
                      " corresponds to the center: it is R(G/Z(G))");
    const bool characteristic = characteristic_check(ring, adj, limits);
    s.data["invariant_under_all_automorphisms"] = characteristic;
    const bool connected = ring.metadata().connected.value_or(false);
    s.data["connected_asserted"] = connected;
    std::string verdict = characteristic ? "is mapped onto itself by every order automorphism"
                                         : "is moved by some order automorphism";
    if (connected)
      verdict += characteristic ? "; since G is asserted connected, Z(G) is invariant under all automorphisms of G"
                                : "; since G is asserted connected, Z(G) is not invariant under all automorphisms";
    else
      verdict += " (a group-level conclusion needs metadata connected: true)";
    s.lines.push_back(verdict);
  });
}

ReportSection automorphisms_section(const FusionRing& ring, const SearchLimits& limits) {
  return guarded("order_automorphisms", [&](ReportSection& s) {
    const auto autos = order_automorphisms(ring, limits);
    s.data["count"] = autos.size();
    ojson list = ojson::array();
    s.lines.push_back(std::to_string(autos.size()) + " order automorphisms");
    for (const auto& a : autos) {
      list.push_back(a.perm);
      std::string moved;
      for (Index p = 0; p < ring.rank(); ++p)
        if (a.perm[p] != p) moved += (moved.empty() ? "" : ", ") + ring.label(p) + "->" + ring.label(a.perm[p]);
      s.lines.push_back("  " + (moved.empty() ? std::string("identity") : moved));
    }
    s.data["permutations"] = list;
  });
}

ReportSection characters_section(const FusionRing& ring, const SolverOptions& options) {
  return guarded("character_solutions", [&](ReportSection& s) {
    add_truncation_warning(ring, s);
    const auto sols = solve_character_system(ring, options);
    s.data["seed"] = options.seed;
    s.data["tolerance"] = options.tol;
    s.data["count"] = sols.size();
    ojson list = ojson::array();
    s.lines.push_back(std::to_string(sols.size()) + " solutions of the character system (labels: " +
                      join_labels(ring, [&] {
                        std::vector<Index> all(ring.rank());
                        for (Index p = 0; p < ring.rank(); ++p) all[p] = p;
                        return all;
                      }()) +
                      ")");
    double worst = 0.0;
    for (const auto& sol : sols) {
      ojson values = ojson::array();
      std::string row;
      for (std::size_t p = 0; p < sol.values.size(); ++p) {
        values.push_back({rounded(sol.values[p].real()), rounded(sol.values[p].imag())});
        row += (p ? ", " : "") + format_complex(sol.values[p]);
      }
      worst = std::max(worst, sol.residual);
      list.push_back(values);
      s.lines.push_back("  (" + row + ")");
    }
    s.data["solutions"] = list;
    s.data["residual_below_tolerance"] = worst < options.tol;
    if (!ring.is_truncated())
      s.lines.push_back("for a finite group these are the columns of the character table");
    else
      s.warnings.push_back("formal solutions of the truncated system; not character values");
  });
}

ReportSection fp_dimensions_section(const FusionRing& ring) {
  return guarded("fp_dimensions", [&](ReportSection& s) {
    add_truncation_warning(ring, s);
    const auto fp = fp_dimensions(ring);
    ojson values = ojson::array();
    std::string row;
    for (Index p = 0; p < ring.rank(); ++p) {
      values.push_back(rounded(fp.values[p]));
      row += (p ? ", " : "") + ring.label(p) + ": " + format_complex(fp.values[p]);
    }
    s.data["values"] = values;
    s.data["residual_below_1e-9"] = fp.residual < 1e-9;
    s.lines.push_back("FP dimension " + row);
    if (fp.truncated) s.warnings.push_back("FP dimensions of a truncated ring are a truncation artifact");
  });
}

ReportSection integer_solutions_section(const FusionRing& ring, const IntegerSearchOptions& options) {
  return guarded("integer_solutions", [&](ReportSection& s) {
    add_truncation_warning(ring, s);
    const auto sols = integer_positive_solutions(ring, options);
    s.data["bound"] = options.bound;
    s.data["count"] = sols.size();
    s.data["solutions"] = sols;
    s.lines.push_back(std::to_string(sols.size()) + " positive integer solutions with entries <= " +
                      std::to_string(options.bound));
    for (const auto& v : sols) {
      std::string row;
      for (std::size_t i = 0; i < v.size(); ++i) row += (i ? ", " : "") + std::to_string(v[i]);
      s.lines.push_back("  (" + row + ")");
    }
  });
}

const ReportSection* AnalysisReport::find(std::string_view name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

AnalysisReport analyze(const FusionRing& ring, const AnalysisOptions& options) {
  AnalysisReport report;
  report.ring_name = ring.name();
  report.rank = ring.rank();
  report.truncated = ring.is_truncated();
  report.sections.push_back(validation_section(ring));
  const bool valid = report.sections.front().status == SectionStatus::ok;

  auto run = [&](auto&& make, std::string name) {
    if (valid) {
      report.sections.push_back(make());
    } else {
      ReportSection s;
      s.name = std::move(name);
      s.status = SectionStatus::skipped;
      s.lines.push_back("skipped: ring failed validation");
      report.sections.push_back(std::move(s));
    }
  };
  run([&] { return invertibles_section(ring); }, "invertible_characters");
  run([&] { return chain_group_section(ring); }, "chain_group");
  run([&] { return center_check_section(ring); }, "oddfusion_pseudoreal_center");
  run([&] { return subrings_section(ring, options.limits); }, "subrings");
  run([&] { return adjoint_section(ring, options.limits); }, "adjoint_subring");
  run([&] { return automorphisms_section(ring, options.limits); }, "order_automorphisms");
  run([&] { return characters_section(ring, options.solver); }, "character_solutions");
  run([&] { return fp_dimensions_section(ring); }, "fp_dimensions");
  return report;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  os << "ring " << ring_name << " (rank " << rank << (truncated ? ", truncated" : "") << ")\n";
  for (const auto& s : sections) {
    os << "\n[" << s.name << "] " << to_string(s.status) << "\n";
    for (const auto& line : s.lines) os << "  " << line << "\n";
    for (const auto& w : s.warnings) os << "  warning: " << w << "\n";
  }
  return os.str();
}

std::string AnalysisReport::to_json() const {
  ojson root;
  root["ring"] = ring_name;
  root["rank"] = rank;
  root["truncated"] = truncated;
  ojson secs = ojson::object();
  for (const auto& s : sections) {
    ojson item;
    item["status"] = to_string(s.status);
    item["warnings"] = s.warnings;
    item["result"] = s.data;
    secs[s.name] = item;
  }
  root["sections"] = secs;
  return root.dump(2) + "\n";
}

}  // namespace fusionscope
