#include "fusionscope/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "fusionscope/analysis.hpp"
#include "fusionscope/catalog.hpp"
#include "fusionscope/errors.hpp"
#include "fusionscope/ring_document.hpp"
#include "fusionscope/su2.hpp"

namespace fusionscope {

namespace {

void print_section(std::ostream& out, const ReportSection& s) {
  for (const auto& line : s.lines) out << line << "\n";
  for (const auto& w : s.warnings) out << "warning: " << w << "\n";
}

int section_exit(const ReportSection& s) {
  switch (s.status) {
    case SectionStatus::ok:
      return kExitOk;
    case SectionStatus::resource_limit:
      return kExitResourceLimit;
    default:
      return kExitNegative;
  }
}

std::uint64_t parse_seed(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("FUSIONSCOPE_SEED is not an unsigned integer: '" + std::string(text) + "'");
  return v;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FUSIONSCOPE_SEED")) return parse_seed(env);
  return SolverOptions::kDefaultSeed;
}

/// Validation failures stop the command: prints the witnesses and returns
/// false.
bool require_valid(const FusionRing& ring, std::ostream& out) {
  auto s = validation_section(ring);
  if (s.status == SectionStatus::ok) return true;
  out << ring.name() << ": invalid fusion ring\n";
  print_section(out, s);
  return false;
}

const CLI::App* deepest_parsed(const CLI::App& app) {
  for (const CLI::App* sub : app.get_subcommands())
    if (sub->parsed()) return deepest_parsed(*sub);
  return &app;
}

struct Invocation {
  std::string file;
  std::string file_b;
  bool json = false;
  std::optional<std::uint64_t> seed;
  double tol = SolverOptions{}.tol;
  int max_rank = SearchLimits{}.max_rank;
  bool integer_solutions = false;
  std::int64_t bound = IntegerSearchOptions{}.bound;
  std::string jmax;
  std::string emit_ring;
  std::string example;
};

int cmd_validate(const Invocation& inv, std::ostream& out) {
  const FusionRing ring = read_ring_file(inv.file);
  if (!require_valid(ring, out)) return kExitNegative;
  out << ring.name() << ": valid fusion ring of rank " << ring.rank() << "\n";
  print_section(out, validation_section(ring));
  return kExitOk;
}

int cmd_analyze(const Invocation& inv, std::ostream& out) {
  const FusionRing ring = read_ring_file(inv.file);
  AnalysisOptions options;
  options.solver.seed = inv.seed.value_or(default_seed());
  options.solver.tol = inv.tol;
  const AnalysisReport report = analyze(ring, options);
  out << (inv.json ? report.to_json() : report.to_text());
  const auto& validation = report.sections.front();
  if (validation.status != SectionStatus::ok) return kExitNegative;
  for (const auto& s : report.sections)
    if (s.status == SectionStatus::resource_limit) return kExitResourceLimit;
  return kExitOk;
}

int cmd_chain_group(const Invocation& inv, std::ostream& out) {
  const FusionRing ring = read_ring_file(inv.file);
  if (!require_valid(ring, out)) return kExitNegative;
  const auto s = chain_group_section(ring);
  print_section(out, s);
  return section_exit(s);
}

int cmd_subrings(const Invocation& inv, std::ostream& out) {
  const FusionRing ring = read_ring_file(inv.file);
  if (!require_valid(ring, out)) return kExitNegative;
  const auto s = subrings_section(ring, SearchLimits{inv.max_rank});
  print_section(out, s);
  return section_exit(s);
}

int cmd_char_table(const Invocation& inv, std::ostream& out) {
  const FusionRing ring = read_ring_file(inv.file);
  if (!require_valid(ring, out)) return kExitNegative;
  SolverOptions options;
  options.seed = inv.seed.value_or(default_seed());
  options.tol = inv.tol;
  const auto s = inv.integer_solutions ? integer_solutions_section(ring, IntegerSearchOptions{inv.bound})
                                       : characters_section(ring, options);
  print_section(out, s);
  return section_exit(s);
}

int cmd_isomorphic(const Invocation& inv, std::ostream& out) {
  const FusionRing a = read_ring_file(inv.file);
  const FusionRing b = read_ring_file(inv.file_b);
  if (!require_valid(a, out) || !require_valid(b, out)) return kExitNegative;
  const auto iso = find_order_isomorphism(a, b);
  if (!iso) {
    out << "no order isomorphism " << a.name() << " -> " << b.name() << "\n";
    return kExitNegative;
  }
  out << "order isomorphism " << a.name() << " -> " << b.name() << "\n";
  for (Index p = 0; p < a.rank(); ++p) out << "  " << a.label(p) << " -> " << b.label(iso->perm[p]) << "\n";
  return kExitOk;
}

int cmd_su2_derive(const Invocation& inv, std::ostream& out) {
  const su2::SpinIndex jmax = su2::SpinIndex::parse(inv.jmax);
  for (const auto& step : su2::derive_half_tensor(jmax.twice_j)) {
    out << "D_1/2 (x) D_" << step.k.to_string() << " =";
    bool first = true;
    for (const auto& [j, m] : step.decomposition) {
      out << (first ? " " : " (+) ") << (m == 1 ? "" : std::to_string(m) + " ") << "D_" << j.to_string();
      first = false;
    }
    out << "  (" << step.candidates << " candidate)\n";
  }
  if (!inv.emit_ring.empty()) {
    const auto text = serialize_ring_document(from_ring(su2::export_truncated_ring(jmax.twice_j)));
    std::ofstream file(inv.emit_ring, std::ios::binary);
    if (!file || !(file << text)) throw UsageError("cannot write " + inv.emit_ring);
    out << "wrote " << su2::truncated_ring_name(jmax.twice_j) << " to " << inv.emit_ring << "\n";
  }
  return kExitOk;
}

int cmd_examples_list(std::ostream& out) {
  for (const auto& doc : catalog()) out << doc.name << "\n";
  return kExitOk;
}

int cmd_examples_emit(const Invocation& inv, std::ostream& out) {
  const auto doc = find_catalog_entry(inv.example);
  if (!doc) throw UsageError("no catalog entry named '" + inv.example + "'");
  out << serialize_ring_document(*doc);
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recover group structure from fusion rules", "fusionscope"};
  app.require_subcommand(1);
  Invocation inv;

  auto* validate_cmd = app.add_subcommand("validate", "Check the fusion ring axioms");
  validate_cmd->add_option("file", inv.file, "ring document")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
  analyze_cmd->add_option("file", inv.file, "ring document")->required();
  analyze_cmd->add_flag("--json", inv.json, "emit JSON");
  analyze_cmd->add_option("--seed", inv.seed, "solver seed (default: FUSIONSCOPE_SEED or built-in)");
  analyze_cmd->add_option("--tol", inv.tol, "solver residual tolerance")->check(CLI::PositiveNumber);

  auto* chain_cmd = app.add_subcommand("chain-group", "Chain group (dual of the center)");
  chain_cmd->add_option("file", inv.file, "ring document")->required();

  auto* subrings_cmd = app.add_subcommand("subrings", "Lattice of representation subrings");
  subrings_cmd->add_option("file", inv.file, "ring document")->required();
  subrings_cmd->add_option("--max-rank", inv.max_rank, "largest rank searched")->check(CLI::PositiveNumber);

  auto* char_cmd = app.add_subcommand("char-table", "Solutions of the character system");
  char_cmd->add_option("file", inv.file, "ring document")->required();
  auto* integer_flag = char_cmd->add_flag("--integer-solutions", inv.integer_solutions,
                                          "positive integer solutions instead");
  char_cmd->add_option("--bound", inv.bound, "largest entry of an integer solution")
      ->check(CLI::PositiveNumber)
      ->needs(integer_flag);

  auto* iso_cmd = app.add_subcommand("isomorphic", "Search for an order isomorphism");
  iso_cmd->add_option("fileA", inv.file, "first ring document")->required();
  iso_cmd->add_option("fileB", inv.file_b, "second ring document")->required();

  auto* su2_cmd = app.add_subcommand("su2", "SU(2) Clebsch-Gordan series from dimension data");
  su2_cmd->require_subcommand(1);
  auto* derive_cmd = su2_cmd->add_subcommand("derive", "Derive D_1/2 (x) D_k up to jmax");
  derive_cmd->add_option("--jmax", inv.jmax, "largest spin, e.g. 5 or 5/2")->required();
  derive_cmd->add_option("--emit-ring", inv.emit_ring, "write the truncated ring to this file");

  auto* examples_cmd = app.add_subcommand("examples", "Built-in example rings");
  examples_cmd->require_subcommand(1);
  auto* list_cmd = examples_cmd->add_subcommand("list", "Print catalog names");
  auto* emit_cmd = examples_cmd->add_subcommand("emit", "Print a catalog document");
  emit_cmd->add_option("name", inv.example, "catalog name")->required();

  std::vector<std::string> storage{"fusionscope"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << deepest_parsed(app)->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest_parsed(app)->help();
    return kExitInputError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(inv, out);
    if (analyze_cmd->parsed()) return cmd_analyze(inv, out);
    if (chain_cmd->parsed()) return cmd_chain_group(inv, out);
    if (subrings_cmd->parsed()) return cmd_subrings(inv, out);
    if (char_cmd->parsed()) return cmd_char_table(inv, out);
    if (iso_cmd->parsed()) return cmd_isomorphic(inv, out);
    if (derive_cmd->parsed()) return cmd_su2_derive(inv, out);
    if (list_cmd->parsed()) return cmd_examples_list(out);
    if (emit_cmd->parsed()) return cmd_examples_emit(inv, out);
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  }
  err << app.help();
  return kExitInputError;
}

}  // namespace fusionscope
