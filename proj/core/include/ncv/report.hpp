#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncv/config.hpp"
#include "ncv/counting.hpp"

namespace ncv {

/// A permutable matching kind together with its counting profile.
struct KindAnalysis {
  Matching matching;
  MatchingAnalysis analysis;
};

/// All permutable m-matching kinds, analyzed and put in report order:
/// mu profile descending lexicographically, ties by representative.
std::vector<KindAnalysis> analyzed_kinds(const Graph& g, const CycleCatalog& cat,
                                         const AutomorphismGroup& autos, int m);

/// Result of one CLI command. payload is deterministic for a fixed input
/// and config (worker count must not affect it); meta carries wall time.
struct Report {
  nlohmann::json payload;
  nlohmann::json meta;
  int exit_code = 0;

  nlohmann::json full() const;
  std::string render(OutputFormat format) const;
};

struct AnalyzeOptions {
  /// "auto" (all kinds at the largest matching size that has one),
  /// "kind-K" (the K-th kind in report order), or "edges:0-1,2-3,...".
  std::string matching = "auto";
  /// Compute dim NCV even if that means failing on budget, instead of
  /// skipping with a note.
  bool force_dim = false;
};

/// Full pipeline on one graph: spectrum, cycle counts, permutable matching
/// kinds with their counting profiles and rank bounds, and (budget
/// permitting) the exhaustive dimension.
Report cmd_analyze(const std::string& graph_spec, const AnalyzeOptions& options,
                   const RunConfig& config);

/// Recompute a reference table and diff it against the stored expectation.
/// Known ids: k3 k4 k5 k6 fig1 fig2-k8 petersen prism cube.
Report cmd_reproduce(const std::string& table_id, const RunConfig& config);
const std::vector<std::string>& reproduce_ids();

/// Batch dim-vs-spectrum check over graph6 lines. Inequalities are flagged
/// (exit code 1), parse failures reported per line without stopping.
Report cmd_conjecture(std::istream& corpus, const RunConfig& config);

/// Closed-formula-vs-enumeration comparison tables for K_n ("K6") or
/// K_{p,q} ("K3,4").
Report cmd_formulas(const std::string& family_spec, const RunConfig& config);

}  // namespace ncv
