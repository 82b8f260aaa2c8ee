#pragma once

#include <cstdint>
#include <string>

#include "ncv/graph.hpp"

namespace ncv {

enum class OutputFormat { kText, kJson, kCsv };

/// Budgets and run parameters shared by the CLI and the report layer.
/// Worker count never affects report payloads, only wall time.
struct RunConfig {
  int max_n = 16;
  int max_edges = kMaxEdges;
  std::int64_t max_cycles = 10'000'000;
  std::uint64_t max_class_reps = std::uint64_t{1} << 22;
  int max_subset = 20;  // inclusion-exclusion bound: 2^|N| terms
  int workers = 1;
  OutputFormat format = OutputFormat::kText;
  std::string cache_dir;

  SizeBudget size_budget() const { return SizeBudget{max_n, max_edges}; }
};

}  // namespace ncv
