#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "ncv/graph.hpp"

namespace ncv {

/// Every simple cycle of a graph, each stored once as an edge bitmask,
/// grouped by length. Immutable and shareable once built.
struct CycleCatalog {
  std::uint64_t graph_id = 0;
  int order = 0;  // vertex count of the source graph
  /// by_length[l] lists the l-cycles sorted by bitmask value; index 0..order.
  std::vector<std::vector<EdgeMask>> by_length;
  /// Lengths l with c_l > 0, ascending.
  std::vector<int> spectrum;

  std::int64_t count(int l) const {
    if (l < 0 || l >= static_cast<int>(by_length.size())) return 0;
    return static_cast<std::int64_t>(by_length[static_cast<std::size_t>(l)].size());
  }
  const std::vector<EdgeMask>& cycles_of_length(int l) const {
    return by_length[static_cast<std::size_t>(l)];
  }
  std::int64_t total() const;
  bool empty() const { return spectrum.empty(); }
};

/// Rooted-edge DFS: paths grow only through vertices above the root, close
/// back to the root, and the direction with the smaller second vertex is
/// kept, so each cycle is emitted exactly once. Throws BudgetError when the
/// cycle count passes max_cycles.
CycleCatalog enumerate_cycles(const Graph& g, std::int64_t max_cycles = 10'000'000);

std::vector<int> spectrum(const CycleCatalog& cat);

/// On-disk catalog cache, keyed by the graph's structural id. The file
/// format is an internal versioned JSON blob, not a compatibility surface.
bool save_catalog(const std::filesystem::path& dir, const CycleCatalog& cat);
std::optional<CycleCatalog> load_catalog(const std::filesystem::path& dir, const Graph& g);

/// Cached wrapper: loads when possible, else enumerates (and saves when a
/// cache dir is given).
CycleCatalog catalog_for(const Graph& g, std::int64_t max_cycles = 10'000'000,
                         const std::string& cache_dir = {});

}  // namespace ncv
