#include "ncv/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "ncv/errors.hpp"

namespace ncv {

std::int64_t CycleCatalog::total() const {
  std::int64_t t = 0;
  for (const auto& bucket : by_length) t += static_cast<std::int64_t>(bucket.size());
  return t;
}

namespace {

struct CycleDfs {
  const Graph& g;
  std::int64_t max_cycles;
  std::int64_t found = 0;
  int root = 0;
  int second = -1;
  VertexMask visited = 0;
  std::vector<int> path;
  std::vector<std::vector<EdgeMask>>* out;

  void run(int current, EdgeMask edges_so_far) {
    VertexMask candidates = g.neighbors(current);
    // Close back to the root once the path has at least three vertices; keep
    // the direction whose second vertex is below the last one so each cycle
    // comes out once.
    if ((candidates >> root) & 1) {
      if (path.size() >= 3 && second < current) {
        const EdgeMask cycle =
            edges_so_far | (EdgeMask{1} << g.edge_id(current, root));
        if (++found > max_cycles)
          throw BudgetError("cycle enumeration exceeded the cap of " +
                            std::to_string(max_cycles));
        (*out)[path.size()].push_back(cycle);
      }
    }
    candidates &= ~visited;
    candidates &= ~((VertexMask{2} << root) - 1);  // only vertices above the root
    while (candidates) {
      const int next = std::countr_zero(candidates);
      candidates &= candidates - 1;
      visited |= VertexMask{1} << next;
      path.push_back(next);
      if (path.size() == 2) second = next;
      run(next, edges_so_far | (EdgeMask{1} << g.edge_id(current, next)));
      path.pop_back();
      visited &= ~(VertexMask{1} << next);
    }
  }
};

}  // namespace

CycleCatalog enumerate_cycles(const Graph& g, std::int64_t max_cycles) {
  CycleCatalog cat;
  cat.graph_id = g.structural_id();
  cat.order = g.vertex_count();
  cat.by_length.assign(static_cast<std::size_t>(g.vertex_count()) + 1, {});

  CycleDfs dfs{g, max_cycles};
  dfs.out = &cat.by_length;
  for (int r = 0; r + 2 < g.vertex_count(); ++r) {
    dfs.root = r;
    dfs.visited = VertexMask{1} << r;
    dfs.path.assign(1, r);
    dfs.second = -1;
    dfs.run(r, 0);
  }

  for (auto& bucket : cat.by_length) std::sort(bucket.begin(), bucket.end());
  for (int l = 0; l < static_cast<int>(cat.by_length.size()); ++l)
    if (!cat.by_length[static_cast<std::size_t>(l)].empty()) cat.spectrum.push_back(l);
  return cat;
}

std::vector<int> spectrum(const CycleCatalog& cat) { return cat.spectrum; }

namespace {

constexpr int kCacheVersion = 1;

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint64_t id) {
  char name[32];
  std::snprintf(name, sizeof name, "catalog-%016llx.json",
                static_cast<unsigned long long>(id));
  return dir / name;
}

}  // namespace

bool save_catalog(const std::filesystem::path& dir, const CycleCatalog& cat) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["graph_id"] = cat.graph_id;
  j["order"] = cat.order;
  auto& lengths = j["cycles"] = nlohmann::json::object();
  for (int l : cat.spectrum) {
    auto& arr = lengths[std::to_string(l)] = nlohmann::json::array();
    for (EdgeMask m : cat.cycles_of_length(l)) arr.push_back(m);
  }
  std::ofstream out(cache_file(dir, cat.graph_id));
  if (!out) return false;
  out << j.dump();
  return bool(out);
}

std::optional<CycleCatalog> load_catalog(const std::filesystem::path& dir, const Graph& g) {
  std::ifstream in(cache_file(dir, g.structural_id()));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("version").get<int>() != kCacheVersion) return std::nullopt;
    if (j.at("graph_id").get<std::uint64_t>() != g.structural_id()) return std::nullopt;
    CycleCatalog cat;
    cat.graph_id = g.structural_id();
    cat.order = j.at("order").get<int>();
    if (cat.order != g.vertex_count()) return std::nullopt;
    cat.by_length.assign(static_cast<std::size_t>(cat.order) + 1, {});
    for (const auto& [key, arr] : j.at("cycles").items()) {
      const int l = std::stoi(key);
      if (l < 3 || l > cat.order) return std::nullopt;
      for (const auto& v : arr)
        cat.by_length[static_cast<std::size_t>(l)].push_back(v.get<EdgeMask>());
    }
    for (int l = 0; l < static_cast<int>(cat.by_length.size()); ++l)
      if (!cat.by_length[static_cast<std::size_t>(l)].empty()) cat.spectrum.push_back(l);
    return cat;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

CycleCatalog catalog_for(const Graph& g, std::int64_t max_cycles,
                         const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    if (auto cached = load_catalog(cache_dir, g)) return std::move(*cached);
  }
  CycleCatalog cat = enumerate_cycles(g, max_cycles);
  if (!cache_dir.empty()) save_catalog(cache_dir, cat);
  return cat;
}

}  // namespace ncv
