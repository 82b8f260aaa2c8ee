#include "ncv/counting.hpp"

#include <algorithm>
#include <bit>

#include "ncv/errors.hpp"

namespace ncv {

std::int64_t g_count(const CycleCatalog& cat, EdgeMask y, int l) {
  std::int64_t count = 0;
  if (l < 0 || l >= static_cast<int>(cat.by_length.size())) return 0;
  for (EdgeMask cycle : cat.cycles_of_length(l))
    if ((cycle & y) == y) ++count;
  return count;
}

std::int64_t f_count(const CycleCatalog& cat, EdgeMask n, EdgeMask x, int l) {
  if (x & ~n) throw DomainError("f_count: X must lie within N");
  std::int64_t count = 0;
  if (l < 0 || l >= static_cast<int>(cat.by_length.size())) return 0;
  for (EdgeMask cycle : cat.cycles_of_length(l))
    if ((cycle & n) == x) ++count;
  return count;
}

std::int64_t f_count_mobius(const CycleCatalog& cat, EdgeMask n, EdgeMask x, int l) {
  if (x & ~n) throw DomainError("f_count_mobius: X must lie within N");
  const EdgeMask rest = n & ~x;
  if (std::popcount(rest) > 24)
    throw BudgetError("f_count_mobius: 2^" + std::to_string(std::popcount(rest)) +
                      " superset terms");
  Int sum = 0;
  EdgeMask s = rest;
  while (true) {
    const Int term(g_count(cat, x | s, l));
    if (std::popcount(s) & 1)
      sum -= term;
    else
      sum += term;
    if (s == 0) break;
    s = (s - 1) & rest;
  }
  return to_i64(sum);
}

NegCycleVector ncv_inclusion_exclusion(const CycleCatalog& cat, const Signing& s,
                                       int max_subset) {
  if (cat.graph_id != s.graph_id)
    throw GraphMismatchError("ncv_inclusion_exclusion: catalog and signing disagree");
  const int negs = std::popcount(s.negatives);
  if (negs > max_subset)
    throw BudgetError("inclusion-exclusion over 2^" + std::to_string(negs) +
                      " subsets exceeds the budget of 2^" + std::to_string(max_subset));

  NegCycleVector v;
  v.lengths = cat.spectrum;
  for (int l : cat.spectrum) {
    Int sum = 0;
    EdgeMask y = s.negatives;
    while (y) {  // nonempty subsets of N
      Int term(g_count(cat, y, l));
      const int size = std::popcount(y);
      for (int i = 1; i < size; ++i) term *= -2;
      sum += term;
      y = (y - 1) & s.negatives;
    }
    v.counts.push_back(to_i64(sum));
  }
  return v;
}

MatchingAnalysis analyze_matching(const Graph& g, const CycleCatalog& cat,
                                  const Matching& mat, const AutomorphismGroup& autos) {
  if (cat.graph_id != g.structural_id())
    throw GraphMismatchError("analyze_matching: catalog built on a different graph");
  if (!is_matching_mask(g, mat.edges))
    throw DomainError("analyze_matching: edge set is not a matching");
  if (!is_permutable(g, mat, autos))
    throw DomainError(
        "analyze_matching: matching is not permutable, the G table is not well defined");

  MatchingAnalysis out;
  out.matching = mat;
  out.spectrum = cat.spectrum;
  const int m = mat.size;

  std::vector<int> edges;
  EdgeMask rest = mat.edges;
  while (rest) {
    edges.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }

  // k-subsets of the matching; permutability makes g_count depend on k
  // only, which is re-verified across every subset here.
  std::vector<std::vector<EdgeMask>> subsets_by_size(static_cast<std::size_t>(m) + 1);
  for (std::uint32_t pick = 1; pick < (1u << m); ++pick) {
    EdgeMask mask = 0;
    for (int i = 0; i < m; ++i)
      if ((pick >> i) & 1) mask |= EdgeMask{1} << edges[static_cast<std::size_t>(i)];
    subsets_by_size[static_cast<std::size_t>(std::popcount(pick))].push_back(mask);
  }

  for (int l : cat.spectrum) {
    std::vector<std::int64_t> row;
    for (int k = 1; k <= m; ++k) {
      const auto& subsets = subsets_by_size[static_cast<std::size_t>(k)];
      const std::int64_t value = g_count(cat, subsets.front(), l);
      for (EdgeMask y : subsets)
        if (g_count(cat, y, l) != value)
          throw std::logic_error("analyze_matching: G_l(k) varies across k-subsets");
      row.push_back(value);
    }
    out.G[l] = std::move(row);

    int mu = 0;
    for (EdgeMask cycle : cat.cycles_of_length(l))
      mu = std::max(mu, std::popcount(cycle & mat.edges));
    out.mu[l] = mu;

    const auto& grow = out.G[l];
    int d = 0;
    for (int k = m; k >= 1; --k)
      if (grow[static_cast<std::size_t>(k - 1)] > 0) {
        d = k;
        break;
      }
    if (d > 0) {
      out.d[l] = d;
      ((l % 2) ? out.delta_odd : out.delta_even).insert(d);
      Int lead(grow[static_cast<std::size_t>(d - 1)]);
      for (int i = 1; i < d; ++i) lead *= -2;
      Rat alpha(lead, factorial(d));
      alpha.canonicalize();
      out.alpha[l] = alpha;
    }
  }
  return out;
}

Int p_poly(const MatchingAnalysis& analysis, int l, int s) {
  if (s < 0 || s > analysis.m())
    throw DomainError("p_poly: s must lie in 0..m");
  Int sum = 0;
  const auto it = analysis.G.find(l);
  if (it == analysis.G.end()) return sum;
  for (int k = 1; k <= s; ++k) {
    Int term = binomial(s, k) * Int(it->second[static_cast<std::size_t>(k - 1)]);
    for (int i = 1; i < k; ++i) term *= -2;
    sum += term;
  }
  return sum;
}

}  // namespace ncv
