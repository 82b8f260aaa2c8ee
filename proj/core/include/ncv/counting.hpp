#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ncv/bigint.hpp"
#include "ncv/cycles.hpp"
#include "ncv/matching.hpp"
#include "ncv/signing.hpp"

namespace ncv {

/// g_l(Y): number of l-cycles containing the edge set Y. Zero off-spectrum.
std::int64_t g_count(const CycleCatalog& cat, EdgeMask y, int l);

/// f_l(X) relative to N: number of l-cycles whose intersection with N is
/// exactly X. Requires X within N.
std::int64_t f_count(const CycleCatalog& cat, EdgeMask n, EdgeMask x, int l);

/// Same value through the alternating-sum route over supersets of X inside
/// N; kept separate so the two routes check each other.
std::int64_t f_count_mobius(const CycleCatalog& cat, EdgeMask n, EdgeMask x, int l);

/// c_l^- via the subset expansion sum_{Y != 0, Y within N} (-2)^{|Y|-1} g_l(Y).
/// Throws BudgetError when |N| > max_subset (the sum has 2^|N| terms).
NegCycleVector ncv_inclusion_exclusion(const CycleCatalog& cat, const Signing& s,
                                       int max_subset = 20);

/// Counting profile of a permutable matching M_m. G[l][k-1] is the number
/// of l-cycles containing a fixed k-edge subset of M_m (independent of the
/// choice, which analyze_matching verifies). d is partial: a length with no
/// cycle meeting M_m has mu = 0 and no d entry.
struct MatchingAnalysis {
  Matching matching;
  std::vector<int> spectrum;
  std::map<int, std::vector<std::int64_t>> G;  // l -> [G_l(1), ..., G_l(m)]
  std::map<int, int> d;                        // degree of p_l, where defined
  std::map<int, int> mu;                       // max |C_l ∩ M_m|, total
  std::set<int> delta_odd;                     // defined degrees, odd lengths
  std::set<int> delta_even;                    // defined degrees, even lengths
  std::map<int, Rat> alpha;                    // leading coefficient of p_l

  int m() const { return matching.size; }
};

/// Throws DomainError when the matching is not permutable (the G table
/// would not be well defined).
MatchingAnalysis analyze_matching(const Graph& g, const CycleCatalog& cat,
                                  const Matching& mat, const AutomorphismGroup& autos);

/// p_l(s) = sum_{k=1..s} (-2)^{k-1} binom(s,k) G_l(k): the number of
/// negative l-cycles when an s-edge submatching of M_m is negative.
/// Requires 0 <= s <= m.
Int p_poly(const MatchingAnalysis& analysis, int l, int s);

}  // namespace ncv
