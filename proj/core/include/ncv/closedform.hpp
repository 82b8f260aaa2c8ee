#pragma once

#include "ncv/bigint.hpp"

namespace ncv {

/// Number of l-cycles of K_n containing a fixed k-edge matching:
/// binom(n-2k, l-2k) (l-k-1)! 2^{k-1}. Zero when l < 2k.
/// Domain: n >= 3, 3 <= l <= n, 1 <= k <= n/2.
Int kn_G(int n, int l, int k);

/// Negative l-cycle count of K_n with s nonadjacent negative edges:
/// sum_k binom(s,k) (-4)^{k-1} binom(n-2k, l-2k) (l-k-1)!.
/// Domain: n >= 3, 3 <= l <= n, 0 <= s <= n/2.
Int kn_cminus(int n, int l, int s);

/// Number of 2l-cycles of K_{p,q} containing a fixed k-edge subset of a
/// maximum matching: (p-k)_{l-k} (q-k)_{l-k} (k-1)! binom(2l-k-1, k-1).
/// Domain: 2 <= l <= p <= q, 1 <= k <= l.
Int kpq_G(int p, int q, int l, int k);

/// Negative 2l-cycle count of K_{p,q} with an s-edge negative submatching:
/// sum_k (s)_k ((-2)^{k-1}/k) (p-k)_{l-k} (q-k)_{l-k} binom(2l-k-1, k-1).
/// Domain: 2 <= l <= p <= q, 0 <= s <= p.
Int kpq_cminus(int p, int q, int l, int s);

}  // namespace ncv
