#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace ncv {

// Rank decisions and polynomial sums must stay exact; GMP carries them.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

/// binomial(n, k) with the combinatorial convention: 0 outside 0 <= k <= n.
inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

/// (x)_k = x(x-1)...(x-k+1); (x)_0 = 1. Exact for any integer x.
inline Int falling_factorial(long x, long k) {
  Int r(1);
  for (long i = 0; i < k; ++i) r *= Int(x - i);
  return r;
}

inline std::int64_t to_i64(const Int& v) { return static_cast<std::int64_t>(v.get_si()); }

}  // namespace ncv
