#include "ncv/closedform.hpp"

#include <string>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

Int int_pow(long base, int exponent) {
  Int r(1);
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

Int kn_G(int n, int l, int k) {
  require(n >= 3, "kn_G: n must be at least 3");
  require(l >= 3 && l <= n, "kn_G: l must lie in 3..n");
  require(k >= 1 && 2 * k <= n, "kn_G: k must lie in 1..n/2");
  if (l < 2 * k) return Int(0);
  Int r = binomial(n - 2 * k, l - 2 * k) * factorial(l - k - 1);
  for (int i = 1; i < k; ++i) r *= 2;
  return r;
}

Int kn_cminus(int n, int l, int s) {
  require(n >= 3, "kn_cminus: n must be at least 3");
  require(l >= 3 && l <= n, "kn_cminus: l must lie in 3..n");
  require(s >= 0 && 2 * s <= n, "kn_cminus: s must lie in 0..n/2");
  Int sum(0);
  for (int k = 1; k <= s && 2 * k <= l; ++k) {
    Int term = binomial(s, k) * binomial(n - 2 * k, l - 2 * k) * factorial(l - k - 1);
    sum += term * int_pow(-4, k - 1);
  }
  return sum;
}

Int kpq_G(int p, int q, int l, int k) {
  require(p >= 2 && p <= q, "kpq_G: need 2 <= p <= q");
  require(l >= 2 && l <= p, "kpq_G: l must lie in 2..p");
  require(k >= 1 && k <= l, "kpq_G: k must lie in 1..l");
  return falling_factorial(p - k, l - k) * falling_factorial(q - k, l - k) *
         factorial(k - 1) * binomial(2 * l - k - 1, k - 1);
}

Int kpq_cminus(int p, int q, int l, int s) {
  require(p >= 2 && p <= q, "kpq_cminus: need 2 <= p <= q");
  require(l >= 2 && l <= p, "kpq_cminus: l must lie in 2..p");
  require(s >= 0 && s <= p, "kpq_cminus: s must lie in 0..p");
  // (s)_k (-2)^{k-1} / k == binom(s,k) (k-1)! (-2)^{k-1}, kept in integers.
  Int sum(0);
  for (int k = 1; k <= s && k <= l; ++k) {
    Int term = binomial(s, k) * factorial(k - 1) * int_pow(-2, k - 1) *
               falling_factorial(p - k, l - k) * falling_factorial(q - k, l - k) *
               binomial(2 * l - k - 1, k - 1);
    sum += term;
  }
  return sum;
}

}  // namespace ncv
