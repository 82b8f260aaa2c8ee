#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncv/bigint.hpp"
#include "ncv/config.hpp"
#include "ncv/counting.hpp"

namespace ncv {

/// Dense matrix of exact integers.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Rank over the rationals via fraction-free Bareiss elimination with
/// partial pivoting by magnitude.
int exact_rank(IntMatrix m);

/// Incremental row-echelon basis over exact integers (rows normalized by
/// content gcd). Used to stream negative cycle vectors without storing the
/// whole matrix.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}
  /// Reduces the row against the basis; inserts the remainder when nonzero.
  /// Returns true when the rank grew.
  bool insert(std::vector<Int> row);
  int rank() const { return static_cast<int>(rows_.size()); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::vector<Int>>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<std::vector<Int>> rows_;   // ascending pivot columns
  std::vector<std::size_t> pivot_cols_;
};

/// The matrix of negative cycle vectors generated by a permutable matching:
/// rows [+G, s_1..s_m, -G, -s_1..-s_m], columns the spectrum lengths split
/// odd-then-even. U and R are the odd/even column blocks of the unbalanced
/// rows s_1..s_m; c_odd is the odd-cycle count row (the -G row).
struct NcvMatrix {
  std::vector<int> odd_lengths;
  std::vector<int> even_lengths;
  IntMatrix full;             // 2(m+1) x (odd+even)
  IntMatrix U;                // m x odd
  IntMatrix R;                // m x even
  std::vector<Int> c_odd;     // odd cycle counts
};

/// Rows populated through p_poly and the negation parity
/// (c_l^-(-s) = c_l - c_l^-(s) for odd l, unchanged for even l).
NcvMatrix build_ncv_matrix(const CycleCatalog& cat, const MatchingAnalysis& analysis);

struct BlockRanks {
  int full = 0;
  int u_codd = 0;  // rank of U stacked on c_odd
  int r = 0;
};

/// Computes the three ranks and checks full == u_codd + r (the block
/// reduction identity); throws std::logic_error if violated.
BlockRanks block_rank(const NcvMatrix& m);

/// |{mu(l) : odd l in Spec}| + |{mu(l) > 0 : even l in Spec}|, the general
/// lower bound on dim NCV.
int lower_bound_main(const MatchingAnalysis& analysis);

/// The omnipresence-based bound. hypothesis_ok reports whether the catalog
/// realizes |C_l ∩ M| = min(m, floor(l/2)) for every l < 2m and, when any
/// length >= 2m exists, |C_l ∩ M| = m for at least one of them; the bound
/// is only meaningful when it holds.
struct NuBound {
  bool hypothesis_ok = false;
  int nu_odd = 0;
  int nu_even = 0;
  int value() const { return nu_odd + nu_even; }
};

NuBound nu_bound(const CycleCatalog& cat, const Matching& mat);

/// dim NCV: exact rank of the vectors of all switching-class
/// representatives, streamed with early exit at |Spec|. Worker counts only
/// change wall time, never the result.
int dim_exhaustive(const Graph& g, const CycleCatalog& cat, const RunConfig& config = {});

}  // namespace ncv
