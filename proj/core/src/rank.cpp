#include "ncv/rank.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ncv/errors.hpp"
#include "ncv/signing.hpp"

namespace ncv {

int exact_rank(IntMatrix m) {
  std::size_t rank = 0;
  Int prev(1);
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    // Partial pivot by magnitude to keep the fraction-free growth tame.
    std::size_t pivot = rank;
    bool have = false;
    for (std::size_t r = rank; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      if (!have || cmp(abs(m.at(r, col)), abs(m.at(pivot, col))) > 0) {
        pivot = r;
        have = true;
      }
    }
    if (!have) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));

    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      for (std::size_t c = col + 1; c < m.cols; ++c) {
        Int value = m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
        m.at(r, c) = std::move(value);
      }
      m.at(r, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return static_cast<int>(rank);
}

bool EchelonBasis::insert(std::vector<Int> row) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivot_cols_[i];
    if (row[p] == 0) continue;
    const Int scale = row[p];
    const Int& pivot = rows_[i][p];
    for (std::size_t c = 0; c < cols_; ++c) row[c] = row[c] * pivot - rows_[i][c] * scale;
  }
  std::size_t pivot_col = cols_;
  for (std::size_t c = 0; c < cols_; ++c)
    if (row[c] != 0) {
      pivot_col = c;
      break;
    }
  if (pivot_col == cols_) return false;

  Int content = 0;
  for (const Int& v : row) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (row[pivot_col] < 0) content = -content;
  for (Int& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());

  const auto at = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pivot_col);
  const std::size_t idx = static_cast<std::size_t>(at - pivot_cols_.begin());
  pivot_cols_.insert(at, pivot_col);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
  return true;
}

NcvMatrix build_ncv_matrix(const CycleCatalog& cat, const MatchingAnalysis& analysis) {
  NcvMatrix out;
  for (int l : cat.spectrum) ((l % 2) ? out.odd_lengths : out.even_lengths).push_back(l);
  const int m = analysis.m();
  const std::size_t odd = out.odd_lengths.size();
  const std::size_t even = out.even_lengths.size();
  const std::size_t rows = 2 * (static_cast<std::size_t>(m) + 1);

  out.full = IntMatrix(rows, odd + even);
  out.U = IntMatrix(static_cast<std::size_t>(m), odd);
  out.R = IntMatrix(static_cast<std::size_t>(m), even);
  for (int l : out.odd_lengths) out.c_odd.emplace_back(cat.count(l));

  // Row layout: +G, s_1..s_m, -G, -s_1..-s_m. Negation flips odd-cycle
  // counts to c_l - c_l^- and fixes even ones.
  for (int s = 1; s <= m; ++s) {
    const std::size_t top = static_cast<std::size_t>(s);
    const std::size_t bottom = top + static_cast<std::size_t>(m) + 1;
    for (std::size_t j = 0; j < odd; ++j) {
      const int l = out.odd_lengths[j];
      Int value = p_poly(analysis, l, s);
      out.U.at(top - 1, j) = value;
      out.full.at(bottom, j) = Int(cat.count(l)) - value;
      out.full.at(top, j) = std::move(value);
    }
    for (std::size_t j = 0; j < even; ++j) {
      const int l = out.even_lengths[j];
      Int value = p_poly(analysis, l, s);
      out.R.at(top - 1, j) = value;
      out.full.at(bottom, odd + j) = value;
      out.full.at(top, odd + j) = std::move(value);
    }
  }
  for (std::size_t j = 0; j < odd; ++j)
    out.full.at(static_cast<std::size_t>(m) + 1, j) = out.c_odd[j];
  return out;
}

BlockRanks block_rank(const NcvMatrix& m) {
  BlockRanks out;
  out.full = exact_rank(m.full);

  IntMatrix u_codd(m.U.rows + 1, m.U.cols);
  for (std::size_t r = 0; r < m.U.rows; ++r)
    for (std::size_t c = 0; c < m.U.cols; ++c) u_codd.at(r, c) = m.U.at(r, c);
  for (std::size_t c = 0; c < m.U.cols; ++c) u_codd.at(m.U.rows, c) = m.c_odd[c];
  out.u_codd = exact_rank(std::move(u_codd));
  out.r = exact_rank(m.R);

  if (out.full != out.u_codd + out.r)
    throw std::logic_error("block_rank: full rank differs from the block sum");
  return out;
}

int lower_bound_main(const MatchingAnalysis& analysis) {
  std::set<int> odd_values;
  std::set<int> even_values;
  for (int l : analysis.spectrum) {
    const int mu = analysis.mu.at(l);
    if (l % 2)
      odd_values.insert(mu);
    else if (mu > 0)
      even_values.insert(mu);
  }
  return static_cast<int>(odd_values.size()) + static_cast<int>(even_values.size());
}

NuBound nu_bound(const CycleCatalog& cat, const Matching& mat) {
  NuBound out;
  const int m = mat.size;

  bool all_low_saturated = true;
  bool any_high = false;
  bool high_saturated = false;
  for (int l : cat.spectrum) {
    int mu = 0;
    for (EdgeMask cycle : cat.cycles_of_length(l))
      mu = std::max(mu, std::popcount(cycle & mat.edges));
    if (l < 2 * m) {
      if (mu != l / 2) all_low_saturated = false;
    } else {
      any_high = true;
      if (mu == m) high_saturated = true;
    }
  }
  out.hypothesis_ok = all_low_saturated && (!any_high || high_saturated);

  int odd_low = 0, even_low = 0;
  bool odd_high = false, even_high = false;
  for (int l : cat.spectrum) {
    if (l < 2 * m)
      ((l % 2) ? odd_low : even_low) += 1;
    else
      ((l % 2) ? odd_high : even_high) = true;
  }
  out.nu_odd = odd_low + (odd_high ? 1 : 0);
  out.nu_even = even_low + (even_high ? 1 : 0);
  return out;
}

namespace {

std::vector<Int> ncv_row(const CycleCatalog& cat, EdgeMask negatives) {
  std::vector<Int> row;
  row.reserve(cat.spectrum.size());
  for (int l : cat.spectrum) {
    long negative = 0;
    for (EdgeMask cycle : cat.cycles_of_length(l))
      negative += std::popcount(cycle & negatives) & 1;
    row.emplace_back(negative);
  }
  return row;
}

}  // namespace

int dim_exhaustive(const Graph& g, const CycleCatalog& cat, const RunConfig& config) {
  if (cat.graph_id != g.structural_id())
    throw GraphMismatchError("dim_exhaustive: catalog built on a different graph");
  if (cat.spectrum.empty()) return 0;
  const SwitchingClassReps stream(g, config.max_class_reps);
  const std::size_t cols = cat.spectrum.size();
  const int full = static_cast<int>(cols);

  const int workers =
      (config.workers > 1 && stream.size() >= 4096)
          ? std::min<int>(config.workers, static_cast<int>(stream.size() / 1024))
          : 1;

  if (workers <= 1) {
    EchelonBasis basis(cols);
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
      basis.insert(ncv_row(cat, stream.mask_at(i)));
      if (basis.rank() == full) return full;
    }
    return basis.rank();
  }

  // Each worker reduces its index range into a local basis; bases merge in
  // worker order, so the result never depends on scheduling.
  std::vector<EchelonBasis> bases(static_cast<std::size_t>(workers), EchelonBasis(cols));
  std::atomic<bool> saturated{false};
  const std::uint64_t chunk = (stream.size() + static_cast<std::uint64_t>(workers) - 1) /
                              static_cast<std::uint64_t>(workers);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
        const std::uint64_t hi = std::min(stream.size(), lo + chunk);
        auto& basis = bases[static_cast<std::size_t>(w)];
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (saturated.load(std::memory_order_relaxed)) return;
          basis.insert(ncv_row(cat, stream.mask_at(i)));
          if (basis.rank() == full) {
            saturated.store(true, std::memory_order_relaxed);
            return;
          }
        }
      });
    }
  }

  EchelonBasis merged(cols);
  for (const auto& basis : bases) {
    for (const auto& row : basis.rows()) {
      merged.insert(row);
      if (merged.rank() == full) return full;
    }
  }
  return merged.rank();
}

}  // namespace ncv
