#ifndef BRACEFORGE_FP_HPP
#define BRACEFORGE_FP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "braceforge/errors.hpp"

// Exact linear algebra over F_p for small primes. The solver keeps pivot rows
// in reduced echelon form, so feeding a sparse row costs one dense subtraction
// per nonzero pivot column of the row; dependent rows never cascade. All
// output is deterministic in the row order: free variables are pinned to 0,
// and the first inconsistent row (with a dual certificate reproducing the
// contradiction from the original rows) is reported.

namespace braceforge::fp {

using Col = std::uint32_t;
using Val = std::uint8_t;

struct SparseRow {
  std::vector<std::pair<Col, Val>> entries; // distinct columns, nonzero values
};

// combination sum_i coeff_i * row_i that reduces to zero coefficients with a
// nonzero right-hand side (the residual)
struct Certificate {
  std::vector<std::pair<std::uint32_t, Val>> rows; // original row index -> coefficient
  std::vector<Val> residual;                       // length nrhs, not all zero
};

class RowReducer {
public:
  RowReducer(unsigned prime, Col ncols, std::uint32_t nrhs);

  // Feeds the next row (paired with nrhs right-hand-side values). Returns
  // false exactly when the row exposes an inconsistency.
  bool add_row(const SparseRow& row, const Val* rhs);

  std::uint32_t rows_seen() const { return rows_seen_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(pivot_cols_.size()); }
  std::uint32_t inconsistent_row() const { return bad_row_; }
  const std::vector<Val>& residual() const { return residual_; }

  // Solution with free variables = 0; column-major: solution()[c*nrhs + t].
  std::vector<Val> solution() const;

  // Replays elimination over just the pivot-source rows plus the failing row,
  // tracking provenance; rows are fetched by original index.
  template <class Fetch>
  Certificate certificate(Fetch&& fetch) const;

  // original indices of the rows that became pivots, in creation order
  const std::vector<std::uint32_t>& pivot_sources() const { return pivot_sources_; }

private:
  unsigned p_;
  Col ncols_;
  std::uint32_t nrhs_;
  std::size_t width_;
  std::vector<std::vector<Val>> pivot_rows_;
  std::vector<std::int32_t> pivot_of_col_; // -1 when free
  std::vector<Col> pivot_cols_;
  std::vector<std::uint32_t> pivot_sources_;
  std::uint32_t rows_seen_ = 0;
  std::uint32_t bad_row_ = 0;
  std::vector<Val> residual_;
  std::vector<Val> inv_;  // multiplicative inverses mod p
  std::vector<Val> axpy_; // (a + (p-m) b) mod p, indexed [m][a][b]

  void load(const SparseRow& row, const Val* rhs, std::vector<Val>& buf) const;
  // buf -= buf[col] * pivot; returns the multiplier used
  Val eliminate(std::vector<Val>& buf, const std::vector<Val>& pivot, Col col) const;
  static Col first_nonzero(const Val* buf, Col limit);
};

struct LinearSolveResult {
  bool consistent;
  std::vector<Val> x;          // length ncols when consistent
  std::uint32_t bad_row = 0;   // first inconsistent row otherwise
  Certificate certificate;     // dual witness when inconsistent
};

// Row-reduced echelon solve of A x = b; returns any solution (free variables
// zero) or a certified inconsistency.
LinearSolveResult solve_linear_fp(unsigned prime, Col ncols, const std::vector<SparseRow>& rows,
                                  const std::vector<Val>& b);

// checks that a certificate really contradicts the system
bool verify_certificate(unsigned prime, Col ncols, const std::vector<SparseRow>& rows,
                        const std::vector<Val>& b, std::uint32_t nrhs, const Certificate& cert);

// ---- template implementation --------------------------------------------

template <class Fetch>
Certificate RowReducer::certificate(Fetch&& fetch) const {
  // rebuild the reduced basis from only the rows that mattered
  RowReducer replay(p_, ncols_, nrhs_);
  using Combo = std::vector<std::pair<std::uint32_t, Val>>;
  std::vector<Combo> combos; // per pivot row of the replay

  auto axpy = [&](Combo& acc, Val m, const Combo& other) {
    if (!m) return;
    Combo merged;
    merged.reserve(acc.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < acc.size() || j < other.size()) {
      if (j == other.size() || (i < acc.size() && acc[i].first < other[j].first)) {
        merged.push_back(acc[i++]);
      } else if (i == acc.size() || other[j].first < acc[i].first) {
        const Val v = static_cast<Val>((m * other[j].second) % p_);
        if (v) merged.emplace_back(other[j].first, v);
        ++j;
      } else {
        const Val v = static_cast<Val>((acc[i].second + m * other[j].second) % p_);
        if (v) merged.emplace_back(acc[i].first, v);
        ++i, ++j;
      }
    }
    acc = std::move(merged);
  };

  std::vector<std::uint32_t> order = pivot_sources_;
  order.push_back(bad_row_);
  std::vector<Val> buf(width_);
  Certificate cert;
  for (std::uint32_t src : order) {
    SparseRow row;
    std::vector<Val> rhs(nrhs_, 0);
    fetch(src, row, rhs);
    replay.load(row, rhs.data(), buf);
    Combo combo{{src, Val(1)}};
    for (const auto& [c, v] : row.entries) {
      (void)v;
      const std::int32_t pr = replay.pivot_of_col_[c];
      if (pr >= 0 && buf[c]) {
        const Val m = replay.eliminate(buf, replay.pivot_rows_[pr], c);
        // combo += (p - m) * pivot combo  (eliminate subtracts m * pivot)
        axpy(combo, static_cast<Val>((p_ - m) % p_), combos[pr]);
      }
    }
    Col lead = ncols_;
    for (Col c = 0; c < ncols_; ++c)
      if (buf[c]) {
        lead = c;
        break;
      }
    if (lead == ncols_) {
      bool nonzero = false;
      for (std::uint32_t t = 0; t < nrhs_; ++t) nonzero = nonzero || buf[ncols_ + t];
      if (nonzero && src == bad_row_) {
        cert.rows = std::move(combo);
        cert.residual.assign(buf.begin() + ncols_, buf.end());
        return cert;
      }
      continue;
    }
    // normalize and register, mirroring add_row
    const Val m = replay.inv_[buf[lead]];
    if (m != 1) {
      for (std::size_t i = 0; i < replay.width_; ++i)
        buf[i] = static_cast<Val>((buf[i] * m) % p_);
      Combo scaled;
      for (auto& [r, v] : combo) {
        const Val nv = static_cast<Val>((v * m) % p_);
        if (nv) scaled.emplace_back(r, nv);
      }
      combo = std::move(scaled);
    }
    for (std::size_t pr = 0; pr < replay.pivot_rows_.size(); ++pr) {
      auto& existing = replay.pivot_rows_[pr];
      if (existing[lead]) {
        const Val mm = existing[lead];
        for (std::size_t i = 0; i < replay.width_; ++i)
          existing[i] = static_cast<Val>((existing[i] + (p_ - mm) * buf[i]) % p_);
        axpy(combos[pr], static_cast<Val>((p_ - mm) % p_), combo);
      }
    }
    replay.pivot_of_col_[lead] = static_cast<std::int32_t>(replay.pivot_rows_.size());
    replay.pivot_cols_.push_back(lead);
    replay.pivot_rows_.push_back(buf);
    combos.push_back(std::move(combo));
  }
  return cert; // unreachable when called after a genuine failure
}

} // namespace braceforge::fp

#endif
