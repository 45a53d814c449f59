#include "braceforge/fp.hpp"

#include <cstring>

namespace braceforge::fp {

namespace {

bool prime_ok(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace

RowReducer::RowReducer(unsigned prime, Col ncols, std::uint32_t nrhs)
    : p_(prime), ncols_(ncols), nrhs_(nrhs), width_(std::size_t(ncols) + nrhs) {
  if (!prime_ok(prime)) fail(Errc::not_prime, std::to_string(prime) + " is not prime");
  if (prime > 251) fail(Errc::too_large, "prime too large for byte arithmetic");
  pivot_of_col_.assign(ncols_, -1);
  inv_.assign(p_, 0);
  for (unsigned a = 1; a < p_; ++a)
    for (unsigned b = 1; b < p_; ++b)
      if ((a * b) % p_ == 1) inv_[a] = static_cast<Val>(b);
  // axpy_[m][a*p+b] = (a + (p-m)*b) mod p: one table row per multiplier keeps
  // the inner subtraction loop free of multiply/mod
  axpy_.assign(std::size_t(p_) * p_ * p_, 0);
  for (unsigned m = 0; m < p_; ++m)
    for (unsigned a = 0; a < p_; ++a)
      for (unsigned b = 0; b < p_; ++b)
        axpy_[(std::size_t(m) * p_ + a) * p_ + b] =
            static_cast<Val>((a + (p_ - m) * b) % p_);
}

fp::Col RowReducer::first_nonzero(const Val* buf, Col limit) {
  // word-wide scan; the tail is handled byte by byte
  Col c = 0;
  while (c + 8 <= limit) {
    std::uint64_t w;
    std::memcpy(&w, buf + c, 8);
    if (w != 0) break;
    c += 8;
  }
  for (; c < limit; ++c)
    if (buf[c]) return c;
  return limit;
}

void RowReducer::load(const SparseRow& row, const Val* rhs, std::vector<Val>& buf) const {
  buf.assign(width_, 0);
  for (const auto& [c, v] : row.entries) {
    if (c >= ncols_) fail(Errc::dimension_mismatch, "column index out of range");
    buf[c] = static_cast<Val>((buf[c] + v) % p_);
  }
  for (std::uint32_t t = 0; t < nrhs_; ++t) buf[ncols_ + t] = static_cast<Val>(rhs[t] % p_);
}

Val RowReducer::eliminate(std::vector<Val>& buf, const std::vector<Val>& pivot, Col col) const {
  const Val m = buf[col];
  const Val* t = axpy_.data() + std::size_t(m) * p_ * p_;
  for (std::size_t i = 0; i < width_; ++i)
    buf[i] = t[std::size_t(buf[i]) * p_ + pivot[i]];
  (void)col;
  return m;
}

bool RowReducer::add_row(const SparseRow& row, const Val* rhs) {
  const std::uint32_t src = rows_seen_++;
  std::vector<Val> buf;
  load(row, rhs, buf);

  // the only columns that can hold pivots are the row's own nonzero columns:
  // pivot rows are fully reduced, so their tails live on free columns
  for (const auto& [c, v] : row.entries) {
    (void)v;
    const std::int32_t pr = pivot_of_col_[c];
    if (pr >= 0 && buf[c]) eliminate(buf, pivot_rows_[pr], c);
  }

  const Col lead = first_nonzero(buf.data(), ncols_);
  if (lead == ncols_) {
    for (std::uint32_t t = 0; t < nrhs_; ++t) {
      if (buf[ncols_ + t]) {
        bad_row_ = src;
        residual_.assign(buf.begin() + ncols_, buf.end());
        return false;
      }
    }
    return true; // dependent
  }

  const Val m = inv_[buf[lead]];
  if (m != 1)
    for (std::size_t i = 0; i < width_; ++i) buf[i] = static_cast<Val>((buf[i] * m) % p_);

  for (auto& existing : pivot_rows_) {
    const Val mm = existing[lead];
    if (mm) {
      const Val* t = axpy_.data() + std::size_t(mm) * p_ * p_;
      for (std::size_t i = 0; i < width_; ++i)
        existing[i] = t[std::size_t(existing[i]) * p_ + buf[i]];
    }
  }
  pivot_of_col_[lead] = static_cast<std::int32_t>(pivot_rows_.size());
  pivot_cols_.push_back(lead);
  pivot_sources_.push_back(src);
  pivot_rows_.push_back(std::move(buf));
  return true;
}

std::vector<Val> RowReducer::solution() const {
  std::vector<Val> x(std::size_t(ncols_) * nrhs_, 0);
  for (std::size_t r = 0; r < pivot_rows_.size(); ++r) {
    const Col c = pivot_cols_[r];
    for (std::uint32_t t = 0; t < nrhs_; ++t)
      x[std::size_t(c) * nrhs_ + t] = pivot_rows_[r][ncols_ + t];
  }
  return x;
}

LinearSolveResult solve_linear_fp(unsigned prime, Col ncols, const std::vector<SparseRow>& rows,
                                  const std::vector<Val>& b) {
  if (b.size() != rows.size()) fail(Errc::dimension_mismatch, "rhs length != row count");
  RowReducer red(prime, ncols, 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!red.add_row(rows[r], &b[r])) {
      LinearSolveResult out;
      out.consistent = false;
      out.bad_row = red.inconsistent_row();
      out.certificate = red.certificate([&](std::uint32_t src, SparseRow& row, std::vector<Val>& rhs) {
        row = rows[src];
        rhs[0] = b[src];
      });
      return out;
    }
  }
  LinearSolveResult out;
  out.consistent = true;
  out.x = red.solution();
  return out;
}

bool verify_certificate(unsigned prime, Col ncols, const std::vector<SparseRow>& rows,
                        const std::vector<Val>& b, std::uint32_t nrhs, const Certificate& cert) {
  std::vector<unsigned> acc(ncols, 0);
  std::vector<unsigned> rhs(nrhs, 0);
  for (const auto& [ri, coeff] : cert.rows) {
    if (ri >= rows.size()) return false;
    for (const auto& [c, v] : rows[ri].entries) acc[c] = (acc[c] + coeff * v) % prime;
    for (std::uint32_t t = 0; t < nrhs; ++t)
      rhs[t] = (rhs[t] + coeff * b[std::size_t(ri) * nrhs + t]) % prime;
  }
  for (unsigned v : acc)
    if (v) return false;
  bool nonzero = false;
  for (std::uint32_t t = 0; t < nrhs; ++t) {
    if (rhs[t] % prime != cert.residual[t] % prime) return false;
    nonzero = nonzero || rhs[t] % prime;
  }
  return nonzero;
}

} // namespace braceforge::fp
