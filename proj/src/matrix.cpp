#include "boolrep/matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "boolrep/errors.hpp"

namespace boolrep {

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels,
                                                          const char* what) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!pos.emplace(labels[i], i).second)
      throw Error(ErrorCode::InvalidArgument, std::string("duplicate ") + what + " label '" + labels[i] + "'");
  return pos;
}

Bits to_bits(std::size_t width, std::span<const std::size_t> idx, const char* what) {
  Bits b(width);
  for (auto i : idx) {
    if (i >= width) throw Error(ErrorCode::InvalidArgument, std::string(what) + " index out of range");
    if (b.test(i)) throw Error(ErrorCode::InvalidArgument, std::string("repeated ") + what + " index");
    b.set(i);
  }
  return b;
}

void require_square(const SbMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::InvalidArgument, "matrix is " + std::to_string(a.n_rows()) + "x" +
                                                std::to_string(a.n_cols()) + ", expected square");
}

// Peels columns off `cols` one at a time: a pivot is a row whose restriction
// to the remaining columns is a single One. Succeeds iff the columns are
// independent; every choice of pivot is safe because the pivot row vanishes on
// the remaining columns and so can never be part of their witness.
bool peel_columns(const SbMatrix& m, Bits cols, std::vector<std::size_t>* pivot_rows,
                  std::vector<std::size_t>* pivot_cols) {
  while (cols.any()) {
    bool found = false;
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
      Bits s = m.row_nonzero(r) & cols;
      if (s.count() != 1) continue;
      auto c = s.first();
      if (!m.row_ones(r).test(c)) continue;
      if (pivot_rows) pivot_rows->push_back(r);
      if (pivot_cols) pivot_cols->push_back(c);
      cols.reset(c);
      found = true;
      break;
    }
    if (!found) return false;
  }
  return true;
}

bool peel_rows(const SbMatrix& m, Bits rows, std::vector<std::size_t>* pivot_cols) {
  while (rows.any()) {
    bool found = false;
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
      Bits s = m.col_nonzero(c) & rows;
      if (s.count() != 1) continue;
      auto r = s.first();
      if (!m.col_ones(c).test(r)) continue;
      if (pivot_cols) pivot_cols->push_back(c);
      rows.reset(r);
      found = true;
      break;
    }
    if (!found) return false;
  }
  return true;
}

// Kuhn's augmenting paths on the nonzero pattern.
bool has_perfect_matching(const SbMatrix& a) {
  const std::size_t n = a.n_rows();
  std::vector<std::size_t> match_col(n, n);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
    bool ok = false;
    a.row_nonzero(r).for_each([&](std::size_t c) {
      if (ok || seen[c]) return;
      seen[c] = true;
      if (match_col[c] == n || augment(match_col[c], seen)) {
        match_col[c] = r;
        ok = true;
      }
    });
    return ok;
  };
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    if (!augment(r, seen)) return false;
  }
  return true;
}

class RankSearch {
 public:
  RankSearch(const SbMatrix& m, std::span<const std::size_t> rows) : m_(m), rows_(rows.begin(), rows.end()) {}

  std::size_t best(const Bits& zero_cols) {
    if (auto it = memo_.find(zero_cols); it != memo_.end()) return it->second;
    std::size_t best = 0;
    const std::size_t cap = zero_cols.count();
    for (auto r : rows_) {
      if (!m_.row_ones(r).intersects(zero_cols)) continue;
      best = std::max(best, 1 + this->best(zero_cols - m_.row_nonzero(r)));
      if (best == cap) break;
    }
    memo_.emplace(zero_cols, best);
    return best;
  }

  NonsingularSubmatrix trace() {
    NonsingularSubmatrix out;
    Bits z(m_.n_cols(), true);
    for (auto remaining = best(z); remaining > 0; --remaining) {
      for (auto r : rows_) {
        if (!m_.row_ones(r).intersects(z)) continue;
        Bits next = z - m_.row_nonzero(r);
        if (1 + best(next) != remaining) continue;
        out.rows.push_back(r);
        out.cols.push_back((m_.row_ones(r) & z).first());
        z = std::move(next);
        break;
      }
    }
    // Each chosen row vanishes on the pivots chosen after it, so this order is
    // already triangular.
    return out;
  }

 private:
  const SbMatrix& m_;
  std::vector<std::size_t> rows_;
  std::unordered_map<Bits, std::size_t, BitsHash> memo_;
};

}  // namespace

// ---------------------------------------------------------------------------
// SbMatrix

SbMatrix::SbMatrix() { build_index(); }

SbMatrix::SbMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<SBool> entries,
                   std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      entries_(std::move(entries)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (entries_.size() != n_rows_ * n_cols_)
    throw Error(ErrorCode::InvalidArgument, "entry count does not match matrix dimensions");
  if (row_labels_.size() != n_rows_ || col_labels_.size() != n_cols_)
    throw Error(ErrorCode::InvalidArgument, "label count does not match matrix dimensions");
  build_index();
}

SbMatrix::SbMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<SBool> entries)
    : SbMatrix(n_rows, n_cols, std::move(entries), numbered("r", n_rows), numbered("c", n_cols)) {}

SbMatrix SbMatrix::from_rows(const std::vector<std::vector<SBool>>& rows) {
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  return from_rows(rows, numbered("r", rows.size()), numbered("c", n_cols));
}

SbMatrix SbMatrix::from_rows(const std::vector<std::vector<SBool>>& rows, std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels) {
  const std::size_t n_cols = col_labels.size();
  std::vector<SBool> entries;
  entries.reserve(rows.size() * n_cols);
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return SbMatrix(rows.size(), n_cols, std::move(entries), std::move(row_labels), std::move(col_labels));
}

void SbMatrix::build_index() {
  row_pos_ = index_labels(row_labels_, "row");
  col_pos_ = index_labels(col_labels_, "column");
  row_nz_.assign(n_rows_, Bits(n_cols_));
  row_one_.assign(n_rows_, Bits(n_cols_));
  col_nz_.assign(n_cols_, Bits(n_rows_));
  col_one_.assign(n_cols_, Bits(n_rows_));
  for (std::size_t i = 0; i < n_rows_; ++i) {
    for (std::size_t j = 0; j < n_cols_; ++j) {
      const SBool v = at(i, j);
      if (v == SBool::Zero) continue;
      row_nz_[i].set(j);
      col_nz_[j].set(i);
      if (v == SBool::One) {
        row_one_[i].set(j);
        col_one_[j].set(i);
      }
    }
  }
}

bool SbMatrix::is_boolean() const {
  return std::all_of(entries_.begin(), entries_.end(), [](SBool v) { return v != SBool::Ghost; });
}

std::size_t SbMatrix::row_index(const std::string& label) const {
  auto it = row_pos_.find(label);
  if (it == row_pos_.end()) throw Error(ErrorCode::InvalidArgument, "unknown row label '" + label + "'");
  return it->second;
}

std::size_t SbMatrix::col_index(const std::string& label) const {
  auto it = col_pos_.find(label);
  if (it == col_pos_.end()) throw Error(ErrorCode::InvalidArgument, "unknown column label '" + label + "'");
  return it->second;
}

std::vector<std::size_t> SbMatrix::col_indices(const std::vector<std::string>& labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(col_index(l));
  return out;
}

std::vector<std::size_t> SbMatrix::row_indices(const std::vector<std::string>& labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(row_index(l));
  return out;
}

SbMatrix SbMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  std::vector<SBool> e;
  e.reserve(rows.size() * cols.size());
  std::vector<std::string> rl, cl;
  for (auto i : rows) {
    if (i >= n_rows_) throw Error(ErrorCode::InvalidArgument, "row index out of range");
    rl.push_back(row_labels_[i]);
  }
  for (auto j : cols) {
    if (j >= n_cols_) throw Error(ErrorCode::InvalidArgument, "column index out of range");
    cl.push_back(col_labels_[j]);
  }
  for (auto i : rows)
    for (auto j : cols) e.push_back(at(i, j));
  return SbMatrix(rows.size(), cols.size(), std::move(e), std::move(rl), std::move(cl));
}

SbMatrix SbMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<std::size_t> all(n_cols_);
  std::iota(all.begin(), all.end(), 0);
  return submatrix(rows, all);
}

SbMatrix SbMatrix::select_cols(std::span<const std::size_t> cols) const {
  std::vector<std::size_t> all(n_rows_);
  std::iota(all.begin(), all.end(), 0);
  return submatrix(all, cols);
}

// ---------------------------------------------------------------------------
// BoolMatrix

BoolMatrix::BoolMatrix(SbMatrix m) : m_(std::move(m)) {
  if (!m_.is_boolean()) throw Error(ErrorCode::InvalidArgument, "boolean matrix cannot hold 1v entries");
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  return from_rows(rows, numbered("r", rows.size()), numbered("c", n_cols));
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<int>>& rows, std::vector<std::string> row_labels,
                                 std::vector<std::string> col_labels) {
  std::vector<std::vector<SBool>> sb;
  sb.reserve(rows.size());
  for (const auto& row : rows) {
    auto& out = sb.emplace_back();
    for (int v : row) {
      if (v != 0 && v != 1) throw Error(ErrorCode::InvalidArgument, "boolean entries must be 0 or 1");
      out.push_back(v ? SBool::One : SBool::Zero);
    }
  }
  return BoolMatrix(SbMatrix::from_rows(sb, std::move(row_labels), std::move(col_labels)));
}

// ---------------------------------------------------------------------------
// Operations

SbMatrix complement(const SbMatrix& m) {
  std::vector<SBool> e;
  e.reserve(m.n_rows() * m.n_cols());
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      switch (m.at(i, j)) {
        case SBool::Zero: e.push_back(SBool::One); break;
        case SBool::One: e.push_back(SBool::Zero); break;
        case SBool::Ghost: e.push_back(SBool::Ghost); break;
      }
    }
  }
  return SbMatrix(m.n_rows(), m.n_cols(), std::move(e), m.row_labels(), m.col_labels());
}

BoolMatrix complement(const BoolMatrix& m) { return BoolMatrix(complement(m.sb())); }

SbMatrix transpose(const SbMatrix& m) {
  std::vector<SBool> e;
  e.reserve(m.n_rows() * m.n_cols());
  for (std::size_t j = 0; j < m.n_cols(); ++j)
    for (std::size_t i = 0; i < m.n_rows(); ++i) e.push_back(m.at(i, j));
  return SbMatrix(m.n_cols(), m.n_rows(), std::move(e), m.col_labels(), m.row_labels());
}

BoolMatrix transpose(const BoolMatrix& m) { return BoolMatrix(transpose(m.sb())); }

std::optional<TriangularForm> triangular_form(const SbMatrix& a) {
  require_square(a);
  TriangularForm tf;
  if (!peel_columns(a, Bits(a.n_cols(), true), &tf.row_order, &tf.col_order)) return std::nullopt;
  return tf;
}

bool is_nonsingular(const SbMatrix& a) {
  require_square(a);
  return peel_columns(a, Bits(a.n_cols(), true), nullptr, nullptr);
}

SBool permanent(const SbMatrix& a) {
  require_square(a);
  if (is_nonsingular(a)) return SBool::One;
  return has_perfect_matching(a) ? SBool::Ghost : SBool::Zero;
}

bool columns_independent(const SbMatrix& m, std::span<const std::size_t> cols) {
  return peel_columns(m, to_bits(m.n_cols(), cols, "column"), nullptr, nullptr);
}

bool columns_independent(const SbMatrix& m, const std::vector<std::string>& col_labels) {
  auto idx = m.col_indices(col_labels);
  return columns_independent(m, idx);
}

bool rows_independent(const SbMatrix& m, std::span<const std::size_t> rows) {
  return peel_rows(m, to_bits(m.n_rows(), rows, "row"), nullptr);
}

std::optional<std::vector<std::size_t>> witness(const SbMatrix& m, std::span<const std::size_t> cols) {
  std::vector<std::size_t> rows;
  if (!peel_columns(m, to_bits(m.n_cols(), cols, "column"), &rows, nullptr)) return std::nullopt;
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::optional<std::vector<std::string>> witness(const SbMatrix& m, const std::vector<std::string>& col_labels) {
  auto idx = m.col_indices(col_labels);
  auto rows = witness(m, idx);
  if (!rows) return std::nullopt;
  std::vector<std::string> out;
  for (auto r : *rows) out.push_back(m.row_label(r));
  return out;
}

std::optional<std::vector<std::size_t>> row_witness(const SbMatrix& m, std::span<const std::size_t> rows) {
  std::vector<std::size_t> cols;
  if (!peel_rows(m, to_bits(m.n_rows(), rows, "row"), &cols)) return std::nullopt;
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::optional<std::vector<bool>> dependence_coefficients(const SbMatrix& m, std::span<const std::size_t> cols) {
  if (cols.size() > 20) throw Error(ErrorCode::GroundTooLarge, "coefficient search is limited to 20 columns");
  to_bits(m.n_cols(), cols, "column");
  const std::size_t k = cols.size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    bool ghost = true;
    for (std::size_t r = 0; r < m.n_rows() && ghost; ++r) {
      SBool sum = SBool::Zero;
      for (std::size_t t = 0; t < k; ++t)
        if (mask >> t & 1U) sum = sum + m.at(r, cols[t]);
      ghost = is_ghost(sum);
    }
    if (ghost) {
      std::vector<bool> alpha(k);
      for (std::size_t t = 0; t < k; ++t) alpha[t] = (mask >> t & 1U) != 0;
      return alpha;
    }
  }
  return std::nullopt;
}

NonsingularSubmatrix max_nonsingular_submatrix(const SbMatrix& m, std::span<const std::size_t> rows) {
  to_bits(m.n_rows(), rows, "row");
  RankSearch search(m, rows);
  return search.trace();
}

NonsingularSubmatrix max_nonsingular_submatrix(const SbMatrix& m) {
  std::vector<std::size_t> all(m.n_rows());
  std::iota(all.begin(), all.end(), 0);
  return max_nonsingular_submatrix(m, all);
}

std::size_t rank_of_rows(const SbMatrix& m, std::span<const std::size_t> rows) {
  to_bits(m.n_rows(), rows, "row");
  RankSearch search(m, rows);
  return search.best(Bits(m.n_cols(), true));
}

std::size_t rank(const SbMatrix& m) {
  std::vector<std::size_t> all(m.n_rows());
  std::iota(all.begin(), all.end(), 0);
  return rank_of_rows(m, all);
}

}  // namespace boolrep
