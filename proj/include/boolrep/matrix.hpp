#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "boolrep/bits.hpp"
#include "boolrep/sbool.hpp"

namespace boolrep {

/// Dense, labeled, immutable matrix over the superboolean semiring.
///
/// Besides the entries, every row and column carries two bitmasks (nonzero
/// positions and One positions). All structural algorithms below work on
/// those masks.
class SbMatrix {
 public:
  SbMatrix();
  /// Row-major entries. Labels must be unique and match the dimensions.
  SbMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<SBool> entries,
           std::vector<std::string> row_labels, std::vector<std::string> col_labels);
  /// Same, with generated labels r1..rm and c1..cn.
  SbMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<SBool> entries);

  static SbMatrix from_rows(const std::vector<std::vector<SBool>>& rows);
  static SbMatrix from_rows(const std::vector<std::vector<SBool>>& rows,
                            std::vector<std::string> row_labels,
                            std::vector<std::string> col_labels);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  bool is_square() const { return n_rows_ == n_cols_; }
  bool is_boolean() const;

  SBool at(std::size_t i, std::size_t j) const { return entries_[i * n_cols_ + j]; }
  SBool operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::string& row_label(std::size_t i) const { return row_labels_[i]; }
  const std::string& col_label(std::size_t j) const { return col_labels_[j]; }
  /// Throws InvalidArgument for an unknown label.
  std::size_t row_index(const std::string& label) const;
  std::size_t col_index(const std::string& label) const;
  std::vector<std::size_t> col_indices(const std::vector<std::string>& labels) const;
  std::vector<std::size_t> row_indices(const std::vector<std::string>& labels) const;

  const Bits& row_nonzero(std::size_t i) const { return row_nz_[i]; }
  const Bits& row_ones(std::size_t i) const { return row_one_[i]; }
  const Bits& col_nonzero(std::size_t j) const { return col_nz_[j]; }
  const Bits& col_ones(std::size_t j) const { return col_one_[j]; }

  SbMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  SbMatrix select_rows(std::span<const std::size_t> rows) const;
  SbMatrix select_cols(std::span<const std::size_t> cols) const;

  friend bool operator==(const SbMatrix& a, const SbMatrix& b) {
    return a.n_rows_ == b.n_rows_ && a.n_cols_ == b.n_cols_ && a.entries_ == b.entries_ &&
           a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_;
  }

 private:
  void build_index();

  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<SBool> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::unordered_map<std::string, std::size_t> row_pos_;
  std::unordered_map<std::string, std::size_t> col_pos_;
  std::vector<Bits> row_nz_, row_one_, col_nz_, col_one_;
};

/// A superboolean matrix whose entries are all 0 or 1.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  /// Throws InvalidArgument if any entry is 1v.
  explicit BoolMatrix(SbMatrix m);
  static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows,
                              std::vector<std::string> row_labels,
                              std::vector<std::string> col_labels);

  const SbMatrix& sb() const { return m_; }
  operator const SbMatrix&() const { return m_; }  // NOLINT(google-explicit-constructor)

  std::size_t n_rows() const { return m_.n_rows(); }
  std::size_t n_cols() const { return m_.n_cols(); }
  bool at(std::size_t i, std::size_t j) const { return m_.at(i, j) == SBool::One; }
  const std::vector<std::string>& row_labels() const { return m_.row_labels(); }
  const std::vector<std::string>& col_labels() const { return m_.col_labels(); }

  BoolMatrix select_rows(std::span<const std::size_t> rows) const {
    return BoolMatrix(m_.select_rows(rows));
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  SbMatrix m_;
};

/// Entrywise 0 <-> 1, 1v fixed. Labels are kept.
SbMatrix complement(const SbMatrix& m);
BoolMatrix complement(const BoolMatrix& m);
SbMatrix transpose(const SbMatrix& m);
BoolMatrix transpose(const BoolMatrix& m);

/// Permanent evaluated in the superboolean semiring. The 0x0 matrix has
/// permanent One. Throws InvalidArgument for a non-square matrix.
///
/// Computed structurally: the sum is One iff exactly one permutation has a
/// nonzero product and that product is One, which the elimination of
/// triangular_form decides; otherwise it is 1v iff the nonzero pattern has a
/// perfect matching, and 0 if not.
SBool permanent(const SbMatrix& a);

bool is_nonsingular(const SbMatrix& a);

/// Orders bringing a square matrix to lower triangular form with a diagonal
/// of ones: entry (i, j) of the permuted matrix is a(row_order[i],
/// col_order[j]), it equals One on the diagonal and Zero for j > i.
struct TriangularForm {
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
};

/// Present iff `a` is nonsingular. Deterministic: each step takes the first
/// row (by index) whose restriction to the remaining columns is a single One.
std::optional<TriangularForm> triangular_form(const SbMatrix& a);

bool columns_independent(const SbMatrix& m, std::span<const std::size_t> cols);
bool columns_independent(const SbMatrix& m, const std::vector<std::string>& col_labels);
bool rows_independent(const SbMatrix& m, std::span<const std::size_t> rows);

/// If the columns are independent, a set of rows (ascending) such that the
/// square submatrix on those rows and columns is nonsingular.
std::optional<std::vector<std::size_t>> witness(const SbMatrix& m, std::span<const std::size_t> cols);
std::optional<std::vector<std::string>> witness(const SbMatrix& m,
                                                const std::vector<std::string>& col_labels);
/// Row analogue: columns (ascending) certifying independence of the rows.
std::optional<std::vector<std::size_t>> row_witness(const SbMatrix& m, std::span<const std::size_t> rows);

/// Searches {0,1} coefficients, not all zero, whose combination of the given
/// columns lies in the ghost ideal. At most 20 columns.
std::optional<std::vector<bool>> dependence_coefficients(const SbMatrix& m,
                                                         std::span<const std::size_t> cols);

/// Rows and columns of a nonsingular square submatrix, listed in triangular
/// order (see TriangularForm).
struct NonsingularSubmatrix {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// A largest nonsingular square submatrix, restricted to the given rows.
///
/// Exact search over the sequences that peel a triangular form one row at a
/// time: the state after choosing some rows is the set of columns where all
/// of them vanish, and the next row must have a One inside that set. The
/// longest such sequence is found by memoised search over the distinct
/// states, which for matrices coming from a lattice are the lattice elements.
NonsingularSubmatrix max_nonsingular_submatrix(const SbMatrix& m, std::span<const std::size_t> rows);
NonsingularSubmatrix max_nonsingular_submatrix(const SbMatrix& m);

/// Superboolean rank: size of a largest nonsingular submatrix, which equals
/// the row rank and the column rank.
std::size_t rank(const SbMatrix& m);
std::size_t rank_of_rows(const SbMatrix& m, std::span<const std::size_t> rows);

}  // namespace boolrep
