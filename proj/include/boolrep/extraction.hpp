#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolrep/lattice.hpp"
#include "boolrep/matrix.hpp"
#include "boolrep/matroid.hpp"

namespace boolrep {

enum class ReductionMode { Full, Paper, Dedupe, Verified };

std::string_view to_string(ReductionMode mode);
/// Accepts "none" (or "full"), "paper", "dedupe", "verified".
std::optional<ReductionMode> parse_reduction_mode(std::string_view s);

/// Boolean representation of a simple matroid: columns are the ground
/// elements in canonical order, rows are lattice flats. Entry (F, x) is 1
/// iff x is not in F.
struct Representation {
  BoolMatrix matrix;
  /// The flat behind each row, in row order.
  std::vector<ElementSet> provenance;
  ReductionMode mode = ReductionMode::Full;
};

struct VerificationReport {
  bool ok = false;
  /// Subsets whose column independence disagrees with the matroid, ascending by mask.
  std::vector<ElementSet> mismatches;
  std::size_t checked_count = 0;
};

inline constexpr std::size_t kMaxVerifyGround = 12;

/// Transpose of the atom rows of the lattice representation of the lattice
/// of flats: one row per flat. Throws NotSimple.
Representation extract_representation(const Matroid& m);

/// Keeps the row of the empty flat and the rows of flats with at least two
/// elements other than the whole ground set. Requires a full representation.
/// The result is not verified; see reduce().
Representation paper_reduce(const Representation& r);
/// Drops repeated rows (keeping the first) and all-zero rows.
Representation dedupe_reduce(const Representation& r);
/// dedupe_reduce, then drops each remaining row in order whenever the
/// smaller matrix still represents `m`.
Representation verified_reduce(const Representation& r, const Matroid& m);
/// Applies `mode` to a full representation and verifies the result; throws
/// ReductionFailed if it no longer represents `m`.
Representation reduce(const Representation& r, const Matroid& m, ReductionMode mode);

/// Compares column independence with independence in `m` on every subset.
/// Columns are matched to ground elements by label; throws LabelMismatch if
/// the label sets differ and GroundTooLarge beyond 12 elements.
VerificationReport verify_representation(const SbMatrix& a, const Matroid& m);
VerificationReport verify_representation(const Representation& r, const Matroid& m);

/// sum_{i=0}^{rank} C(n, i)
std::uint64_t size_bound(const Matroid& m);
std::uint64_t size_bound(std::size_t n, std::size_t rank);

/// Element of the max-plus semiring; only the images 0 and -inf of the
/// boolean embedding are produced here.
struct MaxPlus {
  double value = -std::numeric_limits<double>::infinity();
  static MaxPlus neg_inf() { return {}; }
  static MaxPlus unit() { return {0.0}; }
  bool is_neg_inf() const { return value == -std::numeric_limits<double>::infinity(); }
  friend bool operator==(const MaxPlus&, const MaxPlus&) = default;
};

struct TropicalMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<MaxPlus> entries;  // row-major
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  MaxPlus at(std::size_t i, std::size_t j) const { return entries[i * n_cols + j]; }
};

/// 1 -> 0, 0 -> -inf.
TropicalMatrix tropicalize(const BoolMatrix& m);
TropicalMatrix tropicalize(const Representation& r);
/// Inverse of the embedding; throws InvalidArgument on entries other than 0 and -inf.
BoolMatrix detropicalize(const TropicalMatrix& t);

}  // namespace boolrep
