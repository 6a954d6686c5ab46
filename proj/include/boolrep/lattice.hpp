#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "boolrep/bits.hpp"
#include "boolrep/matrix.hpp"
#include "boolrep/matroid.hpp"

namespace boolrep {

/// A finite lattice given by its order relation, optionally carrying the
/// flats of the simple matroid it came from.
///
/// Elements are indexed 0..size()-1. For a lattice of flats the indices follow
/// the canonical flat order of flats(), and the labels are the flats written
/// as "{1,2,3}".
class FlatLattice {
 public:
  /// The lattice of flats of a simple matroid. Throws NotSimple.
  static FlatLattice of_matroid(const Matroid& m);
  /// leq[i][j] is true iff element i <= element j. Throws InvalidArgument
  /// unless the relation is a partial order in which every pair has a meet
  /// and a join.
  static FlatLattice from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  const Bits& up_set(std::size_t i) const { return up_[i]; }
  const Bits& down_set(std::size_t i) const { return down_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_covers_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_covers_[i]; }

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  /// Elements covering the bottom, ascending.
  const std::vector<std::size_t>& atoms() const { return atoms_; }

  /// Length (in edges) of the longest chain from the bottom.
  std::size_t element_height(std::size_t i) const { return heights_[i]; }
  std::size_t height() const { return heights_[top_]; }

  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;

  bool has_ground() const { return !flats_.empty(); }
  /// Only for lattices of flats.
  const GroundSet& ground() const { return ground_; }
  ElementSet flat(std::size_t i) const { return flats_.at(i); }
  std::size_t index_of_flat(ElementSet f) const;
  /// The atom {x} for ground element x.
  std::size_t atom_of(std::size_t element) const;

 private:
  FlatLattice() = default;
  void derive();

  std::vector<std::string> labels_;
  std::vector<Bits> up_, down_;
  std::vector<std::vector<std::size_t>> upper_covers_, lower_covers_;
  std::vector<std::size_t> atoms_, heights_;
  std::size_t bottom_ = 0, top_ = 0;
  GroundSet ground_;
  std::vector<ElementSet> flats_;
};

inline FlatLattice flat_lattice(const Matroid& m) { return FlatLattice::of_matroid(m); }

/// a(i,j) = 1 iff element i <= element j, labeled by element labels.
BoolMatrix structure_matrix(const FlatLattice& l);
/// Complement of the structure matrix: a(i,j) = 1 iff element i is not <= element j.
BoolMatrix lattice_representation(const FlatLattice& l);

/// Rank of the rows of lattice_representation(l) indexed by `w`.
std::size_t nook(const FlatLattice& l, const std::vector<std::size_t>& w);
std::size_t nook(const FlatLattice& l);
bool is_c_independent(const FlatLattice& l, const std::vector<std::size_t>& w);

/// Rows `rows` and columns `cols` of the lattice representation whose square
/// submatrix is nonsingular.
struct LatticeWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::optional<LatticeWitness> lattice_witness(const FlatLattice& l, const std::vector<std::size_t>& w);

/// For a strict chain l1 < ... < lk above the bottom, the witness with
/// columns {bottom, l1, ..., l(k-1)}. Throws InvalidArgument if `chain` is not
/// such a chain.
LatticeWitness chain_witness(const FlatLattice& l, const std::vector<std::size_t>& chain);

/// Puts the witness submatrix in triangular form (rows l_1..l_k, columns
/// m_1..m_k) and returns the strict chain of meets m_j ^ ... ^ m_k for
/// j = 1..k, ascending. Throws InvalidWitness if the submatrix is singular.
std::vector<std::size_t> witness_to_chain(const FlatLattice& l, const LatticeWitness& w);

struct GeometricReport {
  bool jordan_dedekind = false;
  bool semimodular = false;
  bool atomistic = false;
  bool ok() const { return jordan_dedekind && semimodular && atomistic; }
};

GeometricReport geometric_report(const FlatLattice& l);
bool is_geometric(const FlatLattice& l);

}  // namespace boolrep
