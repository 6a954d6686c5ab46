#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "boolrep/lattice.hpp"

namespace boolrep {

inline constexpr std::size_t kDefaultChainLimit = 1'000'000;

/// Lattice indices bottom = F_0 < F_1 < ... < F_k = top, each covering the
/// previous one.
struct MaximalChain {
  std::vector<std::size_t> flats;
  friend bool operator==(const MaximalChain&, const MaximalChain&) = default;
};

/// The blocks Q_i = F_i - F_(i-1) of a maximal chain of a lattice of flats,
/// kept together with the chain that induced them.
struct ChainPartition {
  MaximalChain chain;
  std::vector<ElementSet> blocks;
};

/// Lazy depth-first enumeration of maximal chains, in lexicographic order of
/// the index sequences.
class MaximalChainEnumerator {
 public:
  explicit MaximalChainEnumerator(const FlatLattice& l);
  std::optional<MaximalChain> next();

 private:
  const FlatLattice& lattice_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> branch_;  // index into upper_covers of path_[d] taken at depth d
  bool started_ = false;
  bool done_ = false;
};

/// All maximal chains. Throws ChainLimitExceeded if there are more than `limit`.
std::vector<MaximalChain> maximal_chains(const FlatLattice& l, std::size_t limit = kDefaultChainLimit);

/// Throws InvalidArgument unless `chain` is a maximal chain of a lattice of flats.
ChainPartition partition_of_chain(const FlatLattice& l, const MaximalChain& chain);

bool is_partial_transversal(const ChainPartition& q, ElementSet w);

/// Full transversals (one element per block), ascending by mask.
std::vector<ElementSet> transversal_bases(const ChainPartition& q);

/// First partition, in chain order, having `w` as a partial transversal.
/// Nothing if none exists; throws ChainLimitExceeded if the search would
/// need to look past `limit` chains, since then the answer is unknown.
std::optional<ChainPartition> exists_transversal_partition(const FlatLattice& l, ElementSet w,
                                                           std::size_t limit = kDefaultChainLimit);

/// Atom rows {x} for x in `w`, with columns F_(i-1) for the block Q_i holding
/// x. Throws InvalidArgument if `w` is not a partial transversal of `q`.
LatticeWitness transversal_witness(const FlatLattice& l, const ChainPartition& q, ElementSet w);

/// The atoms {x} for x in `w`, ascending by lattice index.
std::vector<std::size_t> atoms_of(const FlatLattice& l, ElementSet w);

}  // namespace boolrep
