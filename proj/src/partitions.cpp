#include "boolrep/partitions.hpp"

#include <algorithm>

#include "boolrep/errors.hpp"

namespace boolrep {

MaximalChainEnumerator::MaximalChainEnumerator(const FlatLattice& l) : lattice_(l) {}

std::optional<MaximalChain> MaximalChainEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    path_.assign(1, lattice_.bottom());
  } else {
    // Backtrack to the deepest position with an untried cover.
    while (true) {
      if (branch_.empty()) {
        done_ = true;
        return std::nullopt;
      }
      path_.pop_back();
      const std::size_t next_branch = branch_.back() + 1;
      branch_.pop_back();
      const auto& covers = lattice_.upper_covers(path_.back());
      if (next_branch < covers.size()) {
        path_.push_back(covers[next_branch]);
        branch_.push_back(next_branch);
        break;
      }
    }
  }
  while (path_.back() != lattice_.top()) {
    path_.push_back(lattice_.upper_covers(path_.back()).front());
    branch_.push_back(0);
  }
  return MaximalChain{path_};
}

std::vector<MaximalChain> maximal_chains(const FlatLattice& l, std::size_t limit) {
  std::vector<MaximalChain> out;
  MaximalChainEnumerator chains(l);
  while (auto c = chains.next()) {
    if (out.size() == limit)
      throw Error(ErrorCode::ChainLimitExceeded, "more than " + std::to_string(limit) + " maximal chains");
    out.push_back(std::move(*c));
  }
  return out;
}

ChainPartition partition_of_chain(const FlatLattice& l, const MaximalChain& chain) {
  if (!l.has_ground()) throw Error(ErrorCode::InvalidArgument, "partitions need a lattice of flats");
  const auto& f = chain.flats;
  if (f.empty() || f.front() != l.bottom() || f.back() != l.top())
    throw Error(ErrorCode::InvalidArgument, "chain must run from the bottom to the top");
  ChainPartition q{chain, {}};
  for (std::size_t i = 1; i < f.size(); ++i) {
    const auto& covers = l.upper_covers(f[i - 1]);
    if (std::find(covers.begin(), covers.end(), f[i]) == covers.end())
      throw Error(ErrorCode::InvalidArgument, "consecutive chain elements must be covers");
    q.blocks.push_back(l.flat(f[i]) - l.flat(f[i - 1]));
  }
  return q;
}

bool is_partial_transversal(const ChainPartition& q, ElementSet w) {
  return std::all_of(q.blocks.begin(), q.blocks.end(), [&](ElementSet b) { return (b & w).size() <= 1; });
}

std::vector<ElementSet> transversal_bases(const ChainPartition& q) {
  std::vector<ElementSet> out{ElementSet{}};
  for (auto block : q.blocks) {
    std::vector<ElementSet> grown;
    for (auto partial : out)
      for (auto x : block.elements()) grown.push_back(partial.with(x));
    out = std::move(grown);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ChainPartition> exists_transversal_partition(const FlatLattice& l, ElementSet w, std::size_t limit) {
  if (!w.is_subset_of(l.ground().full())) throw Error(ErrorCode::InvalidArgument, "subset outside the ground set");
  MaximalChainEnumerator chains(l);
  std::size_t seen = 0;
  while (auto c = chains.next()) {
    if (seen++ == limit)
      throw Error(ErrorCode::ChainLimitExceeded,
                  "searched " + std::to_string(limit) + " chains without a decision");
    auto q = partition_of_chain(l, *c);
    if (is_partial_transversal(q, w)) return q;
  }
  return std::nullopt;
}

LatticeWitness transversal_witness(const FlatLattice& l, const ChainPartition& q, ElementSet w) {
  if (!is_partial_transversal(q, w)) throw Error(ErrorCode::InvalidArgument, "not a partial transversal");
  LatticeWitness out;
  for (std::size_t i = 0; i < q.blocks.size(); ++i) {
    auto hit = q.blocks[i] & w;
    if (hit.empty()) continue;
    out.rows.push_back(l.atom_of(hit.lowest()));
    out.cols.push_back(q.chain.flats[i]);
  }
  return out;
}

std::vector<std::size_t> atoms_of(const FlatLattice& l, ElementSet w) {
  std::vector<std::size_t> out;
  for (auto x : w.elements()) out.push_back(l.atom_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace boolrep
