#include "boolrep/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "boolrep/errors.hpp"

namespace boolrep {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::optional<std::size_t> greatest_of(const std::vector<Bits>& down, const Bits& common) {
  std::optional<std::size_t> found;
  common.for_each([&](std::size_t k) {
    if (!found && down[k] == common) found = k;
  });
  return found;
}

// Elements sorted so that every element comes after everything below it.
std::vector<std::size_t> linear_extension(const FlatLattice& l) {
  std::vector<std::size_t> order(l.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return l.down_set(a).count() < l.down_set(b).count();
  });
  return order;
}

}  // namespace

FlatLattice FlatLattice::of_matroid(const Matroid& m) {
  FlatLattice l;
  l.flats_ = flats(m);
  l.ground_ = m.ground();
  const std::size_t n = l.flats_.size();
  l.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    l.labels_.push_back(m.ground().format(l.flats_[i]));
    for (std::size_t j = 0; j < n; ++j)
      if (l.flats_[i].is_subset_of(l.flats_[j])) l.up_[i].set(j);
  }
  l.derive();

  // Jordan-Dedekind from the bottom: shortest and longest chains agree.
  std::vector<std::size_t> shortest(n, kUnreached);
  shortest[l.bottom_] = 0;
  for (auto i : linear_extension(l))
    for (auto j : l.upper_covers_[i]) shortest[j] = std::min(shortest[j], shortest[i] + 1);
  for (std::size_t i = 0; i < n; ++i)
    if (shortest[i] != l.heights_[i])
      throw Error(ErrorCode::Internal, "chains from the bottom to " + l.labels_[i] + " have different lengths");
  if (l.atoms_.size() != m.size())
    throw Error(ErrorCode::Internal, "atoms do not correspond to ground elements");
  return l;
}

FlatLattice FlatLattice::from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a lattice needs at least one element");
  if (leq.size() != n) throw Error(ErrorCode::InvalidArgument, "order relation has the wrong size");
  FlatLattice l;
  l.labels_ = std::move(labels);
  {
    std::vector<std::string> sorted = l.labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::InvalidArgument, "duplicate lattice labels");
  }
  l.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw Error(ErrorCode::InvalidArgument, "order relation has the wrong size");
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) l.up_[i].set(j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.up_[i].test(i)) throw Error(ErrorCode::InvalidArgument, "order relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && l.up_[i].test(j) && l.up_[j].test(i))
        throw Error(ErrorCode::InvalidArgument, "order relation is not antisymmetric");
      if (l.up_[i].test(j) && !l.up_[j].is_subset_of(l.up_[i]))
        throw Error(ErrorCode::InvalidArgument, "order relation is not transitive");
    }
  }
  l.derive();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!greatest_of(l.down_, l.down_[i] & l.down_[j]) || !greatest_of(l.up_, l.up_[i] & l.up_[j]))
        throw Error(ErrorCode::InvalidArgument, "elements " + l.labels_[i] + " and " + l.labels_[j] +
                                                    " have no meet or join");
    }
  return l;
}

void FlatLattice::derive() {
  const std::size_t n = up_.size();
  down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) up_[i].for_each([&](std::size_t j) { down_[j].set(i); });

  std::optional<std::size_t> bottom, top;
  for (std::size_t i = 0; i < n; ++i) {
    if (up_[i].count() == n) {
      if (bottom) throw Error(ErrorCode::InvalidArgument, "order has two least elements");
      bottom = i;
    }
    if (down_[i].count() == n) top = i;
  }
  if (!bottom || !top) throw Error(ErrorCode::InvalidArgument, "order needs a least and a greatest element");
  bottom_ = *bottom;
  top_ = *top;

  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    Bits above = up_[i];
    above.reset(i);
    above.for_each([&](std::size_t j) {
      Bits between = above & down_[j];
      between.reset(j);
      if (between.none()) {
        upper_covers_[i].push_back(j);
        lower_covers_[j].push_back(i);
      }
    });
  }
  atoms_ = upper_covers_[bottom_];

  heights_.assign(n, 0);
  for (auto i : linear_extension(*this))
    for (auto j : upper_covers_[i]) heights_[j] = std::max(heights_[j], heights_[i] + 1);
}

std::size_t FlatLattice::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::InvalidArgument, "unknown lattice element '" + label + "'");
}

std::size_t FlatLattice::meet(std::size_t i, std::size_t j) const {
  auto k = greatest_of(down_, down_[i] & down_[j]);
  if (!k) throw Error(ErrorCode::Internal, "missing meet");
  return *k;
}

std::size_t FlatLattice::join(std::size_t i, std::size_t j) const {
  auto k = greatest_of(up_, up_[i] & up_[j]);
  if (!k) throw Error(ErrorCode::Internal, "missing join");
  return *k;
}

std::size_t FlatLattice::index_of_flat(ElementSet f) const {
  auto it = std::find(flats_.begin(), flats_.end(), f);
  if (it == flats_.end()) throw Error(ErrorCode::InvalidArgument, "not a flat of this lattice");
  return static_cast<std::size_t>(it - flats_.begin());
}

std::size_t FlatLattice::atom_of(std::size_t element) const {
  if (!has_ground()) throw Error(ErrorCode::InvalidArgument, "lattice has no ground set");
  return index_of_flat(ElementSet::singleton(element));
}

// ---------------------------------------------------------------------------

BoolMatrix structure_matrix(const FlatLattice& l) {
  const std::size_t n = l.size();
  std::vector<SBool> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back(l.leq(i, j) ? SBool::One : SBool::Zero);
  return BoolMatrix(SbMatrix(n, n, std::move(e), l.labels(), l.labels()));
}

BoolMatrix lattice_representation(const FlatLattice& l) { return complement(structure_matrix(l)); }

std::size_t nook(const FlatLattice& l, const std::vector<std::size_t>& w) {
  return rank_of_rows(lattice_representation(l), w);
}

std::size_t nook(const FlatLattice& l) {
  std::vector<std::size_t> all(l.size());
  std::iota(all.begin(), all.end(), 0);
  return nook(l, all);
}

bool is_c_independent(const FlatLattice& l, const std::vector<std::size_t>& w) {
  return rows_independent(lattice_representation(l), w);
}

std::optional<LatticeWitness> lattice_witness(const FlatLattice& l, const std::vector<std::size_t>& w) {
  auto cols = row_witness(lattice_representation(l), w);
  if (!cols) return std::nullopt;
  LatticeWitness out{w, *cols};
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

LatticeWitness chain_witness(const FlatLattice& l, const std::vector<std::size_t>& chain) {
  LatticeWitness out;
  std::size_t prev = l.bottom();
  for (auto x : chain) {
    if (x >= l.size() || !l.less(prev, x))
      throw Error(ErrorCode::InvalidArgument, "not a strict chain above the bottom");
    out.rows.push_back(x);
    out.cols.push_back(prev);
    prev = x;
  }
  return out;
}

std::vector<std::size_t> witness_to_chain(const FlatLattice& l, const LatticeWitness& w) {
  if (w.rows.size() != w.cols.size()) throw Error(ErrorCode::InvalidWitness, "witness is not square");
  const auto sub = lattice_representation(l).sb().submatrix(w.rows, w.cols);
  const auto tf = triangular_form(sub);
  if (!tf) throw Error(ErrorCode::InvalidWitness, "witness submatrix is singular");
  const std::size_t k = w.rows.size();
  std::vector<std::size_t> ell(k), m(k);
  for (std::size_t i = 0; i < k; ++i) {
    ell[i] = w.rows[tf->row_order[i]];
    m[i] = w.cols[tf->col_order[i]];
  }
  std::vector<std::size_t> chain(k);
  for (std::size_t j = k; j-- > 0;) chain[j] = (j + 1 == k) ? m[j] : l.meet(m[j], chain[j + 1]);
  // l_1..l_(j-1) lie below chain[j], l_j does not.
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (!l.leq(ell[i], chain[j])) throw Error(ErrorCode::Internal, "meet chain lost a lower element");
    if (l.leq(ell[j], chain[j])) throw Error(ErrorCode::Internal, "meet chain does not separate");
    if (j > 0 && !l.less(chain[j - 1], chain[j])) throw Error(ErrorCode::Internal, "meet chain is not strict");
  }
  return chain;
}

GeometricReport geometric_report(const FlatLattice& l) {
  const std::size_t n = l.size();
  GeometricReport r;
  const auto order = linear_extension(l);

  r.jordan_dedekind = true;
  for (std::size_t s = 0; s < n && r.jordan_dedekind; ++s) {
    std::vector<std::size_t> lo(n, kUnreached), hi(n, 0);
    lo[s] = 0;
    for (auto i : order) {
      if (lo[i] == kUnreached) continue;
      for (auto j : l.upper_covers(i)) {
        lo[j] = std::min(lo[j], lo[i] + 1);
        hi[j] = std::max(hi[j], hi[i] + 1);
      }
    }
    for (std::size_t t = 0; t < n; ++t)
      if (lo[t] != kUnreached && lo[t] != hi[t]) r.jordan_dedekind = false;
  }

  r.semimodular = true;
  for (std::size_t i = 0; i < n && r.semimodular; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (l.element_height(i) + l.element_height(j) <
          l.element_height(l.join(i, j)) + l.element_height(l.meet(i, j))) {
        r.semimodular = false;
        break;
      }

  r.atomistic = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t acc = l.bottom();
    for (auto a : l.atoms())
      if (l.leq(a, i)) acc = l.join(acc, a);
    if (acc != i) {
      r.atomistic = false;
      break;
    }
  }
  return r;
}

bool is_geometric(const FlatLattice& l) { return geometric_report(l).ok(); }

}  // namespace boolrep
