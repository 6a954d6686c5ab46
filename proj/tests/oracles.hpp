#pragma once
// Brute-force reference implementations. Deliberately naive: they follow the
// textbook definitions and share no code with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "boolrep/matrix.hpp"
#include "boolrep/matroid.hpp"
#include "boolrep/sbool.hpp"

namespace oracle {

using boolrep::ElementSet;
using boolrep::GroundSet;
using boolrep::Matroid;
using boolrep::SBool;
using boolrep::SbMatrix;

// Sum over all n! permutations.
inline SBool permanent(const SbMatrix& a) {
  const std::size_t n = a.n_rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  SBool sum = SBool::Zero;
  do {
    SBool prod = SBool::One;
    for (std::size_t i = 0; i < n; ++i) prod = prod * a.at(i, p[i]);
    sum = sum + prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

// Some nonzero {0,1} combination of the columns is ghost in every coordinate.
inline bool columns_dependent(const SbMatrix& a, const std::vector<std::size_t>& cols) {
  const std::size_t m = cols.size();
  for (std::uint64_t c = 1; c < (std::uint64_t{1} << m); ++c) {
    bool ghost = true;
    for (std::size_t i = 0; i < a.n_rows() && ghost; ++i) {
      SBool s = SBool::Zero;
      for (std::size_t k = 0; k < m; ++k)
        if ((c >> k) & 1U) s = s + a.at(i, cols[k]);
      ghost = boolrep::is_ghost(s);
    }
    if (ghost) return true;
  }
  return false;
}

inline bool columns_independent(const SbMatrix& a, const std::vector<std::size_t>& cols) {
  return !columns_dependent(a, cols);
}

inline std::vector<std::size_t> bits_to_indices(std::uint64_t b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; b; ++i, b >>= 1)
    if (b & 1U) out.push_back(i);
  return out;
}

inline std::size_t column_rank(const SbMatrix& a) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.n_cols()); ++s) {
    auto cols = bits_to_indices(s);
    if (cols.size() > best && columns_independent(a, cols)) best = cols.size();
  }
  return best;
}

inline std::size_t row_rank(const SbMatrix& a) { return column_rank(boolrep::transpose(a)); }

// Largest k with a k x k submatrix of permanent One.
inline std::size_t submatrix_rank(const SbMatrix& a) {
  for (std::size_t k = std::min(a.n_rows(), a.n_cols()); k > 0; --k) {
    for (std::uint64_t rs = 0; rs < (std::uint64_t{1} << a.n_rows()); ++rs) {
      if (static_cast<std::size_t>(__builtin_popcountll(rs)) != k) continue;
      for (std::uint64_t cs = 0; cs < (std::uint64_t{1} << a.n_cols()); ++cs) {
        if (static_cast<std::size_t>(__builtin_popcountll(cs)) != k) continue;
        auto r = bits_to_indices(rs), c = bits_to_indices(cs);
        if (oracle::permanent(a.submatrix(r, c)) == SBool::One) return k;
      }
    }
  }
  return 0;
}

inline SbMatrix random_sb(std::mt19937_64& rng, std::size_t rows, std::size_t cols, bool ghosts = true) {
  std::uniform_int_distribution<int> d(0, ghosts ? 2 : 1);
  std::vector<SBool> e(rows * cols);
  for (auto& x : e) x = static_cast<SBool>(d(rng));
  return SbMatrix(rows, cols, std::move(e));
}

// Every matrix of the given shape over {0,1,1v}, visited in order.
inline void for_each_sb(std::size_t rows, std::size_t cols, const std::function<void(const SbMatrix&)>& f) {
  const std::size_t n = rows * cols;
  std::vector<SBool> e(n, SBool::Zero);
  while (true) {
    f(SbMatrix(rows, cols, e));
    std::size_t i = 0;
    while (i < n && e[i] == SBool::Ghost) e[i++] = SBool::Zero;
    if (i == n) return;
    e[i] = static_cast<SBool>(static_cast<int>(e[i]) + 1);
  }
}

// Independent sets straight from the definition of the family.
inline std::set<std::uint64_t> independent_masks(const Matroid& m) {
  std::set<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.size()); ++s)
    for (auto b : m.bases())
      if ((s & ~b.bits()) == 0) {
        out.insert(s);
        break;
      }
  return out;
}

inline std::size_t rank_of(const Matroid& m, std::uint64_t x) {
  std::size_t r = 0;
  for (auto b : m.bases()) r = std::max<std::size_t>(r, __builtin_popcountll(b.bits() & x));
  return r;
}

// All 2^n subsets that no single element can be added to without raising rank.
inline std::vector<std::uint64_t> flats(const Matroid& m) {
  std::vector<std::uint64_t> out;
  const std::uint64_t full = (std::uint64_t{1} << m.size()) - 1;
  for (std::uint64_t x = 0; x <= full; ++x) {
    bool closed = true;
    for (std::size_t y = 0; y < m.size() && closed; ++y)
      if (!((x >> y) & 1U) && rank_of(m, x | (std::uint64_t{1} << y)) == rank_of(m, x)) closed = false;
    if (closed) out.push_back(x);
  }
  return out;
}

// Number of maximal chains of flats, by recursion over covers found by containment.
inline std::size_t maximal_chain_count(const Matroid& m) {
  const auto fs = oracle::flats(m);
  auto covers = [&](std::uint64_t a, std::uint64_t b) {
    if (a == b || (a & ~b) != 0) return false;
    for (auto c : fs)
      if (c != a && c != b && (a & ~c) == 0 && (c & ~b) == 0) return false;
    return true;
  };
  const std::uint64_t top = (std::uint64_t{1} << m.size()) - 1;
  std::function<std::size_t(std::uint64_t)> count = [&](std::uint64_t f) -> std::size_t {
    if (f == top) return 1;
    std::size_t n = 0;
    for (auto g : fs)
      if (covers(f, g)) n += count(g);
    return n;
  };
  return count(fs.front());
}

// Rank over GF(p) of the chosen columns.
inline std::size_t gf_rank(std::vector<std::vector<int>> rows, int p) {
  std::size_t r = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  auto inv = [p](int a) {
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    return 0;
  };
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const int iv = inv(rows[r][c]);
    for (auto& v : rows[r]) v = v * iv % p;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c] != 0) {
        const int f = rows[i][c];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
      }
    ++r;
  }
  return r;
}

// Column matroid of a random k x n matrix over GF(p), then simplified.
inline Matroid random_linear(std::mt19937_64& rng, std::size_t k, std::size_t n, int p) {
  while (true) {
    std::uniform_int_distribution<int> d(0, p - 1);
    std::vector<std::vector<int>> a(k, std::vector<int>(n));
    for (auto& row : a)
      for (auto& v : row) v = d(rng);
    std::vector<ElementSet> bases;
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      auto cols = bits_to_indices(s);
      std::vector<std::vector<int>> sub(k, std::vector<int>(cols.size()));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = a[i][cols[j]];
      const auto r = gf_rank(sub, p);
      if (r != cols.size()) continue;
      if (r > best) {
        best = r;
        bases.clear();
      }
      if (r == best) bases.emplace_back(s);
    }
    if (best == 0) continue;
    Matroid m(GroundSet::numbered(n), bases);
    return boolrep::simplify(m).matroid;
  }
}

// Sparse paving: all r-subsets are bases except some circuit-hyperplanes that
// pairwise share at most r-2 elements. Simple whenever r >= 3.
inline Matroid random_sparse_paving(std::mt19937_64& rng, std::size_t r, std::size_t n, std::size_t tries) {
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (static_cast<std::size_t>(__builtin_popcountll(s)) == r) subsets.push_back(s);
  std::vector<std::uint64_t> removed;
  std::uniform_int_distribution<std::size_t> pick(0, subsets.size() - 1);
  for (std::size_t t = 0; t < tries; ++t) {
    const auto c = subsets[pick(rng)];
    bool ok = true;
    for (auto d : removed) ok = ok && static_cast<std::size_t>(__builtin_popcountll(c & d)) + 2 <= r;
    if (ok) removed.push_back(c);
  }
  std::vector<ElementSet> bases;
  for (auto s : subsets)
    if (std::find(removed.begin(), removed.end(), s) == removed.end()) bases.emplace_back(s);
  return Matroid(GroundSet::numbered(n), bases);
}

// A mix of simple linear and sparse paving matroids with at most 7 elements.
inline Matroid random_matroid(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: return random_linear(rng, 2 + rng() % 3, 3 + rng() % 5, 2);
    case 1: return random_linear(rng, 2 + rng() % 3, 3 + rng() % 5, 3);
    default: {
      const std::size_t r = 3 + rng() % 2;
      return random_sparse_paving(rng, r, r + 1 + rng() % (7 - r), 6);
    }
  }
}

}  // namespace oracle
