#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boolrep/catalog.hpp"
#include "boolrep/errors.hpp"
#include "boolrep/lattice.hpp"
#include "oracles.hpp"

using namespace boolrep;

namespace {

std::vector<Matroid> catalog() { return {uniform(3, 4), example_5pt(), k4(), whirl_w3(), uniform(2, 4), uniform(3, 5)}; }

std::vector<std::vector<bool>> order_of(std::size_t n, const std::vector<std::pair<int, int>>& less) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : less) leq[a][b] = true;
  return leq;
}

// Every strict chain above the bottom, as ascending index lists.
void strict_chains(const FlatLattice& l, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  out.push_back(cur);
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (j == l.bottom()) continue;
    if (!cur.empty() && !l.less(cur.back(), j)) continue;
    cur.push_back(j);
    strict_chains(l, cur, out);
    cur.pop_back();
  }
}

std::vector<std::size_t> row(const BoolMatrix& m, std::size_t i) {
  std::vector<std::size_t> r;
  for (std::size_t j = 0; j < m.n_cols(); ++j) r.push_back(m.at(i, j));
  return r;
}

}  // namespace

TEST_CASE("flat lattices of small matroids") {
  const auto u = flat_lattice(uniform(3, 4));
  CHECK(u.size() == 12);
  CHECK(u.height() == 3);
  const auto k = flat_lattice(k4());
  CHECK(k.size() == 15);
  CHECK(k.height() == 3);
  const auto point = flat_lattice(uniform(1, 1));
  CHECK(point.size() == 2);
  CHECK(point.height() == 1);
  CHECK(point.less(point.bottom(), point.top()));
  GroundSet g({"1", "2"});
  CHECK_THROWS_AS(flat_lattice(Matroid(g, {g.subset({"1"}), g.subset({"2"})})), Error);
}

TEST_CASE("lattice of flats: meets, joins, atoms") {
  for (const auto& m : catalog()) {
    const auto l = flat_lattice(m);
    CHECK(l.atoms().size() == m.size());
    for (std::size_t x = 0; x < m.size(); ++x) CHECK(l.flat(l.atom_of(x)) == ElementSet::singleton(x));
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) {
        CHECK(l.flat(l.meet(i, j)) == (l.flat(i) & l.flat(j)));
        CHECK(l.flat(l.join(i, j)) == closure(m, l.flat(i) | l.flat(j)));
        CHECK(l.leq(i, j) == l.flat(i).is_subset_of(l.flat(j)));
      }
  }
}

TEST_CASE("structure matrix") {
  const auto two = flat_lattice(uniform(1, 1));
  const auto s = structure_matrix(two);
  CHECK(row(s, 0) == std::vector<std::size_t>{1, 1});
  CHECK(row(s, 1) == std::vector<std::size_t>{0, 1});
  const auto u = structure_matrix(flat_lattice(uniform(3, 4)));
  CHECK(u.n_rows() == 12);
  CHECK(u.n_cols() == 12);
  for (const auto& m : catalog()) {
    const auto l = flat_lattice(m);
    const auto a = structure_matrix(l);
    for (std::size_t j = 0; j < l.size(); ++j) CHECK(a.at(l.bottom(), j));
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(a.at(i, i));
      for (std::size_t j = 0; j < l.size(); ++j)
        if (i != j) {
          CHECK_FALSE((a.at(i, j) && a.at(j, i)));
          if (l.leq(i, j) || l.leq(j, i)) CHECK(a.at(i, j) != a.at(j, i));
        }
    }
  }
}

TEST_CASE("lattice representation") {
  const auto two = lattice_representation(flat_lattice(uniform(1, 1)));
  CHECK(row(two, 0) == std::vector<std::size_t>{0, 0});
  CHECK(row(two, 1) == std::vector<std::size_t>{1, 0});

  const auto l = flat_lattice(example_5pt());
  const auto a = lattice_representation(l);
  CHECK(a.row_labels() == l.labels());
  CHECK(row(a, l.index_of("{1}")) == std::vector<std::size_t>{1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0});
  for (const auto& m : catalog()) {
    const auto lm = flat_lattice(m);
    const auto r = lattice_representation(lm);
    for (std::size_t i = 0; i < lm.size(); ++i) CHECK_FALSE(r.at(i, lm.top()));
    CHECK(r.sb() == complement(structure_matrix(lm).sb()));
  }
}

TEST_CASE("heights") {
  const auto l = flat_lattice(uniform(3, 4));
  CHECK(l.height() == 3);
  CHECK(l.element_height(l.bottom()) == 0);
  for (auto a : l.atoms()) CHECK(l.element_height(a) == 1);
  for (const auto& m : catalog()) {
    const auto lm = flat_lattice(m);
    for (std::size_t i = 0; i < lm.size(); ++i) CHECK(lm.element_height(i) == m.rank_of(lm.flat(i)));
  }
}

TEST_CASE("nook equals height") {
  std::vector<Matroid> ms = catalog();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) ms.push_back(oracle::random_matroid(rng));
  for (const auto& m : ms) {
    const auto l = flat_lattice(m);
    CHECK(nook(l) == l.height());
    CHECK(nook(l) == m.rank());
    CHECK(nook(l) <= l.size());
  }
}

TEST_CASE("nook of three collinear atoms") {
  const auto l = flat_lattice(example_5pt());
  const std::vector<std::size_t> w{l.index_of("{1}"), l.index_of("{2}"), l.index_of("{3}")};
  CHECK(nook(l, w) == 2);
  CHECK_FALSE(is_c_independent(l, w));
  const auto rows = lattice_representation(l).sb().select_rows(w);
  CHECK(oracle::row_rank(rows) == 2);
  CHECK_THROWS_AS(nook(l, std::vector<std::size_t>{99}), Error);
}

TEST_CASE("strict chains are c-independent with the chain witness") {
  for (const auto& m : catalog()) {
    const auto l = flat_lattice(m);
    const auto rep = lattice_representation(l);
    std::vector<std::size_t> cur;
    std::vector<std::vector<std::size_t>> chains;
    strict_chains(l, cur, chains);
    for (const auto& c : chains) {
      CHECK(nook(l, c) == c.size());
      const auto w = chain_witness(l, c);
      REQUIRE(w.cols.size() == c.size());
      if (!c.empty()) CHECK(w.cols.front() == l.bottom());
      CHECK(is_nonsingular(rep.sb().submatrix(w.rows, w.cols)));
      const auto back = witness_to_chain(l, w);
      CHECK(back.size() == c.size());
      for (std::size_t i = 1; i < back.size(); ++i) CHECK(l.less(back[i - 1], back[i]));
    }
  }
  const auto l = flat_lattice(k4());
  CHECK_THROWS_AS(chain_witness(l, {l.index_of("{1,2,4}"), l.index_of("{1}")}), Error);
}

TEST_CASE("witnesses give strict chains") {
  // Two-element chain: W = {T}, U = {B}.
  const auto two = flat_lattice(uniform(1, 1));
  const auto c = witness_to_chain(two, LatticeWitness{{two.top()}, {two.bottom()}});
  CHECK(c == std::vector<std::size_t>{two.bottom()});
  CHECK_FALSE(two.leq(two.top(), two.bottom()));
  CHECK_THROWS_AS(witness_to_chain(two, LatticeWitness{{two.bottom()}, {two.bottom()}}), Error);

  std::mt19937_64 rng(22);
  for (const auto& m : catalog()) {
    const auto l = flat_lattice(m);
    for (int t = 0; t < 300; ++t) {
      std::vector<std::size_t> w;
      for (std::size_t i = 0; i < l.size(); ++i)
        if (rng() % 5 == 0) w.push_back(i);
      const auto lw = lattice_witness(l, w);
      CHECK(lw.has_value() == is_c_independent(l, w));
      if (!lw) continue;
      const auto chain = witness_to_chain(l, *lw);
      CHECK(chain.size() == w.size());
      for (std::size_t i = 1; i < chain.size(); ++i) CHECK(l.less(chain[i - 1], chain[i]));
    }
  }
}

TEST_CASE("geometric lattices") {
  for (const auto& m : catalog()) CHECK(is_geometric(flat_lattice(m)));
  CHECK(is_geometric(flat_lattice(uniform(2, 2))));

  // Pentagon: 0 < a < c < 1 and 0 < b < 1.
  const auto pentagon =
      FlatLattice::from_order({"0", "a", "c", "b", "1"}, order_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}}));
  const auto pr = geometric_report(pentagon);
  CHECK_FALSE(pr.jordan_dedekind);
  CHECK_FALSE(is_geometric(pentagon));

  // Three-element chain: graded and semimodular but the top is no join of atoms.
  const auto chain = FlatLattice::from_order({"0", "a", "1"}, order_of(3, {{0, 1}, {0, 2}, {1, 2}}));
  const auto cr = geometric_report(chain);
  CHECK(cr.jordan_dedekind);
  CHECK(cr.semimodular);
  CHECK_FALSE(cr.atomistic);

  // Not a lattice: two incomparable upper bounds.
  CHECK_THROWS_AS(FlatLattice::from_order({"0", "a", "b", "c", "d", "1"},
                                          order_of(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 3},
                                                       {2, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}})),
                  Error);
  // Not antisymmetric.
  CHECK_THROWS_AS(FlatLattice::from_order({"x", "y"}, order_of(2, {{0, 1}, {1, 0}})), Error);
}

TEST_CASE("nook bounds") {
  std::mt19937_64 rng(23);
  for (const auto& m : catalog()) {
    const auto l = flat_lattice(m);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::size_t> w;
      for (std::size_t i = 0; i < l.size(); ++i)
        if (rng() % 3 == 0) w.push_back(i);
      CHECK(nook(l, w) <= nook(l));
      CHECK(nook(l, w) <= w.size());
    }
  }
}
