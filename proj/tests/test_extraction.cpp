#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boolrep/catalog.hpp"
#include "boolrep/errors.hpp"
#include "boolrep/extraction.hpp"
#include "boolrep/io.hpp"
#include "boolrep/partitions.hpp"
#include "oracles.hpp"

using namespace boolrep;

namespace {

std::vector<Matroid> catalog() { return {uniform(3, 4), example_5pt(), k4(), whirl_w3(), uniform(2, 4), uniform(3, 5)}; }

SbMatrix golden(const std::string& name) { return matrix_from_csv(read_file(std::string(BOOLREP_GOLDEN_DIR) + "/" + name + ".csv")); }

std::set<std::uint64_t> family_masks(const HereditaryCollection& h) {
  std::set<std::uint64_t> out;
  for (auto s : h.family()) out.insert(s.bits());
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Internal;
}

// Same shape and labels, one entry replaced.
SbMatrix with_entry(const SbMatrix& a, std::size_t i, std::size_t j, SBool v) {
  std::vector<SBool> e;
  for (std::size_t r = 0; r < a.n_rows(); ++r)
    for (std::size_t c = 0; c < a.n_cols(); ++c) e.push_back(r == i && c == j ? v : a.at(r, c));
  return SbMatrix(a.n_rows(), a.n_cols(), e, a.row_labels(), a.col_labels());
}

}  // namespace

TEST_CASE("full extraction of the 5-point example") {
  const auto m = example_5pt();
  const auto r = extract_representation(m);
  CHECK(r.matrix.n_rows() == 13);
  CHECK(r.matrix.n_cols() == 5);
  CHECK(r.mode == ReductionMode::Full);
  CHECK(r.matrix.col_labels() == m.ground().labels());
  CHECK(r.provenance == flats(m));
  for (std::size_t i = 0; i < r.matrix.n_rows(); ++i)
    for (std::size_t x = 0; x < 5; ++x) CHECK(r.matrix.at(i, x) == !r.provenance[i].contains(x));

  const auto g = golden("fivept_reduced");
  const std::vector<std::string> keep{"{}", "{1,4}", "{1,5}", "{2,4}", "{2,5}", "{1,2,3}", "{3,4,5}"};
  const auto sub = r.matrix.sb().select_rows(r.matrix.sb().row_indices(keep));
  CHECK(sub == g);
}

TEST_CASE("full extraction sizes") {
  CHECK(extract_representation(k4()).matrix.n_rows() == 15);
  CHECK(extract_representation(whirl_w3()).matrix.n_rows() == 17);
  CHECK(extract_representation(uniform(3, 4)).matrix.n_rows() == 12);
  GroundSet g({"a", "b"});
  CHECK(code_of([&] { extract_representation(Matroid(g, {g.subset({"a"})})); }) == ErrorCode::NotSimple);
}

TEST_CASE("paper reduction matches the golden tables") {
  const auto p = reduce(extract_representation(example_5pt()), example_5pt(), ReductionMode::Paper);
  CHECK(p.mode == ReductionMode::Paper);
  CHECK(p.matrix.sb() == golden("fivept_reduced"));
  for (std::size_t x = 0; x < 5; ++x) CHECK(p.matrix.at(0, x));

  const auto k = paper_reduce(extract_representation(k4()));
  CHECK(k.matrix.row_labels() ==
        std::vector<std::string>{"{}", "{1,6}", "{2,3}", "{4,5}", "{1,2,4}", "{1,3,5}", "{2,5,6}", "{3,4,6}"});
  CHECK(k.matrix.n_cols() == 6);

  const auto w = paper_reduce(extract_representation(whirl_w3()));
  CHECK(w.matrix.n_rows() == 10);
  CHECK(w.matrix.sb() == golden("w3_reduced"));
}

TEST_CASE("paper reduction is verified, and fails loudly in rank 2") {
  for (const auto& m : {uniform(3, 4), example_5pt(), k4(), whirl_w3(), uniform(3, 5)}) {
    const auto p = paper_reduce(extract_representation(m));
    CHECK(verify_representation(p, m).ok);
    CHECK_NOTHROW(reduce(extract_representation(m), m, ReductionMode::Paper));
  }
  // Only the empty flat survives: one all-ones row cannot hold two independent columns.
  const auto u24 = uniform(2, 4);
  const auto p = paper_reduce(extract_representation(u24));
  CHECK(p.matrix.n_rows() == 1);
  CHECK_FALSE(verify_representation(p, u24).ok);
  CHECK(code_of([&] { reduce(extract_representation(u24), u24, ReductionMode::Paper); }) == ErrorCode::ReductionFailed);
}

TEST_CASE("rank-1 one-point matroid") {
  const auto m = uniform(1, 1);
  const auto p = reduce(extract_representation(m), m, ReductionMode::Paper);
  REQUIRE(p.matrix.n_rows() == 1);
  CHECK(p.matrix.row_labels()[0] == "{}");
  CHECK(p.matrix.at(0, 0));
}

TEST_CASE("dedupe and verified reductions") {
  const auto m = uniform(2, 3);
  const auto g = m.ground();
  SbMatrix dup(4, 3, {SBool::Zero, SBool::One, SBool::One, SBool::Zero, SBool::One, SBool::One, SBool::One, SBool::Zero,
                      SBool::One, SBool::Zero, SBool::Zero, SBool::Zero},
               {"a", "b", "c", "z"}, g.labels());
  Representation r{BoolMatrix(dup), {g.subset({"1"}), g.subset({"1"}), g.subset({"2"}), g.full()}, ReductionMode::Full};
  const auto d = dedupe_reduce(r);
  CHECK(d.matrix.row_labels() == std::vector<std::string>{"a", "c"});
  CHECK(d.provenance.size() == 2);

  const auto full = extract_representation(example_5pt());
  const auto dd = reduce(full, example_5pt(), ReductionMode::Dedupe);
  CHECK(dd.matrix.n_rows() == 12);

  for (const auto& cm : catalog()) {
    const auto v = reduce(extract_representation(cm), cm, ReductionMode::Verified);
    CHECK(verify_representation(v, cm).ok);
    CHECK(v.mode == ReductionMode::Verified);
  }
  CHECK(verified_reduce(full, example_5pt()).matrix.n_rows() <= 7);

  // Starting from the golden W3 table.
  const auto w3 = whirl_w3();
  const auto table = golden("w3_reduced");
  std::vector<ElementSet> prov;
  for (const auto& l : table.row_labels()) {
    const auto inner = l.substr(1, l.size() - 2);
    std::vector<std::string> parts;
    for (std::size_t s = 0; s < inner.size();) {
      auto e = inner.find(',', s);
      if (e == std::string::npos) e = inner.size();
      parts.push_back(inner.substr(s, e - s));
      s = e + 1;
    }
    prov.push_back(w3.ground().subset(parts));
  }
  const auto vw = verified_reduce(Representation{BoolMatrix(table), prov, ReductionMode::Paper}, w3);
  CHECK(vw.matrix.n_rows() <= 10);
  CHECK(verify_representation(vw, w3).ok);

  CHECK(parse_reduction_mode("none") == ReductionMode::Full);
  CHECK(parse_reduction_mode("verified") == ReductionMode::Verified);
  CHECK_FALSE(parse_reduction_mode("min"));
  CHECK(to_string(ReductionMode::Paper) == "paper");
}

TEST_CASE("extracted matrices represent their matroids") {
  std::vector<Matroid> ms = catalog();
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) ms.push_back(oracle::random_matroid(rng));
  for (const auto& m : ms) {
    const auto r = extract_representation(m);
    const auto rep = verify_representation(r, m);
    CHECK(rep.ok);
    CHECK(rep.mismatches.empty());
    CHECK(rep.checked_count == (std::size_t{1} << m.size()));
    CHECK(family_masks(hc_from_matrix(r.matrix)) == oracle::independent_masks(m));
    CHECK(rank(r.matrix) == m.rank());
    CHECK(r.matrix.n_rows() == oracle::flats(m).size());
    CHECK(r.matrix.n_rows() <= size_bound(m));
    CHECK(satisfies_pr(hc_from_matrix(r.matrix)));
  }
}

TEST_CASE("witness rows in the extracted 5-point matrix") {
  const auto p = paper_reduce(extract_representation(example_5pt())).matrix.sb();
  const auto cols = p.col_indices({"1", "2", "4"});
  const auto rows = p.row_indices({"{1,4}", "{2,4}", "{1,2,3}"});
  const auto sub = p.submatrix(rows, cols);
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t ones = 0, col_ones = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      ones += sub.at(i, j) == SBool::One;
      col_ones += sub.at(j, i) == SBool::One;
    }
    CHECK(ones == 1);
    CHECK(col_ones == 1);
  }
  CHECK(is_nonsingular(sub));
  const auto w = witness(p, cols);
  REQUIRE(w);
  CHECK(is_nonsingular(p.submatrix(*w, cols)));
}

TEST_CASE("golden A(K4) verifies") {
  const auto rep = verify_representation(golden("k4_reduced"), k4());
  for (auto s : rep.mismatches) MESSAGE("mismatch on " << k4().ground().format(s));
  CHECK(rep.ok);
}

TEST_CASE("perturbing A(K4)") {
  const auto m = k4();
  const auto a = paper_reduce(extract_representation(m)).matrix.sb();
  const auto base = verify_representation(a, m);
  CHECK(base.ok);
  CHECK(base.checked_count == 64);
  const auto i = a.row_index("{1,6}"), j = a.col_index("1");
  REQUIRE(a.at(i, j) == SBool::Zero);
  const auto perturbed = verify_representation(with_entry(a, i, j, SBool::One), m);
  CHECK(perturbed.checked_count == 64);
  CHECK(perturbed.ok == perturbed.mismatches.empty());
  MESSAGE("perturbed A(K4): " << perturbed.mismatches.size() << " mismatches");
}

TEST_CASE("verification errors and mismatch order") {
  const auto m = uniform(2, 3);
  const auto a = extract_representation(m).matrix.sb();
  const auto relabeled = SbMatrix(a.n_rows(), a.n_cols(), std::vector<SBool>(a.n_rows() * a.n_cols(), SBool::One),
                                  a.row_labels(), {"1", "2", "x"});
  CHECK(code_of([&] { verify_representation(relabeled, m); }) == ErrorCode::LabelMismatch);

  // Column order may differ from the ground order; labels decide.
  const std::vector<std::size_t> perm{2, 0, 1};
  CHECK(verify_representation(a.select_cols(perm), m).ok);

  const auto big = uniform(2, 13);
  const auto br = extract_representation(big);
  CHECK(code_of([&] { verify_representation(br, big); }) == ErrorCode::GroundTooLarge);

  // An all-ones row: every pair of columns is dependent.
  const auto ones = SbMatrix(1, 3, {SBool::One, SBool::One, SBool::One}, {"r"}, m.ground().labels());
  const auto rep = verify_representation(ones, m);
  CHECK_FALSE(rep.ok);
  CHECK(rep.mismatches.size() == 3);
  for (std::size_t k = 1; k < rep.mismatches.size(); ++k) CHECK(rep.mismatches[k - 1].bits() < rep.mismatches[k].bits());
}

TEST_CASE("size bound") {
  CHECK(size_bound(5, 3) == 26);
  CHECK(size_bound(6, 3) == 42);
  CHECK(size_bound(4, 0) == 1);
  CHECK(size_bound(example_5pt()) == 26);
  CHECK(13 <= size_bound(example_5pt()));
  CHECK(15 <= size_bound(k4()));
  CHECK(17 <= size_bound(whirl_w3()));
  CHECK(size_bound(60, 30) > size_bound(60, 29));
}

TEST_CASE("tropical embedding") {
  const auto t = tropicalize(BoolMatrix::from_rows({{1, 0}}));
  REQUIRE(t.entries.size() == 2);
  CHECK(t.at(0, 0) == MaxPlus::unit());
  CHECK(t.at(0, 1).is_neg_inf());

  const auto ones = tropicalize(BoolMatrix::from_rows({{1, 1}, {1, 1}}));
  for (auto e : ones.entries) CHECK(e.value == 0.0);

  for (const auto& m : catalog()) {
    const auto r = extract_representation(m);
    const auto tr = tropicalize(r);
    CHECK(tr.row_labels == r.matrix.row_labels());
    CHECK(detropicalize(tr) == r.matrix);
  }
  auto bad = t;
  bad.entries[0].value = 3.0;
  CHECK(code_of([&] { detropicalize(bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("proof trace: closure chains of bases") {
  for (const auto& m : catalog()) {
    const auto l = flat_lattice(m);
    for (auto b : m.bases()) {
      auto order = b.elements();
      do {
        MaximalChain c;
        ElementSet prefix;
        c.flats.push_back(l.index_of_flat(closure(m, prefix)));
        for (auto x : order) {
          prefix = prefix.with(x);
          c.flats.push_back(l.index_of_flat(closure(m, prefix)));
        }
        REQUIRE(c.flats.size() == l.height() + 1);
        CHECK(c.flats.back() == l.top());
        for (std::size_t i = 1; i < c.flats.size(); ++i) CHECK(l.upper_covers(c.flats[i - 1]).end() !=
                                                               std::find(l.upper_covers(c.flats[i - 1]).begin(),
                                                                         l.upper_covers(c.flats[i - 1]).end(), c.flats[i]));
        const auto q = partition_of_chain(l, c);
        for (std::size_t i = 0; i < order.size(); ++i) CHECK(q.blocks[i].contains(order[i]));
        CHECK(is_partial_transversal(q, b));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("proof trace: circuits give c-dependent atoms") {
  for (const auto& m : catalog()) {
    const auto l = flat_lattice(m);
    for (auto c : circuits(m)) {
      const auto atoms = atoms_of(l, c);
      CHECK_FALSE(is_c_independent(l, atoms));
      CHECK(nook(l, atoms) == c.size() - 1);
    }
  }
}
