#include "boolrep/extraction.hpp"

#include <algorithm>
#include <set>

#include "boolrep/errors.hpp"

namespace boolrep {

namespace {

Representation with_rows(const Representation& r, const std::vector<std::size_t>& keep, ReductionMode mode) {
  Representation out;
  out.matrix = r.matrix.select_rows(keep);
  for (auto i : keep) out.provenance.push_back(r.provenance.at(i));
  out.mode = mode;
  return out;
}

}  // namespace

std::string_view to_string(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::Full: return "full";
    case ReductionMode::Paper: return "paper";
    case ReductionMode::Dedupe: return "dedupe";
    case ReductionMode::Verified: return "verified";
  }
  return "?";
}

std::optional<ReductionMode> parse_reduction_mode(std::string_view s) {
  if (s == "none" || s == "full") return ReductionMode::Full;
  if (s == "paper") return ReductionMode::Paper;
  if (s == "dedupe") return ReductionMode::Dedupe;
  if (s == "verified") return ReductionMode::Verified;
  return std::nullopt;
}

Representation extract_representation(const Matroid& m) {
  const auto lattice = flat_lattice(m);
  const auto rep = lattice_representation(lattice);
  std::vector<std::size_t> atom_rows;
  for (std::size_t x = 0; x < m.size(); ++x) atom_rows.push_back(lattice.atom_of(x));
  const auto restricted = transpose(rep.select_rows(atom_rows));

  std::vector<SBool> e;
  for (std::size_t i = 0; i < restricted.n_rows(); ++i)
    for (std::size_t j = 0; j < restricted.n_cols(); ++j) e.push_back(restricted.sb().at(i, j));
  Representation out;
  out.matrix = BoolMatrix(SbMatrix(restricted.n_rows(), restricted.n_cols(), std::move(e), restricted.row_labels(),
                                   m.ground().labels()));
  for (std::size_t i = 0; i < lattice.size(); ++i) out.provenance.push_back(lattice.flat(i));
  out.mode = ReductionMode::Full;
  return out;
}

Representation paper_reduce(const Representation& r) {
  if (r.mode != ReductionMode::Full || r.provenance.size() != r.matrix.n_rows())
    throw Error(ErrorCode::InvalidArgument, "paper reduction needs a full representation");
  const auto everything = ElementSet::full(r.matrix.n_cols());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r.provenance.size(); ++i) {
    const auto f = r.provenance[i];
    if (f.empty() || (f.size() >= 2 && f != everything)) keep.push_back(i);
  }
  return with_rows(r, keep, ReductionMode::Paper);
}

Representation dedupe_reduce(const Representation& r) {
  std::vector<std::size_t> keep;
  std::set<std::vector<bool>> seen;
  for (std::size_t i = 0; i < r.matrix.n_rows(); ++i) {
    std::vector<bool> row(r.matrix.n_cols());
    bool zero = true;
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] = r.matrix.at(i, j);
      zero = zero && !row[j];
    }
    if (zero || !seen.insert(row).second) continue;
    keep.push_back(i);
  }
  return with_rows(r, keep, ReductionMode::Dedupe);
}

Representation verified_reduce(const Representation& r, const Matroid& m) {
  auto current = dedupe_reduce(r);
  std::size_t i = 0;
  while (i < current.matrix.n_rows()) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < current.matrix.n_rows(); ++j)
      if (j != i) keep.push_back(j);
    auto candidate = with_rows(current, keep, ReductionMode::Verified);
    if (verify_representation(candidate.matrix, m).ok)
      current = std::move(candidate);
    else
      ++i;
  }
  current.mode = ReductionMode::Verified;
  return current;
}

Representation reduce(const Representation& r, const Matroid& m, ReductionMode mode) {
  Representation out;
  switch (mode) {
    case ReductionMode::Full: out = r; break;
    case ReductionMode::Paper: out = paper_reduce(r); break;
    case ReductionMode::Dedupe: out = dedupe_reduce(r); break;
    case ReductionMode::Verified: out = verified_reduce(r, m); break;
  }
  const auto report = verify_representation(out.matrix, m);
  if (!report.ok)
    throw Error(ErrorCode::ReductionFailed, std::string(to_string(mode)) + " reduction no longer represents the matroid (" +
                                                std::to_string(report.mismatches.size()) + " mismatched subsets)");
  return out;
}

VerificationReport verify_representation(const SbMatrix& a, const Matroid& m) {
  const auto& g = m.ground();
  if (g.size() > kMaxVerifyGround)
    throw Error(ErrorCode::GroundTooLarge, "verification is limited to 12 elements");
  std::vector<std::string> cols = a.col_labels(), labels = g.labels();
  std::sort(cols.begin(), cols.end());
  std::sort(labels.begin(), labels.end());
  if (cols != labels) throw Error(ErrorCode::LabelMismatch, "matrix columns do not match the ground set");

  std::vector<std::size_t> column_of(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) column_of[x] = a.col_index(g.label(x));

  VerificationReport report;
  const std::uint64_t n_sets = std::uint64_t{1} << g.size();
  for (std::uint64_t b = 0; b < n_sets; ++b) {
    ElementSet y(b);
    std::vector<std::size_t> idx;
    for (auto x : y.elements()) idx.push_back(column_of[x]);
    if (columns_independent(a, idx) != m.is_independent(y)) report.mismatches.push_back(y);
    ++report.checked_count;
  }
  report.ok = report.mismatches.empty();
  return report;
}

VerificationReport verify_representation(const Representation& r, const Matroid& m) {
  return verify_representation(r.matrix.sb(), m);
}

std::uint64_t size_bound(std::size_t n, std::size_t rank) {
  std::uint64_t total = 0, binom = 1;  // binom = C(n, i)
  for (std::size_t i = 0; i <= rank && i <= n; ++i) {
    total += binom;
    binom = binom * (n - i) / (i + 1);
  }
  return total;
}

std::uint64_t size_bound(const Matroid& m) { return size_bound(m.size(), m.rank()); }

TropicalMatrix tropicalize(const BoolMatrix& m) {
  TropicalMatrix t{m.n_rows(), m.n_cols(), {}, m.row_labels(), m.col_labels()};
  t.entries.reserve(m.n_rows() * m.n_cols());
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j) t.entries.push_back(m.at(i, j) ? MaxPlus::unit() : MaxPlus::neg_inf());
  return t;
}

TropicalMatrix tropicalize(const Representation& r) { return tropicalize(r.matrix); }

BoolMatrix detropicalize(const TropicalMatrix& t) {
  std::vector<SBool> e;
  e.reserve(t.entries.size());
  for (auto v : t.entries) {
    if (v.is_neg_inf())
      e.push_back(SBool::Zero);
    else if (v.value == 0.0)
      e.push_back(SBool::One);
    else
      throw Error(ErrorCode::InvalidArgument, "tropical entry outside the boolean image");
  }
  return BoolMatrix(SbMatrix(t.n_rows, t.n_cols, std::move(e), t.row_labels, t.col_labels));
}

}  // namespace boolrep
