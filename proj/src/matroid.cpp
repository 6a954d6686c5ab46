#include "boolrep/matroid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace boolrep {

namespace {

constexpr std::size_t kMaxEnumerableGround = 24;
constexpr std::size_t kAugmentationCheckLimit = 10;
constexpr std::size_t kIsomorphismLimit = 8;

void sort_unique(std::vector<ElementSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_within(const GroundSet& g, const std::vector<ElementSet>& sets) {
  for (auto s : sets)
    if (!s.is_subset_of(g.full()))
      throw Error(ErrorCode::InvalidArgument, "subset uses positions outside the ground set");
}

void require_enumerable(const GroundSet& g) {
  if (g.size() > kMaxEnumerableGround)
    throw Error(ErrorCode::GroundTooLarge,
                "ground set of " + std::to_string(g.size()) + " elements is too large to enumerate");
}

// Membership table over all 2^n subsets.
std::vector<bool> membership(const GroundSet& g, const std::vector<ElementSet>& family) {
  require_enumerable(g);
  std::vector<bool> in(std::size_t{1} << g.size(), false);
  for (auto s : family) in[s.bits()] = true;
  return in;
}

template <typename F>
void for_each_submask(ElementSet s, F&& f) {
  std::uint64_t b = s.bits();
  for (std::uint64_t sub = b;; sub = (sub - 1) & b) {
    f(ElementSet(sub));
    if (sub == 0) break;
  }
}

std::vector<ElementSet> circuits_of(const GroundSet& g, const std::vector<bool>& independent) {
  std::vector<ElementSet> out;
  const std::uint64_t n_sets = std::uint64_t{1} << g.size();
  for (std::uint64_t b = 1; b < n_sets; ++b) {
    if (independent[b]) continue;
    ElementSet s(b);
    bool minimal = true;
    for (auto i : s.elements())
      if (!independent[s.without(i).bits()]) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxSize)
    throw Error(ErrorCode::GroundTooLarge, "ground sets are limited to 64 elements");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty element label");
    if (!pos_.emplace(labels_[i], i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate element label '" + labels_[i] + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::size_t GroundSet::index_of(const std::string& label) const {
  auto it = pos_.find(label);
  if (it == pos_.end()) throw Error(ErrorCode::InvalidArgument, "unknown element '" + label + "'");
  return it->second;
}

std::optional<std::size_t> GroundSet::find(const std::string& label) const {
  auto it = pos_.find(label);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

ElementSet GroundSet::subset(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (auto i : s.elements()) out.push_back(labels_[i]);
  return out;
}

std::string GroundSet::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.elements()) {
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  }
  return out + "}";
}

bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ea = a.elements();
  auto eb = b.elements();
  return ea < eb;
}

// ---------------------------------------------------------------------------
// HereditaryCollection

HereditaryCollection::HereditaryCollection(GroundSet ground, std::vector<ElementSet> family)
    : ground_(std::move(ground)), family_(std::move(family)) {
  require_within(ground_, family_);
  sort_unique(family_);
  if (family_.empty()) throw Error(ErrorCode::EmptyFamily, "hereditary collection must be nonempty");
  for (auto y : family_) {
    std::optional<ElementSet> missing;
    for (auto i : y.elements()) {
      auto x = y.without(i);
      if (!contains(x) && (!missing || x < *missing)) missing = x;
    }
    if (missing)
      throw NotDownwardClosed(*missing, y,
                              "family is not downward closed: " + ground_.format(*missing) + " is missing below " +
                                  ground_.format(y));
  }
}

bool HereditaryCollection::contains(ElementSet s) const {
  return std::binary_search(family_.begin(), family_.end(), s);
}

HereditaryCollection hc_new(GroundSet ground, std::vector<ElementSet> family) {
  return HereditaryCollection(std::move(ground), std::move(family));
}

std::size_t hc_rank(const HereditaryCollection& h) {
  std::size_t r = 0;
  for (auto s : h.family()) r = std::max(r, s.size());
  return r;
}

std::vector<ElementSet> circuits(const HereditaryCollection& h) {
  return circuits_of(h.ground(), membership(h.ground(), h.family()));
}

std::optional<PrViolation> find_pr_violation(const HereditaryCollection& h) {
  for (std::size_t p = 0; p < h.ground().size(); ++p) {
    const auto sp = ElementSet::singleton(p);
    if (!h.contains(sp)) continue;
    for (auto j : h.family()) {
      if (j.empty()) continue;
      bool ok = false;
      for (auto x : j.elements())
        if (h.contains(j.without(x) | sp)) {
          ok = true;
          break;
        }
      if (!ok) return PrViolation{p, j};
    }
  }
  return std::nullopt;
}

bool satisfies_pr(const HereditaryCollection& h) { return !find_pr_violation(h).has_value(); }

// ---------------------------------------------------------------------------
// Matroid

Matroid::Matroid(GroundSet ground, std::vector<ElementSet> bases) : ground_(std::move(ground)), bases_(std::move(bases)) {
  require_within(ground_, bases_);
  sort_unique(bases_);
  if (bases_.empty()) throw Error(ErrorCode::EmptyFamily, "a matroid needs at least one basis");
  rank_ = bases_.front().size();
  for (auto b : bases_)
    if (b.size() != rank_)
      throw Error(ErrorCode::UnequalBasisSizes, "bases " + ground_.format(bases_.front()) + " and " +
                                                    ground_.format(b) + " have different sizes");
  for (auto b1 : bases_) {
    for (auto b2 : bases_) {
      for (auto x : (b1 - b2).elements()) {
        bool ok = false;
        for (auto y : (b2 - b1).elements())
          if (is_basis(b1.without(x).with(y))) {
            ok = true;
            break;
          }
        if (!ok)
          throw ExchangeFails(b1, b2, x,
                              "basis exchange fails for B1=" + ground_.format(b1) + ", B2=" + ground_.format(b2) +
                                  ", x=" + ground_.label(x));
      }
    }
  }
  if (ground_.size() <= kAugmentationCheckLimit) {
    const auto family = independent_sets().family();
    for (auto x : family) {
      for (auto y : family) {
        if (y.size() != x.size() + 1) continue;
        bool ok = false;
        for (auto e : (y - x).elements())
          if (is_independent(x.with(e))) {
            ok = true;
            break;
          }
        if (!ok)
          throw Error(ErrorCode::ExchangeFails,
                      "augmentation fails for X=" + ground_.format(x) + ", Y=" + ground_.format(y));
      }
    }
  }
}

bool Matroid::is_basis(ElementSet x) const { return std::binary_search(bases_.begin(), bases_.end(), x); }

std::size_t Matroid::rank_of(ElementSet x) const {
  std::size_t r = 0;
  for (auto b : bases_) r = std::max(r, (x & b).size());
  return r;
}

bool Matroid::is_independent(ElementSet x) const {
  return std::any_of(bases_.begin(), bases_.end(), [&](ElementSet b) { return x.is_subset_of(b); });
}

HereditaryCollection Matroid::independent_sets() const {
  std::vector<ElementSet> family;
  std::set<std::uint64_t> seen;
  for (auto b : bases_)
    for_each_submask(b, [&](ElementSet s) {
      if (seen.insert(s.bits()).second) family.push_back(s);
    });
  return HereditaryCollection(ground_, std::move(family));
}

Matroid matroid_from_bases(GroundSet ground, std::vector<ElementSet> bases) {
  return Matroid(std::move(ground), std::move(bases));
}

Matroid matroid_from_independent(const HereditaryCollection& h) {
  std::vector<ElementSet> maximal;
  for (auto s : h.family()) {
    bool is_max = true;
    for (std::size_t e = 0; e < h.ground().size() && is_max; ++e)
      if (!s.contains(e) && h.contains(s.with(e))) is_max = false;
    if (is_max) maximal.push_back(s);
  }
  return Matroid(h.ground(), std::move(maximal));
}

std::vector<ElementSet> circuits(const Matroid& m) {
  require_enumerable(m.ground());
  std::vector<bool> indep(std::size_t{1} << m.size(), false);
  for (auto b : m.bases()) for_each_submask(b, [&](ElementSet s) { indep[s.bits()] = true; });
  return circuits_of(m.ground(), indep);
}

bool is_simple(const Matroid& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (!m.is_independent(ElementSet::singleton(x))) return false;
    for (std::size_t y = x + 1; y < m.size(); ++y)
      if (!m.is_independent(ElementSet::singleton(x).with(y))) return false;
  }
  return true;
}

Simplification simplify(const Matroid& m) {
  const auto& g = m.ground();
  const std::size_t n = g.size();
  std::vector<std::optional<std::size_t>> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (m.rank_of(ElementSet::singleton(x)) == 0) continue;
    rep[x] = x;
    for (std::size_t y = 0; y < x; ++y)
      if (rep[y] == y && m.rank_of(ElementSet::singleton(x).with(y)) == 1) {
        rep[x] = y;
        break;
      }
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> new_pos(n, n);
  for (std::size_t x = 0; x < n; ++x)
    if (rep[x] == x) {
      new_pos[x] = labels.size();
      labels.push_back(g.label(x));
    }
  if (labels.empty()) throw Error(ErrorCode::AllLoops, "every element is a loop; the simple matroid would be empty");

  std::vector<ElementSet> bases;
  for (auto b : m.bases()) {
    ElementSet image;
    for (auto x : b.elements()) image = image.with(new_pos[*rep[x]]);
    bases.push_back(image);
  }
  Simplification out{Matroid(GroundSet(labels), std::move(bases)), {}};
  for (std::size_t x = 0; x < n; ++x)
    out.representative[g.label(x)] = rep[x] ? std::optional<std::string>(g.label(*rep[x])) : std::nullopt;
  return out;
}

ElementSet closure(const Matroid& m, ElementSet x) {
  const auto r = m.rank_of(x);
  ElementSet out = x;
  for (std::size_t y = 0; y < m.size(); ++y)
    if (!x.contains(y) && m.rank_of(x.with(y)) == r) out = out.with(y);
  return out;
}

ElementSet closure_by_circuits(const Matroid& m, ElementSet x) {
  ElementSet out = x;
  const auto cs = circuits(m);
  for (std::size_t y = 0; y < m.size(); ++y) {
    if (x.contains(y)) continue;
    for (auto c : cs)
      if (c.contains(y) && c.is_subset_of(x.with(y))) {
        out = out.with(y);
        break;
      }
  }
  return out;
}

bool is_flat(const Matroid& m, ElementSet x) { return closure(m, x) == x; }

std::vector<ElementSet> flats(const Matroid& m) {
  if (!is_simple(m)) throw Error(ErrorCode::NotSimple, "flats are enumerated for simple matroids only");
  std::set<std::uint64_t> seen;
  std::deque<ElementSet> queue;
  const auto bottom = closure(m, ElementSet{});
  seen.insert(bottom.bits());
  queue.push_back(bottom);
  while (!queue.empty()) {
    const auto f = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (f.contains(x)) continue;
      const auto g = closure(m, f.with(x));
      if (seen.insert(g.bits()).second) queue.push_back(g);
    }
  }
  std::vector<ElementSet> out;
  for (auto b : seen) out.emplace_back(b);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

HereditaryCollection hc_from_matrix(const SbMatrix& a) {
  GroundSet ground(a.col_labels());
  require_enumerable(ground);
  std::vector<std::uint64_t> nz(a.n_rows()), one(a.n_rows());
  for (std::size_t r = 0; r < a.n_rows(); ++r) {
    a.row_nonzero(r).for_each([&](std::size_t c) { nz[r] |= std::uint64_t{1} << c; });
    a.row_ones(r).for_each([&](std::size_t c) { one[r] |= std::uint64_t{1} << c; });
  }
  const std::uint64_t n_sets = std::uint64_t{1} << ground.size();
  std::vector<bool> indep(n_sets, false);
  indep[0] = true;
  std::vector<ElementSet> family{ElementSet{}};
  for (std::uint64_t y = 1; y < n_sets; ++y) {
    // A row that restricts to a single One on Y reduces Y to Y without that
    // column; which such row is used does not matter.
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
      const std::uint64_t s = nz[r] & y;
      if (s != 0 && (s & (s - 1)) == 0 && (one[r] & s) != 0) {
        indep[y] = indep[y ^ s];
        break;
      }
    }
    if (indep[y]) family.emplace_back(y);
  }
  return HereditaryCollection(std::move(ground), std::move(family));
}

ElementSet apply_bijection(const Bijection& phi, ElementSet s) {
  ElementSet out;
  for (auto i : s.elements()) out = out.with(phi.at(i));
  return out;
}

std::optional<Bijection> hc_isomorphic(const HereditaryCollection& h1, const HereditaryCollection& h2) {
  const std::size_t n = h1.ground().size();
  if (n > kIsomorphismLimit || h2.ground().size() > kIsomorphismLimit)
    throw Error(ErrorCode::GroundTooLarge, "isomorphism search is limited to 8 elements");
  if (h2.ground().size() != n || h1.family().size() != h2.family().size()) return std::nullopt;

  // Per element: counts of independent sets containing it, by size.
  auto signature = [n](const HereditaryCollection& h) {
    std::vector<std::vector<std::size_t>> sig(n, std::vector<std::size_t>(n + 1, 0));
    for (auto s : h.family())
      for (auto e : s.elements()) ++sig[e][s.size()];
    return sig;
  };
  const auto sig1 = signature(h1);
  const auto sig2 = signature(h2);
  std::vector<std::vector<ElementSet>> by_top(n);
  for (auto s : h1.family())
    if (!s.empty()) by_top[63 - static_cast<std::size_t>(std::countl_zero(s.bits()))].push_back(s);

  Bijection phi(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || sig1[i] != sig2[t]) continue;
      phi[i] = t;
      bool ok = true;
      for (auto s : by_top[i])
        if (!h2.contains(apply_bijection(phi, s))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[t] = true;
      if (assign(i + 1)) return true;
      used[t] = false;
    }
    phi[i] = n;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return phi;
}

}  // namespace boolrep
