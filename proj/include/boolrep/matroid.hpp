#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "boolrep/errors.hpp"
#include "boolrep/matrix.hpp"

namespace boolrep {

/// Subset of a ground set, as a bitmask over ground positions (at most 64).
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(std::size_t i) { return ElementSet(std::uint64_t{1} << i); }
  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr ElementSet with(std::size_t i) const { return ElementSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr ElementSet without(std::size_t i) const { return ElementSet(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const ElementSet&) const = default;
  /// Numeric order of the masks; used as the canonical subset order.
  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Labeled finite ground set. The label order is the canonical element order.
class GroundSet {
 public:
  static constexpr std::size_t kMaxSize = 64;

  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  /// Labels "1".."n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> find(const std::string& label) const;
  ElementSet full() const { return ElementSet::full(size()); }

  ElementSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;
  /// "{1,2,3}", or "{}" for the empty set.
  std::string format(ElementSet s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> pos_;
};

/// Sorted by cardinality, then lexicographically on the ascending list of
/// element positions.
bool canonical_less(ElementSet a, ElementSet b);

/// Nonempty, downward closed family of subsets.
class HereditaryCollection {
 public:
  /// Validates HT1 and HT2. Duplicates in `family` are ignored.
  HereditaryCollection(GroundSet ground, std::vector<ElementSet> family);

  const GroundSet& ground() const { return ground_; }
  /// Members in increasing mask order.
  const std::vector<ElementSet>& family() const { return family_; }
  bool contains(ElementSet s) const;

  friend bool operator==(const HereditaryCollection& a, const HereditaryCollection& b) {
    return a.ground_ == b.ground_ && a.family_ == b.family_;
  }

 private:
  GroundSet ground_;
  std::vector<ElementSet> family_;
};

class NotDownwardClosed : public Error {
 public:
  NotDownwardClosed(ElementSet missing, ElementSet member, const std::string& what)
      : Error(ErrorCode::NotDownwardClosed, what), missing(missing), member(member) {}
  ElementSet missing;  ///< absent from the family
  ElementSet member;   ///< a member containing it
};

class ExchangeFails : public Error {
 public:
  ExchangeFails(ElementSet b1, ElementSet b2, std::size_t x, const std::string& what)
      : Error(ErrorCode::ExchangeFails, what), b1(b1), b2(b2), x(x) {}
  ElementSet b1, b2;
  std::size_t x;  ///< element of b1 - b2 with no exchange partner in b2 - b1
};

/// Matroid stored by its bases.
class Matroid {
 public:
  /// Validates equal basis sizes, basis exchange, and (for ground sets of at
  /// most 10 elements) the augmentation axiom on the independent family.
  Matroid(GroundSet ground, std::vector<ElementSet> bases);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  /// Sorted by mask.
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t rank() const { return rank_; }

  std::size_t rank_of(ElementSet x) const;
  bool is_independent(ElementSet x) const;
  bool is_basis(ElementSet x) const;
  HereditaryCollection independent_sets() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }

 private:
  GroundSet ground_;
  std::vector<ElementSet> bases_;
  std::size_t rank_ = 0;
};

HereditaryCollection hc_new(GroundSet ground, std::vector<ElementSet> family);
Matroid matroid_from_bases(GroundSet ground, std::vector<ElementSet> bases);
/// Bases are the maximal members; the family must itself be a matroid.
Matroid matroid_from_independent(const HereditaryCollection& h);

std::vector<ElementSet> circuits(const HereditaryCollection& h);
std::vector<ElementSet> circuits(const Matroid& m);
std::size_t hc_rank(const HereditaryCollection& h);

/// A violation of point replacement: no x in J has J - x + p independent.
struct PrViolation {
  std::size_t p;
  ElementSet j;
};

std::optional<PrViolation> find_pr_violation(const HereditaryCollection& h);
bool satisfies_pr(const HereditaryCollection& h);

bool is_simple(const Matroid& m);

struct Simplification {
  Matroid matroid;
  /// For each original element label: its class representative, or nothing
  /// for a loop.
  std::map<std::string, std::optional<std::string>> representative;
};

/// Deletes loops and keeps the first element of each parallel class.
/// Throws AllLoops when nothing remains.
Simplification simplify(const Matroid& m);

/// {y : rank(X + y) = rank(X)}
ElementSet closure(const Matroid& m, ElementSet x);
/// Closure by the circuit definition: X plus every y lying in a circuit inside X + y.
ElementSet closure_by_circuits(const Matroid& m, ElementSet x);
bool is_flat(const Matroid& m, ElementSet x);

/// All flats of a simple matroid in canonical order. Throws NotSimple.
std::vector<ElementSet> flats(const Matroid& m);

/// Independent column sets of `a`, with the column labels as ground set.
/// At most 24 columns.
HereditaryCollection hc_from_matrix(const SbMatrix& a);

/// phi[i] is the image in h2's ground set of element i of h1's ground set.
using Bijection = std::vector<std::size_t>;

/// Exhaustive search for an isomorphism; ground sets of at most 8 elements.
std::optional<Bijection> hc_isomorphic(const HereditaryCollection& h1, const HereditaryCollection& h2);

ElementSet apply_bijection(const Bijection& phi, ElementSet s);

}  // namespace boolrep
