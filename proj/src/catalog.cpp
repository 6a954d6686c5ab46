#include "boolrep/catalog.hpp"

#include <algorithm>

#include "boolrep/errors.hpp"

namespace boolrep {

namespace {

std::vector<ElementSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<ElementSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
    if (ElementSet(b).size() == k) out.emplace_back(b);
  return out;
}

Matroid rank3_except(std::size_t n, const std::vector<std::vector<std::string>>& non_bases) {
  auto ground = GroundSet::numbered(n);
  std::vector<ElementSet> excluded;
  for (const auto& nb : non_bases) excluded.push_back(ground.subset(nb));
  auto bases = k_subsets(n, 3);
  std::erase_if(bases, [&](ElementSet b) { return std::find(excluded.begin(), excluded.end(), b) != excluded.end(); });
  return Matroid(std::move(ground), std::move(bases));
}

}  // namespace

Matroid uniform(std::size_t k, std::size_t n) {
  if (k > n) throw Error(ErrorCode::InvalidArgument, "uniform matroid needs k <= n");
  return Matroid(GroundSet::numbered(n), k_subsets(n, k));
}

Matroid example_5pt() { return rank3_except(5, {{"1", "2", "3"}, {"3", "4", "5"}}); }

Matroid k4() { return rank3_except(6, {{"1", "2", "4"}, {"1", "3", "5"}, {"3", "4", "6"}, {"2", "5", "6"}}); }

Matroid whirl_w3() { return rank3_except(6, {{"1", "2", "4"}, {"1", "3", "5"}, {"2", "3", "6"}}); }

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"u34", "fivept", "k4", "w3"};
  return names;
}

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "u34") return {name, "uniform matroid U(3,4)", uniform(3, 4), 12, 7};
  if (name == "fivept") return {name, "five points, lines {1,2,3} and {3,4,5}", example_5pt(), 13, 7};
  if (name == "k4") return {name, "cycle matroid of K4", k4(), 15, 8};
  if (name == "w3") return {name, "rank-3 whirl", whirl_w3(), 17, 10};
  throw Error(ErrorCode::InvalidArgument, "unknown catalog entry '" + name + "' (known: u34, fivept, k4, w3)");
}

}  // namespace boolrep
