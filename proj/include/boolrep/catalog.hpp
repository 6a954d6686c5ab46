#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "boolrep/matroid.hpp"

namespace boolrep {

/// U(k, n) on {1..n}: every k-subset is a basis. Throws InvalidArgument if k > n.
Matroid uniform(std::size_t k, std::size_t n);

/// Rank 3 on {1..5}; every 3-subset except {1,2,3} and {3,4,5} is a basis.
Matroid example_5pt();
/// Cycle matroid of K4 on {1..6}; 3-subsets except {1,2,4}, {1,3,5}, {3,4,6}, {2,5,6}.
Matroid k4();
/// Rank-3 whirl on {1..6}; 3-subsets except {1,2,4}, {1,3,5}, {2,3,6}.
Matroid whirl_w3();

struct CatalogEntry {
  std::string name;
  std::string description;
  Matroid matroid;
  std::optional<std::size_t> flat_count;
  /// Rows kept by the `paper` reduction mode.
  std::optional<std::size_t> reduced_rows;
};

/// "u34", "fivept", "k4", "w3".
const std::vector<std::string>& catalog_names();
/// Throws InvalidArgument for an unknown name.
CatalogEntry catalog_entry(const std::string& name);

}  // namespace boolrep
