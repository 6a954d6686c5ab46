#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boolrep/extraction.hpp"
#include "boolrep/lattice.hpp"
#include "boolrep/matrix.hpp"
#include "boolrep/matroid.hpp"
#include "boolrep/partitions.hpp"

namespace boolrep {

// Matroids as JSON: {"ground": [...], "bases": [[...], ...]} or the same with
// "independent". Labels may be strings or integers; integers are stringified.
Matroid matroid_from_json(std::string_view text);
std::string matroid_to_json(const Matroid& m);

// Labeled CSV: header row holds the column labels after an empty corner cell,
// every other row starts with its row label. Tokens are 0, 1 and 1v.
SbMatrix matrix_from_csv(std::string_view text);
std::string matrix_to_csv(const SbMatrix& m);
/// Space-aligned table for terminals.
std::string matrix_to_pretty(const SbMatrix& m);

/// {"rows": [...], "cols": [...], "entries": [[0/1, ...], ...]}
std::string representation_to_json(const Representation& r);

/// Same layout as matrix CSV with tokens 0 and -inf.
std::string tropical_to_csv(const TropicalMatrix& t);
TropicalMatrix tropical_from_csv(std::string_view text);

/// Hasse diagram; nodes in element order, edges lower -> upper cover.
std::string lattice_to_dot(const FlatLattice& l);
std::string lattice_to_json(const FlatLattice& l);
/// Elements with heights, followed by the boolean representation.
std::string lattice_to_pretty(const FlatLattice& l);

/// {"chain": [[...], ...], "blocks": [[...], ...]}
std::string partition_to_json(const FlatLattice& l, const ChainPartition& q);
std::string partition_to_pretty(const FlatLattice& l, const ChainPartition& q);

/// Throws Io if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace boolrep
