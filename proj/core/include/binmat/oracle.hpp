#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binmat/bitcore.hpp"

// Ground truth for the row/column-permutation equivalence relation:
// exhaustive generation of the full (n, k) member set and its partition
// into orbits. Used to audit the canonical-element counts, which are not
// assumed to equal the class counts.

namespace binmat {

struct OrbitClass {
  RowTuple representative;  // lexicographic minimum of the class
  std::uint64_t size;
  std::vector<RowTuple> canonical_members;  // ascending
};

struct OrbitPartition {
  Dims dims;
  std::vector<OrbitClass> classes;  // ordered by representative
};

struct ComparisonReport {
  Dims dims;
  std::uint64_t canonical_count;
  std::uint64_t orbit_count;
  /// (canonical elements per class, number of such classes), ascending by
  /// the first component. A zero bucket would mean a class with no
  /// canonical member; it is recorded, not suppressed.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;
  bool agree;  // canonical_count == orbit_count
};

/// Every member of the (n, k) set, ascending lexicographic order.
/// Limited to n <= kOracleOrderLimit; the override additionally admits
/// n = 7 with k in {1, 2}.
std::vector<RowTuple> enumerate_lambda(const Dims& d,
                                       bool limit_override = false);

/// Orbits of the full member set under row and column permutations,
/// computed by closure under adjacent row/column swaps.
OrbitPartition orbit_partition(const Dims& d, bool limit_override = false);

/// Number of orbit classes.
std::uint64_t orbit_count(const Dims& d, bool limit_override = false);

/// Joins the canonical count with the orbit partition. Disagreement is a
/// reportable finding, never an error.
ComparisonReport compare(const Dims& d, bool limit_override = false);

std::string to_text(const ComparisonReport& report);
std::string to_json_string(const ComparisonReport& report);

}  // namespace binmat
