#pragma once

#include "binmat/bitcore.hpp"

// Canonical elements: tuples whose rows are nondecreasing as binary numbers
// and whose transpose tuple is nondecreasing as well. Each such tuple is the
// search representative used when counting matrices up to row and column
// permutation.

namespace binmat {

/// True iff x1 <= ... <= xn and the transpose tuple is nondecreasing too.
bool is_canonical(const RowTuple& t);

/// Structural check for canonical members: the first row and the first
/// column both read as n-k zeros followed by k ones. Requires
/// is_member(t, d); throws std::domain_error otherwise.
bool has_border_form(const RowTuple& t, const Dims& d);

struct DoublySortResult {
  RowTuple tuple;
  bool converged;  // is_canonical holds for tuple
};

/// Alternately sorts rows (by value) and columns (by transpose value) until
/// the tuple is canonical or max_iters alternations elapse. The result is
/// always reachable from t by row/column permutations; convergence is not
/// guaranteed, hence the flag.
DoublySortResult doubly_sort(const RowTuple& t, int max_iters);

/// doubly_sort with the default cap of n^2 alternations.
DoublySortResult doubly_sort(const RowTuple& t);

/// Lexicographically smallest tuple reachable from t by row and column
/// permutations, found by exhaustive orbit traversal. Identical for every
/// member of one orbit. Orders above order_limit raise capacity_error.
RowTuple min_orbit_rep(const RowTuple& t, int order_limit = kOracleOrderLimit);

}  // namespace binmat
