#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binmat/bitcore.hpp"

// The canonical count at order k+2 and weight k equals the Fibonacci
// number f(k). The two embeddings below realize the recurrence: every
// canonical element of the (k+2, k) set comes from exactly one of them,
// decided by the bit in row 2, column 2.

namespace binmat {

/// f(0), f(1), ..., f(m) with f(0) = f(1) = 1.
/// m above 90 would overflow 64 bits and raises capacity_error.
std::vector<std::uint64_t> fib_sequence(int m);

/// f(m) alone, same bounds.
std::uint64_t fib(int m);

enum class EmbedCase {
  double_border,  // rows 1-2 and columns 1-2 form the border, bit (2,2) clear
  single_border,  // row 1 and column 1 form the border, bit (2,2) set
};

/// Canonical b of order k, weight k-2 (k >= 2) -> canonical element of
/// the (k+2, k) set: two all-border rows 2^k - 1, then 3*2^k + b_i.
RowTuple embed_double_border(const RowTuple& b);

/// Canonical b of order k+1, weight k-1 (k >= 2) -> canonical element of
/// the (k+2, k) set: the leading zero bit of b_1 flips to one, then a row
/// 2^k - 1 and a column (zero in rows 1-2, one below) are prepended.
RowTuple embed_single_border(const RowTuple& b);

struct ReduceResult {
  EmbedCase kind;
  RowTuple reduced;
};

/// Inverts whichever embedding produced the canonical (k+2, k) element:
/// strips the border rows and columns and, in the single-border case,
/// clears the flipped bit. Requires order >= 4 and weight = order - 2.
ReduceResult reduce_canonical(const RowTuple& t);

struct RecurrenceRow {
  int k = 0;
  std::uint64_t fib_value = 0;
  std::uint64_t canonical_count = 0;       // order k+2, weight k
  std::optional<std::uint64_t> split_sum;  // C(k,k-2) + C(k+1,k-1), k >= 2
  std::optional<bool> partition_ok;        // embeddings cover exactly once
  std::optional<std::uint64_t> orbit_count;  // informational, small k only
  bool pass = false;
};

struct RecurrenceReport {
  std::vector<RecurrenceRow> rows;
  bool all_pass = false;
};

/// Checks, for k = 0..k_max: the count against f(k); for k >= 2 also the
/// recurrence split and the exact-cover property of the two embeddings
/// (every image round-tripped through reduce_canonical). Failures land in
/// the report; nothing throws. k_max is limited to 8.
RecurrenceReport verify_recurrence(int k_max, bool with_orbit_counts = true);

std::string to_text(const RecurrenceReport& report);
std::string to_json_string(const RecurrenceReport& report);

}  // namespace binmat
