#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "binmat/bitcore.hpp"

// Enumeration of all canonical members for given (n, k): row-by-row
// backtracking over nondecreasing rows of weight k, with column-sum
// feasibility pruning and column-prefix order pruning. Also an exact
// dynamic-programming count of the full member set, which grows far too
// fast to enumerate.

namespace binmat {

/// Arbitrary-precision counter for full member-set sizes.
using BigCount = boost::multiprecision::cpp_int;

struct EnumConfig {
  Dims dims;
  int worker_count = 1;
  /// Take the forced value 2^k - 1 for row 1 directly. Switching this off
  /// re-derives row 1 from the generic candidate scan; output is identical.
  bool force_first_row = true;
  /// Unlock orders beyond kDeskOrderLimit.
  bool limit_override = false;

  explicit EnumConfig(Dims d) : dims(d) {}
};

using TupleSink = std::function<void(const RowTuple&)>;

/// Streams every canonical member of the (n, k) set in ascending
/// lexicographic order, without duplicates. Output bytes do not depend on
/// worker_count.
void list_canonical(const EnumConfig& cfg, const TupleSink& sink);

/// Single-threaded convenience wrapper collecting the stream.
std::vector<RowTuple> list_canonical(const Dims& d);

/// Length of the list_canonical stream.
std::uint64_t count_canonical(const EnumConfig& cfg);
std::uint64_t count_canonical(const Dims& d);

/// Exact size of the full (n, k) member set, via a row-by-row DP over
/// residual column-demand multiplicities. Limited to n <= 16.
BigCount count_lambda(const Dims& d);

struct SequenceRow {
  int n;
  int k;
  std::uint64_t canonical_count;
  BigCount lambda_count;
  std::optional<std::uint64_t> orbit_count;  // filled for oracle-sized n
  double elapsed_ms;                         // canonical-count time
};

struct SequenceTable {
  std::vector<SequenceRow> entries;
};

struct SequenceOptions {
  int worker_count = 1;
  bool limit_override = false;
  /// Fill the orbit column for n <= kOracleOrderLimit.
  bool with_orbit_counts = true;
};

/// Counts for fixed k and n = k..n_max.
SequenceTable sequence_table(int k, int n_max,
                             const SequenceOptions& opts = {});

/// Aligned text table. Timings are wall-clock noise, so they are off by
/// default to keep repeated runs byte-identical.
std::string to_text(const SequenceTable& table, bool with_timings = false);
std::string to_json_string(const SequenceTable& table,
                           bool with_timings = false);

/// OEIS b-file: one "n value" pair per line, no header.
void write_b_file(const SequenceTable& table, std::ostream& out);

}  // namespace binmat
