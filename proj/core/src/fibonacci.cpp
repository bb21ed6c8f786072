#include "binmat/fibonacci.hpp"

#include <array>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "binmat/canonical.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/oracle.hpp"
#include "json.hpp"

namespace binmat {

namespace {

constexpr int kFibLimit = 90;  // f(91) does not fit in 64 bits

void require_canonical_member(const RowTuple& t, const Dims& d,
                              const char* what) {
  if (!is_member(t, d)) {
    throw std::domain_error(std::string(what) +
                            ": input is not a member of the expected set");
  }
  if (!is_canonical(t)) {
    throw std::domain_error(std::string(what) + ": input is not canonical");
  }
}

RowTuple checked_image(int n, int k, std::vector<std::uint64_t> rows,
                       const char* what) {
  RowTuple out(n, std::move(rows));
  if (!is_member(out, Dims(n, k)) || !is_canonical(out)) {
    throw std::logic_error(std::string(what) +
                           ": construction broke canonicity");
  }
  return out;
}

bool partition_holds(int k) {
  try {
    std::unordered_set<RowTuple, RowTupleHash> images;
    std::size_t produced = 0;
    for (const RowTuple& b : list_canonical(Dims(k, k - 2))) {
      const RowTuple image = embed_double_border(b);
      const ReduceResult back = reduce_canonical(image);
      if (back.kind != EmbedCase::double_border || !(back.reduced == b)) {
        return false;
      }
      images.insert(image);
      ++produced;
    }
    for (const RowTuple& b : list_canonical(Dims(k + 1, k - 1))) {
      const RowTuple image = embed_single_border(b);
      const ReduceResult back = reduce_canonical(image);
      if (back.kind != EmbedCase::single_border || !(back.reduced == b)) {
        return false;
      }
      images.insert(image);
      ++produced;
    }
    if (images.size() != produced) return false;  // the two images collided
    const auto targets = list_canonical(Dims(k + 2, k));
    if (targets.size() != images.size()) return false;
    for (const RowTuple& t : targets) {
      if (!images.contains(t)) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::vector<std::uint64_t> fib_sequence(int m) {
  if (m < 0) throw std::domain_error("m must be nonnegative");
  if (m > kFibLimit) {
    throw capacity_error("Fibonacci values beyond f(" +
                         std::to_string(kFibLimit) + ") overflow 64 bits");
  }
  std::vector<std::uint64_t> f(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    f[static_cast<std::size_t>(i)] =
        i < 2 ? 1
              : f[static_cast<std::size_t>(i - 1)] +
                    f[static_cast<std::size_t>(i - 2)];
  }
  return f;
}

std::uint64_t fib(int m) { return fib_sequence(m).back(); }

RowTuple embed_double_border(const RowTuple& b) {
  const int k = b.order();
  if (k < 2) throw std::domain_error("embed_double_border: order must be >= 2");
  require_canonical_member(b, Dims(k, k - 2), "embed_double_border");
  const int n = k + 2;
  const std::uint64_t border = (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(n));
  rows.push_back(border);
  rows.push_back(border);
  for (int i = 0; i < k; ++i) {
    rows.push_back((std::uint64_t{3} << k) | b.row(i));
  }
  return checked_image(n, k, std::move(rows), "embed_double_border");
}

RowTuple embed_single_border(const RowTuple& b) {
  const int k = b.order() - 1;
  if (k < 2) throw std::domain_error("embed_single_border: order must be >= 3");
  require_canonical_member(b, Dims(k + 1, k - 1), "embed_single_border");
  const int n = k + 2;
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(n));
  rows.push_back((std::uint64_t{1} << k) - 1);
  rows.push_back(b.row(0) + (std::uint64_t{1} << k));
  for (int i = 1; i <= k; ++i) {
    rows.push_back((std::uint64_t{1} << (k + 1)) | b.row(i));
  }
  return checked_image(n, k, std::move(rows), "embed_single_border");
}

ReduceResult reduce_canonical(const RowTuple& t) {
  const int n = t.order();
  if (n < 4) throw std::domain_error("reduce_canonical: order must be >= 4");
  const int k = n - 2;
  require_canonical_member(t, Dims(n, k), "reduce_canonical");
  if (t.bit(1, 1) == 0) {
    // Rows 1-2 and columns 1-2 are the border; drop them.
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(k));
    const std::uint64_t keep = (std::uint64_t{1} << k) - 1;
    for (int i = 2; i < n; ++i) {
      rows.push_back(t.row(i) & keep);
    }
    RowTuple reduced(k, std::move(rows));
    if (!is_member(reduced, Dims(k, k - 2)) || !is_canonical(reduced)) {
      throw std::logic_error("reduce_canonical: double-border strip failed");
    }
    return {EmbedCase::double_border, std::move(reduced)};
  }
  // Row 1 and column 1 are the border; drop them and clear the flipped
  // bit at (2, 2), which sits at value 2^k after the column strip.
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(n - 1));
  rows.push_back(t.row(1) - (std::uint64_t{1} << k));
  for (int i = 2; i < n; ++i) {
    rows.push_back(t.row(i) - (std::uint64_t{1} << (k + 1)));
  }
  RowTuple reduced(k + 1, std::move(rows));
  if (!is_member(reduced, Dims(k + 1, k - 1)) || !is_canonical(reduced)) {
    throw std::logic_error("reduce_canonical: single-border strip failed");
  }
  return {EmbedCase::single_border, std::move(reduced)};
}

RecurrenceReport verify_recurrence(int k_max, bool with_orbit_counts) {
  if (k_max < 0) throw std::domain_error("k_max must be nonnegative");
  if (k_max > 8) {
    throw capacity_error("recurrence verification is limited to k_max <= 8");
  }
  RecurrenceReport report;
  report.all_pass = true;
  for (int k = 0; k <= k_max; ++k) {
    RecurrenceRow row;
    row.k = k;
    row.fib_value = fib(k);
    row.canonical_count = count_canonical(Dims(k + 2, k));
    bool ok = row.canonical_count == row.fib_value;
    if (k >= 2) {
      const std::uint64_t lower = count_canonical(Dims(k, k - 2));
      const std::uint64_t upper = count_canonical(Dims(k + 1, k - 1));
      row.split_sum = lower + upper;
      ok = ok && row.canonical_count == *row.split_sum;
      row.partition_ok = partition_holds(k);
      ok = ok && *row.partition_ok;
    }
    if (with_orbit_counts && k + 2 <= kOracleOrderLimit) {
      row.orbit_count = orbit_count(Dims(k + 2, k));
    }
    row.pass = ok;
    report.all_pass = report.all_pass && ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_text(const RecurrenceReport& report) {
  std::vector<std::array<std::string, 7>> cells;
  cells.push_back(
      {"k", "fib", "canonical", "split", "partition", "orbits", "status"});
  for (const RecurrenceRow& row : report.rows) {
    cells.push_back(
        {std::to_string(row.k), std::to_string(row.fib_value),
         std::to_string(row.canonical_count),
         row.split_sum ? std::to_string(*row.split_sum) : "-",
         row.partition_ok ? (*row.partition_ok ? "ok" : "FAIL") : "-",
         row.orbit_count ? std::to_string(*row.orbit_count) : "-",
         row.pass ? "pass" : "FAIL"});
  }
  std::array<std::size_t, 7> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  out << "result: " << (report.all_pass ? "pass" : "fail") << '\n';
  return out.str();
}

std::string to_json_string(const RecurrenceReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const RecurrenceRow& row : report.rows) {
    nlohmann::ordered_json obj;
    obj["k"] = row.k;
    obj["fib"] = row.fib_value;
    obj["canonical_count"] = row.canonical_count;
    if (row.split_sum) {
      obj["split_sum"] = *row.split_sum;
    } else {
      obj["split_sum"] = nullptr;
    }
    if (row.partition_ok) {
      obj["partition_ok"] = *row.partition_ok;
    } else {
      obj["partition_ok"] = nullptr;
    }
    if (row.orbit_count) {
      obj["orbit_count"] = *row.orbit_count;
    } else {
      obj["orbit_count"] = nullptr;
    }
    obj["pass"] = row.pass;
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["all_pass"] = report.all_pass;
  return doc.dump(2) + "\n";
}

}  // namespace binmat
