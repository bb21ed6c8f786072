#include <cstdint>
#include <sstream>
#include <vector>

#include "binmat/canonical.hpp"
#include "binmat/enumerate.hpp"
#include "doctest.h"
#include "json.hpp"

using binmat::Dims;
using binmat::EnumConfig;
using binmat::RowTuple;

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

TEST_CASE("canonical counts match the known weight-2 and weight-3 runs") {
  const std::uint64_t k2[] = {1, 1, 2, 5, 13, 42, 155};
  for (int n = 2; n <= 8; ++n) {
    CHECK(binmat::count_canonical(Dims(n, 2)) == k2[n - 2]);
  }
  const std::uint64_t k3[] = {1, 1, 3, 25, 272};
  for (int n = 3; n <= 7; ++n) {
    CHECK(binmat::count_canonical(Dims(n, 3)) == k3[n - 3]);
  }
}

TEST_CASE("extreme weights admit a single canonical element") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(binmat::count_canonical(Dims(n, 0)) == 1);
    CHECK(binmat::count_canonical(Dims(n, n)) == 1);
    if (n >= 1) CHECK(binmat::count_canonical(Dims(n, 1)) == 1);
    if (n >= 2) CHECK(binmat::count_canonical(Dims(n, n - 1)) == 1);
  }
  CHECK(binmat::list_canonical(Dims(5, 0)) ==
        std::vector<RowTuple>{RowTuple::zero(5)});
  CHECK(binmat::list_canonical(Dims(3, 3)) ==
        std::vector<RowTuple>{RowTuple(3, {7, 7, 7})});
  CHECK(binmat::list_canonical(Dims(5, 1)) ==
        std::vector<RowTuple>{RowTuple(5, {1, 2, 4, 8, 16})});
  CHECK(binmat::list_canonical(Dims(1, 1)) ==
        std::vector<RowTuple>{RowTuple(1, {1})});
}

TEST_CASE("the order-4 weight-2 list is exactly the two known elements") {
  const auto got = binmat::list_canonical(Dims(4, 2));
  const std::vector<RowTuple> want = {RowTuple(4, {3, 3, 12, 12}),
                                      RowTuple(4, {3, 5, 10, 12})};
  CHECK(got == want);
}

TEST_CASE("every listed element is a canonical member, listed once, in order") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto list = binmat::list_canonical(Dims(n, k));
      CHECK(list.size() == binmat::count_canonical(Dims(n, k)));
      for (size_t i = 0; i < list.size(); ++i) {
        CHECK(binmat::is_member(list[i], Dims(n, k)));
        CHECK(binmat::is_canonical(list[i]));
        if (i > 0) CHECK(list[i - 1] < list[i]);
      }
    }
  }
}

TEST_CASE("worker count never changes the result") {
  for (const auto& [n, k] : {std::pair{5, 2}, {6, 3}, {7, 3}}) {
    EnumConfig cfg(Dims(n, k));
    cfg.worker_count = 1;
    const auto base = binmat::count_canonical(cfg);
    std::vector<RowTuple> base_list;
    binmat::list_canonical(cfg, [&](const RowTuple& t) {
      base_list.push_back(t);
    });
    for (int workers : {2, 3, 8}) {
      cfg.worker_count = workers;
      CHECK(binmat::count_canonical(cfg) == base);
      std::vector<RowTuple> list;
      binmat::list_canonical(cfg, [&](const RowTuple& t) {
        list.push_back(t);
      });
      CHECK(list == base_list);
    }
  }
}

TEST_CASE("the forced first row is an optimization, not an assumption") {
  for (const auto& [n, k] : {std::pair{5, 2}, {6, 3}, {4, 0}}) {
    EnumConfig forced{Dims(n, k)};
    EnumConfig generic{Dims(n, k)};
    generic.force_first_row = false;
    CHECK(binmat::count_canonical(forced) == binmat::count_canonical(generic));
  }
}

TEST_CASE("orders beyond the desk limit need the override") {
  CHECK_THROWS_AS(binmat::count_canonical(Dims(13, 1)),
                  binmat::capacity_error);
  EnumConfig cfg(Dims(13, 1));
  cfg.limit_override = true;
  CHECK(binmat::count_canonical(cfg) == 1);
  CHECK_THROWS_AS([] {
    EnumConfig bad{Dims(4, 2)};
    bad.worker_count = 0;
    binmat::count_canonical(bad);
  }(), std::domain_error);
}

TEST_CASE("member counts match hand-checked values") {
  CHECK(binmat::count_lambda(Dims(4, 2)) == 90);
  CHECK(binmat::count_lambda(Dims(5, 2)) == 2040);
  CHECK(binmat::count_lambda(Dims(6, 2)) == 67950);
  CHECK(binmat::count_lambda(Dims(6, 3)) == 297200);
  for (int n = 1; n <= 8; ++n) {
    CHECK(binmat::count_lambda(Dims(n, 0)) == 1);
    CHECK(binmat::count_lambda(Dims(n, n)) == 1);
    CHECK(binmat::count_lambda(Dims(n, 1)) == factorial(n));
    if (n >= 1) CHECK(binmat::count_lambda(Dims(n, n - 1)) == factorial(n));
  }
}

TEST_CASE("member counts respect the complement bijection") {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 0; k <= n / 2; ++k) {
      CHECK(binmat::count_lambda(Dims(n, k)) ==
            binmat::count_lambda(Dims(n, n - k)));
    }
  }
}

TEST_CASE("member counting beyond order 16 is refused") {
  CHECK_THROWS_AS(binmat::count_lambda(Dims(17, 2)), binmat::capacity_error);
  CHECK(binmat::count_lambda(Dims(16, 1)) == factorial(16));
}

TEST_CASE("sequence tables carry all three counts") {
  binmat::SequenceOptions opts;
  const auto table = binmat::sequence_table(2, 6, opts);
  REQUIRE(table.entries.size() == 5);
  const std::uint64_t canonical[] = {1, 1, 2, 5, 13};
  const std::uint64_t members[] = {1, 6, 90, 2040, 67950};
  for (size_t i = 0; i < 5; ++i) {
    CHECK(table.entries[i].n == static_cast<int>(i) + 2);
    CHECK(table.entries[i].k == 2);
    CHECK(table.entries[i].canonical_count == canonical[i]);
    CHECK(table.entries[i].lambda_count == members[i]);
    REQUIRE(table.entries[i].orbit_count.has_value());
  }
  CHECK(*table.entries[2].orbit_count == 2);  // n=4

  opts.with_orbit_counts = false;
  const auto bare = binmat::sequence_table(2, 6, opts);
  for (const auto& row : bare.entries) {
    CHECK_FALSE(row.orbit_count.has_value());
  }
}

TEST_CASE("sequence text omits wall time unless asked") {
  const auto table = binmat::sequence_table(2, 4);
  const std::string plain = binmat::to_text(table);
  const std::string timed = binmat::to_text(table, true);
  CHECK(plain.find("ms") == std::string::npos);
  CHECK(timed.find("ms") != std::string::npos);
  CHECK(plain.find("canonical") != std::string::npos);
  // repeated runs with identical inputs give identical bytes
  CHECK(plain == binmat::to_text(binmat::sequence_table(2, 4)));
}

TEST_CASE("sequence json round-trips through a parser") {
  const auto table = binmat::sequence_table(3, 6);
  const auto doc = nlohmann::json::parse(binmat::to_json_string(table));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 4);
  CHECK(doc[0]["n"] == 3);
  CHECK(doc[0]["k"] == 3);
  CHECK(doc[0]["canonical_count"] == 1);
  CHECK(doc[0]["member_count"] == "1");
  CHECK(doc[3]["n"] == 6);
  CHECK(doc[3]["canonical_count"] == 25);
  CHECK(doc[3]["member_count"] == "297200");
  CHECK_FALSE(doc[0].contains("elapsed_ms"));
  const auto timed = nlohmann::json::parse(
      binmat::to_json_string(table, true));
  CHECK(timed[0].contains("elapsed_ms"));
}

TEST_CASE("b-files pair the order with the canonical count") {
  const auto table = binmat::sequence_table(4, 7);
  std::ostringstream out;
  binmat::write_b_file(table, out);
  CHECK(out.str() == "4 1\n5 1\n6 5\n7 161\n");
}

TEST_CASE("sequence arguments are validated") {
  CHECK_THROWS_AS(binmat::sequence_table(-1, 4), std::domain_error);
  CHECK_THROWS_AS(binmat::sequence_table(3, 2), std::domain_error);
}
