#include <cstdint>
#include <vector>

#include "binmat/canonical.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/fibonacci.hpp"
#include "doctest.h"
#include "json.hpp"

using binmat::Dims;
using binmat::EmbedCase;
using binmat::RowTuple;

TEST_CASE("the fibonacci sequence starts 1 1 2 3 5 8 13 21") {
  CHECK(binmat::fib_sequence(7) ==
        std::vector<std::uint64_t>{1, 1, 2, 3, 5, 8, 13, 21});
  CHECK(binmat::fib_sequence(0) == std::vector<std::uint64_t>{1});
  CHECK(binmat::fib(0) == 1);
  CHECK(binmat::fib(1) == 1);
  CHECK(binmat::fib(2) == 2);
  CHECK(binmat::fib(10) == 89);
  CHECK_NOTHROW(binmat::fib(90));
  CHECK_THROWS_AS(binmat::fib(91), binmat::capacity_error);
  CHECK_THROWS_AS(binmat::fib(-1), std::domain_error);
}

TEST_CASE("double-border embedding matches the worked examples") {
  CHECK(binmat::embed_double_border(RowTuple(2, {0, 0})) ==
        RowTuple(4, {3, 3, 12, 12}));
  CHECK(binmat::embed_double_border(RowTuple(3, {1, 2, 4})) ==
        RowTuple(5, {7, 7, 25, 26, 28}));
}

TEST_CASE("single-border embedding matches the worked example") {
  CHECK(binmat::embed_single_border(RowTuple(3, {1, 2, 4})) ==
        RowTuple(4, {3, 5, 10, 12}));
}

TEST_CASE("reduction recognizes which embedding built the element") {
  const auto a = binmat::reduce_canonical(RowTuple(4, {3, 3, 12, 12}));
  CHECK(a.kind == EmbedCase::double_border);
  CHECK(a.reduced == RowTuple(2, {0, 0}));

  const auto b = binmat::reduce_canonical(RowTuple(4, {3, 5, 10, 12}));
  CHECK(b.kind == EmbedCase::single_border);
  CHECK(b.reduced == RowTuple(3, {1, 2, 4}));
}

TEST_CASE("embed then reduce is the identity for all small weights") {
  for (int k = 2; k <= 6; ++k) {
    for (const RowTuple& b : binmat::list_canonical(Dims(k, k - 2))) {
      const RowTuple image = binmat::embed_double_border(b);
      CHECK(binmat::is_canonical(image));
      CHECK(binmat::is_member(image, Dims(k + 2, k)));
      CHECK(image.bit(1, 1) == 0);
      const auto back = binmat::reduce_canonical(image);
      CHECK(back.kind == EmbedCase::double_border);
      CHECK(back.reduced == b);
    }
    for (const RowTuple& b : binmat::list_canonical(Dims(k + 1, k - 1))) {
      const RowTuple image = binmat::embed_single_border(b);
      CHECK(binmat::is_canonical(image));
      CHECK(binmat::is_member(image, Dims(k + 2, k)));
      CHECK(image.bit(1, 1) == 1);
      const auto back = binmat::reduce_canonical(image);
      CHECK(back.kind == EmbedCase::single_border);
      CHECK(back.reduced == b);
    }
  }
}

TEST_CASE("embeddings reject inputs from the wrong set") {
  // weight 3 where order-2-below is required
  CHECK_THROWS_AS(binmat::embed_double_border(RowTuple(4, {7, 11, 13, 14})),
                  std::domain_error);
  // member but not canonical
  CHECK_THROWS_AS(binmat::embed_double_border(RowTuple(3, {2, 1, 4})),
                  std::domain_error);
  CHECK_THROWS_AS(binmat::embed_single_border(RowTuple(3, {2, 1, 4})),
                  std::domain_error);
  // too small to carry a border
  CHECK_THROWS_AS(binmat::embed_double_border(RowTuple(1, {0})),
                  std::domain_error);
  CHECK_THROWS_AS(binmat::embed_single_border(RowTuple(2, {0, 0})),
                  std::domain_error);
  CHECK_THROWS_AS(binmat::reduce_canonical(RowTuple(3, {1, 2, 4})),
                  std::domain_error);
  CHECK_THROWS_AS(binmat::reduce_canonical(RowTuple(4, {12, 10, 5, 3})),
                  std::domain_error);
}

TEST_CASE("the verification table confirms count, split, and coverage") {
  const auto report = binmat::verify_recurrence(7);
  CHECK(report.all_pass);
  REQUIRE(report.rows.size() == 8);
  for (const auto& row : report.rows) {
    CHECK(row.pass);
    CHECK(row.fib_value == binmat::fib(row.k));
    CHECK(row.canonical_count == row.fib_value);
    if (row.k >= 2) {
      REQUIRE(row.split_sum.has_value());
      CHECK(*row.split_sum == row.canonical_count);
      REQUIRE(row.partition_ok.has_value());
      CHECK(*row.partition_ok);
    } else {
      CHECK_FALSE(row.split_sum.has_value());
      CHECK_FALSE(row.partition_ok.has_value());
    }
    if (row.k <= 4) {
      REQUIRE(row.orbit_count.has_value());
    } else {
      CHECK_FALSE(row.orbit_count.has_value());
    }
  }
  CHECK(*report.rows[0].orbit_count == 1);  // k=0
  CHECK(*report.rows[2].orbit_count == 2);  // k=2
  CHECK(*report.rows[3].orbit_count == 2);  // k=3
  CHECK(*report.rows[4].orbit_count == 4);  // k=4, same classes as weight 2
  CHECK_THROWS_AS(binmat::verify_recurrence(9), binmat::capacity_error);
  CHECK_THROWS_AS(binmat::verify_recurrence(-1), std::domain_error);
}

TEST_CASE("verification renders as a table and as json") {
  const auto report = binmat::verify_recurrence(3, false);
  const std::string text = binmat::to_text(report);
  CHECK(text.find("result: pass") != std::string::npos);
  CHECK(text.find("fib") != std::string::npos);
  const auto doc = nlohmann::json::parse(binmat::to_json_string(report));
  CHECK(doc["all_pass"] == true);
  REQUIRE(doc["rows"].size() == 4);
  CHECK(doc["rows"][3]["k"] == 3);
  CHECK(doc["rows"][3]["fib"] == 3);
  CHECK(doc["rows"][3]["canonical_count"] == 3);
  CHECK(doc["rows"][3]["partition_ok"] == true);
  CHECK(doc["rows"][0]["split_sum"].is_null());
  CHECK(doc["rows"][0]["orbit_count"].is_null());
}
