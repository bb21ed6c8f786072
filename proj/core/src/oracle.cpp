#include "binmat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "binmat/canonical.hpp"
#include "binmat/enumerate.hpp"
#include "json.hpp"
#include "packed_tuple.hpp"

namespace binmat {

namespace {

void check_oracle_dims(const Dims& d, bool limit_override) {
  if (d.n <= kOracleOrderLimit) return;
  if (limit_override && d.n == 7 && (d.k == 1 || d.k == 2)) return;
  throw capacity_error(
      "exhaustive orbit computation is limited to order " +
      std::to_string(kOracleOrderLimit) +
      "; the override additionally admits order 7 with weight 1 or 2");
}

// All members in ascending packed-key order. Rows are unordered here;
// only the column sums prune the scan.
std::vector<std::uint64_t> member_keys(const Dims& d) {
  const int n = d.n;
  const int k = d.k;
  const std::uint64_t first =
      k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
  const std::uint64_t last = first << (n - k);

  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::vector<int> colsum(static_cast<std::size_t>(n), 0);

  auto bump = [&](std::uint64_t x, int delta) {
    while (x != 0) {
      colsum[static_cast<std::size_t>(n - 1 - std::countr_zero(x))] += delta;
      x &= x - 1;
    }
  };
  auto dive = [&](auto&& self, int level) -> void {
    const int remaining = n - level;
    std::uint64_t full = 0;
    std::uint64_t req = 0;
    for (int j = 0; j < n; ++j) {
      const std::uint64_t col = std::uint64_t{1} << (n - 1 - j);
      const int deficit = k - colsum[static_cast<std::size_t>(j)];
      if (deficit == 0) {
        full |= col;
      } else if (deficit == remaining) {
        req |= col;
      }
    }
    if (level == n - 1) {
      rows[static_cast<std::size_t>(level)] = req;
      std::uint64_t key = 0;
      for (const std::uint64_t r : rows) key = (key << n) | r;
      keys.push_back(key);
      return;
    }
    std::uint64_t x = first;
    while (true) {
      if ((x & full) == 0 && (x & req) == req) {
        rows[static_cast<std::size_t>(level)] = x;
        bump(x, +1);
        self(self, level + 1);
        bump(x, -1);
      }
      if (x >= last) break;
      const std::uint64_t u = x & (~x + 1);
      const std::uint64_t v = x + u;
      x = v + (((v ^ x) / u) >> 2);
    }
  };
  dive(dive, 0);
  return keys;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size)
      : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

std::uint32_t index_of(const std::vector<std::uint64_t>& keys,
                       std::uint64_t key) {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) {
    throw std::logic_error("adjacent swap left the member set");
  }
  return static_cast<std::uint32_t>(it - keys.begin());
}

}  // namespace

std::vector<RowTuple> enumerate_lambda(const Dims& d, bool limit_override) {
  check_oracle_dims(d, limit_override);
  const auto keys = member_keys(d);
  std::vector<RowTuple> out;
  out.reserve(keys.size());
  for (const std::uint64_t key : keys) {
    out.push_back(detail::unpack(key, d.n));
  }
  return out;
}

OrbitPartition orbit_partition(const Dims& d, bool limit_override) {
  check_oracle_dims(d, limit_override);
  const int n = d.n;
  const auto keys = member_keys(d);
  const auto count = static_cast<std::uint32_t>(keys.size());

  UnionFind uf(keys.size());
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint64_t key = keys[i];
    for (int r = 0; r + 1 < n; ++r) {
      uf.unite(i, index_of(keys, detail::swap_adjacent_rows(key, n, r)));
    }
    for (int c = 0; c + 1 < n; ++c) {
      uf.unite(i, index_of(keys, detail::swap_adjacent_cols(key, n, c)));
    }
  }

  OrbitPartition partition{d, {}};
  std::map<std::uint32_t, std::size_t> class_of_root;
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t root = uf.find(i);
    auto [it, inserted] = class_of_root.emplace(root, partition.classes.size());
    if (inserted) {
      partition.classes.push_back({detail::unpack(keys[i], n), 0, {}});
    }
    OrbitClass& cls = partition.classes[it->second];
    cls.size += 1;
    RowTuple member = detail::unpack(keys[i], n);
    if (is_canonical(member)) {
      cls.canonical_members.push_back(std::move(member));
    }
  }
  return partition;
}

std::uint64_t orbit_count(const Dims& d, bool limit_override) {
  return orbit_partition(d, limit_override).classes.size();
}

ComparisonReport compare(const Dims& d, bool limit_override) {
  const OrbitPartition partition = orbit_partition(d, limit_override);
  EnumConfig cfg(d);
  cfg.limit_override = limit_override;
  ComparisonReport report{d, count_canonical(cfg), partition.classes.size(),
                          {}, false};
  std::map<std::uint64_t, std::uint64_t> buckets;
  for (const OrbitClass& cls : partition.classes) {
    buckets[cls.canonical_members.size()] += 1;
  }
  report.histogram.assign(buckets.begin(), buckets.end());
  report.agree = report.canonical_count == report.orbit_count;
  return report;
}

std::string to_text(const ComparisonReport& report) {
  std::ostringstream out;
  out << "n=" << report.dims.n << " k=" << report.dims.k
      << " canonical=" << report.canonical_count
      << " orbits=" << report.orbit_count
      << " agree=" << (report.agree ? "yes" : "no") << '\n';
  out << "canonical members per class:";
  for (const auto& [members, classes] : report.histogram) {
    out << ' ' << members << "x" << classes;
  }
  out << '\n';
  return out.str();
}

std::string to_json_string(const ComparisonReport& report) {
  nlohmann::ordered_json obj;
  obj["n"] = report.dims.n;
  obj["k"] = report.dims.k;
  obj["canonical_count"] = report.canonical_count;
  obj["orbit_count"] = report.orbit_count;
  obj["agree"] = report.agree;
  nlohmann::ordered_json hist = nlohmann::ordered_json::array();
  for (const auto& [members, classes] : report.histogram) {
    hist.push_back({{"canonical_members", members}, {"classes", classes}});
  }
  obj["histogram"] = std::move(hist);
  return obj.dump(2) + "\n";
}

}  // namespace binmat
