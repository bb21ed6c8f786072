#include "binmat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "binmat/oracle.hpp"
#include "json.hpp"

namespace binmat {

namespace {

struct SearchSpace {
  int n = 0;
  int k = 0;
  std::uint64_t first = 0;      // least weight-k row value
  std::uint64_t last = 0;       // greatest weight-k row value
  std::uint64_t pair_mask = 0;  // bit q flags the adjacent column pair (q, q-1)
};

SearchSpace make_space(const Dims& d) {
  SearchSpace s;
  s.n = d.n;
  s.k = d.k;
  const std::uint64_t mask =
      d.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d.n) - 1;
  s.first = d.k == 0 ? 0
            : d.k == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << d.k) - 1;
  s.last = s.first << (d.n - d.k);
  s.pair_mask = mask & ~std::uint64_t{1};
  return s;
}

// Next value with the same popcount (Gosper). Caller must not advance
// past the greatest weight-k value below 2^n.
inline std::uint64_t next_same_weight(std::uint64_t x) {
  const std::uint64_t u = x & (~x + 1);
  const std::uint64_t v = x + u;
  return v + (((v ^ x) / u) >> 2);
}

// Depth-first scan of nondecreasing row tuples with exact row and column
// sums. Invariants per level:
//   full: columns already holding k ones; candidate must avoid them.
//   req:  columns whose deficit equals the rows left; candidate must
//         cover them, which keeps every deficit feasible below.
//   block: bit q set while columns q and q-1 agree on all placed rows;
//          a candidate with 1 at q and 0 at q-1 would order them badly.
// The last row is forced to exactly the deficit-1 columns.
template <typename OnLeaf>
class Search {
 public:
  Search(const SearchSpace& s, OnLeaf on_leaf)
      : s_(s),
        rows_(static_cast<std::size_t>(s.n), 0),
        colsum_(static_cast<std::size_t>(s.n), 0),
        on_leaf_(std::move(on_leaf)) {}

  void run(bool force_first_row) {
    if (s_.n == 1 || !force_first_row) {
      // The generic scan rediscovers the forced first row: at depth 0 the
      // prefix filter admits only values of the form 0...01...1.
      dive(0, s_.first, s_.pair_mask);
      return;
    }
    place(0, s_.first);
    dive(1, s_.first, s_.pair_mask & ~(s_.first ^ (s_.first << 1)));
    unplace(0, s_.first);
  }

  void run_prefix2(std::uint64_t r0, std::uint64_t r1) {
    place(0, r0);
    const std::uint64_t b0 = s_.pair_mask & ~(r0 ^ (r0 << 1));
    place(1, r1);
    dive(2, r1, b0 & ~(r1 ^ (r1 << 1)));
    unplace(1, r1);
    unplace(0, r0);
  }

  // Emits every admissible (first, second) row pair instead of searching
  // below depth 2. Requires n >= 3.
  template <typename OnPrefix>
  void collect_prefixes(OnPrefix on_prefix) {
    place(0, s_.first);
    const std::uint64_t b0 = s_.pair_mask & ~(s_.first ^ (s_.first << 1));
    std::uint64_t x = s_.first;
    while (true) {
      if (admissible(x, 1, b0)) {
        on_prefix(s_.first, x);
      }
      if (x >= s_.last) break;
      x = next_same_weight(x);
    }
    unplace(0, s_.first);
  }

 private:
  bool admissible(std::uint64_t x, int level, std::uint64_t block) const {
    const int remaining = s_.n - level;
    for (int j = 0; j < s_.n; ++j) {
      const std::uint64_t col = std::uint64_t{1} << (s_.n - 1 - j);
      const int deficit = s_.k - colsum_[static_cast<std::size_t>(j)];
      if (deficit == 0 && (x & col) != 0) return false;
      if (deficit == remaining && (x & col) == 0) return false;
    }
    return ((x & ~(x << 1)) & block) == 0;
  }

  void dive(int level, std::uint64_t prev, std::uint64_t block) {
    const int remaining = s_.n - level;
    std::uint64_t full = 0;
    std::uint64_t req = 0;
    for (int j = 0; j < s_.n; ++j) {
      const std::uint64_t col = std::uint64_t{1} << (s_.n - 1 - j);
      const int deficit = s_.k - colsum_[static_cast<std::size_t>(j)];
      if (deficit == 0) {
        full |= col;
      } else if (deficit == remaining) {
        req |= col;
      }
    }
    if (level == s_.n - 1) {
      const std::uint64_t x = req;  // deficit-1 columns, all others are full
      if (x >= prev && ((x & ~(x << 1)) & block) == 0) {
        rows_[static_cast<std::size_t>(level)] = x;
        on_leaf_(rows_);
      }
      return;
    }
    std::uint64_t x = prev;
    while (true) {
      if ((x & full) == 0 && (x & req) == req &&
          ((x & ~(x << 1)) & block) == 0) {
        place(level, x);
        dive(level + 1, x, block & ~(x ^ (x << 1)));
        unplace(level, x);
      }
      if (x >= s_.last) break;
      x = next_same_weight(x);
    }
  }

  void place(int level, std::uint64_t x) {
    rows_[static_cast<std::size_t>(level)] = x;
    bump(x, +1);
  }
  void unplace(int level, std::uint64_t x) {
    rows_[static_cast<std::size_t>(level)] = 0;
    bump(x, -1);
  }
  void bump(std::uint64_t x, int delta) {
    while (x != 0) {
      const int bit = std::countr_zero(x);
      colsum_[static_cast<std::size_t>(s_.n - 1 - bit)] += delta;
      x &= x - 1;
    }
  }

  SearchSpace s_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> colsum_;
  OnLeaf on_leaf_;
};

struct Prefix2 {
  std::uint64_t r0;
  std::uint64_t r1;
};

void check_config(const EnumConfig& cfg) {
  if (cfg.worker_count < 1) {
    throw std::domain_error("worker count must be at least 1");
  }
  if (cfg.dims.n > kDeskOrderLimit && !cfg.limit_override) {
    throw capacity_error("order " + std::to_string(cfg.dims.n) +
                         " exceeds the default limit of " +
                         std::to_string(kDeskOrderLimit) +
                         "; pass the override to proceed");
  }
}

// Runs one search per depth-2 prefix across a worker pool. Results land
// in a slot per prefix, so merging in slot order is independent of the
// worker count and of scheduling.
template <typename Result, typename RunTask>
std::vector<Result> run_tasks(const std::vector<Prefix2>& tasks, int workers,
                              RunTask run_task) {
  std::vector<Result> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  auto drain = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) break;
      run_task(tasks[i], results[i]);
    }
  };
  const int spawned =
      static_cast<int>(std::min<std::size_t>(
          static_cast<std::size_t>(workers), std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(spawned > 0 ? spawned - 1 : 0));
  for (int w = 1; w < spawned; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<Prefix2> collect_prefixes(const SearchSpace& space) {
  std::vector<Prefix2> tasks;
  auto ignore_leaf = [](const std::vector<std::uint64_t>&) {};
  Search<decltype(ignore_leaf)> probe(space, ignore_leaf);
  probe.collect_prefixes(
      [&](std::uint64_t r0, std::uint64_t r1) { tasks.push_back({r0, r1}); });
  return tasks;
}

}  // namespace

void list_canonical(const EnumConfig& cfg, const TupleSink& sink) {
  check_config(cfg);
  const SearchSpace space = make_space(cfg.dims);
  const int n = cfg.dims.n;
  if (cfg.worker_count == 1 || n < 3) {
    auto emit = [&](const std::vector<std::uint64_t>& rows) {
      sink(RowTuple(n, rows));
    };
    Search<decltype(emit)> search(space, emit);
    search.run(cfg.force_first_row);
    return;
  }
  const std::vector<Prefix2> tasks = collect_prefixes(space);
  auto results = run_tasks<std::vector<RowTuple>>(
      tasks, cfg.worker_count,
      [&](const Prefix2& task, std::vector<RowTuple>& out) {
        auto emit = [&](const std::vector<std::uint64_t>& rows) {
          out.emplace_back(n, rows);
        };
        Search<decltype(emit)> search(space, emit);
        search.run_prefix2(task.r0, task.r1);
      });
  for (const auto& bucket : results) {
    for (const auto& t : bucket) sink(t);
  }
}

std::vector<RowTuple> list_canonical(const Dims& d) {
  std::vector<RowTuple> out;
  list_canonical(EnumConfig(d), [&](const RowTuple& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_canonical(const EnumConfig& cfg) {
  check_config(cfg);
  const SearchSpace space = make_space(cfg.dims);
  if (cfg.worker_count == 1 || cfg.dims.n < 3) {
    std::uint64_t count = 0;
    auto emit = [&](const std::vector<std::uint64_t>&) { ++count; };
    Search<decltype(emit)> search(space, emit);
    search.run(cfg.force_first_row);
    return count;
  }
  const std::vector<Prefix2> tasks = collect_prefixes(space);
  auto results = run_tasks<std::uint64_t>(
      tasks, cfg.worker_count, [&](const Prefix2& task, std::uint64_t& out) {
        std::uint64_t count = 0;
        auto emit = [&](const std::vector<std::uint64_t>&) { ++count; };
        Search<decltype(emit)> search(space, emit);
        search.run_prefix2(task.r0, task.r1);
        out = count;
      });
  std::uint64_t total = 0;
  for (std::uint64_t c : results) {
    if (__builtin_add_overflow(total, c, &total)) {
      throw std::overflow_error("canonical count exceeds 64 bits");
    }
  }
  return total;
}

std::uint64_t count_canonical(const Dims& d) {
  return count_canonical(EnumConfig(d));
}

BigCount count_lambda(const Dims& d) {
  constexpr int kLambdaOrderLimit = 16;
  if (d.n > kLambdaOrderLimit) {
    throw capacity_error("exact member counting is limited to order " +
                         std::to_string(kLambdaOrderLimit));
  }
  const int n = d.n;
  const int k = d.k;

  std::array<std::array<std::uint64_t, 17>, 17> binom{};
  for (int i = 0; i <= 16; ++i) {
    binom[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j) {
      binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }

  // State: column multiplicities by residual demand 0..k. Row transitions
  // pick how many ones go to each demand class; a class whose demand
  // exceeds the rows left after this one must be served in full.
  using State = std::vector<std::uint8_t>;
  struct StateHash {
    std::size_t operator()(const State& s) const {
      std::size_t h = 1469598103934665603ull;
      for (std::uint8_t b : s) {
        h ^= b;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  using Layer = std::unordered_map<State, BigCount, StateHash>;

  Layer layer;
  State init(static_cast<std::size_t>(k) + 1, 0);
  init[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(n);
  layer.emplace(std::move(init), BigCount(1));

  std::vector<int> take(static_cast<std::size_t>(k) + 1, 0);
  for (int row = 0; row < n; ++row) {
    const int rows_left_after = n - row - 1;
    Layer next;
    for (const auto& [state, ways] : layer) {
      auto distribute = [&](auto&& self, int d, int budget) -> void {
        if (d == 0) {
          if (budget != 0) return;
          State ns(static_cast<std::size_t>(k) + 1, 0);
          std::uint64_t mult = 1;
          for (int dd = 0; dd <= k; ++dd) {
            const auto idx = static_cast<std::size_t>(dd);
            int moved_in = dd + 1 <= k ? take[idx + 1] : 0;
            ns[idx] = static_cast<std::uint8_t>(state[idx] - take[idx] + moved_in);
            mult *= binom[state[idx]][static_cast<std::size_t>(take[idx])];
          }
          next[std::move(ns)] += ways * mult;
          return;
        }
        const auto idx = static_cast<std::size_t>(d);
        const int avail = state[idx];
        const int lo = d > rows_left_after ? avail : 0;
        const int hi = std::min(avail, budget);
        for (int t = lo; t <= hi; ++t) {
          take[idx] = t;
          self(self, d - 1, budget - t);
        }
        take[idx] = 0;
      };
      distribute(distribute, k, k);
    }
    layer = std::move(next);
  }

  State done(static_cast<std::size_t>(k) + 1, 0);
  done[0] = static_cast<std::uint8_t>(n);
  auto it = layer.find(done);
  return it == layer.end() ? BigCount(0) : it->second;
}

SequenceTable sequence_table(int k, int n_max, const SequenceOptions& opts) {
  if (k < 0) throw std::domain_error("k must be nonnegative");
  if (n_max < k) throw std::domain_error("n_max must be at least k");
  SequenceTable table;
  table.entries.reserve(static_cast<std::size_t>(n_max - k + 1));
  for (int n = k; n <= n_max; ++n) {
    const Dims d(n, k);
    EnumConfig cfg(d);
    cfg.worker_count = opts.worker_count;
    cfg.limit_override = opts.limit_override;
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t canonical = count_canonical(cfg);
    const auto t1 = std::chrono::steady_clock::now();
    SequenceRow row;
    row.n = n;
    row.k = k;
    row.canonical_count = canonical;
    row.lambda_count = count_lambda(d);
    if (opts.with_orbit_counts && n <= kOracleOrderLimit) {
      row.orbit_count = orbit_count(d);
    }
    row.elapsed_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    table.entries.push_back(std::move(row));
  }
  return table;
}

std::string to_text(const SequenceTable& table, bool with_timings) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"n", "k", "canonical", "members", "orbits", "ms"});
  for (const auto& row : table.entries) {
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << row.elapsed_ms;
    cells.push_back({std::to_string(row.n), std::to_string(row.k),
                     std::to_string(row.canonical_count),
                     row.lambda_count.str(),
                     row.orbit_count ? std::to_string(*row.orbit_count) : "-",
                     ms.str()});
  }
  const std::size_t columns = with_timings ? 6 : 5;
  std::array<std::size_t, 6> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < columns; ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < columns; ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json_string(const SequenceTable& table, bool with_timings) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.entries) {
    nlohmann::ordered_json obj;
    obj["n"] = row.n;
    obj["k"] = row.k;
    obj["canonical_count"] = row.canonical_count;
    obj["member_count"] = row.lambda_count.str();
    if (row.orbit_count) {
      obj["orbit_count"] = *row.orbit_count;
    } else {
      obj["orbit_count"] = nullptr;
    }
    if (with_timings) obj["elapsed_ms"] = row.elapsed_ms;
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

void write_b_file(const SequenceTable& table, std::ostream& out) {
  for (const auto& row : table.entries) {
    out << row.n << ' ' << row.canonical_count << '\n';
  }
}

}  // namespace binmat
