#include "binmat/canonical.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "packed_tuple.hpp"

namespace binmat {

namespace {

bool nondecreasing(const std::vector<std::uint64_t>& v) {
  return std::is_sorted(v.begin(), v.end());
}

// Stable sorting permutation: slot i takes the i-th smallest key.
Perm sorting_perm(const std::vector<std::uint64_t>& keys) {
  Perm p(keys.size());
  std::iota(p.begin(), p.end(), 0);
  std::stable_sort(p.begin(), p.end(), [&](int a, int b) {
    return keys[static_cast<size_t>(a)] < keys[static_cast<size_t>(b)];
  });
  return p;
}

}  // namespace

bool is_canonical(const RowTuple& t) {
  if (!nondecreasing(t.rows())) return false;
  return nondecreasing(transpose_tuple(t).rows());
}

bool has_border_form(const RowTuple& t, const Dims& d) {
  if (!is_member(t, d))
    throw std::domain_error(
        "has_border_form requires a member with the given dims");
  const int n = d.n;
  const int k = d.k;
  const std::uint64_t step = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
  if (t.row(0) != step) return false;
  for (int i = 0; i < n; ++i) {
    const int want = i < n - k ? 0 : 1;
    if (t.bit(i, 0) != want) return false;
  }
  return true;
}

DoublySortResult doubly_sort(const RowTuple& t, int max_iters) {
  if (max_iters < 1) throw std::domain_error("max_iters must be positive");
  RowTuple cur = t;
  for (int iter = 0; iter < max_iters; ++iter) {
    if (is_canonical(cur)) return {cur, true};
    if (!nondecreasing(cur.rows())) {
      std::vector<std::uint64_t> rows = cur.rows();
      std::stable_sort(rows.begin(), rows.end());
      cur = RowTuple(cur.order(), std::move(rows));
    }
    const RowTuple cols = transpose_tuple(cur);
    if (!nondecreasing(cols.rows())) {
      cur = apply_perms(cur, identity_perm(cur.order()),
                        sorting_perm(cols.rows()));
    }
  }
  return {cur, is_canonical(cur)};
}

DoublySortResult doubly_sort(const RowTuple& t) {
  return doubly_sort(t, t.order() * t.order());
}

RowTuple min_orbit_rep(const RowTuple& t, int order_limit) {
  const int n = t.order();
  if (n > order_limit || n > 8)
    throw capacity_error("min_orbit_rep is limited to order " +
                         std::to_string(std::min(order_limit, 8)));

  const std::uint64_t start = detail::pack(t);
  std::uint64_t best = start;
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> queue{start};
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    best = std::min(best, cur);
    for (int i = 0; i + 1 < n; ++i) {
      for (const std::uint64_t next : {detail::swap_adjacent_rows(cur, n, i),
                                       detail::swap_adjacent_cols(cur, n, i)}) {
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return detail::unpack(best, n);
}

}  // namespace binmat
