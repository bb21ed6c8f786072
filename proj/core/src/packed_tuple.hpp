#pragma once

#include <cstdint>

#include "binmat/bitcore.hpp"

// Internal: tuples of order <= 8 packed into one 64-bit key, n bits per row,
// row 0 in the most significant field. Numeric order on keys equals
// lexicographic order on tuples.

namespace binmat::detail {

inline std::uint64_t order_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline std::uint64_t pack(const RowTuple& t) {
  const int n = t.order();
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) key = (key << n) | t.row(i);
  return key;
}

inline RowTuple unpack(std::uint64_t key, int n) {
  const std::uint64_t mask = order_mask(n);
  std::vector<std::uint64_t> rows(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    rows[static_cast<size_t>(i)] = key & mask;
    key >>= n;
  }
  return RowTuple(n, std::move(rows));
}

/// Swap rows i and i+1 (0-based).
inline std::uint64_t swap_adjacent_rows(std::uint64_t key, int n, int i) {
  const std::uint64_t mask = order_mask(n);
  const int lo = n * (n - 2 - i);
  const std::uint64_t a = (key >> (lo + n)) & mask;
  const std::uint64_t b = (key >> lo) & mask;
  key &= ~(((mask << n) | mask) << lo);
  return key | (b << (lo + n)) | (a << lo);
}

/// Swap columns j and j+1 (0-based).
inline std::uint64_t swap_adjacent_cols(std::uint64_t key, int n, int j) {
  const int hi = n - 1 - j;
  std::uint64_t out = key;
  for (int f = 0; f < n; ++f) {
    const int base = n * f;
    const std::uint64_t a = (key >> (base + hi)) & 1u;
    const std::uint64_t b = (key >> (base + hi - 1)) & 1u;
    if (a != b) out ^= std::uint64_t{3} << (base + hi - 1);
  }
  return out;
}

}  // namespace binmat::detail
