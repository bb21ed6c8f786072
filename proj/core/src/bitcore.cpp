#include "binmat/bitcore.hpp"

#include <bit>
#include <sstream>

namespace binmat {

namespace {

std::uint64_t row_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_order(int n) {
  if (n < 1) throw std::domain_error("matrix order must be positive");
  if (n > kMaxOrder)
    throw capacity_error("matrix order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxOrder));
}

void check_perm(const Perm& p, int n, const char* which) {
  if (static_cast<int>(p.size()) != n)
    throw std::domain_error(std::string(which) +
                            " permutation length does not match order");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::domain_error(std::string(which) +
                              " permutation is not a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
}

}  // namespace

Dims::Dims(int n_, int k_) : n(n_), k(k_) {
  check_order(n);
  if (k < 0 || k > n)
    throw std::domain_error("weight k must satisfy 0 <= k <= n");
}

RowTuple::RowTuple(int order, std::vector<std::uint64_t> rows)
    : order_(order), rows_(std::move(rows)) {
  check_order(order_);
  if (rows_.size() != static_cast<size_t>(order_))
    throw std::domain_error("tuple length does not match order");
  const std::uint64_t mask = row_mask(order_);
  for (std::uint64_t x : rows_) {
    if (x > mask)
      throw std::domain_error("row value " + std::to_string(x) +
                              " exceeds 2^n - 1");
  }
}

RowTuple RowTuple::zero(int order) {
  check_order(order);
  return RowTuple(order, std::vector<std::uint64_t>(
                             static_cast<size_t>(order), 0));
}

size_t RowTupleHash::operator()(const RowTuple& t) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t x : t.rows()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

BitMatrix::BitMatrix(int order)
    : order_(order),
      bits_(static_cast<size_t>(order) * static_cast<size_t>(order), 0) {
  check_order(order_);
}

BitMatrix::BitMatrix(int order, std::vector<std::uint8_t> bits)
    : order_(order), bits_(std::move(bits)) {
  check_order(order_);
  if (bits_.size() != static_cast<size_t>(order_) * order_)
    throw std::domain_error("bit grid size does not match order");
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::domain_error("matrix entries must be 0 or 1");
  }
}

void BitMatrix::set(int i, int j, int value) {
  if (value != 0 && value != 1)
    throw std::domain_error("matrix entries must be 0 or 1");
  bits_[static_cast<size_t>(i) * order_ + j] = static_cast<std::uint8_t>(value);
}

RowTuple encode(const BitMatrix& m) {
  const int n = m.order();
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::uint64_t x = 0;
    for (int j = 0; j < n; ++j) x = (x << 1) | static_cast<unsigned>(m.at(i, j));
    rows[static_cast<size_t>(i)] = x;
  }
  return RowTuple(n, std::move(rows));
}

BitMatrix decode(const RowTuple& t) {
  const int n = t.order();
  BitMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, t.bit(i, j));
  return m;
}

RowTuple transpose_tuple(const RowTuple& t) {
  const int n = t.order();
  std::vector<std::uint64_t> cols(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t x = t.row(i);
    for (int j = 0; j < n; ++j) {
      cols[static_cast<size_t>(j)] |= ((x >> (n - 1 - j)) & 1u)
                                      << (n - 1 - i);
    }
  }
  return RowTuple(n, std::move(cols));
}

bool is_member(const RowTuple& t, const Dims& d) {
  if (t.order() != d.n)
    throw std::domain_error("tuple order does not match dims");
  for (std::uint64_t x : t.rows()) {
    if (std::popcount(x) != d.k) return false;
  }
  const RowTuple cols = transpose_tuple(t);
  for (std::uint64_t y : cols.rows()) {
    if (std::popcount(y) != d.k) return false;
  }
  return true;
}

RowTuple complement(const RowTuple& t) {
  const std::uint64_t mask = row_mask(t.order());
  std::vector<std::uint64_t> rows;
  rows.reserve(t.rows().size());
  for (std::uint64_t x : t.rows()) rows.push_back(x ^ mask);
  return RowTuple(t.order(), std::move(rows));
}

Perm identity_perm(int n) {
  Perm p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  return p;
}

RowTuple apply_perms(const RowTuple& t, const Perm& row_perm,
                     const Perm& col_perm) {
  const int n = t.order();
  check_perm(row_perm, n, "row");
  check_perm(col_perm, n, "column");
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t src = t.row(row_perm[static_cast<size_t>(i)]);
    std::uint64_t x = 0;
    for (int j = 0; j < n; ++j) {
      x = (x << 1) |
          ((src >> (n - 1 - col_perm[static_cast<size_t>(j)])) & 1u);
    }
    rows[static_cast<size_t>(i)] = x;
  }
  return RowTuple(n, std::move(rows));
}

std::string to_csv(const RowTuple& t) {
  std::ostringstream out;
  for (size_t i = 0; i < t.rows().size(); ++i) {
    if (i) out << ',';
    out << t.rows()[i];
  }
  return out.str();
}

std::string to_angle_string(const RowTuple& t) {
  return "⟨" + to_csv(t) + "⟩";
}

std::string to_ascii(const BitMatrix& m) {
  std::string out;
  const int n = m.order();
  out.reserve(static_cast<size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out += static_cast<char>('0' + m.at(i, j));
    out += '\n';
  }
  return out;
}

}  // namespace binmat
