#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Square binary matrices encoded as tuples of row values.
//
// An n x n matrix over {0,1} is represented by the n-tuple of its rows read
// as binary numbers, leftmost column first: row i has value
// sum_j a(i,j) * 2^(n-j) with 1-based i,j, so column 1 is the most
// significant bit. All storage below is 0-based; rendered output is 1-based.

namespace binmat {

/// Hard representation limit: a row must fit one 64-bit word.
inline constexpr int kMaxOrder = 64;

/// Default guard for enumeration jobs; larger orders need an explicit
/// override.
inline constexpr int kDeskOrderLimit = 12;

/// Default guard for exhaustive-orbit computations.
inline constexpr int kOracleOrderLimit = 6;

/// A requested computation exceeds a built-in capacity limit.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix order n and row/column weight k, 0 <= k <= n.
struct Dims {
  int n;
  int k;

  Dims(int n_, int k_);
};

/// Ordered tuple of row values <x1,...,xn>, each 0 <= xi <= 2^n - 1.
class RowTuple {
 public:
  RowTuple(int order, std::vector<std::uint64_t> rows);

  /// The zero matrix of the given order.
  static RowTuple zero(int order);

  int order() const { return order_; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  /// Row value, 0-based.
  std::uint64_t row(int i) const { return rows_[static_cast<size_t>(i)]; }

  /// Entry at 0-based (i, j).
  int bit(int i, int j) const {
    return static_cast<int>((rows_[static_cast<size_t>(i)] >>
                             (order_ - 1 - j)) &
                            1u);
  }

  friend bool operator==(const RowTuple&, const RowTuple&) = default;

  /// Lexicographic order on (order, rows).
  friend bool operator<(const RowTuple& a, const RowTuple& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.rows_ < b.rows_;
  }

 private:
  int order_;
  std::vector<std::uint64_t> rows_;
};

/// FNV-1a over the row values, for unordered containers.
struct RowTupleHash {
  size_t operator()(const RowTuple& t) const noexcept;
};

/// Explicit n x n grid of 0/1 entries, row-major.
class BitMatrix {
 public:
  explicit BitMatrix(int order);
  BitMatrix(int order, std::vector<std::uint8_t> bits);

  int order() const { return order_; }
  int at(int i, int j) const {
    return bits_[static_cast<size_t>(i) * order_ + j];
  }
  void set(int i, int j, int value);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int order_;
  std::vector<std::uint8_t> bits_;
};

/// Row-wise encoding of a matrix as a tuple of binary numbers.
RowTuple encode(const BitMatrix& m);

/// Exact inverse of encode.
BitMatrix decode(const RowTuple& t);

/// Tuple of the transposed matrix: entry j is column j of decode(t) read
/// top-down as a binary number.
RowTuple transpose_tuple(const RowTuple& t);

/// True iff every row and every column of decode(t) has exactly d.k ones.
bool is_member(const RowTuple& t, const Dims& d);

/// Bitwise complement of every row; maps weight-k members onto
/// weight-(n-k) members.
RowTuple complement(const RowTuple& t);

/// Permutation of {0,...,n-1}; p[i] is the source index of slot i.
using Perm = std::vector<int>;

/// Identity permutation of the given length.
Perm identity_perm(int n);

/// Reorders rows and columns: result(i, j) = input(row_perm[i], col_perm[j]).
/// Composes as apply_perms(apply_perms(t, p, q), r, s)
///   = apply_perms(t, p o r, q o s).
RowTuple apply_perms(const RowTuple& t, const Perm& row_perm,
                     const Perm& col_perm);

/// "x1,x2,...,xn" in decimal.
std::string to_csv(const RowTuple& t);

/// U+27E8/27E9 angle-bracket rendering of the tuple.
std::string to_angle_string(const RowTuple& t);

/// n lines of n characters from {0,1}, newline-terminated.
std::string to_ascii(const BitMatrix& m);

}  // namespace binmat
