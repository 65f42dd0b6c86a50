#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace paradromic {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// The 0x0 matrix is a legal value (it is what a one-arc kink reduces to
/// after deleting a row and a column).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<BigInt> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  /// Copy with one row and one column removed.
  IntMatrix without(std::size_t drop_row, std::size_t drop_col) const;

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const BigInt& s, const IntMatrix& a);

  /// Matrix-vector product.
  std::vector<BigInt> apply(std::span<const BigInt> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

}  // namespace paradromic
