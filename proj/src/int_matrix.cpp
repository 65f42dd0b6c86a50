#include "paradromic/int_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace paradromic {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

IntMatrix IntMatrix::without(std::size_t drop_row, std::size_t drop_col) const {
  if (drop_row >= rows_ || drop_col >= cols_)
    throw std::out_of_range("IntMatrix::without: index out of range");
  IntMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, orow = 0; r < rows_; ++r) {
    if (r == drop_row) continue;
    for (std::size_t c = 0, ocol = 0; c < cols_; ++c) {
      if (c == drop_col) continue;
      out(orow, ocol++) = (*this)(r, c);
    }
    ++orow;
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix +: shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix -: shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix *: shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& e : out.entries_) e *= s;
  return out;
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: length mismatch");
  std::vector<BigInt> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& a) {
  os << '[';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) os << ',';
      os << a(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace paradromic
