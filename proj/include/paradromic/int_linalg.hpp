#pragma once

#include <cstddef>
#include <vector>

#include "paradromic/int_matrix.hpp"

namespace paradromic {

/// Exact determinant by fraction-free (Bareiss) elimination.
/// The determinant of the 0x0 matrix is 1.
BigInt det_exact(const IntMatrix& a);

/// Determinant of `a` with one row and one column deleted.
BigInt minor_det(const IntMatrix& a, std::size_t drop_row, std::size_t drop_col);

/// Invariant factors d_1 | d_2 | ... of the Smith normal form, min(rows, cols)
/// of them, nonnegative, zeros last.
std::vector<BigInt> smith_normal_form(const IntMatrix& a);

}  // namespace paradromic
