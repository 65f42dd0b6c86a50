#include "paradromic/int_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace paradromic {

BigInt det_exact(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("det_exact: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t c = 0; c < n; ++c) swap(m(k, c), m(sel, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // Sylvester's identity guarantees exactness here.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt minor_det(const IntMatrix& a, std::size_t drop_row, std::size_t drop_col) {
  if (!a.is_square()) throw std::invalid_argument("minor_det: matrix is not square");
  return det_exact(a.without(drop_row, drop_col));
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) swap(m(r, a), m(r, b));
}

}  // namespace

std::vector<BigInt> smith_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| of the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m(r, c) != 0 && (pr == rows || mpz_cmpabs(m(r, c).get_mpz_t(), m(pr, pc).get_mpz_t()) < 0)) {
            pr = r;
            pc = c;
          }
      if (pr == rows) break;  // trailing block is zero
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold a non-multiple row into the pivot row.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad_row = r;
            break;
          }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) m(t, c) += m(bad_row, c);
    }
  }

  std::vector<BigInt> factors(diag);
  for (std::size_t i = 0; i < diag; ++i) factors[i] = abs(m(i, i));
  return factors;
}

}  // namespace paradromic
