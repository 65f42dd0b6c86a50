#include "paradromic/mod_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace paradromic {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

/// Row-major residue matrix used internally by the elimination routines.
struct ResidueMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> e;

  std::uint64_t& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
};

ResidueMatrix to_residues(const IntMatrix& a, Prime p) {
  ResidueMatrix m{a.rows(), a.cols(), std::vector<std::uint64_t>(a.rows() * a.cols())};
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = reduce_mod(a(r, c), p);
  return m;
}

ResidueMatrix multiply(const ResidueMatrix& a, const ResidueMatrix& b, std::uint64_t p) {
  ResidueMatrix out{a.rows, b.cols, std::vector<std::uint64_t>(a.rows * b.cols, 0)};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        out.at(i, j) = (out.at(i, j) + aik * b.at(k, j)) % p;
    }
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

/// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(ResidueMatrix& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    const std::uint64_t inv = inverse_mod(m.at(row, col), p);
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv % p;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      const std::uint64_t f = m.at(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = (m.at(r, c) + (p - f) * m.at(row, c)) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(p));
  if (p >= kMaxModulus) throw std::invalid_argument("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

bool ModVector::is_constant() const {
  return std::adjacent_find(coords.begin(), coords.end(), std::not_equal_to<>{}) ==
         coords.end();
}

std::uint64_t reduce_mod(const BigInt& x, Prime p) {
  // mpz_fdiv_ui floors, so the result is already in [0, p-1] for negative x.
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p.value()));
}

IntMatrix mat_pow_mod(const IntMatrix& a, std::uint64_t k, Prime p) {
  if (!a.is_square()) throw std::invalid_argument("mat_pow_mod: matrix is not square");
  const std::uint64_t mod = p.value();
  const std::size_t n = a.rows();
  ResidueMatrix result{n, n, std::vector<std::uint64_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) result.at(i, i) = 1 % mod;
  ResidueMatrix base = to_residues(a, p);
  while (k) {
    if (k & 1) result = multiply(result, base, mod);
    k >>= 1;
    if (k) base = multiply(base, base, mod);
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = static_cast<unsigned long>(result.at(r, c));
  return out;
}

std::size_t rank_mod(const IntMatrix& a, Prime p) {
  ResidueMatrix m = to_residues(a, p);
  return rref(m, p.value()).size();
}

std::vector<ModVector> nullspace_mod(const IntMatrix& a, Prime p) {
  const std::uint64_t mod = p.value();
  ResidueMatrix m = to_residues(a, p);
  const std::vector<std::size_t> pivots = rref(m, mod);

  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    ModVector v{p, std::vector<std::uint64_t>(m.cols, 0)};
    v.coords[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v.coords[pivots[r]] = (mod - m.at(r, free)) % mod;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace paradromic
