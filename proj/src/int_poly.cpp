#include "paradromic/int_poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "paradromic/errors.hpp"

namespace paradromic {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x0) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

IntPoly IntPoly::pow(unsigned k) const {
  IntPoly result{1};
  IntPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

namespace {

std::string superscript(std::size_t k) {
  static constexpr std::array<const char*, 10> digits = {"⁰", "¹", "²", "³", "⁴",
                                                         "⁵", "⁶", "⁷", "⁸", "⁹"};
  const std::string dec = std::to_string(k);
  std::string out;
  for (char d : dec) out += digits[static_cast<std::size_t>(d - '0')];
  return out;
}

}  // namespace

std::string IntPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << superscript(k);
    first = false;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly div_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw DivisionByZero("div_exact: zero divisor");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree())
    throw NotDivisible("div_exact: divisor degree exceeds dividend degree");

  std::vector<BigInt> rem = num.coeffs();
  const auto dd = static_cast<std::size_t>(den.degree());
  const BigInt& lead = den.coeffs().back();
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NotDivisible("div_exact: leading coefficient does not divide");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * den.coeffs()[j];
    quot[k] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
    throw NotDivisible("div_exact: nonzero remainder");
  return IntPoly(std::move(quot));
}

IntPoly char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = a.rows();

  // Berkowitz: p_k = T_k p_{k-1}, with T_k the lower-triangular Toeplitz
  // matrix whose first column is (1, -a_kk, -R C, -R M C, ..., -R M^{k-2} C)
  // for the leading k x k block [[M, C], [R, a_kk]]. p holds det(λI - A_k)
  // coefficients in descending degree.
  std::vector<BigInt> p{1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t last = k - 1;
    std::vector<BigInt> column(k + 1);
    column[0] = 1;
    column[1] = -a(last, last);
    // w runs through M^j C.
    std::vector<BigInt> w(last);
    for (std::size_t i = 0; i < last; ++i) w[i] = a(i, last);
    for (std::size_t j = 2; j <= k; ++j) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < last; ++i) dot += a(last, i) * w[i];
      column[j] = -dot;
      if (j == k) break;
      std::vector<BigInt> next(last);
      for (std::size_t r = 0; r < last; ++r)
        for (std::size_t c = 0; c < last; ++c) next[r] += a(r, c) * w[c];
      w = std::move(next);
    }
    std::vector<BigInt> q(k + 1);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c < k && c <= r; ++c) q[r] += column[r - c] * p[c];
    p = std::move(q);
  }

  // Convert descending det(λI - A) to ascending det(A - λI) = (-1)^n det(λI - A).
  std::vector<BigInt> asc(n + 1);
  for (std::size_t d = 0; d <= n; ++d) asc[d] = p[n - d];
  if (n % 2 == 1)
    for (auto& c : asc) c = -c;
  return IntPoly(std::move(asc));
}

}  // namespace paradromic
