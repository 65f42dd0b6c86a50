#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "paradromic/int_matrix.hpp"

namespace paradromic {

/// Univariate polynomial with integer coefficients, ascending degree.
///
/// Always normalized: the highest stored coefficient is nonzero, and the zero
/// polynomial has no coefficients. Equality is therefore structural.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// c * x^k
  static IntPoly monomial(const BigInt& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  /// Horner evaluation.
  BigInt eval(const BigInt& x0) const;

  IntPoly pow(unsigned k) const;

  /// Renders as e.g. "-λ³+λ²-λ+1"; descending degree.
  std::string to_string(std::string_view var = "λ") const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Quotient q with num == q * den exactly.
/// Throws DivisionByZero when den is zero and NotDivisible on a remainder.
IntPoly div_exact(const IntPoly& num, const IntPoly& den);

/// det(A - λI), computed without division (Berkowitz). Degree n with leading
/// coefficient (-1)^n.
IntPoly char_poly(const IntMatrix& a);

}  // namespace paradromic
