#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "paradromic/errors.hpp"
#include "paradromic/int_poly.hpp"

using namespace paradromic;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(IntPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{0, 0} == IntPoly{});
  CHECK(IntPoly{}.degree() == -1);
  CHECK((IntPoly{1, 1} - IntPoly{1, 1}).coeffs().empty());
}

TEST_CASE("ring operations") {
  const IntPoly one_minus_x{1, -1};
  const IntPoly one_plus_x{1, 1};
  CHECK(one_minus_x * one_plus_x == IntPoly{1, 0, -1});
  // -(λ-1)(λ²+1)
  CHECK(-(IntPoly{-1, 1} * IntPoly{1, 0, 1}) == IntPoly{1, -1, 1, -1});
  CHECK(one_minus_x + IntPoly{} == one_minus_x);
  CHECK(one_minus_x * IntPoly{} == IntPoly{});
  CHECK(one_plus_x.pow(3) == IntPoly{1, 3, 3, 1});
  CHECK(one_plus_x.pow(0) == IntPoly{1});
}

TEST_CASE("div_exact") {
  CHECK(div_exact(IntPoly{1, 0, -1}, IntPoly{1, 1}) == IntPoly{1, -1});
  CHECK(div_exact(IntPoly{1, 0, 0, 0, -1}, IntPoly{1, 0, -1}) == IntPoly{1, 0, 1});
  CHECK_THROWS_AS(div_exact(IntPoly{1, 0, 1}, IntPoly{1, 1}), NotDivisible);
  CHECK_THROWS_AS(div_exact(IntPoly{1, 2}, IntPoly{}), DivisionByZero);
  CHECK_THROWS_AS(div_exact(IntPoly{1, 2}, IntPoly{0, 0, 1}), NotDivisible);
  CHECK_THROWS_AS(div_exact(IntPoly{1, 1}, IntPoly{2}), NotDivisible);
  CHECK(div_exact(IntPoly{}, IntPoly{3, 1}) == IntPoly{});
}

TEST_CASE("div_exact inverts multiplication") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly q = random_poly(rng, 6);
    IntPoly den = random_poly(rng, 4);
    if (den.is_zero()) den = IntPoly{1, 1};
    CHECK(div_exact(q * den, den) == q);
  }
}

TEST_CASE("eval") {
  // Δ of T(3,2) via (1+x²+x⁴)/(1+x+x²) = 1-x+x²
  const IntPoly delta = div_exact(IntPoly{1, 0, 1, 0, 1}, IntPoly{1, 1, 1});
  CHECK(delta == IntPoly{1, -1, 1});
  CHECK(delta.eval(-1) == 3);
  CHECK(IntPoly{}.eval(12345) == 0);
  CHECK((IntPoly{1, -1} * IntPoly{1, 0, 1}).eval(-1) == 4);
  CHECK(IntPoly{0, 0, 0, 1}.eval(BigInt("1000000000000")) == BigInt("1000000000000000000000000000000000000"));
}

TEST_CASE("to_string") {
  CHECK(IntPoly{1, -1, 1, -1}.to_string() == "-λ³+λ²-λ+1");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly{-2, 0, 3}.to_string("x") == "3x²-2");
  CHECK(IntPoly::monomial(1, 12).to_string() == "λ¹²");
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntMatrix{{2, -1}, {1, 0}}) == IntPoly{1, -2, 1});
  CHECK(char_poly(IntMatrix{{2, -2, 1}, {2, -1, 0}, {1, 0, 0}}) == IntPoly{1, -1, 1, -1});
  CHECK(char_poly(IntMatrix::identity(2)) == IntPoly{1, -2, 1});
  CHECK(char_poly(IntMatrix{{5}}) == IntPoly{5, -1});
  CHECK(char_poly(IntMatrix{}) == IntPoly{1});
  CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly agrees with det(A - λ0 I) at integer points") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -7, 7);
    const IntPoly f = char_poly(a);
    CHECK(f.degree() == static_cast<long>(n));
    CHECK(f.leading() == (n % 2 ? -1 : 1));
    for (long x0 : {-2, -1, 0, 1, 2, 3}) {
      const IntMatrix shifted = a - BigInt(x0) * IntMatrix::identity(n);
      CHECK(f.eval(x0) == oracle::laplace_det(shifted));
    }
  }
}
