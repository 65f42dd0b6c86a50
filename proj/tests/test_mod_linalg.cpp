#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "paradromic/mod_linalg.hpp"

using namespace paradromic;

namespace {
const IntMatrix kT{{2, -1}, {1, 0}};
}

TEST_CASE("Prime rejects non-primes") {
  CHECK_THROWS_AS(Prime(0), std::invalid_argument);
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Prime(91), std::invalid_argument);
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(65521).value() == 65521);
}

TEST_CASE("mat_pow_mod") {
  CHECK(mat_pow_mod(kT, 0, Prime(5)) == IntMatrix::identity(2));
  // T^3 = [[4,-3],[3,-2]]
  CHECK(mat_pow_mod(kT, 3, Prime(5)) == IntMatrix{{4, 2}, {3, 3}});
  CHECK(oracle::naive_pow_mod(kT, 3, 5) == IntMatrix{{4, 2}, {3, 3}});
  CHECK_THROWS_AS(mat_pow_mod(IntMatrix(2, 3), 2, Prime(3)), std::invalid_argument);

  SUBCASE("T^m - I is [[m,-m],[m,-m]] mod p") {
    for (std::uint64_t p : {2, 3, 5, 7, 11})
      for (long m = 0; m <= 10; ++m) {
        const IntMatrix want{{m, -m}, {m, -m}};
        const IntMatrix got = mat_pow_mod(kT, m, Prime(p)) - IntMatrix::identity(2);
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < 2; ++c)
            CHECK(oracle::mod(got(r, c), p) == oracle::mod(want(r, c), p));
      }
  }
}

TEST_CASE("mat_pow_mod is a homomorphism on exponents") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -9, 9);
    const Prime p(std::vector<std::uint64_t>{2, 3, 5, 7, 13}[trial % 5]);
    const unsigned j = trial % 6, k = (trial * 7) % 9;
    IntMatrix product = mat_pow_mod(a, j, p) * mat_pow_mod(a, k, p);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) product(r, c) = oracle::mod(product(r, c), p.value());
    CHECK(mat_pow_mod(a, j + k, p) == product);
    CHECK(mat_pow_mod(a, k, p) == oracle::naive_pow_mod(a, k, p.value()));
  }
}

TEST_CASE("rank_mod") {
  const IntMatrix three{{3, -3}, {3, -3}};
  CHECK(rank_mod(three, Prime(3)) == 0);
  CHECK(rank_mod(three, Prime(5)) == 1);
  for (std::size_t n = 0; n < 6; ++n) CHECK(rank_mod(IntMatrix::identity(n), Prime(7)) == n);
  CHECK(rank_mod(IntMatrix(3, 0), Prime(2)) == 0);
}

TEST_CASE("nullspace_mod") {
  const IntMatrix three{{3, -3}, {3, -3}};
  CHECK(nullspace_mod(three, Prime(3)).size() == 2);

  const auto ones = nullspace_mod(IntMatrix{{1, -1}, {1, -1}}, Prime(5));
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].coords == std::vector<std::uint64_t>{1, 1});
  CHECK(ones[0].is_constant());

  CHECK(nullspace_mod(IntMatrix::identity(4), Prime(3)).empty());

  SUBCASE("basis is in reduced echelon form") {
    // x + 2y + 3z = 0 over GF(5): free columns y, z.
    const auto basis = nullspace_mod(IntMatrix{{1, 2, 3}}, Prime(5));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].coords == std::vector<std::uint64_t>{3, 1, 0});
    CHECK(basis[1].coords == std::vector<std::uint64_t>{2, 0, 1});
  }
}

TEST_CASE("rank plus nullity equals columns; nullity matches brute force") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    const Prime p(std::vector<std::uint64_t>{2, 3, 5}[trial % 3]);
    // Entries biased toward multiples of p so that rank deficiency is common.
    IntMatrix a = oracle::random_matrix(rng, rows, cols, -3, 3);
    for (std::size_t c = 0; c < cols; ++c) a(0, c) *= p.value() * (trial % 2);
    const auto basis = nullspace_mod(a, p);
    CHECK(rank_mod(a, p) + basis.size() == cols);

    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expected *= p.value();
    CHECK(oracle::brute_solution_count(a, p.value()) == expected);

    for (const auto& v : basis) {
      for (std::size_t r = 0; r < rows; ++r) {
        BigInt s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += a(r, c) * static_cast<unsigned long>(v.coords[c]);
        CHECK(oracle::mod(s, p.value()) == 0);
      }
    }
  }
}
