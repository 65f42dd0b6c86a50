#include "doctest.h"

#include <sstream>

#include "paradromic/int_matrix.hpp"

using paradromic::BigInt;
using paradromic::IntMatrix;

TEST_CASE("zero-size matrices are legal") {
  IntMatrix empty;
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);
  CHECK(empty.is_square());
  CHECK(IntMatrix(0, 3).cols() == 3);
  CHECK(IntMatrix{{5}}.without(0, 0) == IntMatrix{});
}

TEST_CASE("without drops exactly one row and column") {
  const IntMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(a.without(1, 1) == IntMatrix{{1, 3}, {7, 9}});
  CHECK(a.without(2, 0) == IntMatrix{{2, 3}, {5, 6}});
  CHECK_THROWS_AS(a.without(3, 0), std::out_of_range);
}

TEST_CASE("arithmetic") {
  const IntMatrix t{{2, -1}, {1, 0}};
  CHECK(t * t == IntMatrix{{3, -2}, {2, -1}});
  CHECK(t - IntMatrix::identity(2) == IntMatrix{{1, -1}, {1, -1}});
  CHECK(BigInt(3) * t == IntMatrix{{6, -3}, {3, 0}});
  CHECK(t.transposed() == IntMatrix{{2, 1}, {-1, 0}});
  const std::vector<BigInt> x{7, 7};
  CHECK(t.apply(x) == x);
  CHECK_THROWS_AS(t * IntMatrix(3, 1), std::invalid_argument);
  CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("entries are arbitrary precision") {
  IntMatrix a{{1, 1}, {1, 0}};
  IntMatrix f = IntMatrix::identity(2);
  for (int i = 0; i < 200; ++i) f = f * a;
  // A^200 = [[F201, F200], [F200, F199]]
  CHECK(f(0, 1).get_str() == "280571172992510140037611932413038677189525");
}

TEST_CASE("printing") {
  std::ostringstream os;
  os << IntMatrix{{2, -1}, {1, 0}};
  CHECK(os.str() == "[[2,-1],[1,0]]");
}
