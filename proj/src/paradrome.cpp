#include "paradromic/paradrome.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "paradromic/colorings.hpp"
#include "paradromic/int_linalg.hpp"
#include "paradromic/link_relations.hpp"

namespace paradromic {

TorusSpec::TorusSpec(std::size_t u, std::size_t v) : u_(u), v_(v), d_(std::gcd(u, v)) {
  if (v == 0) throw std::invalid_argument("TorusSpec: v must be positive");
}

std::size_t TopType::components() const {
  switch (kind) {
    case Kind::Circle: return 1;
    case Kind::Torus: return torus.d();
    case Kind::TorusPlusCore: return torus.d() + 1;
  }
  return 0;
}

std::string TopType::label() const {
  std::string s = "T(" + std::to_string(torus.u()) + "," + std::to_string(torus.v()) + ")";
  if (kind == Kind::TorusPlusCore) s += "+C";
  return s;
}

ColorClass ColorClass::primes_dividing(std::uint64_t k) {
  if (k == 0) return rainbow();
  if (k == 1) return invisible();
  return ColorClass(Kind::PrimesDividing, k);
}

std::optional<std::uint64_t> ColorClass::modulus() const {
  if (kind_ == Kind::PrimesDividing) return k_;
  return std::nullopt;
}

bool ColorClass::admits(std::uint64_t p) const {
  switch (kind_) {
    case Kind::Invisible: return false;
    case Kind::NearlyInvisible: return p == 2;
    case Kind::Rainbow: return true;
    case Kind::PrimesDividing: return k_ % p == 0;
  }
  return false;
}

std::string ColorClass::name() const {
  switch (kind_) {
    case Kind::Invisible: return "Invisible";
    case Kind::NearlyInvisible: return "NearlyInvisible";
    case Kind::Rainbow: return "Rainbow";
    case Kind::PrimesDividing: return "PrimesDividing";
  }
  return {};
}

std::string DeterminantInfo::to_string() const {
  if (kind == Kind::PowerOfTwoMarker) return "2^k?";
  if (power_form && value >= 2) {
    const std::size_t exponent = mpz_scan1(value.get_mpz_t(), 0);
    if (value == BigInt(1) << exponent) return "2^" + std::to_string(exponent);
  }
  return value.get_str();
}

IntMatrix transfer_T() { return IntMatrix{{2, -1}, {1, 0}}; }

IntMatrix transfer_S(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("transfer_S: n must be odd and >= 3");
  const std::size_t h = (n - 1) / 2;
  IntMatrix s(n, n);
  // 1-based (row, col) -> 0-based storage.
  auto at = [&s](std::size_t r, std::size_t c) -> BigInt& { return s(r - 1, c - 1); };
  for (std::size_t r = 1; r < n; ++r) at(r, 1) = 2;
  at(n, 1) = 1;
  for (std::size_t i = 1; i < n; ++i)
    if (i != h && i != h + 1) at(i, i + 1) = -1;
  at(h, h + 1) = -2;
  at(h, h + 2) = 1;
  at(h + 1, h + 1) = -1;
  return s;
}

IntPoly lemma1_charpoly(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("lemma1_charpoly: n must be odd and >= 3");
  const IntPoly lambda_minus_one{-1, 1};
  const IntPoly power_plus_one = IntPoly::monomial(1, n - 1) + IntPoly{1};
  return -(lambda_minus_one * power_plus_one);
}

namespace {

IntMatrix lemma1_bordered(std::size_t k, long lambda, std::size_t first_lambda_row) {
  IntMatrix a(k, k);
  for (std::size_t r = 0; r < k; ++r) a(r, 0) = 2;
  a(0, 0) = 2 - lambda;
  for (std::size_t r = 0; r + 1 < k; ++r) a(r, r + 1) = -1;
  for (std::size_t r = first_lambda_row - 1; r < k; ++r)
    if (r > 0) a(r, r) = -lambda;
  return a;
}

BigInt pow_signed(long base, std::size_t exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), BigInt(base).get_mpz_t(), exp);
  return out;
}

}  // namespace

IntMatrix lemma1_bar_a(std::size_t k, long lambda) {
  if (k == 0) throw std::invalid_argument("lemma1_bar_a: k must be positive");
  return lemma1_bordered(k, lambda, 3);
}

IntMatrix lemma1_bar_d(std::size_t k, long lambda) {
  if (k == 0) throw std::invalid_argument("lemma1_bar_d: k must be positive");
  return lemma1_bordered(k, lambda, 2);
}

bool lemma1_intermediates_check(std::size_t k, std::span<const long> sample_points) {
  if (k < 2) throw std::invalid_argument("lemma1_intermediates_check: k must be >= 2");
  const std::set<long> distinct(sample_points.begin(), sample_points.end());
  if (distinct.size() < k)
    throw std::invalid_argument("lemma1_intermediates_check: need at least k distinct sample points");

  for (long lambda : distinct) {
    const bool pole = lambda == -1;
    BigInt prev_a = det_exact(lemma1_bar_a(1, lambda));
    BigInt prev_d = det_exact(lemma1_bar_d(1, lambda));
    for (std::size_t j = 2; j <= k; ++j) {
      const BigInt det_a = det_exact(lemma1_bar_a(j, lambda));
      const BigInt det_d = det_exact(lemma1_bar_d(j, lambda));
      if (j >= 3 && det_a != 2 - lambda * prev_a) return false;
      if (det_d != 2 - lambda * prev_d) return false;
      if (!pole) {
        if ((1 + lambda) * det_a != 2 * (1 - pow_signed(-lambda, j - 1))) return false;
        if ((1 + lambda) * det_d != 2 - pow_signed(-lambda, j) * (1 - lambda)) return false;
      }
      prev_a = det_a;
      prev_d = det_d;
    }
  }
  return true;
}

TopType topological_type(std::size_t m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("topological_type: n must be positive");
  if (n == 1) return {TopType::Kind::Circle, TorusSpec(0, 1)};
  if ((m * n) % 2 == 0) return {TopType::Kind::Torus, TorusSpec(m * n / 2, n)};
  return {TopType::Kind::TorusPlusCore, TorusSpec(m * (n - 1) / 2, n - 1)};
}

Classification classify(std::size_t m, std::size_t n, std::size_t core_arc_limit) {
  const TopType type = topological_type(m, n);
  Classification out{{m, n}, type, ColorClass::invisible(), {}};

  switch (type.kind) {
    case TopType::Kind::Circle:
      out.determinant.value = 1;
      return out;

    case TopType::Kind::TorusPlusCore: {
      out.color = ColorClass::nearly_invisible();
      const std::size_t arcs = n * (m * (n - 1) / 2);
      if (arcs <= core_arc_limit) {
        out.determinant.value = link_determinant(paradrome_relations(m, n));
        out.determinant.power_form = true;
      } else {
        out.determinant.kind = DeterminantInfo::Kind::PowerOfTwoMarker;
      }
      return out;
    }

    case TopType::Kind::Torus:
      break;
  }

  out.determinant.value = torus_det(type.torus.u(), type.torus.v());
  if (n == 2)
    out.color = ColorClass::primes_dividing(m);
  else if (n == 4 && m % 2 == 1)
    out.color = ColorClass::primes_dividing(2 * m);
  else if (n % 2 == 1 && (m / 2) % 2 == 1)
    out.color = ColorClass::nearly_invisible();
  else
    out.color = ColorClass::rainbow();
  return out;
}

BigInt torus_det(std::size_t u, std::size_t v) {
  if (v == 0) throw std::invalid_argument("torus_det: v must be positive");
  if (u == 0) return v == 1 ? 1 : 0;
  if (v == 1) return 1;

  const std::size_t d = std::gcd(u, v);
  auto one_minus_x_to = [](std::size_t k) { return IntPoly{1} - IntPoly::monomial(1, k); };
  const IntPoly num = one_minus_x_to(1) * one_minus_x_to(u * v / d).pow(static_cast<unsigned>(d));
  const IntPoly den = one_minus_x_to(u) * one_minus_x_to(v);
  return abs(div_exact(num, den).eval(-1));
}

bool torus_knot_colorable(std::size_t u, std::size_t v, Prime p) {
  if (u == 0 || v == 0) throw std::invalid_argument("torus_knot_colorable: u, v must be positive");
  if (std::gcd(u, v) != 1) throw std::invalid_argument("torus_knot_colorable: gcd(u,v) != 1");
  const std::uint64_t q = p.value();
  return (u % 2 == 0 && v % q == 0) || (v % 2 == 0 && u % q == 0);
}

bool thm2_rank_check(std::size_t m, std::size_t n, Prime p) {
  return thm2_rank_check(m, n, p, transfer_S(n));
}

bool thm2_rank_check(std::size_t m, std::size_t n, Prime p, const IntMatrix& s) {
  if (m % 2 == 0 || n % 2 == 0 || n < 3)
    throw std::invalid_argument("thm2_rank_check: m and n must be odd with n > 1");
  if (p.value() == 2) throw std::invalid_argument("thm2_rank_check: p must be odd");
  if (s.rows() != n || !s.is_square())
    throw std::invalid_argument("thm2_rank_check: transfer matrix has the wrong size");
  const std::size_t reps = m * (n - 1) / 2;
  const IntMatrix shifted = mat_pow_mod(s, reps, p) - IntMatrix::identity(n);
  return rank_mod(shifted, p) == n - 1;
}

}  // namespace paradromic
