#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "paradromic/int_matrix.hpp"
#include "paradromic/int_poly.hpp"
#include "paradromic/mod_linalg.hpp"

namespace paradromic {

/// P(m,n): m half twists, strip cut into n sections.
struct ParadromeSpec {
  std::size_t m = 0;
  std::size_t n = 1;

  friend bool operator==(const ParadromeSpec&, const ParadromeSpec&) = default;
};

/// T(u,v): meets each longitude u times and each meridian v times; it has
/// d = gcd(u,v) components.
class TorusSpec {
 public:
  TorusSpec(std::size_t u, std::size_t v);

  std::size_t u() const { return u_; }
  std::size_t v() const { return v_; }
  std::size_t d() const { return d_; }

  friend bool operator==(const TorusSpec&, const TorusSpec&) = default;

 private:
  std::size_t u_;
  std::size_t v_;
  std::size_t d_;
};

struct TopType {
  enum class Kind { Circle, Torus, TorusPlusCore };

  Kind kind;
  TorusSpec torus;

  std::size_t components() const;
  /// "T(3,2)", "T(3,2)+C"; the single circle prints as "T(0,1)".
  std::string label() const;

  friend bool operator==(const TopType&, const TopType&) = default;
};

class ColorClass {
 public:
  enum class Kind { Invisible, NearlyInvisible, Rainbow, PrimesDividing };

  static ColorClass invisible() { return ColorClass(Kind::Invisible, 0); }
  static ColorClass nearly_invisible() { return ColorClass(Kind::NearlyInvisible, 0); }
  static ColorClass rainbow() { return ColorClass(Kind::Rainbow, 0); }
  /// Normalizes k = 1 to Invisible and k = 0 to Rainbow.
  static ColorClass primes_dividing(std::uint64_t k);

  Kind kind() const { return kind_; }
  /// Present only for PrimesDividing.
  std::optional<std::uint64_t> modulus() const;
  bool admits(std::uint64_t p) const;
  std::string name() const;

  friend bool operator==(const ColorClass&, const ColorClass&) = default;

 private:
  ColorClass(Kind kind, std::uint64_t k) : kind_(kind), k_(k) {}
  Kind kind_;
  std::uint64_t k_;
};

struct DeterminantInfo {
  enum class Kind { Exact, PowerOfTwoMarker };

  Kind kind = Kind::Exact;
  BigInt value = 0;
  /// Print exact values of the form 2^k as "2^k" (links with a core component).
  bool power_form = false;

  /// Integer, "2^k" with the computed exponent, or "2^k?" when not computed.
  std::string to_string() const;
};

struct Classification {
  ParadromeSpec spec;
  TopType type;
  ColorClass color;
  DeterminantInfo determinant;
};

inline constexpr std::size_t kDefaultCoreArcLimit = 40;

/// [[2,-1],[1,0]]: colors leaving one half twist of a bisected strip.
IntMatrix transfer_T();

/// n x n transfer matrix of the odd pattern (n odd, n >= 3).
IntMatrix transfer_S(std::size_t n);

/// -(λ-1)(λ^{n-1}+1), the characteristic polynomial of transfer_S(n).
IntPoly lemma1_charpoly(std::size_t n);

/// The bordered matrices from the cofactor expansion of S_n - λI, evaluated
/// at λ = lambda: 1-based, (1,1) = 2-λ, column 1 otherwise 2, superdiagonal
/// -1, diagonal -λ from row 3 on (bar_a) or row 2 on (bar_d).
IntMatrix lemma1_bar_a(std::size_t k, long lambda);
IntMatrix lemma1_bar_d(std::size_t k, long lambda);

/// Checks, for every sample point and 2 <= j <= k:
///   det Ā_j = 2 - λ det Ā_{j-1}              (j >= 3)
///   (1+λ) det Ā_j = 2 (1 - (-λ)^{j-1})
///   det D̄_j = 2 - λ det D̄_{j-1}
///   (1+λ) det D̄_j = 2 - (-λ)^j (1-λ)
/// Closed forms are skipped at the pole λ = -1. Needs k >= 2 and at least k
/// distinct sample points.
bool lemma1_intermediates_check(std::size_t k, std::span<const long> sample_points);

TopType topological_type(std::size_t m, std::size_t n);

/// Colorability class of P(m,n). Links with a core component get an exact
/// diagram determinant when their diagram has at most `core_arc_limit` arcs.
Classification classify(std::size_t m, std::size_t n,
                        std::size_t core_arc_limit = kDefaultCoreArcLimit);

/// det T(u,v) = |Δ(-1)|, Δ(x) = (1-x)(1-x^{uv/d})^d / ((1-x^u)(1-x^v)).
/// T(u,1) and T(0,1) are unknots (1); T(0,v) for v >= 2 is split (0).
BigInt torus_det(std::size_t u, std::size_t v);

/// Colorability of a torus knot (gcd(u,v) = 1): u even and p | v, or v even
/// and p | u.
bool torus_knot_colorable(std::size_t u, std::size_t v, Prime p);

/// For mn odd, n > 1, p odd: rank of S^{m(n-1)/2} - I over GF(p) is n-1, so
/// the only λ = 1 eigenvectors are constants. `s` defaults to transfer_S(n).
bool thm2_rank_check(std::size_t m, std::size_t n, Prime p);
bool thm2_rank_check(std::size_t m, std::size_t n, Prime p, const IntMatrix& s);

}  // namespace paradromic
