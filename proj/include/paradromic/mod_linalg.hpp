#pragma once

#include <cstdint>
#include <vector>

#include "paradromic/int_matrix.hpp"

namespace paradromic {

/// A validated prime modulus. Construction rejects p < 2 and composites.
///
/// Residues are stored in 64-bit words, so the modulus is capped at 2^32 to
/// keep a single product from overflowing.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Vector over GF(p); every coordinate lies in [0, p-1].
struct ModVector {
  Prime modulus;
  std::vector<std::uint64_t> coords;

  bool is_constant() const;
  friend bool operator==(const ModVector&, const ModVector&) = default;
};

std::uint64_t reduce_mod(const BigInt& x, Prime p);

/// A^k with entries reduced into [0, p-1]. A^0 is the identity.
IntMatrix mat_pow_mod(const IntMatrix& a, std::uint64_t k, Prime p);

std::size_t rank_mod(const IntMatrix& a, Prime p);

/// Basis of the right nullspace over GF(p).
///
/// One vector per free column of the reduced row echelon form, in increasing
/// free-column order; each has a 1 at its own free column and 0 at every
/// other free column.
std::vector<ModVector> nullspace_mod(const IntMatrix& a, Prime p);

}  // namespace paradromic
