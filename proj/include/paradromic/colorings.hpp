#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paradromic/int_matrix.hpp"
#include "paradromic/link_relations.hpp"
#include "paradromic/mod_linalg.hpp"

namespace paradromic {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// One row per crossing, one column per arc: +2 at the overarc, -1 at each
/// underarc, summed where ids coincide. Free circles contribute nothing.
IntMatrix coloring_matrix(const RelationSystem& sys);

/// Link components: underarc pieces of one crossing belong to the same strand.
std::size_t component_count(const RelationSystem& sys);

/// Pieces of the diagram that share no crossing (free circles included).
std::size_t split_pieces(const RelationSystem& sys);

/// Dimension of the full solution space over GF(p): arc nullity plus one free
/// color per crossing-free circle.
std::size_t coloring_dimension(const RelationSystem& sys, Prime p);

/// True iff some coloring uses at least two colors.
bool is_p_colorable(const RelationSystem& sys, Prime p);

/// det(L): |minor| of the coloring matrix without its last row and column.
/// A lone free circle gives 1; a split diagram gives 0.
BigInt link_determinant(const RelationSystem& sys);

struct Coloring {
  std::vector<std::uint64_t> arcs;
  std::vector<std::uint64_t> circles;
};

/// A non-constant coloring, or nullopt when none exists. Uses the first
/// non-constant nullspace basis vector shifted so that arc 0 gets color 0;
/// if the arcs only admit constants, a free circle is given color 1 instead.
std::optional<Coloring> find_coloring(const RelationSystem& sys, Prime p);

/// Satisfies every crossing relation mod p?
bool is_valid_coloring(const RelationSystem& sys, const Coloring& c, Prime p);

/// Exhaustive count of all colorings, constants included. Independent of the
/// linear algebra: a depth-first search over arc colors that checks each
/// crossing once its three arcs are assigned. Throws BudgetExceeded when
/// p^(arcs + circles) > budget.
std::uint64_t enumerate_colorings(const RelationSystem& sys, Prime p,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace paradromic
