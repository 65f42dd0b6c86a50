#include "paradromic/colorings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "paradromic/errors.hpp"
#include "paradromic/int_linalg.hpp"

namespace paradromic {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

std::size_t count_classes(std::vector<std::size_t>& parent) {
  std::size_t classes = 0;
  for (std::size_t a = 0; a < parent.size(); ++a)
    if (find_root(parent, a) == a) ++classes;
  return classes;
}

}  // namespace

IntMatrix coloring_matrix(const RelationSystem& sys) {
  IntMatrix m(sys.crossings().size(), sys.arc_count());
  for (std::size_t r = 0; r < sys.crossings().size(); ++r) {
    const Crossing& x = sys.crossings()[r];
    m(r, x.over) += 2;
    m(r, x.under_a) -= 1;
    m(r, x.under_b) -= 1;
  }
  return m;
}

std::size_t component_count(const RelationSystem& sys) {
  std::vector<std::size_t> parent(sys.arc_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (const Crossing& x : sys.crossings())
    parent[find_root(parent, x.under_a)] = find_root(parent, x.under_b);
  return count_classes(parent) + sys.free_circles();
}

std::size_t split_pieces(const RelationSystem& sys) {
  std::vector<std::size_t> parent(sys.arc_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (const Crossing& x : sys.crossings()) {
    parent[find_root(parent, x.under_a)] = find_root(parent, x.over);
    parent[find_root(parent, x.under_b)] = find_root(parent, x.over);
  }
  return count_classes(parent) + sys.free_circles();
}

std::size_t coloring_dimension(const RelationSystem& sys, Prime p) {
  const std::size_t arcs = sys.arc_count();
  return arcs - rank_mod(coloring_matrix(sys), p) + sys.free_circles();
}

bool is_p_colorable(const RelationSystem& sys, Prime p) {
  // Constants always form a one-dimensional subspace of the colorings.
  return coloring_dimension(sys, p) >= 2;
}

BigInt link_determinant(const RelationSystem& sys) {
  const std::size_t pieces = split_pieces(sys);
  if (pieces == 0) return 1;
  if (pieces >= 2) return 0;
  if (sys.arc_count() == 0) return 1;  // one free circle
  const IntMatrix m = coloring_matrix(sys);
  if (!m.is_square())
    throw std::invalid_argument("link_determinant: crossing count differs from arc count");
  return abs(minor_det(m, m.rows() - 1, m.cols() - 1));
}

std::optional<Coloring> find_coloring(const RelationSystem& sys, Prime p) {
  if (!is_p_colorable(sys, p)) return std::nullopt;
  const std::uint64_t mod = p.value();
  Coloring c{std::vector<std::uint64_t>(sys.arc_count(), 0),
             std::vector<std::uint64_t>(sys.free_circles(), 0)};

  for (const ModVector& v : nullspace_mod(coloring_matrix(sys), p)) {
    if (v.is_constant()) continue;
    const std::uint64_t shift = v.coords[0];
    for (std::size_t a = 0; a < v.coords.size(); ++a)
      c.arcs[a] = (v.coords[a] + mod - shift) % mod;
    return c;
  }
  // Arcs admit only constants: separate by a free circle.
  c.circles[sys.arc_count() > 0 ? 0 : 1] = 1;
  return c;
}

bool is_valid_coloring(const RelationSystem& sys, const Coloring& c, Prime p) {
  const std::uint64_t mod = p.value();
  if (c.arcs.size() != sys.arc_count() || c.circles.size() != sys.free_circles()) return false;
  for (const Crossing& x : sys.crossings())
    if ((2 * c.arcs[x.over]) % mod != (c.arcs[x.under_a] + c.arcs[x.under_b]) % mod) return false;
  return true;
}

std::uint64_t enumerate_colorings(const RelationSystem& sys, Prime p, std::uint64_t budget) {
  const std::uint64_t mod = p.value();
  const std::size_t arcs = sys.arc_count();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arcs + sys.free_circles(); ++i) {
    if (total > budget / mod)
      throw BudgetExceeded("enumerate_colorings: " + std::to_string(mod) + "^" +
                           std::to_string(arcs + sys.free_circles()) + " exceeds budget " +
                           std::to_string(budget));
    total *= mod;
  }

  // Crossings are checked at the depth where their last arc gets a color.
  std::vector<std::vector<Crossing>> due(arcs);
  for (const Crossing& x : sys.crossings())
    due[std::max({x.over, x.under_a, x.under_b})].push_back(x);

  std::vector<std::uint64_t> color(arcs, 0);
  std::uint64_t count = 0;
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == arcs) {
      ++count;
      return;
    }
    for (std::uint64_t c = 0; c < mod; ++c) {
      color[depth] = c;
      bool ok = true;
      for (const Crossing& x : due[depth])
        if ((2 * color[x.over]) % mod != (color[x.under_a] + color[x.under_b]) % mod) {
          ok = false;
          break;
        }
      if (ok) self(self, depth + 1);
    }
  };
  search(search, 0);

  for (std::size_t i = 0; i < sys.free_circles(); ++i) count *= mod;
  return count;
}

}  // namespace paradromic
