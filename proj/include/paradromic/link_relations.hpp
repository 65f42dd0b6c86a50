#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "paradromic/int_matrix.hpp"

namespace paradromic {

using ArcId = std::size_t;

/// One crossing of a diagram. Colors must satisfy
/// 2 c(over) = c(under_a) + c(under_b) (mod p).
struct Crossing {
  ArcId over;
  ArcId under_a;
  ArcId under_b;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A link diagram reduced to its coloring relations: arcs, crossings, and
/// components that pass through no crossing at all.
class RelationSystem {
 public:
  RelationSystem() = default;
  /// Throws std::invalid_argument if an id is out of range or an arc ends at
  /// more than two crossings.
  RelationSystem(std::size_t arc_count, std::vector<Crossing> crossings, std::size_t free_circles);

  std::size_t arc_count() const { return arc_count_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t free_circles() const { return free_circles_; }

  friend bool operator==(const RelationSystem&, const RelationSystem&) = default;

 private:
  std::size_t arc_count_ = 0;
  std::vector<Crossing> crossings_;
  std::size_t free_circles_ = 0;
};

/// Unsigned braid word; letter i stands for the generator crossing strand
/// positions i and i+1 (1-based). Handedness does not affect colorings.
struct BraidWord {
  std::size_t strands = 1;
  std::vector<std::size_t> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// (σ1 σ2 ... σ_{v-1})^u on v strands; its closure is the torus link T(u,v).
BraidWord torus_braid(std::size_t u, std::size_t v);

/// Closure of a braid as a relation system. Strand positions are swept left
/// to right; at σ_i the strand at position i passes over, the strand at i+1
/// is cut and moves to position i under a fresh arc.
RelationSystem braid_relations(const BraidWord& word);

/// A tangle that is repeated and closed up cyclically. Local arc ids are
/// [0, arc_count); `inputs[k]` / `outputs[k]` are the arcs at slot k on the
/// left / right edge.
struct Pattern {
  std::size_t width = 0;
  std::size_t arc_count = 0;
  std::vector<Crossing> crossings;
  std::vector<ArcId> inputs;
  std::vector<ArcId> outputs;
};

/// Single crossing on two strands: the half twist repeated m times for P(m,2).
Pattern twist_pattern();

/// The pattern on n arcs (n odd, n >= 3) whose repetition forms P(m,n) when
/// mn is odd. Introduces arcs y_1..y_{n-1} and a short middle arc w; slot n
/// carries x_1 straight through.
Pattern odd_pattern(std::size_t n);

/// `reps` copies of `pattern`, output slot k of copy j joined to input slot k
/// of copy j+1, the last copy wrapping to the first.
RelationSystem repeat_pattern(const Pattern& pattern, std::size_t reps);

/// Integer matrix sending input colors to output colors across one pattern.
/// Throws std::logic_error if some output is not determined by the inputs.
IntMatrix induced_transfer(const Pattern& pattern);

/// Diagram of the paradromic ring P(m,n): a single free circle for n = 1,
/// the braid closure of T(mn/2, n) when mn is even, otherwise the odd
/// pattern repeated m(n-1)/2 times.
RelationSystem paradrome_relations(std::size_t m, std::size_t n);

/// Line format: "arcs N circles C" then "X over a under b c" per crossing.
void write_relations(std::ostream& os, const RelationSystem& sys);
std::string to_text(const RelationSystem& sys);
/// Inverse of write_relations; throws std::invalid_argument on malformed input.
RelationSystem parse_relations(std::istream& is);

}  // namespace paradromic
