#include "paradromic/link_relations.hpp"

#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace paradromic {

RelationSystem::RelationSystem(std::size_t arc_count, std::vector<Crossing> crossings,
                               std::size_t free_circles)
    : arc_count_(arc_count), crossings_(std::move(crossings)), free_circles_(free_circles) {
  std::vector<int> under_uses(arc_count_, 0);
  for (const Crossing& x : crossings_) {
    if (x.over >= arc_count_ || x.under_a >= arc_count_ || x.under_b >= arc_count_)
      throw std::invalid_argument("RelationSystem: arc id out of range");
    ++under_uses[x.under_a];
    ++under_uses[x.under_b];
  }
  for (int uses : under_uses)
    if (uses > 2) throw std::invalid_argument("RelationSystem: arc ends at more than two crossings");
}

namespace {

class UnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

/// Collects crossings over provisional arc ids, merges ids that closure
/// identifies, then renumbers by first appearance.
class DiagramBuilder {
 public:
  ArcId new_arc() { return uf_.add(); }
  void identify(ArcId a, ArcId b) { uf_.unite(a, b); }
  void cross(ArcId over, ArcId under_a, ArcId under_b) {
    crossings_.push_back({over, under_a, under_b});
  }

  RelationSystem finish() {
    std::map<std::size_t, ArcId> canon;
    auto id_of = [&](ArcId a) {
      const std::size_t root = uf_.find(a);
      auto [it, inserted] = canon.try_emplace(root, canon.size());
      return it->second;
    };
    std::vector<Crossing> out;
    out.reserve(crossings_.size());
    for (const Crossing& x : crossings_) {
      const ArcId o = id_of(x.over);
      const ArcId a = id_of(x.under_a);
      const ArcId b = id_of(x.under_b);
      out.push_back({o, a, b});
    }
    const std::size_t arcs = canon.size();
    std::size_t free_circles = 0;
    for (std::size_t a = 0; a < uf_.size(); ++a)
      if (uf_.find(a) == a && !canon.contains(a)) ++free_circles;
    return RelationSystem(arcs, std::move(out), free_circles);
  }

 private:
  UnionFind uf_;
  std::vector<Crossing> crossings_;
};

}  // namespace

BraidWord torus_braid(std::size_t u, std::size_t v) {
  if (v == 0) throw std::invalid_argument("torus_braid: need at least one strand");
  BraidWord w{v, {}};
  for (std::size_t rep = 0; rep < u; ++rep)
    for (std::size_t i = 1; i < v; ++i) w.letters.push_back(i);
  return w;
}

RelationSystem braid_relations(const BraidWord& word) {
  if (word.strands == 0) throw std::invalid_argument("braid_relations: no strands");
  DiagramBuilder b;
  std::vector<ArcId> initial(word.strands);
  for (auto& a : initial) a = b.new_arc();
  std::vector<ArcId> current = initial;
  for (std::size_t letter : word.letters) {
    if (letter < 1 || letter >= word.strands)
      throw std::invalid_argument("braid_relations: generator out of range");
    const ArcId over = current[letter - 1];
    const ArcId under = current[letter];
    const ArcId fresh = b.new_arc();
    b.cross(over, under, fresh);
    current[letter - 1] = fresh;
    current[letter] = over;
  }
  for (std::size_t s = 0; s < word.strands; ++s) b.identify(current[s], initial[s]);
  return b.finish();
}

Pattern twist_pattern() {
  // x = (0, 1), y_1 = 2 = 2 x_1 - x_2, y_2 = x_1.
  return Pattern{2, 3, {{0, 1, 2}}, {0, 1}, {2, 0}};
}

Pattern odd_pattern(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd_pattern: n must be odd and >= 3");
  const std::size_t h = (n - 1) / 2;
  // 1-based names: x_j -> j-1, y_i -> n+i-1, w -> 2n-1.
  auto x = [](std::size_t j) { return j - 1; };
  auto y = [n](std::size_t i) { return n + i - 1; };
  const ArcId w = 2 * n - 1;

  Pattern p;
  p.width = n;
  p.arc_count = 2 * n;
  for (std::size_t i = 1; i < n; ++i) {
    if (i == h) continue;
    if (i == h + 1)
      p.crossings.push_back({x(1), x(h + 1), y(h + 1)});
    else
      p.crossings.push_back({x(1), x(i + 1), y(i)});
  }
  p.crossings.push_back({x(h + 1), x(h + 2), w});
  p.crossings.push_back({x(1), w, y(h)});

  for (std::size_t j = 1; j <= n; ++j) p.inputs.push_back(x(j));
  for (std::size_t i = 1; i < n; ++i) p.outputs.push_back(y(i));
  p.outputs.push_back(x(1));
  return p;
}

RelationSystem repeat_pattern(const Pattern& pattern, std::size_t reps) {
  if (pattern.inputs.size() != pattern.width || pattern.outputs.size() != pattern.width)
    throw std::invalid_argument("repeat_pattern: slot maps do not match width");
  if (reps == 0) return RelationSystem(0, {}, pattern.width);

  DiagramBuilder b;
  std::vector<std::vector<ArcId>> copies(reps, std::vector<ArcId>(pattern.arc_count));
  for (auto& copy : copies)
    for (auto& a : copy) a = b.new_arc();
  for (std::size_t r = 0; r < reps; ++r) {
    for (const Crossing& x : pattern.crossings)
      b.cross(copies[r][x.over], copies[r][x.under_a], copies[r][x.under_b]);
    const auto& next = copies[(r + 1) % reps];
    for (std::size_t s = 0; s < pattern.width; ++s)
      b.identify(copies[r][pattern.outputs[s]], next[pattern.inputs[s]]);
  }
  return b.finish();
}

IntMatrix induced_transfer(const Pattern& pattern) {
  const std::size_t w = pattern.width;
  // Each arc's color as an integer combination of the input colors.
  std::vector<std::optional<std::vector<BigInt>>> color(pattern.arc_count);
  for (std::size_t s = 0; s < w; ++s) {
    std::vector<BigInt> unit(w);
    unit[s] = 1;
    color[pattern.inputs[s]] = std::move(unit);
  }
  auto combine = [w](const std::vector<BigInt>& over, const std::vector<BigInt>& known) {
    std::vector<BigInt> out(w);
    for (std::size_t i = 0; i < w; ++i) out[i] = 2 * over[i] - known[i];
    return out;
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (const Crossing& x : pattern.crossings) {
      if (!color[x.over]) continue;
      if (color[x.under_a] && !color[x.under_b]) {
        color[x.under_b] = combine(*color[x.over], *color[x.under_a]);
        progress = true;
      } else if (color[x.under_b] && !color[x.under_a]) {
        color[x.under_a] = combine(*color[x.over], *color[x.under_b]);
        progress = true;
      }
    }
  }
  IntMatrix t(w, w);
  for (std::size_t s = 0; s < w; ++s) {
    const auto& c = color[pattern.outputs[s]];
    if (!c) throw std::logic_error("induced_transfer: output not determined by inputs");
    for (std::size_t i = 0; i < w; ++i) t(s, i) = (*c)[i];
  }
  return t;
}

RelationSystem paradrome_relations(std::size_t m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("paradrome_relations: n must be positive");
  if (n == 1) return RelationSystem(0, {}, 1);
  if ((m * n) % 2 == 0) return braid_relations(torus_braid(m * n / 2, n));
  return repeat_pattern(odd_pattern(n), m * (n - 1) / 2);
}

void write_relations(std::ostream& os, const RelationSystem& sys) {
  os << "arcs " << sys.arc_count() << " circles " << sys.free_circles() << '\n';
  for (const Crossing& x : sys.crossings())
    os << "X over " << x.over << " under " << x.under_a << ' ' << x.under_b << '\n';
}

std::string to_text(const RelationSystem& sys) {
  std::ostringstream os;
  write_relations(os, sys);
  return os.str();
}

RelationSystem parse_relations(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("parse_relations: empty input");
  std::istringstream header(line);
  std::string k_arcs, k_circles;
  std::size_t arcs = 0, circles = 0;
  if (!(header >> k_arcs >> arcs >> k_circles >> circles) || k_arcs != "arcs" ||
      k_circles != "circles")
    throw std::invalid_argument("parse_relations: bad header: " + line);

  std::vector<Crossing> crossings;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tag, k_over, k_under;
    Crossing x{};
    std::string extra;
    if (!(row >> tag >> k_over >> x.over >> k_under >> x.under_a >> x.under_b) || tag != "X" ||
        k_over != "over" || k_under != "under" || (row >> extra))
      throw std::invalid_argument("parse_relations: bad crossing line: " + line);
    crossings.push_back(x);
  }
  return RelationSystem(arcs, std::move(crossings), circles);
}

}  // namespace paradromic
