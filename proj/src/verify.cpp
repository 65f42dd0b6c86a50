#include "paradromic/verify.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "paradromic/int_linalg.hpp"
#include "paradromic/int_poly.hpp"
#include "paradromic/link_relations.hpp"
#include "paradromic/paradrome.hpp"

namespace paradromic {

namespace {

constexpr std::size_t kLargestOddPattern = 13;
constexpr std::size_t kTorusKnotBound = 12;
constexpr std::size_t kMinorInvarianceArcs = 9;
constexpr std::size_t kTwistRepeatBound = 12;

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  /// Records one case; keeps the first failure's description.
  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string cell(std::size_t m, std::size_t n) {
  return "P(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

bool fits_budget(const RelationSystem& sys, std::uint64_t p, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < sys.arc_count() + sys.free_circles(); ++i) {
    if (total > budget / p) return false;
    total *= p;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

bool is_power_of_two_at_least_two(const BigInt& x) {
  return x >= 2 && mpz_popcount(x.get_mpz_t()) == 1;
}

struct GridCell {
  std::size_t m;
  std::size_t n;
  RelationSystem sys;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<Prime> primes;
  for (std::uint64_t p : options.primes) primes.emplace_back(p);
  const auto transfer_s = options.transfer_s ? options.transfer_s : transfer_S;

  std::vector<GridCell> grid;
  for (std::size_t n = 1; n <= options.max_n; ++n)
    for (std::size_t m = 0; m <= options.max_m; ++m)
      grid.push_back({m, n, paradrome_relations(m, n)});

  std::vector<CheckResult> results;

  {
    Check c("charpoly-closed-form");
    for (std::size_t n = 3; n <= kLargestOddPattern; n += 2) {
      const IntPoly got = char_poly(transfer_s(n));
      c.expect(got == lemma1_charpoly(n), [&] {
        return "n=" + std::to_string(n) + ": " + got.to_string();
      });
    }
    const std::vector<long> points{-3, -2, -1, 0, 1, 2, 3, 4, 5, 6};
    for (std::size_t k = 2; k <= 8; ++k)
      c.expect(lemma1_intermediates_check(k, points),
               [&] { return "bordered-minor recurrences fail at k=" + std::to_string(k); });
    results.push_back(std::move(c).done());
  }

  {
    Check c("transfer-coherence");
    const IntMatrix t = transfer_T();
    c.expect(induced_transfer(twist_pattern()) == t, [] { return std::string("twist pattern"); });
    for (std::size_t n = 3; n <= kLargestOddPattern; n += 2) {
      const IntMatrix s = transfer_s(n);
      std::ostringstream os;
      c.expect(induced_transfer(odd_pattern(n)) == s, [&] {
        os << "n=" << n << ": pattern gives " << induced_transfer(odd_pattern(n)) << ", matrix is "
           << s;
        return os.str();
      });
      const std::vector<BigInt> ones(n, BigInt(1));
      c.expect(s.apply(ones) == ones,
               [&] { return "n=" + std::to_string(n) + ": constants not fixed"; });
    }
    results.push_back(std::move(c).done());
  }

  {
    Check c("component-counts");
    for (const GridCell& g : grid) {
      const std::size_t got = component_count(g.sys);
      const std::size_t want = topological_type(g.m, g.n).components();
      c.expect(got == want, [&] {
        return cell(g.m, g.n) + ": " + std::to_string(got) + " != " + std::to_string(want);
      });
    }
    results.push_back(std::move(c).done());
  }

  {
    Check c("two-coloring-rule");
    for (const GridCell& g : grid)
      c.expect(is_p_colorable(g.sys, Prime(2)) == (component_count(g.sys) >= 2),
               [&] { return cell(g.m, g.n); });
    results.push_back(std::move(c).done());
  }

  {
    Check c("colorability-triangle");
    for (const GridCell& g : grid) {
      const Classification cls = classify(g.m, g.n);
      const bool torus = cls.type.kind == TopType::Kind::Torus;
      const BigInt det = torus ? torus_det(cls.type.torus.u(), cls.type.torus.v()) : BigInt(0);
      for (Prime p : primes) {
        const bool diagram = is_p_colorable(g.sys, p);
        c.expect(cls.color.admits(p.value()) == diagram, [&] {
          return cell(g.m, g.n) + " p=" + std::to_string(p.value()) + ": class " +
                 cls.color.name() + " disagrees with diagram";
        });
        if (torus)
          c.expect((mpz_divisible_ui_p(det.get_mpz_t(), p.value()) != 0) == diagram, [&] {
            return cell(g.m, g.n) + " p=" + std::to_string(p.value()) + ": det " + det.get_str();
          });
      }
    }
    results.push_back(std::move(c).done());
  }

  {
    Check c("determinant-agreement");
    for (const GridCell& g : grid) {
      const TopType type = topological_type(g.m, g.n);
      if (type.kind == TopType::Kind::TorusPlusCore) continue;
      const BigInt diagram = link_determinant(g.sys);
      const BigInt formula = torus_det(type.torus.u(), type.torus.v());
      c.expect(diagram == formula, [&] {
        return cell(g.m, g.n) + ": diagram " + diagram.get_str() + " vs formula " +
               formula.get_str();
      });
    }
    results.push_back(std::move(c).done());
  }

  {
    Check c("oracle-law");
    std::vector<RelationSystem> systems;
    for (const GridCell& g : grid) systems.push_back(g.sys);
    for (std::size_t u = 0; u <= 6; ++u)
      for (std::size_t v = 1; v <= 4; ++v) systems.push_back(braid_relations(torus_braid(u, v)));
    for (const RelationSystem& sys : systems)
      for (Prime p : primes) {
        if (!fits_budget(sys, p.value(), options.enumeration_budget)) continue;
        const std::uint64_t counted = enumerate_colorings(sys, p, options.enumeration_budget);
        const std::uint64_t predicted = ipow(p.value(), coloring_dimension(sys, p));
        c.expect(counted == predicted, [&] {
          return "system with " + std::to_string(sys.arc_count()) + " arcs, p=" +
                 std::to_string(p.value()) + ": counted " + std::to_string(counted) +
                 ", predicted " + std::to_string(predicted);
        });
      }
    results.push_back(std::move(c).done());
  }

  {
    Check c("eigenvector-rank");
    for (const GridCell& g : grid) {
      if ((g.m * g.n) % 2 == 0 || g.n == 1) continue;
      const IntMatrix s = transfer_s(g.n);
      const std::size_t reps = g.m * (g.n - 1) / 2;
      for (Prime p : primes) {
        if (p.value() != 2)
          c.expect(thm2_rank_check(g.m, g.n, p, s),
                   [&] { return cell(g.m, g.n) + " p=" + std::to_string(p.value()); });
        const std::size_t rank =
            rank_mod(mat_pow_mod(s, reps, p) - IntMatrix::identity(g.n), p);
        c.expect(is_p_colorable(g.sys, p) == (rank + 2 <= g.n), [&] {
          return cell(g.m, g.n) + " p=" + std::to_string(p.value()) +
                 ": eigenvector count disagrees with diagram";
        });
      }
    }
    results.push_back(std::move(c).done());
  }

  {
    Check c("torus-knot-rule");
    for (std::size_t u = 1; u <= kTorusKnotBound; ++u)
      for (std::size_t v = 1; v <= kTorusKnotBound; ++v) {
        if (std::gcd(u, v) != 1) continue;
        const RelationSystem sys = braid_relations(torus_braid(u, v));
        for (Prime p : primes)
          c.expect(torus_knot_colorable(u, v, p) == is_p_colorable(sys, p), [&] {
            return "T(" + std::to_string(u) + "," + std::to_string(v) + ") p=" +
                   std::to_string(p.value());
          });
      }
    results.push_back(std::move(c).done());
  }

  {
    Check c("minor-invariance");
    for (const GridCell& g : grid) {
      if (g.sys.arc_count() == 0 || g.sys.arc_count() > kMinorInvarianceArcs) continue;
      const IntMatrix a = coloring_matrix(g.sys);
      const BigInt ref = abs(minor_det(a, 0, 0));
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t col = 0; col < a.cols(); ++col)
          c.expect(abs(minor_det(a, r, col)) == ref, [&] {
            return cell(g.m, g.n) + " deleting (" + std::to_string(r) + "," +
                   std::to_string(col) + ")";
          });
    }
    results.push_back(std::move(c).done());
  }

  {
    Check c("power-of-two");
    for (std::size_t m = 1; m <= 5; m += 2)
      for (std::size_t n = 3; n <= 5; n += 2) {
        const BigInt det = link_determinant(paradrome_relations(m, n));
        c.expect(is_power_of_two_at_least_two(det),
                 [&] { return cell(m, n) + ": det " + det.get_str(); });
      }
    results.push_back(std::move(c).done());
  }

  {
    Check c("torus-det-symmetry");
    for (std::size_t u = 1; u <= kTorusKnotBound; ++u)
      for (std::size_t v = u + 1; v <= kTorusKnotBound; ++v)
        c.expect(torus_det(u, v) == torus_det(v, u), [&] {
          return "T(" + std::to_string(u) + "," + std::to_string(v) + ")";
        });
    results.push_back(std::move(c).done());
  }

  {
    Check c("bisection-paths");
    for (std::size_t m = 0; m <= kTwistRepeatBound; ++m) {
      const RelationSystem twisted = repeat_pattern(twist_pattern(), m);
      const RelationSystem braided = paradrome_relations(m, 2);
      c.expect(link_determinant(twisted) == link_determinant(braided),
               [&] { return cell(m, 2) + ": determinants differ"; });
      for (Prime p : primes)
        c.expect(is_p_colorable(twisted, p) == is_p_colorable(braided, p), [&] {
          return cell(m, 2) + " p=" + std::to_string(p.value()) + ": colorability differs";
        });
    }
    results.push_back(std::move(c).done());
  }

  return results;
}

}  // namespace paradromic
