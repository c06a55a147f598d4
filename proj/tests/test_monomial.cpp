#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "linrez/errors.hpp"
#include "linrez/graph.hpp"
#include "linrez/monomial.hpp"
#include "oracles.hpp"

using namespace linrez;

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial::from_ints(std::vector<int>(e)); }

MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) ms.push_back(mono(g));
  return minimal_generators(n, ms);
}

}  // namespace

TEST_CASE("monomial basics") {
  const Monomial m = mono({2, 0, 1});
  CHECK(m.degree() == 3);
  CHECK_FALSE(m.is_squarefree());
  CHECK(m.to_string() == "x1^2*x3");
  CHECK(Monomial(3).to_string() == "1");
  CHECK(Monomial(3).is_one());
  CHECK(m.support() == std::vector<int>{0, 2});
  CHECK(mono({1, 0, 1}).divides(m));
  CHECK_FALSE(m.divides(mono({1, 0, 1})));
}

TEST_CASE("lcm and gcd") {
  CHECK(lcm(mono({1, 1, 0}), mono({0, 1, 1})) == mono({1, 1, 1}));
  const Monomial u = mono({0, 3, 1, 2});
  CHECK(lcm(u, u) == u);
  const Monomial l = lcm(mono({3, 1}), mono({1, 3}));
  CHECK(l == mono({3, 3}));
  CHECK(l.degree() == 6);
  CHECK(lcm_degree(mono({3, 1}), mono({1, 3})) == 6);
  CHECK(gcd(mono({3, 1}), mono({1, 3})) == mono({1, 1}));
  CHECK_THROWS_AS(lcm(mono({1, 1}), mono({1, 1, 1})), DimensionError);
  CHECK_THROWS_AS(quotient(mono({1, 0}), mono({0, 1})), ArgumentError);
  CHECK(quotient(mono({2, 1}), mono({1, 1})) == mono({1, 0}));
}

TEST_CASE("graded lex order") {
  // x1 > x2 > x3; degree first.
  CHECK(graded_lex_compare(mono({1, 0, 0}), mono({0, 1, 0})) > 0);
  CHECK(graded_lex_compare(mono({0, 0, 2}), mono({1, 0, 0})) > 0);
  CHECK(graded_lex_compare(mono({1, 1, 0}), mono({1, 0, 1})) > 0);
  CHECK(graded_lex_compare(mono({1, 1, 0}), mono({1, 1, 0})) == 0);
}

TEST_CASE("minimal generators") {
  CHECK(ideal(2, {{1, 0}, {1, 1}}).generators() == std::vector{mono({1, 0})});
  const auto two = ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(two.size() == 2);
  CHECK(ideal(3, {}).is_zero());
  CHECK(ideal(3, {}).to_string() == "(0)");

  // I = (x1x2, x2x3, x3x4): raw pairwise products, then divisibility filter.
  const auto i = ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  std::vector<Monomial> raw;
  for (const auto& a : i.generators())
    for (const auto& b : i.generators()) raw.push_back(a * b);
  CHECK(minimal_generators(4, raw).size() == 6);
  CHECK(ideal_power(i, 2) == minimal_generators(4, raw));

  SUBCASE("idempotent and order-insensitive") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Monomial> ms;
      for (int k = 0; k < 8; ++k) {
        std::vector<int> e(4);
        for (auto& x : e) x = static_cast<int>(rng() % 3);
        ms.push_back(Monomial::from_ints(e));
      }
      const auto base = minimal_generators(4, ms);
      CHECK(minimal_generators(4, base.generators()) == base);
      std::shuffle(ms.begin(), ms.end(), rng);
      CHECK(minimal_generators(4, ms) == base);
      for (const auto& a : base.generators())
        for (const auto& b : base.generators()) CHECK((a == b || !a.divides(b)));
    }
  }
}

TEST_CASE("ideal powers") {
  const auto i = ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(ideal_power(i, 1) == i);
  CHECK(ideal_power(i, 2) == ideal(4, {{2, 2, 0, 0}, {1, 1, 1, 1}, {0, 0, 2, 2}}));
  CHECK(ideal_power(MonomialIdeal(3), 4).is_zero());
  CHECK_THROWS_AS(ideal_power(i, 0), ArgumentError);

  SUBCASE("associativity of products") {
    const auto c5 = edge_ideal(cycle_graph(5));
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) CHECK(ideal_product(ideal_power(c5, j), ideal_power(c5, k)) == ideal_power(c5, j + k));
  }
}

TEST_CASE("restrict_leq") {
  const std::vector<int> ones{1, 1};
  CHECK(restrict_leq(ideal(2, {{2, 0}, {1, 1}}), ones) == ideal(2, {{1, 1}}));
  const auto j = ideal_power(edge_ideal(cycle_graph(5)), 2);
  const std::vector<int> open(5, kUnbounded);
  CHECK(restrict_leq(j, open) == j);
  const std::vector<int> all_ones(6, 1);
  const auto c6 = edge_ideal(cycle_graph(6));
  CHECK(restrict_leq(ideal_power(c6, 2), all_ones) == squarefree_power(c6, 2));
  CHECK_THROWS_AS(restrict_leq(j, ones), DimensionError);
  const std::vector<int> negative{-1, 0, 0, 0, 0};
  CHECK_THROWS_AS(restrict_leq(j, negative), ArgumentError);

  SUBCASE("subset of G(J)") {
    const std::vector<int> alpha{2, 1, 2, 0, 1};
    const auto r = restrict_leq(j, alpha);
    for (const auto& g : r.generators()) CHECK(j.is_generator(g));
    for (const auto& g : j.generators()) {
      bool within = true;
      for (std::size_t v = 0; v < 5; ++v) within = within && g[v] <= alpha[v];
      CHECK(r.is_generator(g) == within);
    }
  }
}

TEST_CASE("squarefree powers") {
  const auto i = edge_ideal(Graph(4, {{1, 2}, {3, 4}}));
  CHECK(squarefree_power(i, 2) == ideal(4, {{1, 1, 1, 1}}));
  const auto c6 = edge_ideal(cycle_graph(6));
  const auto sq = squarefree_power(c6, 2);
  CHECK(sq.size() == 9);
  // {prod x_i / (x_r x_s) : r < s, s - r odd}
  std::vector<Monomial> expected;
  for (int r = 1; r <= 6; ++r)
    for (int s = r + 1; s <= 6; s += 2) {
      std::vector<int> e(6, 1);
      e[r - 1] = e[s - 1] = 0;
      expected.push_back(Monomial::from_ints(e));
    }
  CHECK(sq == minimal_generators(6, expected));
  CHECK_THROWS_AS(squarefree_power(ideal(2, {{2, 0}}), 1), ArgumentError);
  CHECK_THROWS_AS(squarefree_power(c6, 0), ArgumentError);
  CHECK(squarefree_power(c6, 4).is_zero());

  SUBCASE("bijection with matchings and brute-force oracle") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& g : nonisomorphic_graphs(n)) {
        if (g.edges().empty()) continue;
        const auto e = edge_ideal(g);
        for (int k = 1; k <= 4; ++k) {
          const auto p = squarefree_power(e, k);
          // Generators correspond to the vertex sets covered by size-k matchings.
          std::set<std::vector<int>> covered;
          for (const auto& m : enumerate_matchings(g, k)) {
            std::vector<int> vs;
            for (const auto& e : m.edges) vs.insert(vs.end(), {e.a, e.b});
            std::sort(vs.begin(), vs.end());
            covered.insert(vs);
          }
          CHECK(p.size() == covered.size());
          CHECK(p.is_zero() == (k > matching_number(g)));
          CHECK(p == oracle::squarefree_power(e, k));
        }
      }
    }
  }
}

TEST_CASE("matching count differs from generator count") {
  // The three perfect matchings of K4 all give x1x2x3x4.
  const Graph k4 = complete_graph(4);
  CHECK(enumerate_matchings(k4, 2).size() == 3);
  CHECK(squarefree_power(edge_ideal(k4), 2).size() == 1);
}

TEST_CASE("edge ideals") {
  const auto c4 = edge_ideal(cycle_graph(4));
  CHECK(c4 == ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}));
  CHECK(edge_ideal(loop_graph(complete_graph(2))) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(edge_ideal(whisker_graph(cycle_graph(5))).size() == 10);
  CHECK(c4.is_equigenerated());
  CHECK(c4.generator_degree() == 2);
  CHECK(c4.contains(mono({1, 1, 1, 0})));
  CHECK_FALSE(c4.contains(mono({1, 0, 1, 0})));
}
