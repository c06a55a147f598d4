#include <algorithm>
#include <random>

#include "doctest.h"
#include "linrez/errors.hpp"
#include "linrez/graph.hpp"
#include "linrez/linearity.hpp"
#include "linrez/monomial.hpp"
#include "linrez/resolution.hpp"
#include "oracles.hpp"

using namespace linrez;

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial::from_ints(std::vector<int>(e)); }

Monomial edge_monomial(int n, int a, int b) {
  const std::vector<int> s{a - 1, b - 1};
  return Monomial::squarefree(n, s);
}

bool same_edges(const GeneratorGraph& g, std::vector<std::pair<Monomial, Monomial>> expected) {
  std::vector<std::pair<Monomial, Monomial>> got;
  for (auto [a, b] : g.edges) {
    auto p = std::minmax(g.vertices[a], g.vertices[b]);
    got.emplace_back(p.first, p.second);
  }
  for (auto& e : expected)
    if (e.second < e.first) std::swap(e.first, e.second);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

}  // namespace

TEST_CASE("generator graphs") {
  const auto c4 = edge_ideal(cycle_graph(4));
  const auto g = generator_graph(c4);
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 4);
  for (std::size_t v = 0; v < 4; ++v) {
    int deg = 0;
    for (auto [a, b] : g.edges) deg += (a == v) + (b == v);
    CHECK(deg == 2);
  }
  const auto two = edge_ideal(Graph(4, {{1, 2}, {3, 4}}));
  CHECK(generator_graph(two).edges.empty());
  CHECK(generator_graph(two).component_count() == 2);

  const auto bi = minimal_generators(2, std::vector{mono({4, 0}), mono({3, 1}), mono({1, 3}), mono({0, 4})});
  CHECK(same_edges(generator_graph(bi), {{mono({4, 0}), mono({3, 1})}, {mono({1, 3}), mono({0, 4})}}));

  const auto mixed = minimal_generators(2, std::vector{mono({2, 0}), mono({0, 1})});
  CHECK_THROWS_AS(generator_graph(mixed), ArgumentError);
  CHECK_THROWS_AS(generator_graph(MonomialIdeal(2)), ArgumentError);
}

TEST_CASE("restricted generator graphs") {
  const auto two = edge_ideal(Graph(4, {{1, 2}, {3, 4}}));
  const auto& gens = two.generators();
  const auto r = restricted_generator_graph(two, gens[0], gens[1]);
  CHECK(r.vertices.size() == 2);
  CHECK(r.edges.empty());
  CHECK_THROWS_AS(restricted_generator_graph(two, gens[0], edge_monomial(4, 1, 3)), ArgumentError);

  const auto c5 = edge_ideal(cycle_graph(5));
  const auto a = edge_monomial(5, 1, 2), b = edge_monomial(5, 2, 3);
  const auto near = restricted_generator_graph(c5, a, b);
  CHECK(near.connected(*near.find(a), *near.find(b)));

  // Gap-built pair: restricted matching e1 = {1,2}, e2 = {4,5}, e3 = {7,8} of
  // C9, with u = u1 u2 and v = u2 u3 in I(C9)^[2].
  const auto c9 = edge_ideal(cycle_graph(9));
  const auto sq2 = squarefree_power(c9, 2);
  const auto u1 = edge_monomial(9, 1, 2), u2 = edge_monomial(9, 4, 5), u3 = edge_monomial(9, 7, 8);
  const auto u = u1 * u2, v = u2 * u3;
  const auto rg = restricted_generator_graph(sq2, u, v);
  CHECK_FALSE(rg.connected(*rg.find(u), *rg.find(v)));
  // In I(C9)^[3] the analogous pair u1u2u3 vs. u2u3u4 needs a fourth edge
  // forming a gap with e1, which C9 lacks (nu0 = 3).
  CHECK(restricted_matching_number(cycle_graph(9)).nu0 == 3);

  SUBCASE("monotone restriction") {
    const auto p = ideal_power(edge_ideal(cycle_graph(6)), 2);
    const auto& pg = p.generators();
    for (std::size_t i = 0; i < pg.size(); i += 3)
      for (std::size_t j = 0; j < pg.size(); j += 2)
        for (std::size_t k = 0; k < pg.size(); k += 5) {
          if (!lcm(pg[i], pg[k]).divides(lcm(pg[i], pg[j]))) continue;
          const auto big = restricted_generator_graph(p, pg[i], pg[j]);
          const auto small = restricted_generator_graph(p, pg[i], pg[k]);
          for (const auto& w : small.vertices) CHECK(big.find(w).has_value());
          for (auto [x, y] : small.edges) {
            const auto bx = *big.find(small.vertices[x]), by = *big.find(small.vertices[y]);
            CHECK(std::find(big.edges.begin(), big.edges.end(), std::pair(std::min(bx, by), std::max(bx, by))) !=
                  big.edges.end());
          }
        }
  }
}

TEST_CASE("linear relatedness") {
  const auto two = edge_ideal(Graph(4, {{1, 2}, {3, 4}}));
  const auto r = is_linearly_related(two);
  CHECK_FALSE(r.linearly_related);
  REQUIRE(r.witness);
  CHECK(r.witness->first == two.generators()[0]);
  CHECK(r.witness->second == two.generators()[1]);
  CHECK(r.cut == std::vector{two.generators()[0]});
  CHECK(is_linearly_related(edge_ideal(cycle_graph(5))).linearly_related);
  CHECK_THROWS_AS(is_linearly_related(minimal_generators(2, std::vector{mono({2, 0}), mono({0, 1})})), ArgumentError);

  // Thread count does not change the verdict or witness.
  const auto c9 = squarefree_power(edge_ideal(cycle_graph(9)), 2);
  const auto one = is_linearly_related(c9, 1);
  CHECK_FALSE(one.linearly_related);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto many = is_linearly_related(c9, t);
    CHECK(many.witness == one.witness);
    CHECK(many.cut == one.cut);
  }

  SUBCASE("gap-free graphs and their powers") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& g : nonisomorphic_graphs(n)) {
        if (g.edges().empty() || !is_gap_free(g).gap_free) continue;
        for (int k = 1; k <= 3; ++k) CHECK(is_linearly_related(ideal_power(edge_ideal(g), k)).linearly_related);
      }
    }
  }

  SUBCASE("agreement with homology and the connectivity form") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& g : nonisomorphic_graphs(n)) {
        if (g.edges().empty()) continue;
        for (int k = 1; k <= 2; ++k) {
          const auto i = ideal_power(edge_ideal(g), k);
          const bool related = is_linearly_related(i).linearly_related;
          CHECK(related == all_restricted_graphs_connected(i));
          IndexOptions o;
          o.max_i = 1;
          CHECK(related == compute_index(i, o).exceeds(1));
        }
        // Full beta_1 from the Hochster table.
        const auto e = edge_ideal(g);
        const auto t = betti_table_hochster(e, FieldSpec());
        bool nonlinear_beta1 = false;
        for (const auto& [key, beta] : t.graded) nonlinear_beta1 = nonlinear_beta1 || (key.first == 1 && key.second > 3);
        CHECK(is_linearly_related(e).linearly_related == !nonlinear_beta1);
      }
    }
  }
}

TEST_CASE("linear quotients") {
  const auto two = edge_ideal(Graph(4, {{1, 2}, {3, 4}}));
  auto lq = has_linear_quotients_lex(two);
  CHECK_FALSE(lq.has_linear_quotients);
  CHECK(lq.fail_position == 2u);
  std::vector<Monomial> rev(two.generators().rbegin(), two.generators().rend());
  CHECK(has_linear_quotients_in_order(two, rev).fail_position == 2u);
  CHECK_FALSE(greedy_linear_quotients_order(two));
  CHECK_THROWS_AS(has_linear_quotients_in_order(two, {two.generators()[0]}), ArgumentError);

  const auto c6 = squarefree_power(edge_ideal(cycle_graph(6)), 2);
  CHECK(has_linear_quotients_lex(c6).has_linear_quotients);

  // Complete graph: linear quotients in the canonical order.
  CHECK(has_linear_quotients_lex(edge_ideal(complete_graph(5))).has_linear_quotients);

  SUBCASE("oracle and implications") {
    std::mt19937 rng(5);
    for (int n = 2; n <= 6; ++n) {
      for (const auto& g : nonisomorphic_graphs(n)) {
        if (g.edges().empty()) continue;
        const auto nu = matching_number(g);
        for (int k = 1; k <= nu; ++k) {
          const auto i = squarefree_power(edge_ideal(g), k);
          auto order = i.generators();
          const bool lex = has_linear_quotients_lex(i).has_linear_quotients;
          CHECK(lex == oracle::linear_quotients(order));
          if (lex) CHECK(is_linearly_related(i).linearly_related);
          std::shuffle(order.begin(), order.end(), rng);
          CHECK(has_linear_quotients_in_order(i, order).has_linear_quotients == oracle::linear_quotients(order));
          const auto greedy = greedy_linear_quotients_order(i);
          if (greedy) CHECK(oracle::linear_quotients(*greedy));
          if (lex) CHECK(greedy.has_value());
        }
      }
    }
  }
}
