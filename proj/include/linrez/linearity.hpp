#ifndef LINREZ_LINEARITY_HPP
#define LINREZ_LINEARITY_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linrez/monomial.hpp"

namespace linrez {

/// Graph on generators of an ideal generated in degree d; {u, v} is an edge iff
/// deg lcm(u, v) = d + 1.
struct GeneratorGraph {
  int degree = 0;
  std::vector<Monomial> vertices;
  /// Index pairs (a, b), a < b, into `vertices`, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t component_count() const;
  bool connected(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find(const Monomial& m) const;
};

GeneratorGraph generator_graph(const MonomialIdeal& ideal);
/// Induced subgraph of the generator graph on the generators dividing lcm(u, v).
GeneratorGraph restricted_generator_graph(const MonomialIdeal& ideal, const Monomial& u, const Monomial& v);

struct LinearRelatedness {
  bool linearly_related = true;
  /// A pair not joined by a path in its restricted generator graph.
  std::optional<std::pair<Monomial, Monomial>> witness;
  /// Vertices of the witness's restricted graph reachable from its first
  /// member; the second member is not among them.
  std::vector<Monomial> cut;
};

/// Path criterion: every pair u, v with deg lcm(u, v) > d + 1 is joined by a
/// path inside the restricted generator graph for (u, v). Pairs are examined in
/// canonical order and the first failure is reported. `threads` > 1 splits the
/// pair scan; the verdict and witness do not depend on it.
LinearRelatedness is_linearly_related(const MonomialIdeal& ideal, unsigned threads = 1);

/// Connectivity form: every restricted generator graph is connected.
bool all_restricted_graphs_connected(const MonomialIdeal& ideal);

struct LinearQuotients {
  bool has_linear_quotients = true;
  /// 1-based position i of the first generator whose colon ideal
  /// (u_1, ..., u_{i-1}) : u_i is not generated by variables.
  std::optional<std::size_t> fail_position;
};

/// Throws ArgumentError unless `order` is a permutation of G(I).
LinearQuotients has_linear_quotients_in_order(const MonomialIdeal& ideal, const std::vector<Monomial>& order);
/// The generators in graded-lex descending order (the canonical order).
LinearQuotients has_linear_quotients_lex(const MonomialIdeal& ideal);
/// Greedy search: repeatedly append the first remaining generator (in canonical
/// order) that keeps the quotients linear. nullopt means no order was found,
/// not that none exists.
std::optional<std::vector<Monomial>> greedy_linear_quotients_order(const MonomialIdeal& ideal);

}  // namespace linrez

#endif
