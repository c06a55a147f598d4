#include "linrez/linearity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <thread>

#include "linrez/errors.hpp"

namespace linrez {

namespace {

int require_equigenerated(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ArgumentError("generator graph of the zero ideal");
  if (!ideal.is_equigenerated()) throw ArgumentError("ideal is not equigenerated: " + ideal.to_string());
  return ideal.generator_degree();
}

GeneratorGraph graph_on(std::vector<Monomial> vertices, int d) {
  GeneratorGraph g;
  g.degree = d;
  g.vertices = std::move(vertices);
  for (std::size_t a = 0; a < g.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b)
      if (lcm_degree(g.vertices[a], g.vertices[b]) == d + 1) g.edges.emplace_back(a, b);
  return g;
}

std::vector<std::size_t> component_labels(const GeneratorGraph& g) {
  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : g.edges) parent[find(a)] = find(b);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = find(i);
  return parent;
}

// Indices of generators dividing lcm(gens[a], gens[b]), reached from a by
// steps of lcm degree d + 1 inside that set.
std::vector<std::size_t> reachable_in_restriction(const std::vector<Monomial>& gens, int d, std::size_t a,
                                                  std::size_t b, bool* reached_b) {
  const Monomial top = lcm(gens[a], gens[b]);
  std::vector<std::size_t> inside;
  for (std::size_t w = 0; w < gens.size(); ++w)
    if (gens[w].divides(top)) inside.push_back(w);
  std::vector<char> seen(inside.size(), 0);
  std::deque<std::size_t> queue;
  const auto start = std::find(inside.begin(), inside.end(), a) - inside.begin();
  seen[start] = 1;
  queue.push_back(start);
  std::vector<std::size_t> component;
  *reached_b = false;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    component.push_back(inside[x]);
    if (inside[x] == b) *reached_b = true;
    for (std::size_t y = 0; y < inside.size(); ++y) {
      if (seen[y] || lcm_degree(gens[inside[x]], gens[inside[y]]) != d + 1) continue;
      seen[y] = 1;
      queue.push_back(y);
    }
  }
  std::sort(component.begin(), component.end());
  return component;
}

struct PairFailure {
  std::size_t a, b;
  std::vector<std::size_t> component;
};

std::optional<PairFailure> first_failure(const std::vector<Monomial>& gens, int d, std::size_t stride,
                                         std::size_t offset) {
  for (std::size_t a = offset; a < gens.size(); a += stride) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (lcm_degree(gens[a], gens[b]) <= d + 1) continue;
      bool ok = false;
      auto component = reachable_in_restriction(gens, d, a, b, &ok);
      if (!ok) return PairFailure{a, b, std::move(component)};
    }
  }
  return std::nullopt;
}

// True iff (order[0], ..., order[i-1]) : order[i] is generated by variables.
bool colon_is_linear(const std::vector<Monomial>& order, std::size_t i) {
  const Monomial& ui = order[i];
  const std::size_t n = ui.n();
  std::vector<char> linear_vars(n, 0);
  std::vector<std::vector<int>> colon_supports;
  colon_supports.reserve(i);
  for (std::size_t k = 0; k < i; ++k) {
    std::vector<int> support;
    int degree = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (order[k][j] > ui[j]) {
        support.push_back(static_cast<int>(j));
        degree += order[k][j] - ui[j];
      }
    }
    if (degree == 1) linear_vars[support.front()] = 1;
    colon_supports.push_back(std::move(support));
  }
  for (const auto& support : colon_supports) {
    const bool covered =
        std::any_of(support.begin(), support.end(), [&](int j) { return linear_vars[j] != 0; });
    if (!covered) return false;
  }
  return true;
}

}  // namespace

std::size_t GeneratorGraph::component_count() const {
  auto labels = component_labels(*this);
  std::sort(labels.begin(), labels.end());
  return static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
}

bool GeneratorGraph::connected(std::size_t a, std::size_t b) const {
  if (a >= vertices.size() || b >= vertices.size()) throw ArgumentError("vertex index out of range");
  const auto labels = component_labels(*this);
  return labels[a] == labels[b];
}

std::optional<std::size_t> GeneratorGraph::find(const Monomial& m) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == m) return i;
  return std::nullopt;
}

GeneratorGraph generator_graph(const MonomialIdeal& ideal) {
  const int d = require_equigenerated(ideal);
  return graph_on(ideal.generators(), d);
}

GeneratorGraph restricted_generator_graph(const MonomialIdeal& ideal, const Monomial& u, const Monomial& v) {
  const int d = require_equigenerated(ideal);
  if (!ideal.is_generator(u)) throw ArgumentError(u.to_string() + " is not a minimal generator");
  if (!ideal.is_generator(v)) throw ArgumentError(v.to_string() + " is not a minimal generator");
  const Monomial top = lcm(u, v);
  std::vector<Monomial> inside;
  for (const auto& w : ideal.generators())
    if (w.divides(top)) inside.push_back(w);
  return graph_on(std::move(inside), d);
}

LinearRelatedness is_linearly_related(const MonomialIdeal& ideal, unsigned threads) {
  const int d = require_equigenerated(ideal);
  const auto& gens = ideal.generators();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, gens.size()));
  std::vector<std::optional<PairFailure>> found(workers);
  if (workers == 1) {
    found[0] = first_failure(gens, d, 1, 0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&, t] { found[t] = first_failure(gens, d, workers, t); });
    for (auto& th : pool) th.join();
  }
  const PairFailure* best = nullptr;
  for (const auto& f : found)
    if (f && (!best || std::pair(f->a, f->b) < std::pair(best->a, best->b))) best = &*f;
  LinearRelatedness result;
  if (best) {
    result.linearly_related = false;
    result.witness = std::pair(gens[best->a], gens[best->b]);
    for (std::size_t w : best->component) result.cut.push_back(gens[w]);
  }
  return result;
}

bool all_restricted_graphs_connected(const MonomialIdeal& ideal) {
  const int d = require_equigenerated(ideal);
  const auto& gens = ideal.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const Monomial top = lcm(gens[a], gens[b]);
      std::vector<Monomial> inside;
      for (const auto& w : gens)
        if (w.divides(top)) inside.push_back(w);
      if (graph_on(std::move(inside), d).component_count() != 1) return false;
    }
  }
  return true;
}

LinearQuotients has_linear_quotients_in_order(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
  std::vector<Monomial> sorted = order;
  std::sort(sorted.begin(), sorted.end(), GradedLexDescending{});
  if (sorted != ideal.generators()) throw ArgumentError("order is not a permutation of the minimal generators");
  LinearQuotients result;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!colon_is_linear(order, i)) {
      result.has_linear_quotients = false;
      result.fail_position = i + 1;
      break;
    }
  }
  return result;
}

LinearQuotients has_linear_quotients_lex(const MonomialIdeal& ideal) {
  return has_linear_quotients_in_order(ideal, ideal.generators());
}

std::optional<std::vector<Monomial>> greedy_linear_quotients_order(const MonomialIdeal& ideal) {
  std::vector<Monomial> remaining = ideal.generators();
  std::vector<Monomial> order;
  order.reserve(remaining.size());
  while (!remaining.empty()) {
    bool placed = false;
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      order.push_back(remaining[r]);
      if (order.size() == 1 || colon_is_linear(order, order.size() - 1)) {
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(r));
        placed = true;
        break;
      }
      order.pop_back();
    }
    if (!placed) return std::nullopt;
  }
  return order;
}

}  // namespace linrez
