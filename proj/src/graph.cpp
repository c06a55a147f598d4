#include "linrez/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "linrez/errors.hpp"

namespace linrez {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

void require_simple(const Graph& g, const char* what) {
  if (!g.is_simple()) throw ArgumentError(std::string(what) + " requires a simple graph");
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) throw ArgumentError("vertex count must be in 0..64");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ArgumentError("edge {" + std::to_string(i) + "," + std::to_string(j) +
                          "} references a vertex outside 1.." + std::to_string(n));
    }
    if (i == j) {
      loops_.push_back(i);
    } else {
      edges_.emplace_back(i, j);
      adj_[i - 1] |= bit(j);
      adj_[j - 1] |= bit(i);
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  std::sort(loops_.begin(), loops_.end());
  loops_.erase(std::unique(loops_.begin(), loops_.end()), loops_.end());
}

bool Graph::has_edge(int i, int j) const {
  if (i == j) return has_loop(i);
  return (adj_[i - 1] & bit(j)) != 0;
}

bool Graph::has_loop(int v) const { return std::binary_search(loops_.begin(), loops_.end(), v); }

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

std::string Graph::to_string() const {
  std::string out = "n=" + std::to_string(n_) + " {";
  bool first = true;
  for (const auto& e : edges_) {
    out += (first ? "" : ",") + std::to_string(e.a) + "-" + std::to_string(e.b);
    first = false;
  }
  for (int v : loops_) {
    out += (first ? "" : ",") + std::to_string(v) + "-" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph complement(const Graph& g) {
  require_simple(g, "complement");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(g.n(), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> w = vertices;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (g.has_loop(w[i])) edges.emplace_back(int(i) + 1, int(i) + 1);
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (g.has_edge(w[i], w[j])) edges.emplace_back(int(i) + 1, int(j) + 1);
    }
  }
  return Graph(static_cast<int>(w.size()), edges);
}

bool forms_gap(const Graph& g, const Edge& e, const Edge& f) {
  const std::uint64_t reach = g.neighbors(e.a) | g.neighbors(e.b);
  return (reach & (bit(f.a) | bit(f.b))) == 0;
}

GapFreeResult is_gap_free(const Graph& g) {
  std::vector<Edge> all = g.edges();
  for (int v : g.loops()) all.push_back(Edge(v, v));
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].meets(all[j])) continue;
      if (forms_gap(g, all[i], all[j])) return {false, GapWitness{all[i], all[j]}};
    }
  }
  return {true, std::nullopt};
}

std::optional<int> shortest_induced_cycle_ge4(const Graph& g) {
  require_simple(g, "shortest_induced_cycle_ge4");
  const int n = g.n();
  int best = n + 1;
  std::vector<int> path;

  // Chordless paths starting at the smallest cycle vertex s; a path closes into
  // an induced cycle when its new end is adjacent to s.
  std::function<void(int, std::uint64_t)> extend = [&](int s, std::uint64_t interior) {
    if (static_cast<int>(path.size()) + 1 >= best) return;
    const int last = path.back();
    std::uint64_t cand = g.neighbors(last) & ~interior;
    while (cand) {
      const int w = std::countr_zero(cand) + 1;
      cand &= cand - 1;
      if (w <= s || std::find(path.begin(), path.end(), w) != path.end()) continue;
      // interior holds every path vertex except s and last.
      if (g.neighbors(w) & interior) continue;
      if (last != s && g.has_edge(w, s)) {
        if (path.size() >= 3) best = std::min(best, static_cast<int>(path.size()) + 1);
        continue;
      }
      path.push_back(w);
      extend(s, interior | (last == s ? std::uint64_t{0} : bit(last)));
      path.pop_back();
    }
  };

  for (int s = 1; s <= n; ++s) {
    path = {s};
    extend(s, 0);
  }
  if (best <= n) return best;
  return std::nullopt;
}

std::vector<Matching> enumerate_matchings(const Graph& g, int k) {
  std::vector<Matching> out;
  if (k < 0) return out;
  const auto& edges = g.edges();
  std::vector<Edge> chosen;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t used) {
    if (static_cast<int>(chosen.size()) == k) {
      out.push_back(Matching{chosen});
      return;
    }
    for (std::size_t i = start; i < edges.size(); ++i) {
      const std::uint64_t m = bit(edges[i].a) | bit(edges[i].b);
      if (used & m) continue;
      chosen.push_back(edges[i]);
      rec(i + 1, used | m);
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

namespace {

// Maximum matching restricted to an edge list, by recursion on the lowest
// uncovered vertex with memoisation on the set of available vertices.
Matching max_matching_of_edges(int n, const std::vector<Edge>& edges) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    adj[e.a - 1] |= bit(e.b);
    adj[e.b - 1] |= bit(e.a);
  }
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(std::uint64_t)> best = [&](std::uint64_t avail) -> int {
    // Drop vertices that have no available neighbour.
    std::uint64_t live = 0;
    for (std::uint64_t a = avail; a; a &= a - 1) {
      const int v = std::countr_zero(a) + 1;
      if (adj[v - 1] & avail) live |= bit(v);
    }
    if (!live) return 0;
    if (auto it = memo.find(live); it != memo.end()) return it->second;
    const int v = std::countr_zero(live) + 1;
    int result = best(live & ~bit(v));
    for (std::uint64_t c = adj[v - 1] & live; c; c &= c - 1) {
      const int w = std::countr_zero(c) + 1;
      result = std::max(result, 1 + best(live & ~bit(v) & ~bit(w)));
    }
    memo.emplace(live, result);
    return result;
  };

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Matching m;
  std::uint64_t avail = all;
  int remaining = best(avail);
  // Reconstruct greedily along the memoised optimum.
  while (remaining > 0) {
    bool advanced = false;
    for (std::uint64_t a = avail; a && !advanced; a &= a - 1) {
      const int v = std::countr_zero(a) + 1;
      for (std::uint64_t c = adj[v - 1] & avail; c; c &= c - 1) {
        const int w = std::countr_zero(c) + 1;
        const std::uint64_t next = avail & ~bit(v) & ~bit(w);
        if (1 + best(next) == remaining) {
          m.edges.emplace_back(v, w);
          avail = next;
          --remaining;
          advanced = true;
          break;
        }
      }
    }
    if (!advanced) throw std::logic_error("matching reconstruction failed");
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace

Matching maximum_matching(const Graph& g) { return max_matching_of_edges(g.n(), g.edges()); }

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

RestrictedMatching restricted_matching_number(const Graph& g) {
  RestrictedMatching result;
  for (const auto& e : g.edges()) {
    std::vector<Edge> partners;
    for (const auto& f : g.edges()) {
      if (!f.meets(e) && forms_gap(g, e, f)) partners.push_back(f);
    }
    if (partners.empty()) continue;
    Matching rest = max_matching_of_edges(g.n(), partners);
    const int size = 1 + static_cast<int>(rest.size());
    if (size > result.nu0 || (size >= 2 && !result.witness)) {
      rest.edges.push_back(e);
      std::sort(rest.edges.begin(), rest.edges.end());
      result.nu0 = size;
      result.witness = std::move(rest);
      result.distinguished = e;
    }
  }
  return result;
}

MatchingReport matching_report(const Graph& g) {
  MatchingReport r;
  r.witness_max = maximum_matching(g);
  r.nu = static_cast<int>(r.witness_max.size());
  auto restricted = restricted_matching_number(g);
  r.nu0 = restricted.nu0;
  r.witness_restricted = std::move(restricted.witness);
  r.distinguished = restricted.distinguished;
  return r;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  std::uint64_t used = 0;
  for (const auto& e : m.edges) {
    if (e.a == e.b || e.a < 1 || e.b > g.n() || !g.has_edge(e.a, e.b)) return false;
    const std::uint64_t mask = bit(e.a) | bit(e.b);
    if (used & mask) return false;
    used |= mask;
  }
  return true;
}

Graph matching_graph(const Graph& g, const Matching& m) {
  if (!is_matching_of(g, m)) throw ArgumentError("matching_graph: not a matching of the graph");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!forms_gap(g, m.edges[i], m.edges[j])) edges.emplace_back(int(i) + 1, int(j) + 1);
    }
  }
  return Graph(static_cast<int>(m.size()), edges);
}

Graph whisker_graph(const Graph& g) {
  require_simple(g, "whisker_graph");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.a, e.b);
  for (int i = 1; i <= g.n(); ++i) edges.emplace_back(i, g.n() + i);
  return Graph(2 * g.n(), edges);
}

Graph loop_graph(const Graph& g) {
  require_simple(g, "loop_graph");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.a, e.b);
  for (int i = 1; i <= g.n(); ++i) edges.emplace_back(i, i);
  return Graph(g.n(), edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::uint64_t seen = bit(1), frontier = bit(1);
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f) + 1);
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.n();
}

bool is_forest(const Graph& g) {
  if (!g.is_simple()) return false;
  std::vector<int> parent(static_cast<std::size_t>(g.n() + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : g.edges()) {
    const int ra = find(e.a), rb = find(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool is_tree(const Graph& g) { return g.n() >= 1 && is_forest(g) && is_connected(g); }

bool has_isolated_vertices(const Graph& g) {
  for (int v = 1; v <= g.n(); ++v) {
    if (g.neighbors(v) == 0 && !g.has_loop(v)) return true;
  }
  return false;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw ArgumentError("relabel: permutation size mismatch");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.a - 1], perm[e.b - 1]);
  for (int v : g.loops()) edges.emplace_back(perm[v - 1], perm[v - 1]);
  return Graph(g.n(), edges);
}

std::uint64_t canonical_code(const Graph& g) {
  require_simple(g, "canonical_code");
  const int n = g.n();
  if (n > 11) throw ArgumentError("canonical_code supports at most 11 vertices");

  // Word bit for the pair of positions (p, q), p < q: earlier pairs are more
  // significant so that the minimum prefers sparse leading rows.
  int pair_bit[11][11] = {};
  const int pairs = n * (n - 1) / 2;
  for (int p = 0, idx = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q, ++idx) pair_bit[p][q] = pair_bit[q][p] = pairs - 1 - idx;
  }

  // Vertices grouped by degree; positions are filled class by class.
  std::map<int, std::vector<int>> classes;
  for (int v = 1; v <= n; ++v) classes[g.degree(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [deg, vs] : classes) blocks.push_back(vs);

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (const auto& b : blocks) order.insert(order.end(), b.begin(), b.end());

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> pos(static_cast<std::size_t>(n + 1));
  std::function<void(std::size_t)> rec = [&](std::size_t block) {
    if (block == blocks.size()) {
      for (int i = 0; i < n; ++i) pos[order[i]] = i;
      std::uint64_t word = 0;
      for (const auto& e : g.edges()) word |= std::uint64_t{1} << pair_bit[pos[e.a]][pos[e.b]];
      best = std::min(best, word);
      return;
    }
    std::size_t offset = 0;
    for (std::size_t b = 0; b < block; ++b) offset += blocks[b].size();
    auto first = order.begin() + static_cast<std::ptrdiff_t>(offset);
    auto last = first + static_cast<std::ptrdiff_t>(blocks[block].size());
    std::sort(first, last);
    do {
      rec(block + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > 11) throw ArgumentError("nonisomorphic_graphs supports 0..11 vertices");
  std::vector<Graph> level{Graph(0)};
  for (int m = 1; m <= n; ++m) {
    std::map<std::uint64_t, Graph> reps;
    for (const auto& h : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : h.edges()) edges.emplace_back(e.a, e.b);
        for (int v = 1; v < m; ++v) {
          if (nb & bit(v)) edges.emplace_back(v, m);
        }
        Graph cand(m, edges);
        reps.try_emplace(canonical_code(cand), std::move(cand));
      }
    }
    level.clear();
    for (auto& [code, gr] : reps) level.push_back(std::move(gr));
  }
  return level;
}

}  // namespace linrez
