#ifndef LINREZ_GRAPH_HPP
#define LINREZ_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linrez {

/// Unordered pair {a, b} with a < b, vertices 1-based.
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool meets(const Edge& o) const noexcept { return a == o.a || a == o.b || b == o.a || b == o.b; }
  bool contains(int v) const noexcept { return a == v || b == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite graph on vertices 1..n without multiple edges; loops allowed.
/// Adjacency is kept as bitmasks, so n is limited to 64.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Pairs with i == j are loops. Duplicates are collapsed.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& loops() const noexcept { return loops_; }
  bool is_simple() const noexcept { return loops_.empty(); }
  bool has_edge(int i, int j) const;
  bool has_loop(int v) const;
  /// Neighbours of v (excluding v itself) as a bitmask; bit v-1 stands for v.
  std::uint64_t neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const;

  std::string to_string() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> loops_;
  std::vector<std::uint64_t> adj_;
};

struct Matching {
  std::vector<Edge> edges;  // sorted
  std::size_t size() const noexcept { return edges.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

struct GapWitness {
  Edge first;   // a loop at v is reported as {v, v}
  Edge second;
};

struct GapFreeResult {
  bool gap_free = true;
  std::optional<GapWitness> witness;
};

struct RestrictedMatching {
  int nu0 = 1;
  /// Present iff a restricted matching of size >= 2 exists.
  std::optional<Matching> witness;
  /// The edge of the witness that forms a gap with every other member.
  std::optional<Edge> distinguished;
};

struct MatchingReport {
  int nu = 0;
  int nu0 = 1;
  Matching witness_max;
  std::optional<Matching> witness_restricted;
  std::optional<Edge> distinguished;
};

Graph complement(const Graph& g);
/// Induced subgraph on the given vertices, relabelled 1..|W| in increasing order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

GapFreeResult is_gap_free(const Graph& g);
/// True iff no single edge of g meets both e and f (both assumed disjoint).
bool forms_gap(const Graph& g, const Edge& e, const Edge& f);

/// Length of a shortest induced cycle of length >= 4, or nullopt if g is chordal.
std::optional<int> shortest_induced_cycle_ge4(const Graph& g);

/// All matchings of size k, each once, in lexicographic order of edge lists.
std::vector<Matching> enumerate_matchings(const Graph& g, int k);
int matching_number(const Graph& g);
Matching maximum_matching(const Graph& g);
RestrictedMatching restricted_matching_number(const Graph& g);
MatchingReport matching_report(const Graph& g);
bool is_matching_of(const Graph& g, const Matching& m);
/// Graph on the edges of m (vertex i+1 is m.edges[i]); two are adjacent iff some
/// edge of g meets both.
Graph matching_graph(const Graph& g, const Matching& m);

Graph whisker_graph(const Graph& g);
Graph loop_graph(const Graph& g);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool has_isolated_vertices(const Graph& g);

/// Isomorphism-invariant code of a simple graph (n <= 11): the smallest
/// upper-triangle adjacency word over all degree-respecting relabellings.
std::uint64_t canonical_code(const Graph& g);
/// Relabel vertex v as perm[v-1].
Graph relabel(const Graph& g, const std::vector<int>& perm);
/// One representative per isomorphism class of simple graphs on n vertices,
/// sorted by canonical code.
std::vector<Graph> nonisomorphic_graphs(int n);

}  // namespace linrez

#endif
