#include <bit>
#include <random>

#include "doctest.h"
#include "linrez/errors.hpp"
#include "linrez/graph.hpp"
#include "linrez/monomial.hpp"
#include "linrez/resolution.hpp"
#include "linrez/simplicial.hpp"
#include "oracles.hpp"

using namespace linrez;

namespace {

std::vector<std::uint64_t> face_masks(const SimplicialComplex& c) {
  std::vector<std::uint64_t> out;
  if (c.is_void()) return out;
  for (const auto& level : c.faces_by_dimension(64)) {
    for (const auto& f : level) {
      std::uint64_t m = 0;
      for (int v : f) m |= std::uint64_t{1} << (v - 1);
      out.push_back(m);
    }
  }
  return out;
}

std::vector<Face> maximal_independent_sets(const Graph& g) {
  std::vector<Face> out;
  const int n = g.n();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool independent = true;
    for (const auto& e : g.edges())
      if (((s >> (e.a - 1)) & 1) && ((s >> (e.b - 1)) & 1)) independent = false;
    if (!independent) continue;
    bool maximal = true;
    for (int v = 1; v <= n && maximal; ++v) {
      if ((s >> (v - 1)) & 1) continue;
      bool free = true;
      for (int u = 1; u <= n; ++u)
        if (((s >> (u - 1)) & 1) && g.has_edge(u, v)) free = false;
      if (free) maximal = false;
    }
    if (!maximal) continue;
    Face f;
    for (int v = 1; v <= n; ++v)
      if ((s >> (v - 1)) & 1) f.push_back(v);
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("void and empty complexes") {
  const SimplicialComplex v;
  CHECK(v.is_void());
  CHECK(v.dimension() == -2);
  const auto hv = reduced_homology_dims(v, FieldSpec());
  for (int t = -1; t <= 3; ++t) CHECK(hv.at(t) == 0);
  const auto e = SimplicialComplex::empty_complex();
  CHECK(e.dimension() == -1);
  const auto he = reduced_homology_dims(e, FieldSpec());
  CHECK(he.at(-1) == 1);
  CHECK(he.at(0) == 0);
}

TEST_CASE("small homology") {
  const auto hollow = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}});
  auto h = reduced_homology_dims(hollow, FieldSpec());
  CHECK(h.at(-1) == 0);
  CHECK(h.at(0) == 0);
  CHECK(h.at(1) == 1);
  h = reduced_homology_dims(SimplicialComplex::from_facets({{1}, {2}}), FieldSpec());
  CHECK(h.at(0) == 1);
  const auto sphere = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  h = reduced_homology_dims(sphere, FieldSpec::rationals());
  CHECK(h.at(2) == 1);
  CHECK(h.at(1) == 0);
  CHECK(sphere.dump() == "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  // Facets are kept maximal.
  CHECK(SimplicialComplex::from_facets({{1, 2}, {1}, {1, 2}}).facets() == std::vector<Face>{{1, 2}});
  // Real projective plane: characteristic 2 sees H_1 and H_2.
  const auto rp2 = SimplicialComplex::from_facets({{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
                                                   {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}});
  CHECK(reduced_homology_dims(rp2, FieldSpec::prime(2)).at(1) == 1);
  CHECK(reduced_homology_dims(rp2, FieldSpec::prime(2)).at(2) == 1);
  CHECK(reduced_homology_dims(rp2, FieldSpec::rationals()).at(1) == 0);
  CHECK(reduced_homology_dims(rp2, FieldSpec()).at(2) == 0);
}

TEST_CASE("clique complexes") {
  CHECK(clique_complex(cycle_graph(5)).facets().size() == 5);
  CHECK(clique_complex(complete_graph(4)).facets() == std::vector<Face>{{1, 2, 3, 4}});
  CHECK(clique_complex(complement(cycle_graph(5))).facets().size() == 5);
  CHECK_THROWS_AS(clique_complex(loop_graph(cycle_graph(3))), ArgumentError);

  const auto c5 = clique_complex(cycle_graph(5));
  CHECK(induced_subcomplex(c5, {1, 2, 3, 4, 5}) == c5);
  const auto path = induced_subcomplex(c5, {1, 2, 3, 4});
  CHECK(path.facets() == std::vector<Face>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(reduced_homology_dims(path, FieldSpec()).at(0) == 0);

  // Complement of 2K2 is C4; its clique complex on all four vertices is a
  // circle, on {1,2,3,4} minus nothing. The 2K2 gap {1,2},{3,4} makes the
  // Stanley-Reisner complex of I(2K2) restricted to [4] disconnected.
  const Graph two_k2(4, {{1, 2}, {3, 4}});
  const auto d = stanley_reisner_complex(edge_ideal(two_k2));
  CHECK(reduced_homology_dims(induced_subcomplex(d, {1, 2, 3, 4}), FieldSpec()).at(1) == 1);
  CHECK(reduced_homology_dims(induced_subcomplex(d, {1, 2}), FieldSpec()).at(0) == 1);
}

TEST_CASE("clique complexes commute with restriction") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      const auto delta = clique_complex(g);
      for (std::uint32_t w = 1; w < (std::uint32_t{1} << n); ++w) {
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
          if ((w >> (v - 1)) & 1) verts.push_back(v);
        const auto restricted = induced_subcomplex(delta, verts);
        // Relabel the clique complex of G_W back to original names.
        std::vector<Face> facets;
        const auto small = clique_complex(induced_subgraph(g, verts));
        for (const auto& f : small.facets()) {
          Face mapped;
          for (int x : f) mapped.push_back(verts[x - 1]);
          facets.push_back(mapped);
        }
        CHECK(restricted == SimplicialComplex::from_facets(facets));
      }
    }
  }
}

TEST_CASE("Stanley-Reisner complexes") {
  const auto c5 = edge_ideal(cycle_graph(5));
  CHECK(stanley_reisner_complex(c5) == clique_complex(complement(cycle_graph(5))));
  const std::vector<int> all{0, 1, 2, 3};
  const auto top = minimal_generators(4, std::vector{Monomial::squarefree(4, all)});
  const auto boundary = stanley_reisner_complex(top);
  CHECK(boundary.facets().size() == 4);
  CHECK(reduced_homology_dims(boundary, FieldSpec()).at(2) == 1);
  const auto bad = minimal_generators(2, std::vector{Monomial::from_ints(std::vector<int>{2, 0})});
  CHECK_THROWS_AS(stanley_reisner_complex(bad), ArgumentError);

  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      if (g.edges().empty()) continue;
      const auto delta = stanley_reisner_complex(edge_ideal(g));
      CHECK(delta == SimplicialComplex::from_facets(maximal_independent_sets(g)));
      CHECK(delta == clique_complex(complement(g)));
    }
  }
}

TEST_CASE("order complexes of lcm intervals") {
  const auto two = edge_ideal(Graph(4, {{1, 2}, {3, 4}}));
  const auto lattice = LcmLattice::build(two);
  const std::vector<int> all{0, 1, 2, 3};
  const auto top = Monomial::squarefree(4, all);
  const auto interval = order_complex_of_interval(lattice, top);
  CHECK(interval.facets().size() == 2);
  CHECK(reduced_homology_dims(interval, FieldSpec()).at(0) == 1);

  const auto atom = two.generators().front();
  const auto empty = order_complex_of_interval(lattice, atom);
  CHECK(reduced_homology_dims(empty, FieldSpec()).at(-1) == 1);

  const auto p3 = edge_ideal(path_graph(3));
  const auto l3 = LcmLattice::build(p3);
  const std::vector<int> abc{0, 1, 2};
  const auto iv = order_complex_of_interval(l3, Monomial::squarefree(3, abc));
  CHECK(iv.facets().size() == 2);
  CHECK(reduced_homology_dims(iv, FieldSpec()).at(0) == 1);
  CHECK(oracle::taylor_betti(p3).at({1, Monomial::squarefree(3, abc)}) == 1);

  const std::vector<int> ac{0, 2};
  CHECK_THROWS_AS(order_complex_of_interval(l3, Monomial::squarefree(3, ac)), ArgumentError);
}

TEST_CASE("homology properties on random complexes") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Face> facets;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < count; ++k) {
      Face f;
      for (int v = 1; v <= n; ++v)
        if (rng() % 2) f.push_back(v);
      facets.push_back(f);
    }
    const auto c = SimplicialComplex::from_facets(facets);
    const auto hq = reduced_homology_dims(c, FieldSpec::rationals());
    const auto hp = reduced_homology_dims(c, FieldSpec());
    CHECK(hq.dims == hp.dims);
    CHECK(hq.euler_characteristic() == reduced_euler_from_faces(face_counts(c)));
    const auto masks = face_masks(c);
    CHECK(reduced_homology_of_masks(masks, FieldSpec()).dims == hp.dims);
    const auto reference = oracle::reduced_homology(masks);
    for (int t = -1; t <= c.dimension(); ++t) CHECK(hp.at(t) == reference[t + 1]);
  }
}
