// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the value types.
#ifndef LINREZ_TESTS_ORACLES_HPP
#define LINREZ_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "linrez/graph.hpp"
#include "linrez/monomial.hpp"

namespace oracle {

using linrez::Graph;
using linrez::Monomial;
using linrez::MonomialIdeal;

/// Rank mod p of a dense matrix (rows of residues), plain Gaussian elimination.
std::size_t dense_rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p);

/// Multigraded Betti numbers of I from the Taylor complex tensored with k:
/// basis = subsets F of G(I) with lcm(F) = u, keeping only the differential
/// terms whose coefficient monomial is 1. Map key (i, u) with i the
/// homological degree of I. Feasible for |G(I)| <= 20.
std::map<std::pair<int, Monomial>, long> taylor_betti(const MonomialIdeal& ideal, std::int64_t p = 32003);

/// Graded version of taylor_betti: key (i, j).
std::map<std::pair<int, int>, long> taylor_graded(const MonomialIdeal& ideal, std::int64_t p = 32003);

/// Reduced homology dims of the complex whose faces are the given bitmasks
/// (downward closed, empty face included), via dense boundary ranks.
std::vector<long> reduced_homology(const std::vector<std::uint64_t>& faces, std::int64_t p = 32003);

/// Shortest induced cycle of length >= 4 by checking every vertex subset.
std::optional<int> shortest_induced_cycle(const Graph& g);

/// Gap test over all pairs of edges (loops count as edges {v}).
bool gap_free(const Graph& g);

/// Largest k such that some k edges are pairwise disjoint (k-subset search).
int matching_number(const Graph& g);

/// Max size of a matching M with an edge e in M that forms a gap with every
/// other edge of M; 1 when no such matching of size >= 2 exists.
int restricted_matching_number(const Graph& g);

/// Squarefree members among products of k distinct generators, minimalized.
MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k);

/// Colon ideal (u_1, ..., u_{i-1}) : u_i minimalized, checked for degree 1.
bool linear_quotients(const std::vector<Monomial>& order);

/// Number of isomorphism classes of simple graphs on n vertices via all n!
/// relabellings.
std::size_t isomorphism_classes(int n);

}  // namespace oracle

#endif
