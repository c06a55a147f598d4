#include "linrez/resolution.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "linrez/errors.hpp"
#include "linrez/graph.hpp"
#include "linrez/simplicial.hpp"

namespace linrez {

// ---------------------------------------------------------------------------
// LcmLattice

LcmLattice LcmLattice::build(const MonomialIdeal& ideal, std::size_t max_size) {
  if (ideal.is_zero()) throw ArgumentError("lcm lattice of the zero ideal");
  const auto& gens = ideal.generators();

  // Join-closure: every lcm of a subset is reached by adding atoms one at a time.
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue;
  Monomial one(ideal.n());
  seen.insert(one);
  queue.push_back(one);
  while (!queue.empty()) {
    Monomial cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Monomial next = lcm(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > max_size) {
          throw ResourceLimitError("lcm lattice exceeds " + std::to_string(max_size) + " elements");
        }
        queue.push_back(std::move(next));
      }
    }
  }

  LcmLattice lattice;
  lattice.elements_.assign(seen.begin(), seen.end());
  std::sort(lattice.elements_.begin(), lattice.elements_.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return graded_lex_compare(a, b) > 0;
  });
  lattice.index_.reserve(lattice.elements_.size());
  for (std::size_t i = 0; i < lattice.elements_.size(); ++i) lattice.index_.emplace(lattice.elements_[i], i);
  for (const auto& g : gens) lattice.atoms_.push_back(lattice.index_.at(g));
  std::sort(lattice.atoms_.begin(), lattice.atoms_.end());
  return lattice;
}

std::optional<std::size_t> LcmLattice::index_of(const Monomial& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> LcmLattice::open_interval(std::size_t u) const {
  std::vector<std::size_t> out;
  const Monomial& top = elements_.at(u);
  for (std::size_t v = 1; v < u; ++v) {
    if (elements_[v].degree() >= top.degree()) break;
    if (elements_[v].divides(top)) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Betti tables

std::string route_name(BettiRoute route) {
  switch (route) {
    case BettiRoute::gpw: return "gpw";
    case BettiRoute::hochster: return "hochster";
    case BettiRoute::koszul: return "koszul";
    case BettiRoute::automatic: return "auto";
  }
  return "unknown";
}

BettiRoute parse_route(const std::string& name) {
  if (name == "gpw") return BettiRoute::gpw;
  if (name == "hochster") return BettiRoute::hochster;
  if (name == "koszul") return BettiRoute::koszul;
  if (name == "auto") return BettiRoute::automatic;
  throw ArgumentError("unknown route '" + name + "' (expected gpw, hochster, koszul or auto)");
}

long BettiTable::get(int i, int j) const {
  auto it = graded.find({i, j});
  return it == graded.end() ? 0 : it->second;
}

long BettiTable::get(int i, const Monomial& u) const {
  auto it = multigraded.find({i, u});
  return it == multigraded.end() ? 0 : it->second;
}

long BettiTable::total(int i) const {
  long sum = 0;
  for (const auto& [key, beta] : graded) {
    if (key.first == i) sum += beta;
  }
  return sum;
}

int homological_bound(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return -1;
  return static_cast<int>(std::min(ideal.size() - 1, ideal.n() == 0 ? 0 : ideal.n() - 1));
}

namespace {

BettiTable empty_table(const MonomialIdeal& ideal, const FieldSpec& field, BettiRoute route) {
  BettiTable t;
  t.field = field;
  t.route = route;
  t.homological_bound = homological_bound(ideal);
  t.max_i_computed = -1;
  return t;
}

int effective_max_i(const MonomialIdeal& ideal, const BettiOptions& options) {
  const int bound = homological_bound(ideal);
  return options.max_i < 0 ? bound : std::min(options.max_i, bound);
}

void record(BettiTable& t, int i, const Monomial& u, long beta) {
  if (beta == 0) return;
  t.multigraded[{i, u}] += beta;
  t.graded[{i, u.degree()}] += beta;
}

}  // namespace

long multigraded_betti_gpw(const LcmLattice& lattice, int i, const Monomial& u, const FieldSpec& field) {
  if (i < 0) return 0;
  const auto idx = lattice.index_of(u);
  if (!idx || *idx == lattice.bottom()) return 0;
  const SimplicialComplex interval = order_complex_of_interval(lattice, u);
  return reduced_homology_dims(interval, field, i - 1).at(i - 1);
}

long multigraded_betti_gpw(const MonomialIdeal& ideal, int i, const Monomial& u, const FieldSpec& field) {
  if (ideal.is_zero()) return 0;
  if (u.n() != ideal.n()) throw DimensionError("multidegree has wrong number of variables");
  return multigraded_betti_gpw(LcmLattice::build(ideal), i, u, field);
}

long interval_h0(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<const Monomial*> below;
  for (const auto& g : ideal.generators()) {
    if (g.divides(u)) below.push_back(&g);
  }
  if (below.size() < 2) return 0;
  // u must itself be a join of atoms to lie in L(I).
  Monomial join = *below.front();
  for (const auto* g : below) join = lcm(join, *g);
  if (join != u) return 0;

  std::vector<std::size_t> parent(below.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const int top = u.degree();
  for (std::size_t a = 0; a < below.size(); ++a) {
    for (std::size_t b = a + 1; b < below.size(); ++b) {
      if (lcm_degree(*below[a], *below[b]) < top) parent[find(a)] = find(b);
    }
  }
  long components = 0;
  for (std::size_t a = 0; a < below.size(); ++a) components += find(a) == a;
  return components - 1;
}

BettiTable betti_table_gpw(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
  BettiTable t = empty_table(ideal, field, BettiRoute::gpw);
  if (ideal.is_zero()) return t;
  const int max_i = effective_max_i(ideal, options);
  const LcmLattice lattice = LcmLattice::build(ideal, options.max_lattice_size);
  for (std::size_t u = 1; u < lattice.size(); ++u) {
    const Monomial& mu = lattice.elements()[u];
    const SimplicialComplex interval = order_complex_of_interval(lattice, mu);
    const HomologyProfile h = reduced_homology_dims(interval, field, max_i - 1);
    for (int i = 0; i <= max_i; ++i) record(t, i, mu, h.at(i - 1));
  }
  t.max_i_computed = max_i;
  return t;
}

BettiTable betti_table_hochster(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
  if (!ideal.is_squarefree()) throw ArgumentError("Hochster's formula needs a squarefree ideal");
  BettiTable t = empty_table(ideal, field, BettiRoute::hochster);
  if (ideal.is_zero()) return t;
  const int n = static_cast<int>(ideal.n());
  if (n > 20) throw ResourceLimitError("Hochster route supports at most 20 variables");
  const int max_i = effective_max_i(ideal, options);

  // Faces of the Stanley-Reisner complex: subsets containing no generator support.
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<std::uint64_t> nonfaces;
  for (const auto& g : ideal.generators()) nonfaces.push_back(g.support_mask());
  std::vector<bool> is_face(limit, false);
  for (std::uint64_t m = 0; m < limit; ++m) {
    is_face[m] = std::none_of(nonfaces.begin(), nonfaces.end(), [&](std::uint64_t g) { return (g & m) == g; });
  }

  std::vector<std::uint64_t> faces;
  for (std::uint64_t w = 1; w < limit; ++w) {
    // beta_{i, x_W} = dim H_{|W| - i - 2}(Delta_W); nonzero only if W is a union of supports.
    const int size = std::popcount(w);
    faces.clear();
    for (std::uint64_t s = w;; s = (s - 1) & w) {
      if (is_face[s]) faces.push_back(s);
      if (s == 0) break;
    }
    const HomologyProfile h = reduced_homology_of_masks(faces, field);
    std::vector<int> support;
    for (std::uint64_t r = w; r; r &= r - 1) support.push_back(std::countr_zero(r));
    const Monomial u = Monomial::squarefree(ideal.n(), support);
    for (int i = 0; i <= max_i; ++i) record(t, i, u, h.at(size - i - 2));
  }
  t.max_i_computed = max_i;
  return t;
}

BettiTable betti_table_koszul(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
  BettiTable t = empty_table(ideal, field, BettiRoute::koszul);
  if (ideal.is_zero()) return t;
  if (ideal.n() > 24) throw ResourceLimitError("Koszul route supports at most 24 variables");
  const int max_i = effective_max_i(ideal, options);
  const LcmLattice lattice = LcmLattice::build(ideal, options.max_lattice_size);

  std::vector<const Monomial*> local;
  std::vector<std::uint64_t> faces;
  std::vector<Exponent> scratch(ideal.n());
  for (std::size_t idx = 1; idx < lattice.size(); ++idx) {
    const Monomial& u = lattice.elements()[idx];
    local.clear();
    for (const auto& g : ideal.generators()) {
      if (g.divides(u)) local.push_back(&g);
    }
    // K^u(I) = { F subset of supp(u) : u / x_F in I }.
    const std::uint64_t supp = u.support_mask();
    faces.clear();
    for (std::uint64_t s = supp;; s = (s - 1) & supp) {
      for (std::size_t v = 0; v < scratch.size(); ++v) {
        scratch[v] = static_cast<Exponent>(u[v] - ((s >> v) & 1));
      }
      const bool member = std::any_of(local.begin(), local.end(), [&](const Monomial* g) {
        for (std::size_t v = 0; v < scratch.size(); ++v) {
          if ((*g)[v] > scratch[v]) return false;
        }
        return true;
      });
      if (member) faces.push_back(s);
      if (s == 0) break;
    }
    const HomologyProfile h = reduced_homology_of_masks(faces, field, max_i - 1);
    for (int i = 0; i <= max_i; ++i) record(t, i, u, h.at(i - 1));
  }
  t.max_i_computed = max_i;
  return t;
}

BettiRoute resolve_route(const MonomialIdeal& ideal, BettiRoute requested) {
  if (requested != BettiRoute::automatic) return requested;
  if (ideal.is_squarefree() && ideal.n() <= 20) return BettiRoute::hochster;
  return ideal.size() <= 8 ? BettiRoute::gpw : BettiRoute::koszul;
}

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field, BettiRoute route,
                       const BettiOptions& options) {
  switch (resolve_route(ideal, route)) {
    case BettiRoute::hochster: return betti_table_hochster(ideal, field, options);
    case BettiRoute::koszul: return betti_table_koszul(ideal, field, options);
    default: return betti_table_gpw(ideal, field, options);
  }
}

int projective_dimension(const BettiTable& table) {
  int p = -1;
  for (const auto& [key, beta] : table.graded) {
    if (beta != 0) p = std::max(p, key.first);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Index

IndexValue IndexValue::finite(int value) {
  if (value < 1) throw ArgumentError("a finite index is at least 1");
  IndexValue v;
  v.value_ = value;
  return v;
}

int IndexValue::value() const {
  if (!value_) throw std::logic_error("IndexValue::value() on infinity");
  return *value_;
}

std::string IndexValue::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

IndexValue index_from_betti(const BettiTable& table, int d) {
  std::optional<int> first;
  for (const auto& [key, beta] : table.graded) {
    const auto [i, j] = key;
    if (beta != 0 && j - i > d && i >= 1 && (!first || i < *first)) first = i;
  }
  if (first) return IndexValue::finite(*first);
  if (!table.complete()) {
    throw ArgumentError("Betti table stops at i = " + std::to_string(table.max_i_computed) +
                        " below the bound " + std::to_string(table.homological_bound));
  }
  return IndexValue::infinity();
}

bool linear_through(const BettiTable& table, int d, int r) {
  if (table.max_i_computed < std::min(r, table.homological_bound)) return false;
  for (const auto& [key, beta] : table.graded) {
    if (beta != 0 && key.first >= 1 && key.first <= r && key.second - key.first > d) return false;
  }
  return true;
}

IndexValue edge_ideal_index_combinatorial(const Graph& g) {
  const auto len = shortest_induced_cycle_ge4(complement(g));
  if (!len) return IndexValue::infinity();
  return IndexValue::finite(*len - 3);
}

bool IndexResult::exceeds(int r) const {
  if (exact) return index.is_infinite() || index.value() > r;
  return r <= max_i_computed;
}

IndexResult compute_index(const MonomialIdeal& ideal, const IndexOptions& options) {
  IndexResult result;
  result.homological_bound = homological_bound(ideal);
  if (ideal.is_zero()) return result;
  const int d = ideal.generator_degree();
  if (d < 0) throw ArgumentError("index is only defined here for equigenerated ideals");
  const int bound = result.homological_bound;
  result.route = resolve_route(ideal, options.route);
  if (bound <= 0) {
    result.max_i_computed = std::max(bound, 0);
    return result;
  }
  const int max_i = options.max_i < 0 ? bound : std::min(options.max_i, bound);

  // Degree 1: only lcms of pairs of generators can carry beta_1 (for any other
  // u in L(I) every two atoms below u join strictly below u).
  std::set<Monomial, GradedLexDescending> pair_lcms;
  const auto& gens = ideal.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (lcm_degree(gens[a], gens[b]) > d + 1) pair_lcms.insert(lcm(gens[a], gens[b]));
    }
  }
  // Ascending degree so the reported witness is a lowest one.
  for (auto it = pair_lcms.rbegin(); it != pair_lcms.rend(); ++it) {
    const long beta = interval_h0(ideal, *it);
    if (beta != 0) {
      result.index = IndexValue::finite(1);
      result.max_i_computed = 1;
      result.witness = std::make_tuple(1, *it, beta);
      return result;
    }
  }
  result.max_i_computed = 1;
  if (max_i <= 1) {
    result.exact = bound <= 1;
    return result;
  }

  BettiOptions bopts;
  bopts.max_i = max_i;
  bopts.max_lattice_size = options.max_lattice_size;
  const BettiTable table = betti_table(ideal, options.field, result.route, bopts);
  result.max_i_computed = table.max_i_computed;
  for (const auto& [key, beta] : table.multigraded) {
    const int i = key.first;
    if (i >= 1 && key.second.degree() - i > d) {
      if (!result.witness || i < std::get<0>(*result.witness)) result.witness = std::make_tuple(i, key.second, beta);
    }
  }
  if (result.witness) {
    result.index = IndexValue::finite(std::get<0>(*result.witness));
  } else {
    result.exact = table.complete();
  }
  return result;
}

}  // namespace linrez
