#include "linrez/simplicial.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "linrez/errors.hpp"
#include "linrez/graph.hpp"
#include "linrez/monomial.hpp"
#include "linrez/resolution.hpp"

namespace linrez {

namespace {

constexpr int kMaxFacetSize = 24;

bool is_subset(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Shared tail of both homology routines: given f_t and rank(d_t) for every t
// in range, assemble the reduced Betti numbers.
std::atomic<std::uint64_t> audit_computations{0};
std::atomic<std::uint64_t> audit_violations{0};

HomologyProfile assemble(const std::vector<long>& counts, const std::vector<long>& ranks, int top) {
  // counts[t+1] = f_t, ranks[t+1] = rank of d_t : C_t -> C_{t-1}, for t = -1..top+1.
  HomologyProfile profile;
  profile.dims.assign(static_cast<std::size_t>(top + 2), 0);
  bool ok = ranks[0] == 0;
  for (int t = -1; t <= top; ++t) {
    const long f = counts[t + 1];
    const long r_out = ranks[t + 1];
    const long r_in = ranks[t + 2];
    profile.dims[t + 1] = f - r_out - r_in;
    ok = ok && profile.dims[t + 1] >= 0 && r_out <= f && r_in <= f;
  }
  // Reduced Euler relation, truncated at top: the sum of (-1)^t dim H_t equals
  // the sum of (-1)^t f_t minus (-1)^top rank d_{top+1}.
  long chi_faces = 0;
  for (int t = -1; t <= top; ++t) chi_faces += (t % 2 == 0 ? 1 : -1) * counts[t + 1];
  chi_faces -= (top % 2 == 0 ? 1 : -1) * ranks[top + 2];
  ok = ok && chi_faces == profile.euler_characteristic();
  ++audit_computations;
  if (!ok) ++audit_violations;
  return profile;
}

}  // namespace

HomologyAudit homology_audit() { return {audit_computations.load(), audit_violations.load()}; }

void reset_homology_audit() {
  audit_computations = 0;
  audit_violations = 0;
}

long HomologyProfile::at(int t) const {
  if (t < -1 || t + 1 >= static_cast<int>(dims.size())) return 0;
  return dims[t + 1];
}

long HomologyProfile::euler_characteristic() const {
  long chi = 0;
  for (int t = -1; t <= max_degree(); ++t) chi += (t % 2 == 0 ? 1 : -1) * at(t);
  return chi;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (static_cast<int>(f.size()) > kMaxFacetSize) throw ResourceLimitError("facet too large to enumerate");
  }
  // Larger first, so every facet is compared only against possible supersets.
  std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  SimplicialComplex out;
  for (auto& f : facets) {
    const bool covered = std::any_of(out.facets_.begin(), out.facets_.end(), [&](const Face& g) {
      return g.size() > f.size() && is_subset(f, g);
    });
    if (!covered) out.facets_.push_back(std::move(f));
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::set<int> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

int SimplicialComplex::dimension() const noexcept {
  if (facets_.empty()) return -2;
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::contains(const Face& face) const {
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) { return is_subset(sorted, f); });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dimension(int max_dim) const {
  if (is_void()) return {};
  const int top = std::min(max_dim, dimension());
  std::vector<std::set<Face>> sets(static_cast<std::size_t>(top + 2));
  Face current;
  for (const auto& facet : facets_) {
    // Subsets of the facet with at most top + 1 elements, in lexicographic order.
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      sets[current.size()].insert(current);
      if (static_cast<int>(current.size()) == top + 1) return;
      for (std::size_t i = start; i < facet.size(); ++i) {
        current.push_back(facet[i]);
        rec(i + 1);
        current.pop_back();
      }
    };
    rec(0);
  }
  std::vector<std::vector<Face>> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

std::string SimplicialComplex::dump() const {
  std::string out;
  for (const auto& f : facets_) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f[i]);
    }
    out += '\n';
  }
  return out;
}

SimplicialComplex clique_complex(const Graph& g) {
  if (!g.is_simple()) throw ArgumentError("clique_complex requires a simple graph");
  if (g.n() == 0) return SimplicialComplex::empty_complex();
  std::vector<Face> cliques;
  // Bron-Kerbosch with pivoting over bitmasks.
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bk = [&](std::uint64_t r, std::uint64_t p,
                                                                           std::uint64_t x) {
    if (!p && !x) {
      Face f;
      for (std::uint64_t m = r; m; m &= m - 1) f.push_back(std::countr_zero(m) + 1);
      cliques.push_back(std::move(f));
      return;
    }
    const int pivot = std::countr_zero(p | x) + 1;
    for (std::uint64_t cand = p & ~g.neighbors(pivot); cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand) + 1;
      const std::uint64_t vb = std::uint64_t{1} << (v - 1);
      bk(r | vb, p & g.neighbors(v), x & g.neighbors(v));
      p &= ~vb;
      x |= vb;
    }
  };
  const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  bk(0, all, 0);
  return SimplicialComplex::from_facets(std::move(cliques));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const std::vector<int>& vertices) {
  if (complex.is_void()) return complex;
  std::vector<int> w = vertices;
  std::sort(w.begin(), w.end());
  std::vector<Face> restricted;
  for (const auto& f : complex.facets()) {
    Face r;
    std::set_intersection(f.begin(), f.end(), w.begin(), w.end(), std::back_inserter(r));
    restricted.push_back(std::move(r));
  }
  return SimplicialComplex::from_facets(std::move(restricted));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw ArgumentError("stanley_reisner_complex requires a squarefree ideal");
  const auto n = static_cast<int>(ideal.n());
  if (n > kMaxFacetSize) throw ResourceLimitError("too many variables for face enumeration");
  std::vector<std::uint64_t> nonfaces;
  for (const auto& g : ideal.generators()) nonfaces.push_back(g.support_mask());
  if (std::find(nonfaces.begin(), nonfaces.end(), 0) != nonfaces.end()) {
    throw ArgumentError("stanley_reisner_complex of the unit ideal");
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  auto is_face = [&](std::uint64_t m) {
    return std::none_of(nonfaces.begin(), nonfaces.end(), [&](std::uint64_t g) { return (g & m) == g; });
  };
  std::vector<Face> facets;
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (!is_face(m)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      const std::uint64_t vb = std::uint64_t{1} << v;
      if (!(m & vb) && is_face(m | vb)) maximal = false;
    }
    if (!maximal) continue;
    Face f;
    for (std::uint64_t r = m; r; r &= r - 1) f.push_back(std::countr_zero(r) + 1);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex order_complex_of_interval(const LcmLattice& lattice, const Monomial& u) {
  const auto top = lattice.index_of(u);
  if (!top) throw ArgumentError(u.to_string() + " is not an element of the lcm lattice");
  const std::vector<std::size_t> elems = lattice.open_interval(*top);
  if (elems.empty()) return SimplicialComplex::empty_complex();

  // Maximal chains of the interval: start at minimal elements and climb along
  // covering relations inside the interval.
  const auto& all = lattice.elements();
  const std::size_t m = elems.size();
  std::vector<std::vector<std::size_t>> up(m);
  std::vector<bool> has_below(m, false);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && all[elems[a]].divides(all[elems[b]])) {
        up[a].push_back(b);
        has_below[b] = true;
      }
    }
  }
  // Keep only covers.
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<std::size_t> covers;
    for (std::size_t b : up[a]) {
      const bool direct = std::none_of(up[a].begin(), up[a].end(), [&](std::size_t c) {
        return c != b && all[elems[c]].divides(all[elems[b]]);
      });
      if (direct) covers.push_back(b);
    }
    up[a] = std::move(covers);
  }

  std::vector<Face> chains;
  Face chain;
  std::function<void(std::size_t)> climb = [&](std::size_t a) {
    chain.push_back(static_cast<int>(elems[a]));
    if (up[a].empty()) {
      chains.push_back(chain);
    } else {
      for (std::size_t b : up[a]) climb(b);
    }
    chain.pop_back();
    if (chains.size() > 2'000'000) throw ResourceLimitError("order complex has too many maximal chains");
  };
  for (std::size_t a = 0; a < m; ++a) {
    if (!has_below[a]) climb(a);
  }
  return SimplicialComplex::from_facets(std::move(chains));
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field, int max_degree) {
  if (complex.is_void()) return HomologyProfile{{0}};
  const int dim = complex.dimension();
  const int top = max_degree < -1 ? dim : std::min(max_degree, dim);
  // Faces through dimension top + 1 are needed for the incoming boundary.
  const auto faces = complex.faces_by_dimension(top + 1);

  std::vector<long> counts(static_cast<std::size_t>(top + 3), 0);
  for (std::size_t k = 0; k < faces.size() && k < counts.size(); ++k) counts[k] = static_cast<long>(faces[k].size());
  std::vector<long> ranks(static_cast<std::size_t>(top + 3), 0);

  for (int t = 0; t <= top + 1 && t + 1 < static_cast<int>(faces.size()); ++t) {
    const auto& cols = faces[t + 1];
    const auto& rows = faces[t];
    std::map<Face, std::uint32_t> row_index;
    for (std::uint32_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    std::vector<SparseColumn> matrix;
    matrix.reserve(cols.size());
    Face boundary;
    for (const auto& f : cols) {
      SparseColumn col;
      for (std::size_t k = 0; k < f.size(); ++k) {
        boundary = f;
        boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(k));
        col.emplace_back(row_index.at(boundary), k % 2 == 0 ? 1 : -1);
      }
      matrix.push_back(std::move(col));
    }
    ranks[t + 1] = static_cast<long>(matrix_rank(matrix, field));
  }
  return assemble(counts, ranks, top);
}

HomologyProfile reduced_homology_of_masks(const std::vector<std::uint64_t>& faces, const FieldSpec& field,
                                          int max_degree) {
  if (faces.empty()) return HomologyProfile{{0}};
  int dim = -1;
  for (auto f : faces) dim = std::max(dim, std::popcount(f) - 1);
  const int top = max_degree < -1 ? dim : std::min(max_degree, dim);

  std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(top + 3));
  for (auto f : faces) {
    const int d = std::popcount(f) - 1;
    if (d <= top + 1) by_dim[d + 1].push_back(f);
  }
  for (auto& v : by_dim) std::sort(v.begin(), v.end());
  if (by_dim[0].size() != 1) throw ArgumentError("face family must contain the empty face");

  std::vector<long> counts(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) counts[k] = static_cast<long>(by_dim[k].size());
  std::vector<long> ranks(by_dim.size(), 0);
  for (int t = 0; t <= top + 1; ++t) {
    const auto& cols = by_dim[t + 1];
    const auto& rows = by_dim[t];
    if (cols.empty()) continue;
    std::unordered_map<std::uint64_t, std::uint32_t> row_index;
    row_index.reserve(rows.size());
    for (std::uint32_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    std::vector<SparseColumn> matrix;
    matrix.reserve(cols.size());
    for (auto f : cols) {
      SparseColumn col;
      int k = 0;
      for (std::uint64_t r = f; r; r &= r - 1, ++k) {
        const std::uint64_t b = f & ~(r & -r);
        auto it = row_index.find(b);
        if (it == row_index.end()) throw ArgumentError("face family is not closed under subsets");
        col.emplace_back(it->second, k % 2 == 0 ? 1 : -1);
      }
      matrix.push_back(std::move(col));
    }
    ranks[t + 1] = static_cast<long>(matrix_rank(matrix, field));
  }
  return assemble(counts, ranks, top);
}

std::vector<long> face_counts(const SimplicialComplex& complex) {
  std::vector<long> counts;
  for (const auto& level : complex.faces_by_dimension(complex.dimension())) {
    counts.push_back(static_cast<long>(level.size()));
  }
  return counts;
}

long reduced_euler_from_faces(const std::vector<long>& counts) {
  long chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const int t = static_cast<int>(k) - 1;
    chi += (t % 2 == 0 ? 1 : -1) * counts[k];
  }
  return chi;
}

}  // namespace linrez
