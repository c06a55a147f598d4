#ifndef LINREZ_SIMPLICIAL_HPP
#define LINREZ_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linrez/field.hpp"

namespace linrez {

class Graph;
class MonomialIdeal;
class LcmLattice;
class Monomial;

/// Sorted list of vertex labels.
using Face = std::vector<int>;

/// Finite abstract simplicial complex stored by its facets.
///
/// Two degenerate cases are kept apart: the void complex has no faces at all,
/// while the empty complex {∅} has exactly the empty face (reduced H_{-1} = 1).
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;
  /// Keeps the inclusion-maximal members of `facets` (deduplicated, sorted).
  static SimplicialComplex from_facets(std::vector<Face> facets);
  static SimplicialComplex empty_complex() { return from_facets({Face{}}); }

  const std::vector<Face>& facets() const noexcept { return facets_; }
  std::vector<int> vertices() const;
  bool is_void() const noexcept { return facets_.empty(); }
  /// -1 for {∅}; -2 for the void complex.
  int dimension() const noexcept;
  bool contains(const Face& face) const;

  /// faces[t + 1] lists the t-dimensional faces for -1 <= t <= max_dim, sorted.
  std::vector<std::vector<Face>> faces_by_dimension(int max_dim) const;

  /// One facet per line, vertices space-separated and sorted.
  std::string dump() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Face> facets_;
};

/// dims[t + 1] = dim of reduced homology in degree t, for t = -1 .. top.
struct HomologyProfile {
  std::vector<long> dims;
  /// Degree t beyond the computed range reads as 0.
  long at(int t) const;
  int max_degree() const noexcept { return static_cast<int>(dims.size()) - 2; }
  long euler_characteristic() const;
};

SimplicialComplex clique_complex(const Graph& g);
/// Faces of `complex` whose vertices all lie in `vertices`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const std::vector<int>& vertices);
/// Complex on {1..n} whose minimal non-faces are the generator supports.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);
/// Order complex of the open interval (1, u) of the lcm lattice; vertices are
/// lattice element indices.
SimplicialComplex order_complex_of_interval(const LcmLattice& lattice, const Monomial& u);

/// Reduced homology over `field` through degree `max_degree` (default: all).
HomologyProfile reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field,
                                      int max_degree = -2);

/// Same, for a downward-closed family of faces given as vertex bitmasks. The
/// empty face (mask 0) must be present unless the family is empty (void).
HomologyProfile reduced_homology_of_masks(const std::vector<std::uint64_t>& faces, const FieldSpec& field,
                                          int max_degree = -2);

/// Running tally over every homology computation in the process: each result
/// is checked against the reduced Euler relation (with the boundary-rank
/// correction when the computation stops below the top dimension) and for
/// non-negative dimensions.
struct HomologyAudit {
  std::uint64_t computations = 0;
  std::uint64_t violations = 0;
};
HomologyAudit homology_audit();
void reset_homology_audit();

/// f-vector: counts[t + 1] faces of dimension t, t >= -1.
std::vector<long> face_counts(const SimplicialComplex& complex);
/// sum_t (-1)^t f_t over t >= -1 (equals the reduced Euler characteristic).
long reduced_euler_from_faces(const std::vector<long>& counts);

}  // namespace linrez

#endif
