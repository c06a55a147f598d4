#ifndef LINREZ_RESOLUTION_HPP
#define LINREZ_RESOLUTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linrez/field.hpp"
#include "linrez/monomial.hpp"

namespace linrez {

class Graph;

/// The lcm lattice L(I): all lcms of subsets of G(I), bottom element 1 included.
///
/// Elements are sorted by degree (then graded-lex descending), so the bottom
/// is element 0 and every divisor precedes its multiples.
class LcmLattice {
 public:
  static constexpr std::size_t kDefaultMaxSize = 400'000;

  /// Throws ArgumentError on the zero ideal and ResourceLimitError when the
  /// lattice outgrows `max_size`.
  static LcmLattice build(const MonomialIdeal& ideal, std::size_t max_size = kDefaultMaxSize);

  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t bottom() const noexcept { return 0; }
  /// Indices of the atoms, i.e. of G(I).
  const std::vector<std::size_t>& atoms() const noexcept { return atoms_; }
  std::optional<std::size_t> index_of(const Monomial& u) const;
  bool contains(const Monomial& u) const { return index_of(u).has_value(); }
  /// Elements v with 1 < v < u (u given by index).
  std::vector<std::size_t> open_interval(std::size_t u) const;

 private:
  std::vector<Monomial> elements_;
  std::vector<std::size_t> atoms_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Which homological formula produced a Betti number.
enum class BettiRoute {
  gpw,       ///< reduced homology of order complexes of lcm-lattice intervals
  hochster,  ///< reduced homology of induced subcomplexes of the Stanley-Reisner complex
  koszul,    ///< reduced homology of upper Koszul simplicial complexes K^u(I)
  automatic,
};

std::string route_name(BettiRoute route);
BettiRoute parse_route(const std::string& name);

struct BettiOptions {
  /// Highest homological degree to compute; -1 means the Taylor/Hilbert bound.
  int max_i = -1;
  std::size_t max_lattice_size = LcmLattice::kDefaultMaxSize;
};

/// Multigraded and graded Betti numbers of I (not of S/I): beta_{0,j} counts generators.
struct BettiTable {
  FieldSpec field;
  BettiRoute route = BettiRoute::gpw;
  /// Nonzero entries only.
  std::map<std::pair<int, Monomial>, long> multigraded;
  std::map<std::pair<int, int>, long> graded;
  /// Every beta_{i,*} with i <= max_i_computed is known; -1 for the zero ideal.
  int max_i_computed = -1;
  /// Taylor/Hilbert bound for projdim: min(|G(I)| - 1, n - 1).
  int homological_bound = -1;

  long get(int i, int j) const;
  long get(int i, const Monomial& u) const;
  /// Sum over j of beta_{i,j}.
  long total(int i) const;
  bool complete() const noexcept { return max_i_computed >= homological_bound; }
};

/// min(|G(I)| - 1, n - 1); -1 for the zero ideal.
int homological_bound(const MonomialIdeal& ideal);

/// beta_{i,u}(I) = dim reduced H_{i-1}(Delta((1,u))), and 0 when u is not in L(I).
long multigraded_betti_gpw(const MonomialIdeal& ideal, int i, const Monomial& u, const FieldSpec& field);
long multigraded_betti_gpw(const LcmLattice& lattice, int i, const Monomial& u, const FieldSpec& field);
/// dim reduced H_0(Delta((1,u))), read off the atoms below u: two atoms lie in
/// one component of the interval iff their lcm is strictly below u.
long interval_h0(const MonomialIdeal& ideal, const Monomial& u);

BettiTable betti_table_gpw(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options = {});
/// Squarefree ideals only.
BettiTable betti_table_hochster(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options = {});
BettiTable betti_table_koszul(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options = {});
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field, BettiRoute route,
                       const BettiOptions& options = {});
/// Route chosen by `automatic`: hochster for squarefree ideals, gpw for small
/// lattices, koszul otherwise.
BettiRoute resolve_route(const MonomialIdeal& ideal, BettiRoute requested);

/// Largest i with a nonzero entry; -1 for an empty table.
int projective_dimension(const BettiTable& table);

/// Either a positive integer or infinity.
class IndexValue {
 public:
  static IndexValue infinity() { return IndexValue(); }
  static IndexValue finite(int value);

  bool is_infinite() const noexcept { return !value_.has_value(); }
  int value() const;
  /// "inf" or the decimal value.
  std::string to_string() const;

  friend bool operator==(const IndexValue&, const IndexValue&) = default;
  friend bool operator<(const IndexValue& a, const IndexValue& b) {
    if (a.is_infinite()) return false;
    return b.is_infinite() || *a.value_ < *b.value_;
  }
  friend bool operator>(const IndexValue& a, const IndexValue& b) { return b < a; }

 private:
  IndexValue() = default;
  std::optional<int> value_;
};

/// Smallest i with beta_{i,i+j} != 0 for some j > d; infinity if none in the
/// computed range. Throws ArgumentError if the table stops short of the bound
/// without a nonlinear entry.
IndexValue index_from_betti(const BettiTable& table, int d);

/// True iff the table reaches degree r and beta_{i,i+j} = 0 for all
/// 1 <= i <= r and j > d, i.e. index > r.
bool linear_through(const BettiTable& table, int d, int r);

/// (shortest induced cycle of length >= 4 in the complement) - 3, or infinity
/// if the complement is chordal. Field-independent.
IndexValue edge_ideal_index_combinatorial(const Graph& g);

struct IndexOptions {
  FieldSpec field;
  BettiRoute route = BettiRoute::automatic;
  /// Stop after this homological degree; -1 means the Taylor/Hilbert bound.
  int max_i = -1;
  std::size_t max_lattice_size = LcmLattice::kDefaultMaxSize;
};

struct IndexResult {
  IndexValue index = IndexValue::infinity();
  /// False when the search stopped at max_i: then index > max_i_computed.
  bool exact = true;
  int max_i_computed = -1;
  int homological_bound = -1;
  /// Route used for degrees i >= 2 (degree 1 always uses the lcm-lattice H_0 test).
  BettiRoute route = BettiRoute::gpw;
  /// First nonlinear Betti number found: (i, u, beta).
  std::optional<std::tuple<int, Monomial, long>> witness;

  /// True iff index > r is established by this result.
  bool exceeds(int r) const;
};

/// Index of an equigenerated ideal, computed homologically. Zero and principal
/// ideals have infinite index.
IndexResult compute_index(const MonomialIdeal& ideal, const IndexOptions& options = {});

}  // namespace linrez

#endif
