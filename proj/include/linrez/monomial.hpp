#ifndef LINREZ_MONOMIAL_HPP
#define LINREZ_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace linrez {

class Graph;

using Exponent = std::uint16_t;

/// A monomial x_1^{a_1} ... x_n^{a_n} in a fixed number n of variables.
///
/// Variables are indexed from 0 internally and printed 1-based (x1, x2, ...).
/// Every binary operation checks that both operands share n.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n);
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial variable(std::size_t n, std::size_t index);
  /// Product of the variables listed in `support` (0-based indices).
  static Monomial squarefree(std::size_t n, std::span<const int> support);
  static Monomial from_ints(std::span<const int> exponents);

  std::size_t n() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  /// 0-based indices of variables with positive exponent.
  std::vector<int> support() const;
  /// Bitmask of the support; requires n <= 64.
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;

  /// Compact form, e.g. "x1^2*x3"; the unit monomial prints as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }
  /// Lexicographic on exponent vectors (a total order for containers).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; throws ArgumentError unless b divides a.
Monomial quotient(const Monomial& a, const Monomial& b);
/// Degree of lcm(a, b) without materialising it.
int lcm_degree(const Monomial& a, const Monomial& b);

/// Graded-lex comparison with x1 > x2 > ... > xn: negative if a < b.
int graded_lex_compare(const Monomial& a, const Monomial& b);

/// Strict weak ordering that sorts in graded-lex descending order.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_compare(a, b) > 0;
  }
};

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// A monomial ideal stored by its unique minimal generating set, sorted
/// graded-lex descending. The empty generating set is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  std::size_t n() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_squarefree() const noexcept;
  bool is_equigenerated() const noexcept;
  /// Common generator degree; -1 if not equigenerated or zero.
  int generator_degree() const noexcept;
  bool contains(const Monomial& m) const;
  bool is_generator(const Monomial& m) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimal_generators(std::size_t n, std::span<const Monomial> ms);
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset of `ms`, deduplicated and canonically ordered.
MonomialIdeal minimal_generators(std::size_t n, std::span<const Monomial> ms);

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^k for k >= 1.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k);
/// J_{<=alpha}: generators whose exponents are bounded by alpha entrywise.
/// Entries equal to kUnbounded impose no bound.
MonomialIdeal restrict_leq(const MonomialIdeal& ideal, std::span<const int> alpha);
/// I^[k], the squarefree part of I^k. Requires squarefree I and k >= 1.
MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k);
/// x_i x_j for every edge {i,j}, x_i^2 for every loop at i.
MonomialIdeal edge_ideal(const Graph& g);

}  // namespace linrez

#endif
