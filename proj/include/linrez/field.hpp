#ifndef LINREZ_FIELD_HPP
#define LINREZ_FIELD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace linrez {

/// Coefficient field for homology: the rationals or a prime field GF(p).
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static constexpr std::uint32_t kDefaultPrime = 32003;

  FieldSpec() : FieldSpec(Kind::prime, kDefaultPrime) {}
  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws ArgumentError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "q", "Q", "QQ", "p:<prime>" or "GF(<prime>)".
  static FieldSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  /// "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Sparse integer column: (row, coefficient) pairs with distinct rows.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Rank of the integer matrix given by its columns, computed over `field`.
std::size_t matrix_rank(const std::vector<SparseColumn>& columns, const FieldSpec& field);

bool is_prime(std::uint64_t p);

}  // namespace linrez

#endif
