#include "linrez/field.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <unordered_map>

#include "linrez/errors.hpp"

namespace linrez {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw ArgumentError("not a usable prime: " + std::to_string(p));
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("p:", 0) == 0) {
    digits = text.substr(2);
  } else if (text.rfind("GF(", 0) == 0 && text.size() > 4 && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw ArgumentError("unknown field '" + text + "' (expected q or p:<prime>)");
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 10) {
    throw ArgumentError("malformed prime in field '" + text + "'");
  }
  const auto value = std::stoull(digits);
  if (value >= (1ull << 31)) throw ArgumentError("prime too large in field '" + text + "'");
  return prime(static_cast<std::uint32_t>(value));
}

std::string FieldSpec::name() const {
  return kind_ == Kind::rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

namespace {

struct PrimeOps {
  using value_type = std::uint32_t;
  std::uint64_t p;

  value_type from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<value_type>(((v % m) + m) % m);
  }
  bool is_zero(value_type v) const { return v == 0; }
  value_type sub(value_type a, value_type b) const { return static_cast<value_type>((a + p - b) % p); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type inv(value_type a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
};

struct RationalOps {
  using value_type = mpq_class;

  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

// Column reduction: each column is reduced against earlier columns sharing its
// largest row index; the number of surviving pivots is the rank.
template <class Ops>
std::size_t column_rank(const std::vector<SparseColumn>& input, const Ops& ops) {
  using V = typename Ops::value_type;
  using Column = std::vector<std::pair<std::uint32_t, V>>;

  std::vector<Column> reduced;
  std::unordered_map<std::uint32_t, std::size_t> pivot_owner;
  Column col, scratch;

  for (const auto& raw : input) {
    col.clear();
    for (const auto& [row, coeff] : raw) {
      V v = ops.from_int(coeff);
      if (!ops.is_zero(v)) col.emplace_back(row, std::move(v));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    while (!col.empty()) {
      auto it = pivot_owner.find(col.back().first);
      if (it == pivot_owner.end()) break;
      const Column& other = reduced[it->second];  // normalised: pivot coefficient 1
      const V factor = col.back().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
          scratch.push_back(std::move(col[i++]));
        } else if (i == col.size() || other[j].first < col[i].first) {
          scratch.emplace_back(other[j].first, ops.sub(ops.from_int(0), ops.mul(factor, other[j].second)));
          ++j;
        } else {
          V v = ops.sub(col[i].second, ops.mul(factor, other[j].second));
          if (!ops.is_zero(v)) scratch.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      col.swap(scratch);
    }
    if (col.empty()) continue;
    const V scale = ops.inv(col.back().second);
    for (auto& entry : col) entry.second = ops.mul(entry.second, scale);
    pivot_owner.emplace(col.back().first, reduced.size());
    reduced.push_back(col);
  }
  return reduced.size();
}

}  // namespace

std::size_t matrix_rank(const std::vector<SparseColumn>& columns, const FieldSpec& field) {
  if (field.kind() == FieldSpec::Kind::rationals) return column_rank(columns, RationalOps{});
  return column_rank(columns, PrimeOps{field.characteristic()});
}

}  // namespace linrez
