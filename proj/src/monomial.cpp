#include "linrez/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "linrez/errors.hpp"
#include "linrez/graph.hpp"

namespace linrez {

namespace {

void require_same_n(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) {
    throw DimensionError("monomials over " + std::to_string(a.n()) + " and " +
                         std::to_string(b.n()) + " variables");
  }
}

}  // namespace

Monomial::Monomial(std::size_t n) : exps_(n, 0) {}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t n, std::size_t index) {
  if (index >= n) throw ArgumentError("variable index out of range");
  std::vector<Exponent> e(n, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree(std::size_t n, std::span<const int> support) {
  std::vector<Exponent> e(n, 0);
  for (int v : support) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ArgumentError("variable index out of range");
    e[v] = 1;
  }
  return Monomial(std::move(e));
}

Monomial Monomial::from_ints(std::span<const int> exponents) {
  std::vector<Exponent> e;
  e.reserve(exponents.size());
  for (int a : exponents) {
    if (a < 0 || a > std::numeric_limits<Exponent>::max()) {
      throw ArgumentError("exponent out of range: " + std::to_string(a));
    }
    e.push_back(static_cast<Exponent>(a));
  }
  return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent a) { return a <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(static_cast<int>(i));
  }
  return s;
}

std::uint64_t Monomial::support_mask() const {
  if (exps_.size() > 64) throw ArgumentError("support_mask needs n <= 64");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_n(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_n(a, b);
  std::vector<Exponent> e(a.n());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_n(a, b);
  std::vector<Exponent> e(a.n());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_n(a, b);
  std::vector<Exponent> e(a.n());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int s = int{a[i]} + int{b[i]};
    if (s > std::numeric_limits<Exponent>::max()) throw ArgumentError("exponent overflow");
    e[i] = static_cast<Exponent>(s);
  }
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw ArgumentError(b.to_string() + " does not divide " + a.to_string());
  std::vector<Exponent> e(a.n());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Exponent>(a[i] - b[i]);
  return Monomial(std::move(e));
}

int lcm_degree(const Monomial& a, const Monomial& b) {
  require_same_n(a, b);
  int d = 0;
  for (std::size_t i = 0; i < a.n(); ++i) d += std::max(a[i], b[i]);
  return d;
}

int graded_lex_compare(const Monomial& a, const Monomial& b) {
  require_same_n(a, b);
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const noexcept { return generator_degree() >= 0; }

int MonomialIdeal::generator_degree() const noexcept {
  if (gens_.empty()) return -1;
  const int d = gens_.front().degree();
  for (const auto& g : gens_) {
    if (g.degree() != d) return -1;
  }
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_generator(const Monomial& m) const {
  return std::binary_search(gens_.begin(), gens_.end(), m, GradedLexDescending{});
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal minimal_generators(std::size_t n, std::span<const Monomial> ms) {
  std::vector<Monomial> sorted(ms.begin(), ms.end());
  for (const auto& m : sorted) {
    if (m.n() != n) throw DimensionError("generator has wrong number of variables");
  }
  // Ascending degree: a divisor always precedes its multiples.
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
    return graded_lex_compare(a, b) < 0;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  MonomialIdeal out(n);
  for (auto& m : sorted) {
    const bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                       [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.gens_.push_back(std::move(m));
  }
  std::sort(out.gens_.begin(), out.gens_.end(), GradedLexDescending{});
  return out;
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n()) throw DimensionError("ideal product over different rings");
  std::unordered_set<Monomial, MonomialHash> products;
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) products.insert(u * v);
  }
  std::vector<Monomial> raw(products.begin(), products.end());
  return minimal_generators(a.n(), raw);
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw ArgumentError("ideal_power requires k >= 1");
  MonomialIdeal result = ideal;
  for (int j = 1; j < k; ++j) result = ideal_product(result, ideal);
  return result;
}

MonomialIdeal restrict_leq(const MonomialIdeal& ideal, std::span<const int> alpha) {
  if (alpha.size() != ideal.n()) throw DimensionError("bound vector has wrong length");
  for (int a : alpha) {
    if (a < 0) throw ArgumentError("bound vector entries must be non-negative");
  }
  std::vector<Monomial> kept;
  for (const auto& g : ideal.generators()) {
    bool within = true;
    for (std::size_t i = 0; i < alpha.size() && within; ++i) within = int{g[i]} <= alpha[i];
    if (within) kept.push_back(g);
  }
  return minimal_generators(ideal.n(), kept);
}

MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw ArgumentError("squarefree_power requires k >= 1");
  if (!ideal.is_squarefree()) throw ArgumentError("squarefree_power requires a squarefree ideal");
  // The squarefree members of G(I^k) are the minimal squarefree products of k
  // generators; building them one factor at a time keeps the sets small.
  MonomialIdeal current = ideal;
  for (int j = 1; j < k && !current.is_zero(); ++j) {
    std::unordered_set<Monomial, MonomialHash> products;
    for (const auto& u : current.generators()) {
      for (const auto& g : ideal.generators()) {
        if (gcd(u, g).is_one()) products.insert(u * g);
      }
    }
    std::vector<Monomial> raw(products.begin(), products.end());
    current = minimal_generators(ideal.n(), raw);
  }
  return current;
}

MonomialIdeal edge_ideal(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) {
    const int support[] = {e.a - 1, e.b - 1};
    gens.push_back(Monomial::squarefree(n, support));
  }
  for (int v : g.loops()) {
    std::vector<Exponent> exps(n, 0);
    exps[v - 1] = 2;
    gens.emplace_back(std::move(exps));
  }
  return minimal_generators(n, gens);
}

}  // namespace linrez
