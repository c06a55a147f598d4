#ifndef LINREZ_CHECKS_HPP
#define LINREZ_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "linrez/field.hpp"
#include "linrez/report.hpp"

namespace linrez {

struct CheckOptions {
  /// Largest vertex count for exhaustive checks; each check has its own default.
  std::optional<int> max_n;
  /// Explicit parameter list (cycle lengths, bivariate exponents, ...).
  std::vector<int> ns;
  unsigned threads = 1;
  FieldSpec field;
  /// Ideal file for the optional external-ideal check.
  std::optional<std::string> ideal_path;
};

struct CheckInfo {
  std::string name;
  std::string claim;
  /// Optional checks are skipped unless their input is supplied.
  bool optional = false;
};

struct CheckResult {
  std::string name;
  /// "pass", "fail" or "skipped".
  std::string status;
  std::string claim;
  /// Counts, certificates and the first failures.
  Json details;
  double seconds = 0;

  bool failed() const { return status == "fail"; }
};

const std::vector<CheckInfo>& check_catalog();
/// Throws ArgumentError for an unknown name.
CheckResult run_check(const std::string& name, const CheckOptions& options);

/// Report for a list of check results (timings in their own section).
Json checks_report(const std::vector<CheckResult>& results, const CheckOptions& options);

struct ScanOptions {
  FieldSpec field;
  int max_power = 3;
  /// Cap on the homological degree per index computation; -1 = Taylor bound.
  int max_i = -1;
  std::size_t max_lattice_size = LcmLattice::kDefaultMaxSize;
  BettiRoute route = BettiRoute::automatic;
  bool squarefree = true;
  /// Largest squarefree power; -1 means nu(G).
  int max_squarefree_power = -1;
  unsigned threads = 1;
};

/// Index of I(G)^k for k <= max_power and of I(G)^[k] for k <= nu(G), each with
/// its method and certificate, plus nu and nu0. Sets *incomplete when some entry
/// hit a resource limit or a degree cap.
Json index_scan(const Graph& g, const ScanOptions& options, bool* incomplete);

struct ConjectureScanOptions {
  FieldSpec field;
  int max_n = 6;
  int max_power = 3;
  unsigned threads = 1;
};

/// Evaluates, over non-isomorphic simple graphs without isolated vertices:
/// strict growth of index(I^k) in k when index(I) > 1, and
/// index(I^[k]) > 1 exactly for k >= nu0. Candidate counterexamples are listed
/// as data; the scan never asserts either statement.
Json conjecture_scan(const ConjectureScanOptions& options);

}  // namespace linrez

#endif
