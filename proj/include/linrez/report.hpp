#ifndef LINREZ_REPORT_HPP
#define LINREZ_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "linrez/graph.hpp"
#include "linrez/linearity.hpp"
#include "linrez/monomial.hpp"
#include "linrez/resolution.hpp"

namespace linrez {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kGeneratorOrder = "graded-lex descending, x1 > ... > xn";

Json to_json(const Graph& g);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const Edge& e);
Json to_json(const Matching& m);
Json to_json(const MatchingReport& r);
/// An integer or "inf".
Json to_json(const IndexValue& v);

/// {"field", "route", "entries": [{"i", "j", "beta"}], "projdim", "index",
/// "max_i_computed", "homological_bound", "complete"}. `index` is the index of
/// an equigenerated ideal or "undefined" otherwise.
Json betti_json(const BettiTable& table, const MonomialIdeal& ideal);

/// Index with its certificate: a nonlinear Betti number, the Taylor/Hilbert
/// bound reached with none, or a partial search.
Json index_json(const IndexResult& r, const FieldSpec& field);
/// Combinatorial index of an edge ideal with its induced-cycle or chordal
/// certificate.
Json combinatorial_index_json(const Graph& g);

/// {"linearly_related", "witness", "cut", "linear_quotients_lex",
/// "fail_position", "order"}.
Json linearity_json(const LinearRelatedness& related, const LinearQuotients& quotients);

/// Report envelope. `timings` is kept apart from the body.
Json make_report(const std::string& command, Json input, Json config, Json results, const std::string& status,
                 Json timings);
/// The report without its "timings" section.
Json report_body(const Json& report);
/// Sorted keys, two-space indent, trailing newline; byte-deterministic.
std::string emit_report(const Json& report);

}  // namespace linrez

#endif
