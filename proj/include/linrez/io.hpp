#ifndef LINREZ_IO_HPP
#define LINREZ_IO_HPP

#include <istream>
#include <string>

#include "linrez/graph.hpp"
#include "linrez/monomial.hpp"

namespace linrez {

/// Graph text: a header line `n <int>`, then one edge per line `i j`
/// (1-based, `i i` is a loop). Blank lines and `#` comments are ignored.
/// Input whose first non-blank character is `{` is read as JSON:
/// {"n": 5, "edges": [[1, 2], ...], "loops": [3, ...]}.
/// Throws ParseError carrying the 1-based line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph parse_graph_file(const std::string& path);
/// Canonical text form: header, sorted edges, then loops as `i i`.
std::string format_graph(const Graph& g);

/// Ideal text: a header line `n=<int>`, then one monomial per line, either as
/// space-separated `var:exp` pairs (`1:2 3:1` or `x1:2 x3:1`) or compact
/// (`x1^2*x3`). Blank lines and `#` comments are ignored.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal_text(const std::string& text);
MonomialIdeal parse_ideal_file(const std::string& path);
/// Header plus one compact monomial per generator, canonical order.
std::string format_ideal(const MonomialIdeal& ideal);

/// Parses one compact monomial such as "x1^2*x3" in n variables.
Monomial parse_monomial(const std::string& text, std::size_t n);

}  // namespace linrez

#endif
