#include "linrez/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "linrez/errors.hpp"

namespace linrez {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<long> to_int(std::string_view s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

long require_int(std::string_view s, const char* what, int line) {
  const auto v = to_int(s);
  if (!v) throw ParseError(std::string("expected an integer ") + what + ", got '" + std::string(s) + "'", line);
  return *v;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return in;
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset to line number.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
  try {
    const int n = doc.at("n").get<int>();
    if (n < 0 || n > Graph::kMaxVertices) throw ParseError("vertex count out of range", 0);
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i, j]", 0);
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    }
    if (doc.contains("loops")) {
      for (const auto& v : doc.at("loops")) edges.emplace_back(v.get<int>(), v.get<int>());
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what(), 0);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
}

// Splits "x1^2*x3" into factors; the leading 'x' is optional.
void add_compact(const std::string& token, std::vector<int>& exps, int line) {
  std::size_t start = 0;
  while (start <= token.size()) {
    const std::size_t stop = std::min(token.find('*', start), token.size());
    std::string factor = token.substr(start, stop - start);
    if (factor.empty()) throw ParseError("empty factor in '" + token + "'", line);
    if (factor[0] == 'x' || factor[0] == 'X') factor.erase(0, 1);
    long exp = 1;
    const auto caret = factor.find('^');
    if (caret != std::string::npos) {
      exp = require_int(std::string_view(factor).substr(caret + 1), "exponent", line);
      factor.resize(caret);
    }
    const long var = require_int(factor, "variable index", line);
    if (var < 1 || var > static_cast<long>(exps.size()))
      throw ParseError("variable x" + std::to_string(var) + " outside 1.." + std::to_string(exps.size()), line);
    if (exp < 0 || exp > 60000) throw ParseError("exponent out of range", line);
    exps[var - 1] += static_cast<int>(exp);
    start = stop + 1;
  }
}

Monomial parse_monomial_line(const std::string& text, std::size_t n, int line) {
  std::vector<int> exps(n, 0);
  std::istringstream tokens(text);
  std::string token;
  while (tokens >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      add_compact(token, exps, line);
      continue;
    }
    std::string var = token.substr(0, colon);
    if (!var.empty() && (var[0] == 'x' || var[0] == 'X')) var.erase(0, 1);
    const long v = require_int(var, "variable index", line);
    const long e = require_int(std::string_view(token).substr(colon + 1), "exponent", line);
    if (v < 1 || v > static_cast<long>(n))
      throw ParseError("variable " + std::to_string(v) + " outside 1.." + std::to_string(n), line);
    if (e < 0 || e > 60000) throw ParseError("exponent out of range", line);
    exps[v - 1] += static_cast<int>(e);
  }
  for (int e : exps)
    if (e > 60000) throw ParseError("exponent out of range", line);
  return Monomial::from_ints(exps);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str());
}

Graph parse_graph_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(text);

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<int> n;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = strip(raw);
    if (s.empty()) continue;
    std::istringstream fields(s);
    std::string a, b, extra;
    fields >> a >> b;
    if (fields >> extra) throw ParseError("expected two fields, got more", line);
    if (!n) {
      if (a != "n" || b.empty()) throw ParseError("expected header 'n <int>'", line);
      const long v = require_int(b, "vertex count", line);
      if (v < 0 || v > Graph::kMaxVertices) throw ParseError("vertex count out of range", line);
      n = static_cast<int>(v);
      continue;
    }
    if (b.empty()) throw ParseError("expected an edge 'i j'", line);
    const long i = require_int(a, "vertex", line), j = require_int(b, "vertex", line);
    if (i < 1 || j < 1 || i > *n || j > *n)
      throw ParseError("vertex outside 1.." + std::to_string(*n), line);
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (!n) throw ParseError("missing header 'n <int>'", line);
  return Graph(*n, edges);
}

Graph parse_graph_file(const std::string& path) {
  auto in = open_file(path);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.n()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  for (int v : g.loops()) out += std::to_string(v) + " " + std::to_string(v) + "\n";
  return out;
}

MonomialIdeal parse_ideal(std::istream& in) {
  std::string raw;
  int line = 0;
  std::optional<std::size_t> n;
  std::vector<Monomial> gens;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = strip(raw);
    if (s.empty()) continue;
    if (!n) {
      const auto eq = s.find('=');
      if (eq == std::string::npos || strip(s.substr(0, eq)) != "n") throw ParseError("expected header 'n=<int>'", line);
      const long v = require_int(strip(s.substr(eq + 1)), "variable count", line);
      if (v < 1 || v > 64) throw ParseError("variable count out of range 1..64", line);
      n = static_cast<std::size_t>(v);
      continue;
    }
    const Monomial m = parse_monomial_line(s, *n, line);
    if (m.is_one()) throw ParseError("the unit monomial is not supported", line);
    gens.push_back(m);
  }
  if (!n) throw ParseError("missing header 'n=<int>'", line);
  return minimal_generators(*n, gens);
}

MonomialIdeal parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

MonomialIdeal parse_ideal_file(const std::string& path) {
  auto in = open_file(path);
  return parse_ideal(in);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "n=" + std::to_string(ideal.n()) + "\n";
  for (const auto& g : ideal.generators()) out += g.to_string() + "\n";
  return out;
}

Monomial parse_monomial(const std::string& text, std::size_t n) { return parse_monomial_line(text, n, 0); }

}  // namespace linrez
