#include "linrez/report.hpp"

namespace linrez {

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
  return Json{{"n", g.n()}, {"edges", edges}, {"loops", g.loops()}};
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return Json{{"n", ideal.n()}, {"generators", gens}, {"degree", ideal.generator_degree()}};
}

Json to_json(const Edge& e) { return Json::array({e.a, e.b}); }

Json to_json(const Matching& m) {
  Json out = Json::array();
  for (const auto& e : m.edges) out.push_back(to_json(e));
  return out;
}

Json to_json(const MatchingReport& r) {
  return Json{{"nu", r.nu},
              {"nu0", r.nu0},
              {"witness_max", to_json(r.witness_max)},
              {"witness_restricted", r.witness_restricted ? to_json(*r.witness_restricted) : Json(nullptr)},
              {"distinguished_edge", r.distinguished ? to_json(*r.distinguished) : Json(nullptr)}};
}

Json to_json(const IndexValue& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json betti_json(const BettiTable& table, const MonomialIdeal& ideal) {
  Json entries = Json::array();
  for (const auto& [key, beta] : table.graded) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
  Json index = "undefined";
  if (ideal.is_zero() || ideal.is_equigenerated()) {
    try {
      index = to_json(index_from_betti(table, ideal.generator_degree()));
    } catch (const std::exception&) {
      index = "unknown";
    }
  }
  return Json{{"field", table.field.name()},
              {"route", route_name(table.route)},
              {"entries", entries},
              {"projdim", table.complete() ? Json(projective_dimension(table)) : Json(nullptr)},
              {"index", index},
              {"max_i_computed", table.max_i_computed},
              {"homological_bound", table.homological_bound},
              {"complete", table.complete()}};
}

Json index_json(const IndexResult& r, const FieldSpec& field) {
  Json certificate;
  if (r.witness) {
    const auto& [i, u, beta] = *r.witness;
    certificate = {{"kind", "nonlinear-betti"}, {"i", i}, {"multidegree", u.to_string()}, {"beta", beta}};
  } else if (r.exact) {
    certificate = {{"kind", "taylor-bound"}, {"max_i_computed", r.max_i_computed}};
  } else {
    certificate = {{"kind", "partial"}, {"linear_through", r.max_i_computed}};
  }
  return Json{{"index", r.exact || r.witness ? to_json(r.index) : Json("unknown")},
              {"lower_bound", r.exact ? Json(nullptr) : Json(r.max_i_computed + 1)},
              {"exact", r.exact},
              {"method", "homological"},
              {"field", field.name()},
              {"route", route_name(r.route)},
              {"max_i_computed", r.max_i_computed},
              {"homological_bound", r.homological_bound},
              {"certificate", certificate}};
}

Json combinatorial_index_json(const Graph& g) {
  const auto cycle = shortest_induced_cycle_ge4(complement(g));
  Json certificate = cycle ? Json{{"kind", "induced-cycle-in-complement"}, {"length", *cycle}}
                           : Json{{"kind", "chordal-complement"}};
  return Json{{"index", to_json(edge_ideal_index_combinatorial(g))},
              {"method", "combinatorial"},
              {"field", "independent"},
              {"certificate", certificate}};
}

Json linearity_json(const LinearRelatedness& related, const LinearQuotients& quotients) {
  Json witness = nullptr;
  if (related.witness) witness = Json::array({related.witness->first.to_string(), related.witness->second.to_string()});
  Json cut = Json::array();
  for (const auto& m : related.cut) cut.push_back(m.to_string());
  return Json{{"linearly_related", related.linearly_related},
              {"witness", witness},
              {"cut", related.witness ? cut : Json(nullptr)},
              {"linear_quotients_lex", quotients.has_linear_quotients},
              {"fail_position", quotients.fail_position ? Json(*quotients.fail_position) : Json(nullptr)},
              {"order", kGeneratorOrder}};
}

Json make_report(const std::string& command, Json input, Json config, Json results, const std::string& status,
                 Json timings) {
  return Json{{"tool", "linrez"},
              {"version", kToolVersion},
              {"command", command},
              {"input", std::move(input)},
              {"config", std::move(config)},
              {"results", std::move(results)},
              {"status", status},
              {"timings", std::move(timings)}};
}

Json report_body(const Json& report) {
  Json body = report;
  body.erase("timings");
  return body;
}

std::string emit_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace linrez
