#include "linrez/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "linrez/errors.hpp"
#include "linrez/io.hpp"
#include "linrez/linearity.hpp"
#include "linrez/parallel.hpp"
#include "linrez/simplicial.hpp"

namespace linrez {

namespace {

constexpr std::size_t kMaxListedFailures = 10;

// Outcome of one unit of work inside a check.
struct Part {
  long cases = 0;
  std::vector<Json> failures;
  Json data;

  void expect(bool ok, const std::function<Json()>& describe) {
    ++cases;
    if (!ok) failures.push_back(describe());
  }
};

struct Summary {
  long cases = 0;
  long failures = 0;
  Json listed = Json::array();
  Json data = Json::array();

  void add(Part p) {
    cases += p.cases;
    failures += static_cast<long>(p.failures.size());
    for (auto& f : p.failures)
      if (listed.size() < kMaxListedFailures) listed.push_back(std::move(f));
    if (!p.data.is_null()) data.push_back(std::move(p.data));
  }

  Json details() const {
    Json d{{"cases", cases}, {"failures", failures}, {"failed_cases", listed}};
    if (!data.empty()) d["data"] = data;
    return d;
  }
};

template <class F>
Summary run_parts(std::size_t count, unsigned threads, F&& f) {
  Summary s;
  for (auto& p : parallel_map<Part>(count, threads, std::forward<F>(f))) s.add(std::move(p));
  return s;
}

std::vector<Graph> graphs_between(int lo, int hi, bool drop_isolated) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n)
    for (auto& g : nonisomorphic_graphs(n))
      if (!g.edges().empty() && !(drop_isolated && has_isolated_vertices(g))) out.push_back(std::move(g));
  return out;
}

// Every labelled simple graph on n vertices.
Graph labelled_graph(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(a, b);
  return Graph(n, edges);
}

std::vector<int> params_or(const CheckOptions& o, std::vector<int> fallback) { return o.ns.empty() ? fallback : o.ns; }

Monomial all_variables(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = i;
  return Monomial::squarefree(static_cast<std::size_t>(n), s);
}

IndexOptions index_options(const FieldSpec& field, int max_i = -1) {
  IndexOptions o;
  o.field = field;
  o.max_i = max_i;
  return o;
}

Json graph_tag(const Graph& g) { return Json{{"graph", format_graph(g)}}; }

// (x^n, x^{n-1}y, xy^{n-1}, y^n)
MonomialIdeal bivariate_ideal(int n) {
  const std::vector<Monomial> gens{Monomial::from_ints(std::vector{n, 0}), Monomial::from_ints(std::vector{n - 1, 1}),
                                   Monomial::from_ints(std::vector{1, n - 1}), Monomial::from_ints(std::vector{0, n})};
  return minimal_generators(2, gens);
}

// ---------------------------------------------------------------------------

Json check_max_finite_index(const CheckOptions& o, bool* ok) {
  const auto ns = params_or(o, {5, 6, 7, 8, 9});
  auto s = run_parts(ns.size(), o.threads, [&](std::size_t idx) {
    const int n = ns[idx];
    const int t = n - 3;
    const Graph g = complement(cycle_graph(n));
    const auto ideal = edge_ideal(g);
    const auto table = betti_table_hochster(ideal, o.field);
    const auto hom = index_from_betti(table, 2);
    const auto comb = edge_ideal_index_combinatorial(g);
    const int pd = projective_dimension(table);
    const long below = table.get(t, t + 2), top = table.get(t, t + 3);
    Part p;
    p.data = {{"n", n},
              {"index_homological", to_json(hom)},
              {"index_combinatorial", to_json(comb)},
              {"projdim", pd},
              {"beta_t_t+2", below},
              {"beta_t_t+3", top}};
    p.expect(hom == IndexValue::finite(t) && comb == IndexValue::finite(t) && pd == t && below == 0 && top == 1,
             [&] { return p.data; });
    return p;
  });
  *ok = s.failures == 0;
  return s.details();
}

Json check_thm_main(const CheckOptions& o, bool* ok) {
  const auto graphs = graphs_between(2, o.max_n.value_or(6), true);
  auto s = run_parts(graphs.size(), 1, [&](std::size_t idx) {
    const Graph& g = graphs[idx];
    Part p;
    const bool gap_free = is_gap_free(g).gap_free;
    const auto base = edge_ideal(g);
    for (int k = 1; k <= 2; ++k) {
      const auto ideal = k == 1 ? base : ideal_power(base, k);
      const bool related = is_linearly_related(ideal, o.threads).linearly_related;
      BettiOptions b;
      b.max_i = 1;
      const auto table = betti_table(ideal, o.field, BettiRoute::automatic, b);
      const bool homological = linear_through(table, ideal.generator_degree(), 1);
      p.expect(gap_free == related && related == homological, [&] {
        Json j = graph_tag(g);
        j.update({{"k", k}, {"gap_free", gap_free}, {"linearly_related", related}, {"index_gt_1", homological}});
        return j;
      });
    }
    return p;
  });
  *ok = s.failures == 0;
  Json d = s.details();
  d["graphs"] = graphs.size();
  return d;
}

Json check_oracle_agreement(const CheckOptions& o, bool* ok) {
  const auto graphs = graphs_between(1, o.max_n.value_or(6), false);
  std::vector<MonomialIdeal> ideals;
  for (const auto& g : graphs) ideals.push_back(edge_ideal(g));
  ideals.push_back(squarefree_power(edge_ideal(cycle_graph(9)), 3));
  auto s = run_parts(ideals.size(), o.threads, [&](std::size_t idx) {
    const auto& ideal = ideals[idx];
    const auto a = betti_table_gpw(ideal, o.field);
    const auto b = betti_table_hochster(ideal, o.field);
    Part p;
    p.expect(a.multigraded == b.multigraded && a.graded == b.graded, [&] {
      return Json{{"ideal", ideal.to_string()},
                  {"gpw", betti_json(a, ideal)["entries"]},
                  {"hochster", betti_json(b, ideal)["entries"]}};
    });
    return p;
  });
  *ok = s.failures == 0;
  Json d = s.details();
  d["field"] = o.field.name();
  return d;
}

Json check_c9_profile(const CheckOptions& o, bool* ok) {
  const auto c9 = edge_ideal(cycle_graph(9));
  struct Item {
    std::string label;
    bool squarefree;
    int k;
    IndexValue expected;
  };
  const std::vector<Item> items{
      {"I^[1]", true, 1, IndexValue::finite(1)},   {"I^[2]", true, 2, IndexValue::finite(1)},
      {"I^[3]", true, 3, IndexValue::finite(2)},   {"I^[4]", true, 4, IndexValue::infinity()},
      {"I^1", false, 1, IndexValue::finite(1)},    {"I^2", false, 2, IndexValue::finite(1)},
      {"I^3", false, 3, IndexValue::finite(1)},
  };
  auto s = run_parts(items.size(), o.threads, [&](std::size_t idx) {
    const auto& it = items[idx];
    const auto ideal = it.squarefree ? squarefree_power(c9, it.k) : ideal_power(c9, it.k);
    const auto r = compute_index(ideal, index_options(o.field));
    Part p;
    p.data = index_json(r, o.field);
    p.data["ideal"] = it.label;
    p.data["generators"] = ideal.size();
    p.expect(r.exact && r.index == it.expected, [&] {
      Json j = p.data;
      j["expected"] = to_json(it.expected);
      return j;
    });
    return p;
  });
  *ok = s.failures == 0;
  return s.details();
}

Json check_sqfree_top_linquo(const CheckOptions& o, bool* ok) {
  const int max_n = o.max_n.value_or(7);
  // Every labelled graph: the order depends on the labelling.
  std::vector<std::pair<int, std::uint32_t>> chunks;
  const std::uint32_t chunk = 4096;
  for (int n = 2; n <= max_n; ++n)
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << (n * (n - 1) / 2)); m += chunk) chunks.emplace_back(n, m);
  auto s = run_parts(chunks.size(), o.threads, [&](std::size_t c) {
    Part p;
    const auto [n, lo] = chunks[c];
    const std::uint32_t hi = std::min<std::uint32_t>(lo + chunk, std::uint32_t{1} << (n * (n - 1) / 2));
    for (std::uint32_t m = std::max<std::uint32_t>(lo, 1); m < hi; ++m) {
      const Graph g = labelled_graph(n, m);
      const int nu = matching_number(g);
      const auto top = squarefree_power(edge_ideal(g), nu);
      const auto lq = has_linear_quotients_lex(top);
      p.expect(lq.has_linear_quotients, [&] {
        Json j = graph_tag(g);
        j.update({{"nu", nu}, {"fail_position", lq.fail_position ? Json(*lq.fail_position) : Json(nullptr)}});
        return j;
      });
    }
    return p;
  });
  *ok = s.failures == 0;
  Json d = s.details();
  d["order"] = kGeneratorOrder;
  return d;
}

Json check_lemma_restricted(const CheckOptions& o, bool* ok) {
  const auto graphs = graphs_between(2, o.max_n.value_or(7), false);
  auto s = run_parts(graphs.size(), o.threads, [&](std::size_t idx) {
    const Graph& g = graphs[idx];
    Part p;
    const auto rm = restricted_matching_number(g);
    if (rm.nu0 < 2) return p;
    // The distinguished edge first, then the rest of the witness.
    std::vector<Monomial> us;
    const auto n = static_cast<std::size_t>(g.n());
    auto edge_mono = [&](const Edge& e) {
      const std::vector<int> s{e.a - 1, e.b - 1};
      return Monomial::squarefree(n, s);
    };
    us.push_back(edge_mono(*rm.distinguished));
    for (const auto& e : rm.witness->edges)
      if (e != *rm.distinguished) us.push_back(edge_mono(e));
    const auto base = edge_ideal(g);
    for (int k = 1; k < rm.nu0; ++k) {
      const auto ideal = squarefree_power(base, k);
      const auto r = compute_index(ideal, index_options(o.field, 1));
      Monomial u(n), v(n);
      for (int j = 0; j < k; ++j) u = u * us[j];
      for (int j = 1; j <= k; ++j) v = v * us[j];
      const auto rg = restricted_generator_graph(ideal, u, v);
      const bool split = !rg.connected(*rg.find(u), *rg.find(v));
      p.expect(r.index == IndexValue::finite(1) && split, [&] {
        Json j = graph_tag(g);
        j.update({{"k", k}, {"nu0", rm.nu0}, {"index", to_json(r.index)}, {"pair_disconnected", split}});
        return j;
      });
    }
    return p;
  });
  *ok = s.failures == 0;
  Json d = s.details();
  d["graphs"] = graphs.size();
  return d;
}

Json check_cycle_theorem(const CheckOptions& o, bool* ok) {
  const auto ns = params_or(o, {4, 5, 6, 7, 8, 9, 10});
  auto s = run_parts(ns.size(), o.threads, [&](std::size_t idx) {
    const int n = ns[idx];
    const Graph c = cycle_graph(n);
    const int nu = matching_number(c);
    const int nu0 = restricted_matching_number(c).nu0;
    Part p;
    p.data = {{"n", n}, {"nu", nu}, {"nu0", nu0}};
    p.expect(nu == n / 2 && nu0 == nu - 1, [&] { return p.data; });
    const auto ideal = squarefree_power(edge_ideal(c), nu0);
    if (n % 2 == 0 && n >= 6) {
      const auto lq = has_linear_quotients_lex(ideal);
      p.data["linear_quotients_lex"] = lq.has_linear_quotients;
      p.expect(lq.has_linear_quotients, [&] { return p.data; });
    }
    if (n % 2 == 1 && n >= 5) {
      const auto r = compute_index(ideal, index_options(o.field));
      p.data["index_at_nu0"] = index_json(r, o.field);
      p.expect(r.exact && r.index == IndexValue::finite(2), [&] { return p.data; });
      BettiOptions b;
      b.max_i = 2;
      const auto t = betti_table(squarefree_power(edge_ideal(c), (n - 3) / 2), o.field, BettiRoute::automatic, b);
      const long beta = t.get(2, n);
      p.data["beta_2_n"] = beta;
      p.expect(beta >= 1, [&] { return p.data; });
    }
    return p;
  });
  *ok = s.failures == 0;
  return s.details();
}

Json check_odd_cycle_beta(const CheckOptions& o, bool* ok) {
  const auto ns = params_or(o, {5, 7, 9});
  auto s = run_parts(ns.size(), o.threads, [&](std::size_t idx) {
    const int n = ns[idx];
    Part p;
    if (n < 5 || n % 2 == 0) {
      p.expect(false, [&] { return Json{{"n", n}, {"error", "n must be odd and at least 5"}}; });
      return p;
    }
    const auto ideal = squarefree_power(edge_ideal(cycle_graph(n)), (n - 3) / 2);
    BettiOptions b;
    b.max_i = 2;
    const long graded = betti_table_hochster(ideal, o.field, b).get(2, n);
    const long multi = multigraded_betti_gpw(ideal, 2, all_variables(n), o.field);
    p.data = {{"n", n}, {"k", (n - 3) / 2}, {"beta_2_n", graded}, {"beta_2_x[n]_gpw", multi}};
    p.expect(graded >= 1 && multi == graded, [&] { return p.data; });
    return p;
  });
  *ok = s.failures == 0;
  return s.details();
}

Json check_bivariate(const CheckOptions& o, bool* ok) {
  const auto ns = params_or(o, {4, 5, 6});
  std::vector<std::pair<int, int>> items;
  for (int n : ns)
    for (int k = 1; k <= n; ++k) items.emplace_back(n, k);
  auto s = run_parts(items.size(), o.threads, [&](std::size_t idx) {
    const auto [n, k] = items[idx];
    const auto r = compute_index(ideal_power(bivariate_ideal(n), k), index_options(o.field));
    const IndexValue expected = k <= n - 3 ? IndexValue::finite(1) : IndexValue::infinity();
    Part p;
    p.data = index_json(r, o.field);
    p.data.update({{"n", n}, {"k", k}});
    p.expect(r.exact && r.index == expected && (r.witness || r.max_i_computed == r.homological_bound), [&] {
      Json j = p.data;
      j["expected"] = to_json(expected);
      return j;
    });
    return p;
  });
  *ok = s.failures == 0;
  return s.details();
}

Json check_loop_whisker(const CheckOptions& o, bool* ok) {
  struct Item {
    std::string name;
    Graph g;
    bool complete;
  };
  const std::vector<Item> bases{{"K3", complete_graph(3), true},
                                {"K4", complete_graph(4), true},
                                {"P3", path_graph(3), false},
                                {"C4", cycle_graph(4), false}};
  std::vector<std::tuple<std::size_t, std::string, int>> items;
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (const char* kind : {"loop", "whisker"})
      for (int k = 1; k <= 2; ++k) items.emplace_back(b, kind, k);
  auto s = run_parts(items.size(), o.threads, [&](std::size_t idx) {
    const auto& [b, kind, k] = items[idx];
    const auto& base = bases[b];
    const Graph h = kind == "loop" ? loop_graph(base.g) : whisker_graph(base.g);
    const auto ideal = ideal_power(edge_ideal(h), k);
    const auto r = compute_index(ideal, index_options(o.field));
    const IndexValue expected = base.complete ? IndexValue::infinity() : IndexValue::finite(1);
    Part p;
    p.data = index_json(r, o.field);
    p.data.update({{"graph", kind + "(" + base.name + ")"}, {"k", k}, {"generators", ideal.size()}});
    p.expect(r.exact && r.index == expected, [&] {
      Json j = p.data;
      j["expected"] = to_json(expected);
      return j;
    });
    return p;
  });
  *ok = s.failures == 0;
  return s.details();
}

Json check_trees(const CheckOptions& o, bool* ok) {
  std::vector<Graph> trees;
  for (int n = 2; n <= o.max_n.value_or(7); ++n)
    for (auto& g : nonisomorphic_graphs(n))
      if (is_tree(g)) trees.push_back(std::move(g));
  auto s = run_parts(trees.size(), o.threads, [&](std::size_t idx) {
    const Graph& t = trees[idx];
    Part p;
    const auto base = edge_ideal(t);
    for (int k = 1; k <= 2; ++k) {
      const auto r = compute_index(k == 1 ? base : ideal_power(base, k), index_options(o.field));
      p.expect(r.exact && (r.index.is_infinite() || r.index == IndexValue::finite(1)), [&] {
        Json j = graph_tag(t);
        j.update({{"k", k}, {"index", to_json(r.index)}, {"exact", r.exact}});
        return j;
      });
    }
    const int nu = matching_number(t);
    const int nu0 = restricted_matching_number(t).nu0;
    p.expect(nu0 >= nu - 1, [&] {
      Json j = graph_tag(t);
      j.update({{"nu", nu}, {"nu0", nu0}});
      return j;
    });
    for (int k = 1; k <= nu; ++k) {
      for (const auto& m : enumerate_matchings(t, k)) {
        p.expect(is_forest(matching_graph(t, m)), [&] {
          Json j = graph_tag(t);
          j["matching"] = to_json(m);
          return j;
        });
      }
    }
    return p;
  });
  *ok = s.failures == 0;
  Json d = s.details();
  d["trees"] = trees.size();
  return d;
}

Json check_sr_facets(const CheckOptions& o, bool* ok) {
  const auto ns = params_or(o, {5, 7, 9});
  auto s = run_parts(ns.size(), o.threads, [&](std::size_t idx) {
    const int n = ns[idx];
    const auto delta = stanley_reisner_complex(squarefree_power(edge_ideal(cycle_graph(n)), (n - 3) / 2));
    std::vector<Face> expected;
    for (int r = 1; r <= n; ++r)
      for (int s2 = r + 1; s2 <= n; ++s2)
        for (int t = s2 + 1; t <= n; ++t) {
          if ((s2 - r) % 2 != 0 && (t - s2) % 2 != 0) continue;
          Face f;
          for (int v = 1; v <= n; ++v)
            if (v != r && v != s2 && v != t) f.push_back(v);
          expected.push_back(f);
        }
    std::sort(expected.begin(), expected.end());
    Part p;
    p.data = {{"n", n}, {"facets", delta.facets().size()}, {"expected_facets", expected.size()}};
    p.expect(delta.facets() == expected, [&] {
      Json j = p.data;
      j["dump"] = delta.dump();
      return j;
    });
    return p;
  });
  *ok = s.failures == 0;
  return s.details();
}

Json check_properties(const CheckOptions& o, bool* ok) {
  Json d;
  bool all = true;

  // Euler relation on every homology computation made by a mixed workload,
  // and against an independent face count on order complexes.
  reset_homology_audit();
  long euler_cases = 0, euler_failures = 0;
  for (const auto& g : graphs_between(1, 5, false)) {
    const auto ideal = edge_ideal(g);
    betti_table_hochster(ideal, o.field);
    const auto lattice = LcmLattice::build(ideal);
    for (std::size_t u = 1; u < lattice.size(); ++u) {
      const auto c = order_complex_of_interval(lattice, lattice.elements()[u]);
      const auto h = reduced_homology_dims(c, o.field);
      ++euler_cases;
      if (h.euler_characteristic() != reduced_euler_from_faces(face_counts(c))) ++euler_failures;
    }
  }
  betti_table_koszul(ideal_power(edge_ideal(cycle_graph(5)), 2), o.field);
  const auto audit = homology_audit();
  d["euler"] = {{"homology_computations", audit.computations},
                {"audit_violations", audit.violations},
                {"face_count_cases", euler_cases},
                {"face_count_failures", euler_failures}};
  all = all && audit.computations > 0 && audit.violations == 0 && euler_failures == 0;

  // Complement is an involution.
  long inv_cases = 0, inv_failures = 0;
  for (int n = 1; n <= 6; ++n)
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << (n * (n - 1) / 2)); ++m) {
      const Graph g = labelled_graph(n, m);
      ++inv_cases;
      if (complement(complement(g)) != g) ++inv_failures;
    }
  d["complement_involution"] = {{"cases", inv_cases}, {"failures", inv_failures}};
  all = all && inv_failures == 0;

  // GPW beta_0 mass.
  std::vector<MonomialIdeal> ideals;
  for (const auto& g : graphs_between(1, 5, false)) ideals.push_back(edge_ideal(g));
  for (int n = 4; n <= 6; ++n) ideals.push_back(ideal_power(bivariate_ideal(n), 2));
  ideals.push_back(ideal_power(edge_ideal(path_graph(4)), 2));
  ideals.push_back(edge_ideal(loop_graph(complete_graph(3))));
  long mass_failures = 0;
  for (const auto& ideal : ideals) {
    const auto t = betti_table_gpw(ideal, o.field);
    long mass = 0;
    for (const auto& [key, beta] : t.multigraded) {
      if (key.first != 0) continue;
      mass += beta;
      if (beta != 1 || !ideal.is_generator(key.second)) ++mass_failures;
    }
    if (mass != static_cast<long>(ideal.size())) ++mass_failures;
  }
  d["beta0_mass"] = {{"cases", ideals.size()}, {"failures", mass_failures}};
  all = all && mass_failures == 0;

  // Report bodies are byte-identical across worker counts.
  std::vector<std::string> bodies;
  for (unsigned threads : {1u, 4u, 8u}) {
    ScanOptions so;
    so.field = o.field;
    so.max_power = 2;
    so.threads = threads;
    bool incomplete = false;
    Json scan = index_scan(whisker_graph(cycle_graph(5)), so, &incomplete);
    CheckOptions co = o;
    co.threads = threads;
    co.max_n = 5;
    co.ns.clear();
    const auto thm = run_check("thm-main", co);
    const auto rep = checks_report({thm}, co);
    const Json doc = make_report("scan", Json{{"graph", "W(C5)"}}, Json::object(), scan, "ok",
                                 Json{{"threads", threads}});
    bodies.push_back(emit_report(report_body(doc)) + emit_report(report_body(rep)));
  }
  const bool same = bodies[0] == bodies[1] && bodies[1] == bodies[2];
  d["determinism"] = {{"worker_counts", {1, 4, 8}}, {"identical", same}, {"bytes", bodies[0].size()}};
  all = all && same;

  *ok = all;
  return d;
}

Json check_external_ideal(const CheckOptions& o, bool* ok, bool* skipped) {
  if (!o.ideal_path) {
    *skipped = true;
    *ok = true;
    return Json{{"reason", "no --ideal file supplied"}};
  }
  const auto ideal = parse_ideal_file(*o.ideal_path);
  const auto r1 = compute_index(ideal, index_options(o.field));
  const auto r2 = compute_index(ideal_power(ideal, 2), index_options(o.field));
  *ok = r1.exact && r2.exact && r1.index == IndexValue::finite(2) && r2.index == IndexValue::finite(7);
  return Json{{"ideal", to_json(ideal)}, {"index_I", index_json(r1, o.field)}, {"index_I2", index_json(r2, o.field)},
              {"expected", {2, 7}}};
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog{
      {"max-finite-index", "complement of C_n, n = 5..9: index = projdim = n-3 by homology and by induced cycles; "
                           "beta_{n-3,n-1} = 0, beta_{n-3,n} = 1"},
      {"thm-main", "graphs without isolated vertices, n <= 6, k = 1, 2: gap-free <=> I^k linearly related <=> "
                   "index(I^k) > 1 from Betti numbers"},
      {"oracle-agreement", "GPW and Hochster Betti tables coincide on all edge ideals with n <= 6 and on I(C9)^[3]"},
      {"c9-profile", "index(I(C9)^[k]) = 1, 1, 2, inf for k = 1..4 and index(I(C9)^k) = 1 for k = 1..3"},
      {"sqfree-top-linquo", "I(G)^[nu(G)] has linear quotients in graded-lex order, graphs with n <= 7"},
      {"lemma-restricted", "index(I(G)^[k]) = 1 for 0 < k < nu0(G), graphs with n <= 7"},
      {"cycle-theorem", "C_n, 4 <= n <= 10: nu = floor(n/2), nu0 = nu - 1; I^[nu0] has linear quotients (n = 6, 8) "
                        "or index 2 with beta_{2,n}(I^[(n-3)/2]) >= 1 (n = 5, 7, 9)"},
      {"odd-cycle-beta", "beta_{2,n}(I(C_n)^[(n-3)/2]) != 0 for odd n"},
      {"bivariate", "(x^n, x^{n-1}y, xy^{n-1}, y^n), n = 4, 5, 6: index(I^k) = 1 for k <= n-3 and inf above, "
                    "certified at the Taylor bound"},
      {"loop-whisker", "L(G) and W(G) for G in {K3, K4, P3, C4}: I^k linear for k = 1, 2 iff G complete, index 1 "
                       "otherwise"},
      {"trees", "trees with n <= 7: index(I^k) in {1, inf} for k <= 2, nu0 >= nu - 1, matching graphs acyclic"},
      {"sr-facets", "facets of the Stanley-Reisner complex of I(C_n)^[(n-3)/2] are [n] minus {r < s < t} with s-r "
                    "or t-s even, n = 5, 7, 9"},
      {"properties", "Euler relation on every homology computation, complement involution, GPW beta_0 mass, "
                     "report determinism under 1, 4 and 8 workers"},
      {"external-ideal", "external ideal file: index(I) = 2 and index(I^2) = 7", true},
  };
  return catalog;
}

CheckResult run_check(const std::string& name, const CheckOptions& options) {
  const auto& catalog = check_catalog();
  const auto info = std::find_if(catalog.begin(), catalog.end(), [&](const CheckInfo& c) { return c.name == name; });
  if (info == catalog.end()) throw ArgumentError("unknown check '" + name + "' (see verify --list)");

  const auto start = std::chrono::steady_clock::now();
  bool ok = false, skipped = false;
  Json details;
  if (name == "max-finite-index") details = check_max_finite_index(options, &ok);
  else if (name == "thm-main") details = check_thm_main(options, &ok);
  else if (name == "oracle-agreement") details = check_oracle_agreement(options, &ok);
  else if (name == "c9-profile") details = check_c9_profile(options, &ok);
  else if (name == "sqfree-top-linquo") details = check_sqfree_top_linquo(options, &ok);
  else if (name == "lemma-restricted") details = check_lemma_restricted(options, &ok);
  else if (name == "cycle-theorem") details = check_cycle_theorem(options, &ok);
  else if (name == "odd-cycle-beta") details = check_odd_cycle_beta(options, &ok);
  else if (name == "bivariate") details = check_bivariate(options, &ok);
  else if (name == "loop-whisker") details = check_loop_whisker(options, &ok);
  else if (name == "trees") details = check_trees(options, &ok);
  else if (name == "sr-facets") details = check_sr_facets(options, &ok);
  else if (name == "properties") details = check_properties(options, &ok);
  else details = check_external_ideal(options, &ok, &skipped);

  CheckResult r;
  r.name = name;
  r.claim = info->claim;
  r.status = skipped ? "skipped" : ok ? "pass" : "fail";
  r.details = std::move(details);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json checks_report(const std::vector<CheckResult>& results, const CheckOptions& options) {
  Json checks = Json::array();
  Json timings = Json::object();
  bool failed = false;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"status", r.status}, {"claim", r.claim}, {"details", r.details}});
    timings[r.name] = r.seconds;
    failed = failed || r.failed();
  }
  Json config{{"field", options.field.name()},
              {"max_n", options.max_n ? Json(*options.max_n) : Json(nullptr)},
              {"n", options.ns}};
  Json input = options.ideal_path ? Json{{"ideal_file", *options.ideal_path}} : Json::object();
  timings["threads"] = options.threads;
  return make_report("verify", input, config, Json{{"checks", checks}}, failed ? "failed" : "ok", timings);
}

// ---------------------------------------------------------------------------
// Scans

Json index_scan(const Graph& g, const ScanOptions& options, bool* incomplete) {
  *incomplete = false;
  const auto base = edge_ideal(g);
  const int nu = g.is_simple() ? matching_number(g) : 0;
  struct Task {
    bool squarefree;
    int k;
  };
  std::vector<Task> tasks;
  for (int k = 1; k <= options.max_power; ++k) tasks.push_back({false, k});
  if (options.squarefree && g.is_simple())
    for (int k = 1; k <= nu && (options.max_squarefree_power < 0 || k <= options.max_squarefree_power); ++k)
      tasks.push_back({true, k});

  IndexOptions io;
  io.field = options.field;
  io.max_i = options.max_i;
  io.route = options.route;
  io.max_lattice_size = options.max_lattice_size;
  auto entries = parallel_map<Json>(tasks.size(), options.threads, [&](std::size_t idx) {
    const auto& t = tasks[idx];
    Json e{{"k", t.k}};
    try {
      const auto ideal = t.squarefree ? squarefree_power(base, t.k) : ideal_power(base, t.k);
      e["generators"] = ideal.size();
      const auto r = compute_index(ideal, io);
      e["result"] = index_json(r, options.field);
      e["status"] = r.exact || r.witness ? "ok" : "partial";
      if (t.squarefree) {
        e["linear_quotients_lex"] = has_linear_quotients_lex(ideal).has_linear_quotients;
        e["order"] = kGeneratorOrder;
      }
    } catch (const ResourceLimitError& err) {
      e["status"] = "resource-limit";
      e["error"] = err.what();
    }
    return e;
  });
  Json powers = Json::array(), sq = Json::array();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (entries[i]["status"] != "ok") *incomplete = true;
    (tasks[i].squarefree ? sq : powers).push_back(std::move(entries[i]));
  }
  Json out{{"powers", powers}, {"field", options.field.name()}};
  if (g.is_simple()) {
    out["matching"] = to_json(matching_report(g));
    out["squarefree_powers"] = sq;
    out["gap_free"] = is_gap_free(g).gap_free;
    out["index_combinatorial"] = combinatorial_index_json(g);
  }
  return out;
}

Json conjecture_scan(const ConjectureScanOptions& options) {
  const auto graphs = graphs_between(2, options.max_n, true);
  IndexOptions full;
  full.field = options.field;
  struct Row {
    Json growth_candidate;
    Json sqfree_candidate;
    Json lemma_violation;
    bool gap_free = false;
    bool growth_checked = false;
    bool tree = false;
    bool tree_dichotomy = true;
    long sqfree_cases = 0;
  };
  auto rows = parallel_map<Row>(graphs.size(), options.threads, [&](std::size_t idx) {
    const Graph& g = graphs[idx];
    Row row;
    const auto base = edge_ideal(g);
    row.gap_free = is_gap_free(g).gap_free;
    row.tree = is_tree(g);
    if (row.gap_free || row.tree) {
      std::vector<IndexValue> seq;
      for (int k = 1; k <= options.max_power; ++k) {
        const auto r = compute_index(k == 1 ? base : ideal_power(base, k), full);
        seq.push_back(r.index);
        if (row.tree && k <= 2 && !(r.index.is_infinite() || r.index == IndexValue::finite(1)))
          row.tree_dichotomy = false;
      }
      if (row.gap_free) {
        row.growth_checked = true;
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
          const bool grows = seq[k + 1] > seq[k] || (seq[k].is_infinite() && seq[k + 1].is_infinite());
          if (!grows) {
            Json s = Json::array();
            for (const auto& v : seq) s.push_back(to_json(v));
            row.growth_candidate = {{"graph", format_graph(g)}, {"indices", s}};
            break;
          }
        }
      }
    }
    const int nu = matching_number(g);
    const int nu0 = restricted_matching_number(g).nu0;
    for (int k = 1; k <= nu; ++k) {
      IndexOptions one = full;
      one.max_i = 1;
      const bool above_one = compute_index(squarefree_power(base, k), one).exceeds(1);
      ++row.sqfree_cases;
      if (k >= nu0 && !above_one && row.sqfree_candidate.is_null())
        row.sqfree_candidate = {{"graph", format_graph(g)}, {"k", k}, {"nu", nu}, {"nu0", nu0}};
      if (k < nu0 && above_one && row.lemma_violation.is_null())
        row.lemma_violation = {{"graph", format_graph(g)}, {"k", k}, {"nu0", nu0}};
    }
    return row;
  });
  Json growth = Json::array(), sqfree = Json::array(), lemma = Json::array();
  long gap_free = 0, trees = 0, tree_ok = 0, sqfree_cases = 0;
  for (const auto& r : rows) {
    gap_free += r.growth_checked;
    trees += r.tree;
    tree_ok += r.tree && r.tree_dichotomy;
    sqfree_cases += r.sqfree_cases;
    if (!r.growth_candidate.is_null()) growth.push_back(r.growth_candidate);
    if (!r.sqfree_candidate.is_null()) sqfree.push_back(r.sqfree_candidate);
    if (!r.lemma_violation.is_null()) lemma.push_back(r.lemma_violation);
  }
  return Json{{"graphs", graphs.size()},
              {"index_growth",
               {{"statement", "index(I) > 1 implies index(I^{k+1}) > index(I^k)"},
                {"graphs_checked", gap_free},
                {"max_power", options.max_power},
                {"candidates", growth}}},
              {"squarefree_threshold",
               {{"statement", "index(I^[k]) > 1 iff k >= nu0"},
                {"cases", sqfree_cases},
                {"candidates", sqfree},
                {"below_nu0_with_index_above_1", lemma}}},
              {"trees", {{"trees", trees}, {"index_in_1_or_inf_for_k_le_2", tree_ok}}}};
}

}  // namespace linrez
