// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Criterion 10 drives the installed CLI twice when --cli is given.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "vnumkit/vnumkit.hpp"

using namespace vnumkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

MonomialIdeal paper_ideal() {
  return parse_ideal("x1*x2^2, x2*x3^2, x1^2*x3").ideal;
}

Graph figure_g() { return Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}); }
Graph figure_h() { return Graph(5, {{0, 2}, {1, 3}, {2, 4}, {3, 4}}); }

std::vector<Graph> connected_graphs_up_to(int maxn) {
  std::vector<Graph> out;
  for (int n = 2; n <= maxn; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> es;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) es.push_back(slots[i]);
      Graph g(n, std::move(es));
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

Graph disjoint_double(const Graph& g) {
  std::vector<std::pair<int, int>> es = g.edges;
  for (auto [a, b] : g.edges) es.emplace_back(a + g.n, b + g.n);
  return Graph(2 * g.n, std::move(es));
}

Exponent v_of_graph(const Graph& g) {
  return g.num_edges() == 0 ? 0 : v_number_squarefree(g).degree;
}

// ---- criteria -------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  auto I = paper_ideal();

  auto comps = irreducible_decomposition(I);
  std::vector<IrreducibleComponent> expected;
  auto mk = [](std::initializer_list<std::pair<int, Exponent>> ps) {
    IrreducibleComponent c;
    for (auto p : ps) c.pure_powers.push_back(p);
    return c;
  };
  expected.push_back(mk({{1, 2}, {2, 1}}));
  expected.push_back(mk({{0, 1}, {2, 2}}));
  expected.push_back(mk({{0, 2}, {1, 1}}));
  expected.push_back(mk({{0, 2}, {1, 2}, {2, 2}}));
  o.require(comps == expected, "irreducible decomposition differs from the known four components");

  auto report = associated_primes(I);
  std::vector<PrimeSupport> primes = {PrimeSupport({1, 2}), PrimeSupport({0, 2}),
                                      PrimeSupport({0, 1}), PrimeSupport({0, 1, 2})};
  o.require(report.primes == primes, "associated primes differ");
  o.require(report.embedded == std::vector<PrimeSupport>{PrimeSupport({0, 1, 2})},
            "embedded prime set differs");

  o.require(v_number_definition(I).degree == 3, "v by definition is not 3");
  o.require(v_number_via_polarization(I) == 3, "v of the polarization is not 3");

  o.require(colon(I, Monomial({1, 1, 1})) == prime_ideal(I.ring(), PrimeSupport({0, 1, 2})),
            "(I : x1x2x3) is not <x1,x2,x3>");

  auto [ip, ctx] = polarize_ideal(I);
  // x1_1*x2_1*x3_1 has target exponents at positions 0, 2, 4.
  auto q = colon(ip, Monomial({1, 0, 1, 0, 1, 0}));
  o.require(q == prime_ideal(ctx.target, PrimeSupport({1, 3, 5})),
            "(I(pol) : x1_1 x2_1 x3_1) is not <x1_2, x2_2, x3_2>");
  return o;
}

Outcome criterion2() {
  Outcome o;
  o.require(v_of_graph(figure_g()) == 2, "v of the 5-cycle is not 2");
  o.require(induced_matching_number(figure_g()) == 1, "im of the 5-cycle is not 1");
  o.require(v_of_graph(figure_h()) == 1, "v of the path is not 1");
  o.require(induced_matching_number(figure_h()) == 2, "im of the path is not 2");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::uint64_t mismatches = 0, total = 0;
  for (const auto& g : connected_graphs_up_to(6)) {
    ++total;
    Exponent by_def = v_number_definition(edge_ideal(g)).degree;
    Exponent by_formula = v_number_squarefree(g).degree;
    Exponent by_cliques = clique_domination_number(line_graph(g));
    if (!(by_def == by_formula && by_formula == by_cliques)) ++mismatches;
  }
  o.require(mismatches == 0,
            std::to_string(mismatches) + " mismatches over " + std::to_string(total) + " graphs");
  o.note = std::to_string(total) + " connected labeled graphs";
  return o;
}

Outcome criterion4() {
  Outcome o;
  Rng rng(4001);
  std::uint64_t violations = 0;
  for (int t = 0; t < 1000; ++t) {
    auto I = random_monomial_ideal(rng, rng.range(2, 4), 3, 4);
    try {
      auto r = v_all_methods(I);  // enforces v(pol) <= v and the equality laws
      (void)r;
    } catch (const std::logic_error&) {
      ++violations;
      continue;
    }
    // Colon-prime transfer across the whole witness box.
    auto caps = max_exponents(I);
    Exponent total_deg = 0;
    for (Exponent c : caps) total_deg += c;
    auto [ip, ctx] = polarize_ideal(I);
    bool bad = false;
    for (Exponent d = 0; d <= total_deg && !bad; ++d)
      detail::for_each_box_monomial_of_degree(caps, d, [&](const Monomial& f) {
        auto q = colon(I, f);
        if (q.is_unit() || !as_monomial_prime(q)) return false;
        auto predicted = polarized_colon_prime(ctx, I, f);
        auto direct = as_monomial_prime(colon(ip, polarize_monomial(ctx, f)));
        if (!direct || !(*direct == predicted)) {
          bad = true;
          return true;
        }
        return false;
      });
    if (bad) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::uint64_t violations = 0;

  {  // v <= alpha0 on graphs
    Rng rng(5001);
    for (int t = 0; t < 1000; ++t) {
      Graph g = random_graph_with_edges(rng, rng.range(3, 8), 0.5);
      if (!(v_of_graph(g) <= cover_numbers(g.to_clutter()).alpha0)) ++violations;
    }
    o.require(violations == 0, "v <= alpha0 failed");
  }

  {  // v(I) <= v(I:f) + deg f for random f outside I
    Rng rng(5002);
    for (int t = 0; t < 1000; ++t) {
      auto I = random_monomial_ideal(rng, rng.range(2, 4), 3, 4);
      auto caps = max_exponents(I);
      std::vector<Exponent> fe(static_cast<std::size_t>(I.vars()));
      for (int i = 0; i < I.vars(); ++i)
        fe[static_cast<std::size_t>(i)] =
            static_cast<Exponent>(rng.below(static_cast<std::uint64_t>(caps[static_cast<std::size_t>(i)] + 1)));
      Monomial f(fe);
      if (I.contains(f)) continue;
      auto q = colon(I, f);
      Exponent vq = q.is_unit() ? 0 : v_number_definition(q).degree;
      if (!(v_number_definition(I).degree <= vq + f.degree())) ++violations;
    }
    o.require(violations == 0, "colon bound failed");
  }

  {  // clutter existentials (colon drop, strict drop, vertex deletion)
    Rng rng(5003);
    for (int t = 0; t < 1000; ++t) {
      Clutter c = random_clutter(rng, rng.range(3, 7), 4, 0.5);
      MonomialIdeal I = edge_ideal(c);
      Exponent v = v_number_squarefree(c).degree;
      bool some_not_above = false, some_strict = false, any_candidate = false;
      for (int i = 0; i < c.n; ++i) {
        auto xi = Monomial::variable(c.n, i);
        if (I.contains(xi)) continue;
        any_candidate = true;
        auto q = colon(I, xi);
        Exponent vq = q.is_unit() ? 0 : v_number_definition(q).degree;
        if (vq <= v) some_not_above = true;
        if (vq < v) some_strict = true;
      }
      if (any_candidate && !some_not_above) ++violations;
      if (any_candidate && v >= 2 && !some_strict) ++violations;
      bool deletion_ok = false;
      for (int i = 0; i < c.n; ++i) {
        auto sub = delete_vertices(c, detail::bit(i));
        Exponent vd = sub.edges.empty() ? 0 : v_number_squarefree(sub).degree;
        if (vd <= v) deletion_ok = true;
      }
      if (!deletion_ok) ++violations;
    }
    o.require(violations == 0, "clutter existentials failed");
  }

  {  // deletion / clique / contraction bounds on graphs
    Rng rng(5004);
    for (int t = 0; t < 1000; ++t) {
      Graph g = random_graph_with_edges(rng, rng.range(3, 7), 0.5);
      Exponent v = v_of_graph(g);
      for (auto e : g.edges)
        if (!(v_of_graph(delete_edge(g, e)) <= v + 1)) ++violations;
      for (VertexSet j : all_cliques(g))
        if (!(v <= v_of_graph(delete_vertices(g, j)) + 1)) ++violations;
      bool some_contraction = false;
      for (auto e : g.edges)
        if (v_of_graph(contract_edge(g, e)) <= v) some_contraction = true;
      if (!some_contraction) ++violations;
    }
    o.require(violations == 0, "deletion/clique/contraction bounds failed");
  }

  {  // additivity over disjoint unions
    Rng rng(5005);
    for (int t = 0; t < 1000; ++t) {
      auto a = random_monomial_ideal(rng, rng.range(1, 3), 3, 3);
      auto b = random_monomial_ideal(rng, rng.range(1, 3), 3, 3);
      int n = a.vars() + b.vars();
      std::vector<Monomial> gens;
      for (const auto& g : a.generators()) {
        auto e = g.exponents();
        e.resize(static_cast<std::size_t>(n), 0);
        gens.emplace_back(std::move(e));
      }
      for (const auto& g : b.generators()) {
        std::vector<Exponent> e(static_cast<std::size_t>(a.vars()), 0);
        for (Exponent x : g.exponents()) e.push_back(x);
        gens.emplace_back(std::move(e));
      }
      MonomialIdeal sum(RingDescriptor::standard(n), std::move(gens));
      if (!(v_number_definition(sum).degree ==
            v_number_definition(a).degree + v_number_definition(b).degree))
        ++violations;
    }
    o.require(violations == 0, "additivity failed");
  }

  {  // complete intersection formula, v and reg
    Rng rng(5006);
    for (int t = 0; t < 1000; ++t) {
      auto I = random_complete_intersection(rng, rng.range(2, 6), 3);
      Exponent expected = -I.num_generators();
      for (const auto& g : I.generators()) expected += g.degree();
      if (v_number_definition(I).degree != expected) ++violations;
      Exponent polarized = 0;
      for (Exponent c : max_exponents(I)) polarized += c;
      if (polarized <= 10 && regularity(I) != expected) ++violations;
    }
    o.require(violations == 0, "complete intersection formula failed");
  }

  return o;
}

Outcome criterion6() {
  Outcome o;
  std::uint64_t violations = 0;

  Rng rng(6001);
  for (int t = 0; t < 300; ++t) {  // bipartite
    Graph g = random_bipartite_graph(rng, rng.range(3, 9), 0.5);
    if (!(v_of_graph(g) <= induced_matching_number(g))) ++violations;
  }
  o.require(violations == 0, "bipartite v <= im failed");

  for (int t = 0; t < 200; ++t) {  // chordal, with im = reg
    Graph g = random_chordal_graph(rng, rng.range(3, 9), 0.5);
    if (g.num_edges() == 0) continue;
    int im = induced_matching_number(g);
    if (!(v_of_graph(g) <= im)) ++violations;
    if (im != regularity(edge_ideal(g))) ++violations;
  }
  o.require(violations == 0, "chordal v <= im = reg failed");

  for (int t = 0; t < 200; ++t) {  // whiskers over arbitrary bases
    Graph base = random_graph_with_edges(rng, rng.range(2, 9), 0.5);
    Graph w = whisker(base);
    if (!(v_of_graph(w) <= induced_matching_number(w))) ++violations;
  }
  o.require(violations == 0, "whisker v <= im failed");

  int vd_hits = 0;
  for (int t = 0; t < 2000 && vd_hits < 150; ++t) {  // (C4,C5)-free vertex decomposable
    Graph g = random_graph_with_edges(rng, rng.range(4, 9), 0.35);
    if (!is_c4_c5_free(g)) continue;
    if (!is_vertex_decomposable(independence_complex(g.to_clutter()))) continue;
    ++vd_hits;
    int im = induced_matching_number(g);
    if (!(v_of_graph(g) <= im)) ++violations;
    if (im != regularity(edge_ideal(g))) ++violations;
  }
  o.require(violations == 0, "(C4,C5)-free vertex-decomposable v <= im = reg failed");
  o.note = std::to_string(vd_hits) + " vertex-decomposable instances";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::uint64_t violations = 0;
  Rng rng(7001);
  for (int t = 0; t < 200; ++t) {
    Clutter c = random_clutter(rng, rng.range(3, 8), 4, 0.5);
    auto I = edge_ideal(c);
    if (!terai_check(I).consistent) ++violations;
    if (depth(I) + projective_dimension(I) != I.vars()) ++violations;
    if (krull_dim(c) != cover_numbers(c).beta0) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  return o;
}

Outcome criterion8() {
  Outcome o;
  // Candidate stream for the search: matchings, paths, cycles (small).
  std::vector<Graph> candidates;
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) es.emplace_back(2 * i, 2 * i + 1);
    candidates.emplace_back(2 * m, es);
  }
  for (int n = 3; n <= 8; ++n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    candidates.emplace_back(n, es);
    std::vector<std::pair<int, int>> cs;
    for (int i = 0; i < n; ++i) cs.emplace_back(i, (i + 1) % n);
    candidates.emplace_back(n, cs);
  }
  for (int k = 1; k <= 3; ++k) {
    const Graph* found = nullptr;
    for (const auto& g : candidates) {
      if (g.has_isolated_vertex()) continue;
      if (regularity(edge_ideal(g)) == k + 1) {
        found = &g;
        break;
      }
    }
    if (!found) {
      o.require(false, "no small graph with reg = " + std::to_string(k + 1));
      continue;
    }
    // Stable set {0} is fine in every candidate.
    Graph gs = s_suspension(*found, detail::bit(0));
    Exponent v = v_of_graph(gs);
    Exponent reg = regularity(edge_ideal(gs));
    o.require(v == 1, "suspension v is not 1 for k=" + std::to_string(k));
    o.require(reg - v == k, "gap reg - v != " + std::to_string(k));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::uint64_t violations = 0, total = 0;
  for (const auto& g : connected_graphs_up_to(4)) {
    ++total;
    Graph dd = disjoint_double(g);
    if (v_of_graph(dd) != 2 * v_of_graph(g)) ++violations;
    if (regularity(edge_ideal(dd)) != 2 * regularity(edge_ideal(g))) ++violations;
  }
  {  // the 5-cycle too
    Graph g = figure_g();
    ++total;
    Graph dd = disjoint_double(g);
    if (v_of_graph(dd) != 2 * v_of_graph(g)) ++violations;
    if (regularity(edge_ideal(dd)) != 2 * regularity(edge_ideal(g))) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.note = std::to_string(total) + " connected bases";
  return o;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

Outcome criterion10(const std::string& cli) {
  Outcome o;
  if (!cli.empty()) {
    std::string cmd = cli + " verify --level small --seed 42 --json";
    std::string a = run_command(cmd);
    std::string b = run_command(cmd);
    o.require(!a.empty() && a == b, "CLI verify output differs between runs");
    // The suite itself must pass.
    o.require(a.find("\"pass\":true") != std::string::npos, "verify suite did not pass");
  } else {
    auto a = verify_suite(VerifyLevel::small, 42).to_json().dump();
    auto b = verify_suite(VerifyLevel::small, 42).to_json().dump();
    o.require(a == b, "verify JSON differs between runs");
    o.note = "library-level check (no --cli given)";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  struct Entry {
    int id;
    const char* label;
    double budget_seconds;
    std::function<Outcome()> fn;
  };
  std::vector<Entry> entries = {
      {1, "paper worked example", 1.0, criterion1},
      {2, "figure graphs v and im", 1.0, criterion2},
      {3, "oracle equivalence on connected graphs <= 6 vertices", 600.0, criterion3},
      {4, "polarization laws on 1000 random ideals", 0.0, criterion4},
      {5, "inequality suite, 1000 instances per class", 0.0, criterion5},
      {6, "class theorems (bipartite, chordal, whisker, (C4,C5)-free VD)", 1800.0, criterion6},
      {7, "Terai identity and homological bookkeeping", 0.0, criterion7},
      {8, "suspension gap for k in {1,2,3}", 0.0, criterion8},
      {9, "disjoint-union doubling of v and reg", 0.0, criterion9},
      {10, "verify determinism", 0.0, [&]() { return criterion10(cli); }},
  };

  bool all_pass = true;
  for (auto& e : entries) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.note = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.budget_seconds > 0 && secs > e.budget_seconds) {
      o.pass = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over time budget");
    }
    all_pass = all_pass && o.pass;
    std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", e.id, e.label,
                secs, o.note.empty() ? "" : " -- ", o.note.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
