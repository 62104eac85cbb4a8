#pragma once

#include "vnumkit/survey.hpp"

namespace vnumkit {

enum class VerifyLevel { small, wide };

inline const char* to_string(VerifyLevel l) {
  return l == VerifyLevel::small ? "small" : "wide";
}

struct CheckResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;  // a proved statement failed: implementation bug
  std::uint64_t findings = 0;    // an open/empirical expectation failed: data
  std::vector<Json> violation_samples;
  std::vector<Json> finding_samples;
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::small;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::uint64_t violations_total = 0;
  std::uint64_t findings_total = 0;
  bool pass = false;

  Json to_json() const {
    Json j;
    j["level"] = to_string(level);
    j["seed"] = seed;
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json e;
      e["name"] = c.name;
      e["instances"] = c.instances;
      e["violations"] = c.violations;
      e["findings"] = c.findings;
      if (!c.violation_samples.empty()) e["violation_samples"] = c.violation_samples;
      if (!c.finding_samples.empty()) e["finding_samples"] = c.finding_samples;
      arr.push_back(e);
    }
    j["checks"] = arr;
    j["violations_total"] = violations_total;
    j["findings_total"] = findings_total;
    j["pass"] = pass;
    return j;
  }
};

namespace detail {

struct CheckRun {
  CheckResult result;

  void check(bool ok, const std::function<Json()>& context) {
    ++result.instances;
    if (!ok) {
      ++result.violations;
      if (result.violation_samples.size() < 5) result.violation_samples.push_back(context());
    }
  }

  void observe(bool ok, const std::function<Json()>& context) {
    ++result.instances;
    if (!ok) {
      ++result.findings;
      if (result.finding_samples.size() < 5) result.finding_samples.push_back(context());
    }
  }
};

/// All labeled graphs with at least one edge on 2..maxn vertices.
inline std::vector<Graph> exhaustive_graphs(int maxn) {
  std::vector<Graph> out;
  for (int n = 2; n <= maxn; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> es;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) es.push_back(slots[i]);
      out.emplace_back(n, std::move(es));
    }
  }
  return out;
}

inline Exponent v_of_graph(const Graph& g) {
  return g.num_edges() == 0 ? 0 : v_number_squarefree(g).degree;
}

inline Exponent v_of_colon(const MonomialIdeal& q) {
  return q.is_unit() ? 0 : v_number_definition(q).degree;
}

inline Graph disjoint_double(const Graph& g) {
  std::vector<std::pair<int, int>> es = g.edges;
  for (auto [a, b] : g.edges) es.emplace_back(a + g.n, b + g.n);
  return Graph(2 * g.n, std::move(es));
}

inline MonomialIdeal paper_ideal() {
  return MonomialIdeal(RingDescriptor::standard(3),
                       {Monomial({1, 2, 0}), Monomial({0, 1, 2}), Monomial({2, 0, 1})});
}

inline Graph figure_g() { return Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}); }
inline Graph figure_h() { return Graph(5, {{0, 2}, {1, 3}, {2, 4}, {3, 4}}); }

}  // namespace detail

/// Run every module's invariant checklist: exhaustively over small labeled
/// families at level small, with wider exhaustion plus seeded random trials
/// at level wide. Violations are implementation bugs; findings are empirical
/// observations (open questions, cross-characteristic divergence, the
/// disjoint clique-cover gap).
inline VerifyReport verify_suite(VerifyLevel level, std::uint64_t seed) {
  const bool wide = level == VerifyLevel::wide;
  VerifyReport report;
  report.level = level;
  report.seed = seed;

  const auto graphs = detail::exhaustive_graphs(wide ? 5 : 4);
  std::vector<Graph> big_graphs;
  {
    Rng rng(seed ^ 0x67e55044a6f1e253ULL);
    int count = wide ? 60 : 10;
    for (int i = 0; i < count; ++i)
      big_graphs.push_back(random_graph_with_edges(rng, rng.range(5, wide ? 8 : 6), 0.45));
  }
  std::vector<MonomialIdeal> ideals;
  {
    ideals.push_back(detail::paper_ideal());
    ideals.push_back(MonomialIdeal(RingDescriptor::standard(2), {Monomial({1, 1})}));
    ideals.push_back(MonomialIdeal(RingDescriptor::standard(2), {Monomial({1, 0}), Monomial({0, 1})}));
    ideals.push_back(MonomialIdeal(RingDescriptor::standard(1), {Monomial({2})}));
    ideals.push_back(
        MonomialIdeal(RingDescriptor::standard(4), {Monomial({1, 1, 0, 0}), Monomial({0, 0, 1, 1})}));
    Rng rng(seed ^ 0x94d049bb133111ebULL);
    int count = wide ? 120 : 25;
    for (int i = 0; i < count; ++i)
      ideals.push_back(random_monomial_ideal(rng, rng.range(2, 4), 3, 4));
  }
  std::vector<Clutter> clutters;
  {
    clutters.push_back(Clutter(3, {detail::bit(0) | detail::bit(1) | detail::bit(2)}));
    clutters.push_back(
        Clutter(5, {detail::bit(0) | detail::bit(1) | detail::bit(2), detail::bit(3) | detail::bit(4)}));
    Rng rng(seed ^ 0xbf58476d1ce4e5b9ULL);
    int count = wide ? 60 : 15;
    for (int i = 0; i < count; ++i)
      clutters.push_back(random_clutter(rng, rng.range(3, wide ? 7 : 5), 4, 0.5));
    for (const auto& g : graphs)
      if (g.n <= 4) clutters.push_back(g.to_clutter());
  }

  auto run = [&](const std::string& name, const std::function<void(detail::CheckRun&)>& body) {
    detail::CheckRun cr;
    cr.result.name = name;
    try {
      body(cr);
    } catch (const std::exception& e) {
      ++cr.result.violations;
      Json j;
      j["exception"] = e.what();
      cr.result.violation_samples.push_back(j);
    }
    report.checks.push_back(std::move(cr.result));
  };

  auto ideal_context = [](const MonomialIdeal& I) {
    return [&I]() {
      Json j;
      j["ideal"] = format_ideal(I);
      return j;
    };
  };
  auto graph_context = [](const Graph& g) {
    return [&g]() {
      Json j;
      j["graph"] = graph_to_json(g);
      return j;
    };
  };

  // -- monomial core ---------------------------------------------------------

  run("monomial/colon-oracle", [&](detail::CheckRun& cr) {
    Rng rng(seed ^ 1);
    for (const auto& I : ideals) {
      auto caps = max_exponents(I);
      for (int probe = 0; probe < 3; ++probe) {
        std::vector<Exponent> fe(static_cast<std::size_t>(I.vars()));
        for (int i = 0; i < I.vars(); ++i)
          fe[static_cast<std::size_t>(i)] =
              static_cast<Exponent>(rng.below(static_cast<std::uint64_t>(caps[static_cast<std::size_t>(i)] + 2)));
        Monomial f(fe);
        auto q = colon(I, f);
        bool ok = q.contains(I) && (q.is_unit() == I.contains(f));
        // Membership oracle over the cap box.
        std::vector<Exponent> e(static_cast<std::size_t>(I.vars()), 0);
        while (ok) {
          Monomial m(e);
          if (q.contains(m) != I.contains(m * f)) ok = false;
          int i = 0;
          while (i < I.vars() && e[static_cast<std::size_t>(i)] == caps[static_cast<std::size_t>(i)] + 1)
            e[static_cast<std::size_t>(i++)] = 0;
          if (i == I.vars()) break;
          ++e[static_cast<std::size_t>(i)];
        }
        ok = ok && colon(I, MonomialIdeal(I.ring(), {f})) == q;
        cr.check(ok, ideal_context(I));
      }
    }
  });

  run("monomial/gcd-lcm-laws", [&](detail::CheckRun& cr) {
    Rng rng(seed ^ 2);
    for (int trial = 0; trial < (wide ? 400 : 100); ++trial) {
      int n = rng.range(1, 5);
      auto rand_mono = [&]() {
        std::vector<Exponent> e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<Exponent>(rng.below(5));
        return Monomial(e);
      };
      Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      bool ok = monomial_gcd(a, b) == monomial_gcd(b, a) &&
                monomial_lcm(a, b) == monomial_lcm(b, a) &&
                monomial_gcd(monomial_gcd(a, b), c) == monomial_gcd(a, monomial_gcd(b, c)) &&
                monomial_lcm(monomial_lcm(a, b), c) == monomial_lcm(a, monomial_lcm(b, c)) &&
                monomial_gcd(a, a) == a && monomial_lcm(a, a) == a &&
                divides(monomial_gcd(a, b), a) && divides(b, monomial_lcm(a, b)) &&
                monomial_gcd(a, b) * monomial_lcm(a, b) == a * b;
      cr.check(ok, [&]() { return Json{{"n", n}}; });
    }
  });

  // -- decomposition ---------------------------------------------------------

  run("decomposition/intersection-oracle", [&](detail::CheckRun& cr) {
    for (const auto& I : ideals) {
      auto comps = irreducible_decomposition(I);
      auto caps = max_exponents(I);
      bool ok = true;
      std::vector<Exponent> e(static_cast<std::size_t>(I.vars()), 0);
      while (ok) {
        Monomial m(e);
        bool in_all = std::all_of(comps.begin(), comps.end(),
                                  [&](const IrreducibleComponent& c) { return c.contains(m); });
        if (in_all != I.contains(m)) ok = false;
        int i = 0;
        while (i < I.vars() && e[static_cast<std::size_t>(i)] == caps[static_cast<std::size_t>(i)] + 1)
          e[static_cast<std::size_t>(i++)] = 0;
        if (i == I.vars()) break;
        ++e[static_cast<std::size_t>(i)];
      }
      cr.check(ok, ideal_context(I));
    }
  });

  run("decomposition/ass-box-completeness", [&](detail::CheckRun& cr) {
    for (const auto& I : ideals) {
      auto caps = max_exponents(I);
      Exponent total = 0;
      for (Exponent c : caps) total += c;
      if (total > 14) continue;  // box too large for the oracle
      std::set<PrimeSupport> brute;
      for (Exponent d = 0; d <= total; ++d)
        detail::for_each_box_monomial_of_degree(caps, d, [&](const Monomial& f) {
          auto q = colon(I, f);
          if (!q.is_unit())
            if (auto p = as_monomial_prime(q)) brute.insert(*p);
          return false;
        });
      auto reported = associated_primes(I).primes;
      cr.check(brute == std::set<PrimeSupport>(reported.begin(), reported.end()),
               ideal_context(I));
    }
  });

  run("decomposition/witness-soundness", [&](detail::CheckRun& cr) {
    for (const auto& I : ideals) {
      for (const auto& p : associated_primes(I).primes) {
        Monomial f = witness_for_prime(I, p);
        cr.check(colon(I, f) == prime_ideal(I.ring(), p), ideal_context(I));
      }
    }
  });

  run("decomposition/ass-additivity", [&](detail::CheckRun& cr) {
    std::vector<MonomialIdeal> small = {
        MonomialIdeal(RingDescriptor::standard(2), {Monomial({1, 1})}),
        MonomialIdeal(RingDescriptor::standard(2), {Monomial({2, 0}), Monomial({1, 1})}),
        MonomialIdeal(RingDescriptor::standard(1), {Monomial({2})}),
        detail::paper_ideal(),
    };
    for (const auto& a : small)
      for (const auto& b : small) {
        int n = a.vars() + b.vars();
        std::vector<Monomial> gens;
        for (const auto& g : a.generators()) {
          std::vector<Exponent> e = g.exponents();
          e.resize(static_cast<std::size_t>(n), 0);
          gens.emplace_back(std::move(e));
        }
        for (const auto& g : b.generators()) {
          std::vector<Exponent> e(static_cast<std::size_t>(a.vars()), 0);
          for (Exponent x : g.exponents()) e.push_back(x);
          gens.emplace_back(std::move(e));
        }
        MonomialIdeal sum(RingDescriptor::standard(n), std::move(gens));
        std::set<PrimeSupport> expected;
        for (const auto& p1 : associated_primes(a).primes)
          for (const auto& p2 : associated_primes(b).primes) {
            std::vector<int> vars = p1.vars;
            for (int v : p2.vars) vars.push_back(v + a.vars());
            expected.insert(PrimeSupport(std::move(vars)));
          }
        auto got = associated_primes(sum).primes;
        bool ass_ok = std::set<PrimeSupport>(got.begin(), got.end()) == expected;
        bool v_ok = v_number_definition(sum).degree ==
                    v_number_definition(a).degree + v_number_definition(b).degree;
        cr.check(ass_ok && v_ok, ideal_context(sum));
      }
  });

  run("decomposition/squarefree-ass-covers", [&](detail::CheckRun& cr) {
    for (const auto& c : clutters) {
      auto covers = cover_numbers(c).minimal_covers;
      std::set<PrimeSupport> expected;
      for (VertexSet cov : covers) expected.insert(PrimeSupport(detail::to_vertices(cov)));
      auto got = associated_primes(edge_ideal(c)).primes;
      cr.check(std::set<PrimeSupport>(got.begin(), got.end()) == expected, [&]() {
        Json j;
        j["clutter"] = clutter_to_json(c);
        return j;
      });
    }
  });

  // -- polarization ----------------------------------------------------------

  run("polarization/shape", [&](detail::CheckRun& cr) {
    for (const auto& I : ideals) {
      auto [ip, ctx] = polarize_ideal(I);
      bool ok = ip.is_squarefree() && ip.num_generators() == I.num_generators();
      std::multiset<Exponent> src, dst;
      for (const auto& g : I.generators()) src.insert(g.degree());
      for (const auto& g : ip.generators()) dst.insert(g.degree());
      ok = ok && src == dst;
      for (const auto& g : I.generators())
        ok = ok && depolarize_monomial(ctx, polarize_monomial(ctx, g)) == g;
      cr.check(ok, ideal_context(I));
    }
  });

  run("polarization/height", [&](detail::CheckRun& cr) {
    for (const auto& I : ideals)
      cr.check(height(I) == height(polarize_ideal(I).first), ideal_context(I));
  });

  run("polarization/colon-prime-law", [&](detail::CheckRun& cr) {
    for (const auto& I : ideals) {
      auto caps = max_exponents(I);
      Exponent total = 0;
      for (Exponent c : caps) total += c;
      if (total > 12) continue;
      auto [ip, ctx] = polarize_ideal(I);
      for (Exponent d = 0; d <= total; ++d)
        detail::for_each_box_monomial_of_degree(caps, d, [&](const Monomial& f) {
          auto q = colon(I, f);
          if (q.is_unit() || !as_monomial_prime(q)) return false;
          auto predicted = polarized_colon_prime(ctx, I, f);
          auto direct = as_monomial_prime(colon(ip, polarize_monomial(ctx, f)));
          cr.check(direct && *direct == predicted, ideal_context(I));
          return false;
        });
    }
  });

  run("polarization/v-bound-and-equality", [&](detail::CheckRun& cr) {
    for (const auto& I : ideals) {
      try {
        auto r = v_all_methods(I);  // throws logic_error on any proved rule
        cr.check(true, ideal_context(I));
        if (r.weak_hypothesis && !r.polarization_hypothesis)
          cr.observe(r.polarization_agrees, ideal_context(I));
        if (!r.polarization_hypothesis) cr.observe(r.alpha_agrees, ideal_context(I));
      } catch (const std::logic_error&) {
        cr.check(false, ideal_context(I));
      }
    }
  });

  // -- v-number --------------------------------------------------------------

  run("vnumber/box-cap-soundness", [&](detail::CheckRun& cr) {
    Rng rng(seed ^ 11);
    for (const auto& I : ideals) {
      auto caps = max_exponents(I);
      for (int probe = 0; probe < 3; ++probe) {
        std::vector<Exponent> fe(static_cast<std::size_t>(I.vars()));
        std::vector<Exponent> capped(static_cast<std::size_t>(I.vars()));
        for (int i = 0; i < I.vars(); ++i) {
          fe[static_cast<std::size_t>(i)] = static_cast<Exponent>(rng.below(8));
          capped[static_cast<std::size_t>(i)] =
              std::min(fe[static_cast<std::size_t>(i)], caps[static_cast<std::size_t>(i)]);
        }
        cr.check(colon(I, Monomial(fe)) == colon(I, Monomial(capped)), ideal_context(I));
      }
    }
  });

  run("vnumber/colon-bound", [&](detail::CheckRun& cr) {
    Rng rng(seed ^ 12);
    for (const auto& I : ideals) {
      Exponent v = v_number_definition(I).degree;
      auto caps = max_exponents(I);
      for (int probe = 0; probe < 4; ++probe) {
        std::vector<Exponent> fe(static_cast<std::size_t>(I.vars()));
        for (int i = 0; i < I.vars(); ++i)
          fe[static_cast<std::size_t>(i)] =
              static_cast<Exponent>(rng.below(static_cast<std::uint64_t>(caps[static_cast<std::size_t>(i)] + 1)));
        Monomial f(fe);
        if (I.contains(f)) continue;
        cr.check(v <= detail::v_of_colon(colon(I, f)) + f.degree(), ideal_context(I));
      }
      for (int i = 0; i < I.vars(); ++i) {
        auto xi = Monomial::variable(I.vars(), i);
        if (I.contains(xi)) continue;
        cr.check(v <= detail::v_of_colon(colon(I, xi)) + 1, ideal_context(I));
      }
    }
  });

  run("vnumber/clutter-existentials", [&](detail::CheckRun& cr) {
    for (const auto& c : clutters) {
      MonomialIdeal I = edge_ideal(c);
      Exponent v = v_number_squarefree(c).degree;
      bool some_not_above = false, some_strict = false, any_candidate = false;
      for (int i = 0; i < c.n; ++i) {
        auto xi = Monomial::variable(c.n, i);
        if (I.contains(xi)) continue;
        any_candidate = true;
        Exponent vq = detail::v_of_colon(colon(I, xi));
        if (vq <= v) some_not_above = true;
        if (vq < v) some_strict = true;
      }
      if (any_candidate) cr.check(some_not_above, [&]() { return clutter_to_json(c); });
      if (any_candidate && v >= 2) cr.check(some_strict, [&]() { return clutter_to_json(c); });
      bool deletion_ok = false;
      for (int i = 0; i < c.n; ++i) {
        auto sub = delete_vertices(c, detail::bit(i));
        Exponent vd = sub.edges.empty() ? 0 : v_number_squarefree(sub).degree;
        if (vd <= v) deletion_ok = true;
      }
      cr.check(deletion_ok, [&]() { return clutter_to_json(c); });
    }
  });

  run("vnumber/alpha0-bound", [&](detail::CheckRun& cr) {
    for (const auto& g : graphs)
      cr.check(detail::v_of_graph(g) <= cover_numbers(g.to_clutter()).alpha0, graph_context(g));
    for (const auto& g : big_graphs)
      cr.check(detail::v_of_graph(g) <= cover_numbers(g.to_clutter()).alpha0, graph_context(g));
  });

  run("vnumber/ci-formula", [&](detail::CheckRun& cr) {
    Rng rng(seed ^ 13);
    for (int trial = 0; trial < (wide ? 60 : 15); ++trial) {
      auto I = random_complete_intersection(rng, rng.range(2, 6), 3);
      if (height(I) != I.num_generators()) continue;  // sampler guarantees this
      Exponent expected = -I.num_generators();
      for (const auto& g : I.generators()) expected += g.degree();
      bool ok = v_number_definition(I).degree == expected;
      Exponent polarized_size = 0;
      for (Exponent cterm : max_exponents(I)) polarized_size += cterm;
      if (polarized_size <= homology_guards().betti) ok = ok && regularity(I) == expected;
      cr.check(ok, ideal_context(I));
    }
  });

  run("vnumber/method-equivalence", [&](detail::CheckRun& cr) {
    for (const auto& g : graphs) {
      auto I = edge_ideal(g);
      Exponent by_def = v_number_definition(I).degree;
      Exponent by_formula = v_number_squarefree(g).degree;
      Exponent by_cliques = clique_domination_number(line_graph(g));
      cr.check(by_def == by_formula && by_formula == by_cliques, graph_context(g));
      if (g.num_edges() <= 25) {
        Exponent disjoint = clique_domination_number(line_graph(g), true);
        cr.observe(disjoint == by_formula, graph_context(g));
      }
    }
  });

  // -- clutters and graphs ---------------------------------------------------

  run("clutter/lemma-2.2", [&](detail::CheckRun& cr) {
    for (const auto& c : clutters) {
      if (c.n > 12) continue;
      for (VertexSet a = 0; a < detail::bit(c.n); ++a) {
        if (!is_stable(c, a)) continue;
        VertexSet nb = neighbor_set(c, a);
        if (is_vertex_cover(c, nb)) {
          bool minimal = true;
          for (int v : detail::to_vertices(nb))
            if (is_vertex_cover(c, nb & ~detail::bit(v))) minimal = false;
          cr.check(minimal, [&]() { return clutter_to_json(c); });
        }
      }
      for (VertexSet a : maximal_stable_sets(c))
        cr.check(neighbor_set(c, a) == (c.full_set() & ~a), [&]() { return clutter_to_json(c); });
    }
  });

  run("clutter/deletion-contraction", [&](detail::CheckRun& cr) {
    auto pool = graphs;
    pool.insert(pool.end(), big_graphs.begin(), big_graphs.end());
    for (const auto& g : pool) {
      Exponent v = detail::v_of_graph(g);
      for (auto e : g.edges)
        cr.check(detail::v_of_graph(delete_edge(g, e)) <= v + 1, graph_context(g));
      if (g.n <= 7) {
        for (VertexSet j : all_cliques(g))
          cr.check(v <= detail::v_of_graph(delete_vertices(g, j)) + 1, graph_context(g));
      }
      if (g.num_edges() > 0) {
        bool some_contraction = false;
        for (auto e : g.edges)
          if (detail::v_of_graph(contract_edge(g, e)) <= v) some_contraction = true;
        cr.check(some_contraction, graph_context(g));
      }
    }
  });

  run("clutter/class-theorems", [&](detail::CheckRun& cr) {
    Rng rng(seed ^ 21);
    int trials = wide ? 40 : 10;
    int maxn = wide ? 8 : 6;
    for (int t = 0; t < trials; ++t) {
      Graph b = random_bipartite_graph(rng, rng.range(3, maxn), 0.5);
      cr.check(detail::v_of_graph(b) <= induced_matching_number(b), graph_context(b));

      Graph ch = random_chordal_graph(rng, rng.range(3, maxn), 0.5);
      if (ch.num_edges() > 0) {
        int im = induced_matching_number(ch);
        bool ok = detail::v_of_graph(ch) <= im;
        if (ch.n <= homology_guards().betti) ok = ok && im == regularity(edge_ideal(ch));
        cr.check(ok, graph_context(ch));
      }

      Graph base = random_graph_with_edges(rng, rng.range(2, std::max(2, maxn / 2)), 0.5);
      Graph w = whisker(base);
      cr.check(detail::v_of_graph(w) <= induced_matching_number(w), graph_context(w));
    }
    for (const auto& g : graphs) {
      if (!is_c4_c5_free(g)) continue;
      if (!is_vertex_decomposable(independence_complex(g.to_clutter()))) continue;
      int im = induced_matching_number(g);
      cr.check(detail::v_of_graph(g) <= im && im == regularity(edge_ideal(g)), graph_context(g));
    }
  });

  run("clutter/suspension", [&](detail::CheckRun& cr) {
    Rng rng(seed ^ 22);
    for (int t = 0; t < (wide ? 30 : 8); ++t) {
      Graph g = random_connected_graph(rng, rng.range(2, wide ? 7 : 5), 0.55);
      // A random stable set: greedy from a random vertex order.
      VertexSet s = 0;
      for (int v = 0; v < g.n; ++v)
        if (rng.chance(0.4) && is_stable(g.to_clutter(), s | detail::bit(v))) s |= detail::bit(v);
      Graph gs = s_suspension(g, s);
      bool ok = v_number_squarefree(gs).degree == 1;
      if (gs.n <= homology_guards().betti)
        ok = ok && regularity(edge_ideal(gs)) == regularity(edge_ideal(g));
      cr.check(ok, graph_context(g));
    }
  });

  run("clutter/cover-duality", [&](detail::CheckRun& cr) {
    for (const auto& c : clutters) {
      auto cov = cover_numbers(c);
      bool ok = cov.alpha0 + cov.beta0 == c.n;
      std::set<VertexSet> complements;
      for (VertexSet a : maximal_stable_sets(c)) complements.insert(c.full_set() & ~a);
      ok = ok && complements ==
                     std::set<VertexSet>(cov.minimal_covers.begin(), cov.minimal_covers.end());
      cr.check(ok, [&]() { return clutter_to_json(c); });
    }
  });

  run("clutter/alexander-involution", [&](detail::CheckRun& cr) {
    for (const auto& c : clutters) {
      auto I = edge_ideal(c);
      cr.check(alexander_dual(alexander_dual(I)) == I, [&]() { return clutter_to_json(c); });
    }
  });

  // -- homology ---------------------------------------------------------------

  run("homology/terai", [&](detail::CheckRun& cr) {
    for (const auto& c : clutters) {
      if (c.n > homology_guards().betti) continue;
      cr.check(terai_check(edge_ideal(c)).consistent, [&]() { return clutter_to_json(c); });
    }
  });

  run("homology/bookkeeping", [&](detail::CheckRun& cr) {
    for (const auto& c : clutters) {
      if (c.n > homology_guards().betti) continue;
      auto I = edge_ideal(c);
      bool ok = depth(I) + projective_dimension(I) == I.vars();
      ok = ok && krull_dim(c) == cover_numbers(c).beta0;
      // Euler characteristic: alternating face count equals alternating ranks.
      auto delta = independence_complex(c);
      auto faces = detail::faces_by_count(delta);
      auto ranks = reduced_homology_ranks(delta);
      std::int64_t chi_faces = 0, chi_ranks = 0;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        std::int64_t sign = (k % 2 == 0) ? -1 : 1;
        chi_faces += sign * static_cast<std::int64_t>(faces[k].size());
        chi_ranks += sign * ranks[k];
      }
      ok = ok && chi_faces == chi_ranks;
      cr.check(ok, [&]() { return clutter_to_json(c); });
    }
  });

  run("homology/im-reg-bound", [&](detail::CheckRun& cr) {
    for (const auto& g : graphs)
      cr.check(induced_matching_number(g) <= regularity(edge_ideal(g)), graph_context(g));
    for (const auto& c : clutters) {
      if (c.n > homology_guards().betti) continue;
      cr.check(induced_matching_weight(c) <= regularity(edge_ideal(c)),
               [&]() { return clutter_to_json(c); });
    }
  });

  run("homology/disjoint-union-doubling", [&](detail::CheckRun& cr) {
    for (const auto& g : graphs) {
      if (!is_connected(g) || g.n > (wide ? 5 : 4)) continue;
      Graph dd = detail::disjoint_double(g);
      bool ok = detail::v_of_graph(dd) == 2 * detail::v_of_graph(g);
      if (dd.n <= homology_guards().betti)
        ok = ok && regularity(edge_ideal(dd)) == 2 * regularity(edge_ideal(g));
      cr.check(ok, graph_context(g));
    }
  });

  run("homology/field-agreement", [&](detail::CheckRun& cr) {
    for (const auto& c : clutters) {
      if (c.n > 8) continue;
      auto I = edge_ideal(c);
      bool same = regularity(I, FieldChoice(0)) == regularity(I, FieldChoice(2)) &&
                  projective_dimension(I, FieldChoice(0)) == projective_dimension(I, FieldChoice(2));
      cr.observe(same, [&]() { return clutter_to_json(c); });
    }
  });

  run("complex/vd-chordal", [&](detail::CheckRun& cr) {
    for (const auto& g : graphs) {
      if (!is_chordal(g)) continue;
      cr.check(is_vertex_decomposable(independence_complex(g.to_clutter())), graph_context(g));
    }
    Rng rng(seed ^ 31);
    for (int t = 0; t < (wide ? 25 : 6); ++t) {
      Graph ch = random_chordal_graph(rng, rng.range(5, wide ? 7 : 6), 0.5);
      cr.check(is_vertex_decomposable(independence_complex(ch.to_clutter())), graph_context(ch));
    }
  });

  // -- fixed paper instances ---------------------------------------------------

  run("fixtures/worked-example", [&](detail::CheckRun& cr) {
    auto I = detail::paper_ideal();
    auto comps = irreducible_decomposition(I);
    cr.check(comps.size() == 4, ideal_context(I));
    auto report = associated_primes(I);
    cr.check(report.primes.size() == 4 &&
                 report.embedded == std::vector<PrimeSupport>{PrimeSupport({0, 1, 2})},
             ideal_context(I));
    cr.check(v_number_definition(I).degree == 3, ideal_context(I));
    cr.check(v_number_via_polarization(I) == 3, ideal_context(I));
    cr.check(colon(I, Monomial({1, 1, 1})) == prime_ideal(I.ring(), PrimeSupport({0, 1, 2})),
             ideal_context(I));
  });

  run("fixtures/figure-graphs", [&](detail::CheckRun& cr) {
    auto g = detail::figure_g();
    auto h = detail::figure_h();
    cr.check(v_number_squarefree(g).degree == 2, graph_context(g));
    cr.check(induced_matching_number(g) == 1, graph_context(g));
    cr.check(v_number_squarefree(h).degree == 1, graph_context(h));
    cr.check(induced_matching_number(h) == 2, graph_context(h));
  });

  for (const auto& c : report.checks) {
    report.violations_total += c.violations;
    report.findings_total += c.findings;
  }
  report.pass = report.violations_total == 0;
  return report;
}

}  // namespace vnumkit
