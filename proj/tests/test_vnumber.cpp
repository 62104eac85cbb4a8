#include <catch2/catch_amalgamated.hpp>

#include "vnumkit/vnumber.hpp"

using namespace vnumkit;

namespace {

MonomialIdeal ideal(int n, std::initializer_list<std::vector<Exponent>> gens) {
  std::vector<Monomial> ms;
  for (const auto& e : gens) ms.emplace_back(e);
  return MonomialIdeal(RingDescriptor::standard(n), std::move(ms));
}

MonomialIdeal running_example() {
  return ideal(3, {{1, 2, 0}, {0, 1, 2}, {2, 0, 1}});
}

Graph g5() { return Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}); }
Graph h5() { return Graph(5, {{0, 2}, {1, 3}, {2, 4}, {3, 4}}); }

std::vector<Graph> all_graphs(int maxn) {
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

/// A deterministic pool of small monomial ideals covering square-free,
/// powered, prime, and embedded-prime shapes.
std::vector<MonomialIdeal> ideal_pool() {
  return {
      running_example(),
      ideal(2, {{1, 1}}),
      ideal(2, {{1, 0}, {0, 1}}),
      ideal(1, {{2}}),
      ideal(2, {{2, 0}, {1, 1}}),
      ideal(2, {{2, 0}, {1, 1}, {0, 3}}),
      ideal(3, {{1, 1, 0}, {0, 1, 1}}),
      ideal(3, {{2, 0, 0}, {0, 1, 1}}),
      ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}),
      ideal(3, {{1, 1, 1}}),
      ideal(3, {{2, 1, 0}, {0, 1, 2}}),
  };
}

}  // namespace

TEST_CASE("definition search on the running example") {
  auto w = v_number_definition(running_example());
  CHECK(w.degree == 3);
  CHECK(colon(running_example(), w.f) == prime_ideal(RingDescriptor::standard(3), w.prime));
  // Exhaustive: no witness below degree 3.
  auto caps = max_exponents(running_example());
  for (Exponent d = 0; d < 3; ++d)
    detail::for_each_box_monomial_of_degree(caps, d, [&](const Monomial& f) {
      auto q = colon(running_example(), f);
      CHECK((q.is_unit() || !as_monomial_prime(q).has_value()));
      return false;
    });
}

TEST_CASE("prime ideals have v-number zero with witness one") {
  auto w = v_number_definition(ideal(2, {{1, 0}, {0, 1}}));
  CHECK(w.degree == 0);
  CHECK(w.f == Monomial::one(2));
  CHECK(w.prime == PrimeSupport({0, 1}));
}

TEST_CASE("single quadratic generator") {
  CHECK(v_number_definition(ideal(2, {{1, 1}})).degree == 1);
  CHECK(v_number_definition(ideal(1, {{2}})).degree == 1);
}

TEST_CASE("local v-numbers") {
  auto I = running_example();
  CHECK(v_number_local(I, PrimeSupport({0, 1, 2})) == 3);
  CHECK(v_number_local(I, PrimeSupport({0, 1})) == 3);
  CHECK(v_number_local(ideal(2, {{1, 1}}), PrimeSupport({0})) == 1);
  CHECK(v_number_local(ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}), PrimeSupport({0, 2})) == 2);
  CHECK_THROWS_AS(v_number_local(ideal(2, {{1, 1}}), PrimeSupport({0, 1})),
                  std::invalid_argument);
  // v is the minimum of the local values.
  for (const auto& J : ideal_pool()) {
    auto def = v_number_definition(J);
    Exponent best = -1;
    for (const auto& p : associated_primes(J).primes) {
      Exponent lv = v_number_local(J, p);
      if (best < 0 || lv < best) best = lv;
    }
    CHECK(def.degree == best);
  }
}

TEST_CASE("stable-set formula on the figure graphs") {
  auto wg = v_number_squarefree(g5());
  CHECK(wg.degree == 2);
  auto wh = v_number_squarefree(h5());
  CHECK(wh.degree == 1);
  CHECK(v_number_squarefree(Clutter(2, {detail::bit(0) | detail::bit(1)})).degree == 1);
  // Witness certifies itself through the colon.
  auto I = edge_ideal(g5());
  CHECK(colon(I, wg.f) == prime_ideal(I.ring(), wg.prime));
}

TEST_CASE("stable-set formula matches definition search on all small graphs") {
  for (const auto& g : all_graphs(5)) {
    auto I = edge_ideal(g);
    CHECK(v_number_squarefree(g).degree == v_number_definition(I).degree);
  }
}

TEST_CASE("stable-set formula matches definition search on all 4-vertex clutters") {
  // Every antichain of non-empty subsets of {1..4}: brute force over the 15
  // candidate edges, keeping the inclusion-free families.
  std::vector<VertexSet> subsets;
  for (VertexSet s = 1; s < 16; ++s) subsets.push_back(s);
  std::uint64_t count = 0;
  for (std::uint32_t pick = 1; pick < (1u << 15); ++pick) {
    std::vector<VertexSet> edges;
    for (int i = 0; i < 15; ++i)
      if (pick & (1u << i)) edges.push_back(subsets[static_cast<std::size_t>(i)]);
    bool antichain = true;
    for (VertexSet e : edges)
      for (VertexSet f : edges)
        if (e != f && (e & f) == e) antichain = false;
    if (!antichain) continue;
    ++count;
    Clutter c(4, edges);
    CHECK(v_number_squarefree(c).degree == v_number_definition(edge_ideal(c)).degree);
  }
  CHECK(count == 166);  // antichains of non-empty subsets of a 4-set, minus the empty family
}

TEST_CASE("polarization route") {
  CHECK(v_number_via_polarization(running_example()) == 3);
  CHECK(v_number_via_polarization(ideal(1, {{2}})) == 1);
  // Square-free: polarization is a renaming.
  for (const auto& g : all_graphs(4)) {
    auto I = edge_ideal(g);
    CHECK(v_number_via_polarization(I) == v_number_squarefree(g).degree);
  }
}

TEST_CASE("alpha-quotient formula") {
  auto I = running_example();
  Exponent best = -1;
  for (const auto& p : associated_primes(I).primes) {
    Exponent a = alpha_quotient(I, p);
    if (best < 0 || a < best) best = a;
  }
  CHECK(best == 3);

  auto prime = ideal(2, {{1, 0}, {0, 1}});
  CHECK(alpha_quotient(prime, PrimeSupport({0, 1})) == 0);
  CHECK(alpha_quotient(ideal(2, {{1, 1}}), PrimeSupport({0})) == 1);
  CHECK_THROWS_AS(alpha_quotient(ideal(2, {{1, 1}}), PrimeSupport({0, 1})),
                  std::invalid_argument);

  // Box-search oracle: alpha is the least degree in (I : p) \ I.
  for (const auto& J : ideal_pool()) {
    for (const auto& p : associated_primes(J).primes) {
      auto q = colon(J, prime_ideal(J.ring(), p));
      auto caps = max_exponents(J);
      Exponent total = 0;
      for (Exponent c : caps) total += c;
      std::optional<Exponent> brute;
      for (Exponent d = 0; d <= total && !brute; ++d)
        detail::for_each_box_monomial_of_degree(caps, d, [&](const Monomial& f) {
          if (q.contains(f) && !J.contains(f)) {
            brute = d;
            return true;
          }
          return false;
        });
      REQUIRE(brute.has_value());
      CHECK(alpha_quotient(J, p) == *brute);
    }
  }
}

TEST_CASE("v_all_methods consistency on the pool") {
  for (const auto& I : ideal_pool()) {
    auto r = v_all_methods(I);
    CHECK(r.via_polarization <= r.definition.degree);
    if (!r.has_embedded) CHECK(r.via_polarization == r.definition.degree);
    if (I.is_squarefree()) {
      REQUIRE(r.squarefree.has_value());
      CHECK(*r.squarefree == r.definition.degree);
    }
  }
  auto r = v_all_methods(running_example());
  CHECK(r.definition.degree == 3);
  CHECK(r.via_polarization == 3);
  CHECK(r.alpha == 3);
  CHECK(r.has_embedded);
  CHECK(r.polarization_hypothesis);  // equality holds despite the embedded prime
}

TEST_CASE("box-cap soundness: colons ignore exponents beyond the caps") {
  for (const auto& I : ideal_pool()) {
    auto caps = max_exponents(I);
    const int n = I.vars();
    // Probe a few monomials beyond the caps.
    std::vector<Monomial> probes;
    for (int i = 0; i < n; ++i) {
      std::vector<Exponent> e(caps.begin(), caps.end());
      e[static_cast<std::size_t>(i)] += 3;
      probes.emplace_back(std::move(e));
    }
    std::vector<Exponent> big(static_cast<std::size_t>(n), 7);
    probes.emplace_back(std::move(big));
    for (const auto& f : probes) {
      std::vector<Exponent> capped(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        capped[static_cast<std::size_t>(i)] = std::min(f.exponent(i), caps[static_cast<std::size_t>(i)]);
      CHECK(colon(I, f) == colon(I, Monomial(capped)));
    }
  }
}

TEST_CASE("colon bound: v(I) <= v(I:f) + deg f for f outside I") {
  for (const auto& I : ideal_pool()) {
    auto caps = max_exponents(I);
    Exponent total = 0;
    for (Exponent c : caps) total += c;
    Exponent v = v_number_definition(I).degree;
    for (Exponent d = 0; d <= total; ++d)
      detail::for_each_box_monomial_of_degree(caps, d, [&](const Monomial& f) {
        if (I.contains(f)) return false;
        auto q = colon(I, f);
        Exponent vq = q.is_unit() ? 0 : v_number_definition(q).degree;
        CHECK(v <= vq + f.degree());
        return false;
      });
  }
}

TEST_CASE("clutter colon and deletion existentials") {
  // For edge ideals: some variable has v(I:x) <= v(I); if v >= 2 some
  // variable strictly drops it; some vertex deletion does not raise it.
  for (const auto& g : all_graphs(5)) {
    auto I = edge_ideal(g);
    Exponent v = v_number_squarefree(g).degree;

    bool some_not_above = false;
    bool some_strict = false;
    for (int i = 0; i < g.n; ++i) {
      auto xi = Monomial::variable(g.n, i);
      if (I.contains(xi)) continue;
      auto q = colon(I, xi);
      Exponent vq = q.is_unit() ? 0 : v_number_definition(q).degree;
      CHECK(v <= vq + 1);  // colon bound specialization
      if (vq <= v) some_not_above = true;
      if (vq < v) some_strict = true;
    }
    CHECK(some_not_above);
    if (v >= 2) CHECK(some_strict);

    bool deletion_ok = false;
    for (int i = 0; i < g.n; ++i) {
      auto sub = delete_vertices(g, detail::bit(i));
      Exponent vd = sub.num_edges() == 0 ? 0 : v_number_squarefree(sub).degree;
      if (vd <= v) deletion_ok = true;
    }
    CHECK(deletion_ok);
  }
}

TEST_CASE("v is at most the covering number for graphs") {
  for (const auto& g : all_graphs(5)) {
    CHECK(v_number_squarefree(g).degree <=
          cover_numbers(g.to_clutter()).alpha0);
  }
}

TEST_CASE("additivity over disjoint variables") {
  auto join = [](const MonomialIdeal& a, const MonomialIdeal& b) {
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
    return MonomialIdeal(RingDescriptor::standard(n), std::move(gens));
  };
  std::vector<MonomialIdeal> pool = {ideal(2, {{1, 1}}), ideal(2, {{2, 0}, {1, 1}}),
                                     ideal(1, {{2}}), ideal(2, {{1, 0}, {0, 1}})};
  for (const auto& a : pool)
    for (const auto& b : pool) {
      auto sum = join(a, b);
      CHECK(v_number_definition(sum).degree ==
            v_number_definition(a).degree + v_number_definition(b).degree);
    }
}

TEST_CASE("complete intersection formula") {
  // |G(I)| = ht(I) forces v = sum(deg) - count.
  std::vector<MonomialIdeal> cis = {
      ideal(2, {{1, 1}}),
      ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}),
      ideal(3, {{2, 1, 0}, {0, 0, 3}}),
      ideal(1, {{4}}),
      ideal(4, {{1, 1, 1, 0}, {0, 0, 0, 2}}),
  };
  for (const auto& I : cis) {
    REQUIRE(height(I) == I.num_generators());
    Exponent expected = -I.num_generators();
    for (const auto& g : I.generators()) expected += g.degree();
    CHECK(v_number_definition(I).degree == expected);
    CHECK_FALSE(has_embedded_prime(I));
  }
}

TEST_CASE("definition-based v equals clique domination of the line graph") {
  for (const auto& g : all_graphs(4)) {
    if (!is_connected(g)) continue;
    CHECK(v_number_squarefree(g).degree == clique_domination_number(line_graph(g)));
  }
  CHECK(v_number_squarefree(g5()).degree == clique_domination_number(line_graph(g5())));
}

TEST_CASE("witness tie-break is the lexicographically least monomial") {
  auto w = v_number_definition(running_example());
  // x2^2*x3 precedes x1*x2*x3 in the exponent-vector order; both certify.
  CHECK(w.f == Monomial({0, 2, 1}));
  CHECK(w.prime == PrimeSupport({0, 2}));
}

TEST_CASE("v rejects the unit ideal") {
  CHECK_THROWS_AS(v_number_definition(MonomialIdeal::unit(RingDescriptor::standard(2))),
                  std::invalid_argument);
}
