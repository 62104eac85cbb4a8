#pragma once

#include <chrono>

#include "vnumkit/verify.hpp"

namespace vnumkit {

namespace detail {

template <typename F>
auto timed(Json& timings, const char* label, F&& f) {
  auto start = std::chrono::steady_clock::now();
  auto result = f();
  auto stop = std::chrono::steady_clock::now();
  timings[label] = std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

}  // namespace detail

/// One-shot invariant report for a monomial ideal: every v-number route,
/// the local v-numbers with their witnesses, the associated primes, and the
/// homological data (through polarization when the ideal is not square-free;
/// skipped with a marker when a size guard bites).
inline Json report_for_ideal(const MonomialIdeal& I) {
  Json out;
  Json timings = Json::object();
  out["ring"] = I.vars();
  out["ideal"] = format_ideal(I);
  out["squarefree"] = I.is_squarefree();

  auto methods = detail::timed(timings, "v_all_methods_ms", [&]() { return v_all_methods(I); });
  Json v;
  v["definition"] = methods.definition.degree;
  v["witness"] = format_monomial(I.ring(), methods.definition.f);
  v["prime"] = prime_to_json(methods.definition.prime);
  if (methods.squarefree) v["squarefree"] = *methods.squarefree;
  v["polarization"] = methods.via_polarization;
  v["alpha"] = methods.alpha;
  v["alpha_agrees"] = methods.alpha_agrees;
  v["polarization_hypothesis"] = methods.polarization_hypothesis;
  out["v"] = v;

  Json ass = Json::array();
  Json locals = Json::array();
  detail::timed(timings, "local_v_ms", [&]() {
    for (const auto& p : methods.ass.primes) {
      ass.push_back(prime_to_json(p));
      Json entry;
      entry["prime"] = prime_to_json(p);
      Monomial w = witness_for_prime(I, p);
      entry["v_local"] = w.degree();
      entry["witness"] = format_monomial(I.ring(), w);
      locals.push_back(entry);
    }
    return 0;
  });
  out["ass"] = ass;
  Json embedded = Json::array();
  for (const auto& p : methods.ass.embedded) embedded.push_back(prime_to_json(p));
  out["embedded"] = embedded;
  out["has_embedded_prime"] = methods.has_embedded;
  out["v_local"] = locals;
  out["height"] = height(I);
  out["dim"] = krull_dim(I);

  Exponent polarized_size = 0;
  for (Exponent c : max_exponents(I)) polarized_size += c;
  if (polarized_size <= homology_guards().betti) {
    detail::timed(timings, "homology_ms", [&]() {
      out["reg"] = regularity(I);
      out["pd"] = projective_dimension(I);
      out["depth"] = depth(I);
      out["cohen_macaulay"] = is_cohen_macaulay(I);
      return 0;
    });
  } else {
    out["reg"] = nullptr;
    out["pd"] = nullptr;
    out["depth"] = nullptr;
    out["cohen_macaulay"] = nullptr;
    out["homology_skipped"] = "size guard: polarized ring has " +
                              std::to_string(polarized_size) + " variables";
  }
  out["timings"] = timings;
  return out;
}

/// Clutter (and graph) report: the ideal-side data plus the combinatorial
/// invariants and the dual v-number.
inline Json report_for_clutter(const Clutter& c, bool graph_case) {
  Json out;
  Json timings = Json::object();
  MonomialIdeal I = edge_ideal(c);
  out["n"] = c.n;
  out["edges"] = clutter_to_json(c)["edges"];
  out["connected"] = is_connected(c);

  auto w = detail::timed(timings, "v_ms", [&]() { return v_number_squarefree(c); });
  Json v;
  v["squarefree"] = w.degree;
  v["witness"] = format_monomial(I.ring(), w.f);
  v["prime"] = prime_to_json(w.prime);
  // Polarizing a square-free ideal only renames variables, but run the route
  // anyway as a cross-check.
  v["polarization"] = detail::timed(timings, "v_polarization_ms",
                                    [&]() { return v_number_via_polarization(I); });
  if (v["polarization"] != v["squarefree"])
    throw std::logic_error("report: polarization route disagrees on a square-free ideal");

  auto cov = detail::timed(timings, "covers_ms", [&]() { return cover_numbers(c); });
  out["alpha0"] = cov.alpha0;
  out["beta0"] = cov.beta0;

  if (c.n <= 12) {
    auto dw = detail::timed(timings, "v_definition_ms",
                            [&]() { return v_number_definition(I); });
    v["definition"] = dw.degree;
    if (dw.degree != w.degree)
      throw std::logic_error("report: definition search disagrees with the stable-set formula");
    Exponent alpha_best = -1;
    detail::timed(timings, "v_alpha_ms", [&]() {
      for (VertexSet cover : cov.minimal_covers) {
        Exponent a = alpha_quotient(I, PrimeSupport(detail::to_vertices(cover)));
        if (alpha_best < 0 || a < alpha_best) alpha_best = a;
      }
      return 0;
    });
    v["alpha"] = alpha_best;
  } else {
    v["definition"] = nullptr;
    v["alpha"] = nullptr;
    v["search_skipped"] = "size guard: " + std::to_string(c.n) + " vertices";
  }
  out["v"] = v;

  Json ass = Json::array();
  Json locals = Json::array();
  detail::timed(timings, "local_v_ms", [&]() {
    for (VertexSet cover : cov.minimal_covers) {
      PrimeSupport p(detail::to_vertices(cover));
      ass.push_back(prime_to_json(p));
      Json entry;
      entry["prime"] = prime_to_json(p);
      auto lw = v_local_squarefree(c, p);
      entry["v_local"] = lw.degree;
      entry["witness"] = format_monomial(I.ring(), lw.f);
      locals.push_back(entry);
    }
    return 0;
  });
  out["ass"] = ass;
  out["embedded"] = Json::array();  // square-free: all associated primes minimal
  out["has_embedded_prime"] = false;
  out["v_local"] = locals;

  if (graph_case) {
    Graph g = Graph::from_clutter(c);
    out["im"] = detail::timed(timings, "im_ms", [&]() { return induced_matching_number(g); });
  } else {
    out["induced_matching_weight"] =
        detail::timed(timings, "im_ms", [&]() { return induced_matching_weight(c); });
  }

  out["dim"] = krull_dim(c);
  if (c.n <= homology_guards().betti) {
    detail::timed(timings, "homology_ms", [&]() {
      out["reg"] = regularity(I);
      out["pd"] = projective_dimension(I);
      out["depth"] = depth(I);
      out["cohen_macaulay"] = is_cohen_macaulay(I);
      auto dual = alexander_dual(I);
      out["dual_v"] = v_number_squarefree(clutter_of(dual)).degree;
      return 0;
    });
  } else {
    out["reg"] = nullptr;
    out["pd"] = nullptr;
    out["depth"] = nullptr;
    out["cohen_macaulay"] = nullptr;
    out["dual_v"] = nullptr;
    out["homology_skipped"] = "size guard: " + std::to_string(c.n) + " vertices";
  }
  out["timings"] = timings;
  return out;
}

}  // namespace vnumkit
