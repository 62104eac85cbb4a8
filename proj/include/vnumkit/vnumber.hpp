#pragma once

#include "vnumkit/clutter.hpp"
#include "vnumkit/decomposition.hpp"
#include "vnumkit/polarization.hpp"

namespace vnumkit {

/// Certificate for a v-number value: a monomial f of the stated degree with
/// (I : f) equal to the stated monomial prime.
struct VWitness {
  Exponent degree = 0;
  Monomial f;
  PrimeSupport prime;
};

/// v(I) by definition: the smallest degree of a monomial f with (I : f) a
/// monomial prime. The search runs over the max_exponents box in degree
/// order (capping a witness coordinatewise never changes the colon and never
/// raises the degree), lexicographically least witness among ties. A prime
/// ideal yields degree 0 with witness 1.
inline VWitness v_number_definition(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("v_number_definition: proper ideal required");
  const auto caps = max_exponents(I);
  Exponent total = 0;
  for (Exponent c : caps) total += c;

  std::optional<VWitness> found;
  for (Exponent d = 0; d <= total && !found; ++d) {
    detail::for_each_box_monomial_of_degree(caps, d, [&](const Monomial& f) {
      if (I.contains(f)) return false;
      auto q = colon(I, f);
      if (auto p = as_monomial_prime(q)) {
        found = VWitness{d, f, *p};
        return true;
      }
      return false;
    });
  }
  if (!found) throw std::logic_error("v_number_definition: no prime colon in the exponent box");
  return *found;
}

namespace detail {

inline bool is_minimal_cover(const Clutter& c, VertexSet s) {
  if (!is_vertex_cover(c, s)) return false;
  for (int v : to_vertices(s))
    if (is_vertex_cover(c, s & ~bit(v))) return false;
  return true;
}

/// Smallest stable set (indicator-lex least among ties) whose neighbor set
/// equals the given minimal cover. For square-free ideals this is the local
/// v-number search: (I : X_A) = <p> exactly when A is stable, N(A) = supp(p)
/// and supp(p) is a cover.
inline std::optional<VertexSet> min_stable_with_neighbor(const Clutter& c, VertexSet cover) {
  for (int k = 0; k <= c.n; ++k) {
    std::optional<VertexSet> res;
    std::function<bool(int, int, VertexSet)> rec = [&](int pos, int left, VertexSet a) -> bool {
      if (left == 0) {
        if (neighbor_set(c, a) == cover) {
          res = a;
          return true;
        }
        return false;
      }
      if (c.n - pos < left) return false;
      if (rec(pos + 1, left, a)) return true;
      VertexSet na = a | bit(pos);
      return is_stable(c, na) && rec(pos + 1, left - 1, na);
    };
    rec(0, k, 0);
    if (res) return res;
  }
  return std::nullopt;
}

}  // namespace detail

/// v_p for a square-free ideal given as its clutter; p must be a minimal
/// vertex cover (= associated prime).
inline VWitness v_local_squarefree(const Clutter& c, const PrimeSupport& p) {
  VertexSet cover = 0;
  for (int v : p.vars) {
    if (v >= c.n) throw std::invalid_argument("v_local_squarefree: vertex out of range");
    cover |= detail::bit(v);
  }
  if (!detail::is_minimal_cover(c, cover))
    throw std::invalid_argument("v_local_squarefree: prime is not associated to the ideal");
  auto a = detail::min_stable_with_neighbor(c, cover);
  if (!a) throw std::logic_error("v_local_squarefree: no stable set reaches the cover");
  std::vector<Exponent> exp(static_cast<std::size_t>(c.n), 0);
  for (int v : detail::to_vertices(*a)) exp[static_cast<std::size_t>(v)] = 1;
  return VWitness{detail::popcount(*a), Monomial(std::move(exp)), p};
}

/// v_p(I): same search restricted to (I : f) = <p>; p must be associated.
/// Square-free ideals dispatch to the stable-set route, which avoids both
/// the decomposition and the exponential witness box.
inline Exponent v_number_local(const MonomialIdeal& I, const PrimeSupport& p) {
  if (I.is_unit()) throw std::invalid_argument("v_number_local: proper ideal required");
  if (I.is_squarefree()) return v_local_squarefree(clutter_of(I), p).degree;
  if (!associated_primes(I).is_associated(p))
    throw std::invalid_argument("v_number_local: prime is not associated to the ideal");
  auto w = detail::min_prime_witness(I, p);
  if (!w) throw std::logic_error("v_number_local: no witness in the exponent box");
  return w->degree();
}

namespace detail {

/// First stable set of the given size (indicator-lex order) whose neighbor
/// set is a vertex cover. Lemma-style minimality of the cover is automatic.
inline std::optional<VertexSet> first_stable_with_cover_neighborhood(const Clutter& c, int k) {
  std::optional<VertexSet> res;
  std::function<bool(int, int, VertexSet)> rec = [&](int pos, int left, VertexSet a) -> bool {
    if (left == 0) {
      if (is_vertex_cover(c, neighbor_set(c, a))) {
        res = a;
        return true;
      }
      return false;
    }
    if (c.n - pos < left) return false;
    if (rec(pos + 1, left, a)) return true;
    VertexSet na = a | bit(pos);
    if (is_stable(c, na) && rec(pos + 1, left - 1, na)) return true;
    return false;
  };
  rec(0, k, 0);
  return res;
}

}  // namespace detail

/// The stable-set formula for square-free ideals: the smallest stable set A
/// whose neighbor set is a (then automatically minimal) vertex cover;
/// witness X_A. Prime edge ideals (every edge a single vertex) get 0.
inline VWitness v_number_squarefree(const Clutter& c) {
  MonomialIdeal I = edge_ideal(c);  // also validates >= 1 edge
  if (auto p = as_monomial_prime(I)) return VWitness{0, Monomial::one(c.n), *p};

  for (int k = 1; k <= c.n; ++k) {
    if (auto a = detail::first_stable_with_cover_neighborhood(c, k)) {
      std::vector<Exponent> exp(static_cast<std::size_t>(c.n), 0);
      for (int v : detail::to_vertices(*a)) exp[static_cast<std::size_t>(v)] = 1;
      return VWitness{k, Monomial(std::move(exp)),
                      PrimeSupport(detail::to_vertices(neighbor_set(c, *a)))};
    }
  }
  throw std::logic_error("v_number_squarefree: no stable set with covering neighborhood");
}

inline VWitness v_number_squarefree(const Graph& g) { return v_number_squarefree(g.to_clutter()); }

/// v(I(pol)) through the stable-set formula on the polarized clutter. Equals
/// v(I) whenever I has no embedded prime; a lower bound in general.
inline Exponent v_number_via_polarization(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("v_number_via_polarization: proper ideal required");
  auto [ip, ctx] = polarize_ideal(I);
  return v_number_squarefree(clutter_of(ip)).degree;
}

/// alpha((I : <p>)/I): least degree of a monomial in the colon but not in I.
/// Attained at a minimal generator of the colon, since any dominating
/// generator of a member outside I is itself outside I.
inline Exponent alpha_quotient(const MonomialIdeal& I, const PrimeSupport& p) {
  if (I.is_unit()) throw std::invalid_argument("alpha_quotient: proper ideal required");
  if (I.is_squarefree()) {
    // Associated primes of an edge ideal are the minimal covers; checking
    // that sidesteps the decomposition.
    Clutter c = clutter_of(I);
    VertexSet cover = 0;
    for (int v : p.vars) {
      if (v >= c.n) throw std::invalid_argument("alpha_quotient: vertex out of range");
      cover |= detail::bit(v);
    }
    if (!detail::is_minimal_cover(c, cover))
      throw std::invalid_argument("alpha_quotient: prime is not associated to the ideal");
  } else if (!associated_primes(I).is_associated(p))
    throw std::invalid_argument("alpha_quotient: prime is not associated to the ideal");
  MonomialIdeal q = colon(I, prime_ideal(I.ring(), p));
  std::optional<Exponent> best;
  for (const Monomial& g : q.generators())
    if (!I.contains(g) && (!best || g.degree() < *best)) best = g.degree();
  if (!best) throw std::logic_error("alpha_quotient: colon equals the ideal for an associated prime");
  return *best;
}

/// Outcome of running every applicable v-number route on one ideal, with
/// the cross-route consistency rules enforced. A violation of a proved
/// relation throws; the alpha-formula route is recorded but only flagged,
/// since its hypothesis can fail.
struct VMethodsReport {
  VWitness definition;
  std::optional<Exponent> squarefree;    // set when I is square-free
  Exponent via_polarization = 0;
  Exponent alpha = 0;                    // min over Ass(I) of alpha_quotient
  bool has_embedded = false;
  bool polarization_hypothesis = false;  // some v-achieving prime of I(pol) depolarizes
                                         // with no embedded prime strictly above it
  bool weak_hypothesis = false;          // same test over all of Ass(I(pol))
  bool alpha_agrees = false;
  bool polarization_agrees = false;
  AssociatedPrimeReport ass;

  explicit VMethodsReport(VWitness def) : definition(std::move(def)) {}
};

inline VMethodsReport v_all_methods(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("v_all_methods: proper ideal required");
  VMethodsReport r(v_number_definition(I));
  r.ass = associated_primes(I);
  r.has_embedded = !r.ass.embedded.empty();

  if (I.is_squarefree()) {
    r.squarefree = v_number_squarefree(clutter_of(I)).degree;
    if (*r.squarefree != r.definition.degree)
      throw std::logic_error("v_all_methods: stable-set formula disagrees with definition search");
  }

  auto [ip, ctx] = polarize_ideal(I);
  Clutter cp = clutter_of(ip);
  r.via_polarization = v_number_squarefree(cp).degree;
  r.polarization_agrees = r.via_polarization == r.definition.degree;
  if (r.via_polarization > r.definition.degree)
    throw std::logic_error("v_all_methods: polarized v-number exceeds the definition value");
  if (!r.has_embedded && !r.polarization_agrees)
    throw std::logic_error("v_all_methods: polarization equality fails without embedded primes");

  // Hypothesis scan: for each associated prime of I(pol) (minimal cover of
  // the polarized clutter), depolarize its support and ask for an embedded
  // prime of I strictly above it.
  auto strictly_embedded_above = [&](const PrimeSupport& s) {
    return std::any_of(r.ass.embedded.begin(), r.ass.embedded.end(),
                       [&](const PrimeSupport& q) { return q != s && q.contains(s); });
  };
  auto depolarized_support = [&](VertexSet cover) {
    std::vector<int> src;
    for (int t : detail::to_vertices(cover))
      src.push_back(ctx.slot_of[static_cast<std::size_t>(t)].first);
    return PrimeSupport(std::move(src));
  };
  for (VertexSet cover : cover_numbers(cp).minimal_covers) {
    PrimeSupport s = depolarized_support(cover);
    if (strictly_embedded_above(s)) continue;
    r.weak_hypothesis = true;
    // Exact form: the prime must also achieve v(I(pol)). A stable set of
    // that exact size with this cover as neighbor set certifies it.
    int k = static_cast<int>(r.via_polarization);
    bool achieves = false;
    std::function<bool(int, int, VertexSet)> rec = [&](int pos, int left, VertexSet a) -> bool {
      if (left == 0) return is_stable(cp, a) && is_vertex_cover(cp, neighbor_set(cp, a)) &&
                            neighbor_set(cp, a) == cover;
      if (cp.n - pos < left) return false;
      if (rec(pos + 1, left, a)) return true;
      VertexSet na = a | detail::bit(pos);
      return is_stable(cp, na) && rec(pos + 1, left - 1, na);
    };
    achieves = rec(0, k, 0);
    if (achieves) r.polarization_hypothesis = true;
  }
  if (r.polarization_hypothesis && !r.polarization_agrees)
    throw std::logic_error("v_all_methods: polarization equality fails under its hypothesis");

  std::optional<Exponent> alpha_min;
  for (const PrimeSupport& p : r.ass.primes) {
    Exponent a = alpha_quotient(I, p);
    if (!alpha_min || a < *alpha_min) alpha_min = a;
  }
  r.alpha = *alpha_min;
  r.alpha_agrees = r.alpha == r.definition.degree;
  return r;
}

}  // namespace vnumkit
