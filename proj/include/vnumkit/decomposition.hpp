#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>

#include "vnumkit/ideal.hpp"

namespace vnumkit {

/// An irreducible monomial ideal <x_i^{a_i} : i in support>, kept as the
/// sorted list of (variable, exponent) pairs with every exponent >= 1.
struct IrreducibleComponent {
  std::vector<std::pair<int, Exponent>> pure_powers;

  PrimeSupport support() const {
    std::vector<int> vars;
    vars.reserve(pure_powers.size());
    for (const auto& [v, e] : pure_powers) vars.push_back(v);
    return PrimeSupport(std::move(vars));
  }

  MonomialIdeal to_ideal(const RingDescriptor& ring) const {
    std::vector<Monomial> gens;
    for (const auto& [v, e] : pure_powers) {
      std::vector<Exponent> exp(static_cast<std::size_t>(ring.size()), 0);
      exp[static_cast<std::size_t>(v)] = e;
      gens.emplace_back(std::move(exp));
    }
    return MonomialIdeal(ring, std::move(gens));
  }

  /// Membership in a pure-power ideal: some listed power divides m.
  bool contains(const Monomial& m) const {
    for (const auto& [v, e] : pure_powers)
      if (m.exponent(v) >= e) return true;
    return false;
  }

  /// The exponent profile (a_i over all variables, 0 where absent); its
  /// lexicographic order is the canonical order on components.
  std::vector<Exponent> profile(int n) const {
    std::vector<Exponent> p(static_cast<std::size_t>(n), 0);
    for (const auto& [v, e] : pure_powers) p[static_cast<std::size_t>(v)] = e;
    return p;
  }

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.pure_powers == b.pure_powers;
  }
};

namespace detail {

inline std::string ideal_key(const MonomialIdeal& I) {
  std::string key;
  for (const Monomial& g : I.generators()) {
    for (Exponent e : g.exponents()) {
      key += std::to_string(e);
      key += ',';
    }
    key += ';';
  }
  return key;
}

inline void split_recurse(const MonomialIdeal& I,
                          std::unordered_map<std::string, std::vector<IrreducibleComponent>>& memo,
                          std::vector<IrreducibleComponent>& out) {
  const std::string key = ideal_key(I);
  if (auto it = memo.find(key); it != memo.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
    return;
  }

  // Find the first generator (canonical order) that is not a pure power.
  const Monomial* split_at = nullptr;
  for (const Monomial& g : I.generators())
    if (g.support().size() >= 2) {
      split_at = &g;
      break;
    }

  std::vector<IrreducibleComponent> local;
  if (split_at == nullptr) {
    // All generators are pure powers: I itself is irreducible. Minimality
    // guarantees at most one power per variable.
    IrreducibleComponent c;
    for (const Monomial& g : I.generators()) {
      int v = g.support().front();
      c.pure_powers.emplace_back(v, g.exponent(v));
    }
    std::sort(c.pure_powers.begin(), c.pure_powers.end());
    local.push_back(std::move(c));
  } else {
    // u = u1 * u2 with u1 the lowest-index pure-power block; recurse on
    // I + <u1> and I + <u2>.
    const Monomial& u = *split_at;
    int low = u.support().front();
    std::vector<Exponent> e1(static_cast<std::size_t>(u.vars()), 0);
    e1[static_cast<std::size_t>(low)] = u.exponent(low);
    std::vector<Exponent> e2 = u.exponents();
    e2[static_cast<std::size_t>(low)] = 0;
    split_recurse(add_generators(I, {Monomial(std::move(e1))}), memo, local);
    split_recurse(add_generators(I, {Monomial(std::move(e2))}), memo, local);
  }

  memo.emplace(key, local);
  out.insert(out.end(), local.begin(), local.end());
}

inline MonomialIdeal intersect_components(const RingDescriptor& ring,
                                          const std::vector<IrreducibleComponent>& comps,
                                          std::size_t skip) {
  std::optional<MonomialIdeal> acc;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i == skip) continue;
    MonomialIdeal q = comps[i].to_ideal(ring);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

}  // namespace detail

/// Unique irredundant intersection of irreducible monomial ideals, by the
/// standard coprime-generator splitting with memoization. Components come
/// back sorted by exponent profile.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_unit())
    throw std::invalid_argument("irreducible_decomposition: unit ideal has no decomposition");

  std::unordered_map<std::string, std::vector<IrreducibleComponent>> memo;
  std::vector<IrreducibleComponent> comps;
  detail::split_recurse(I, memo, comps);

  const int n = I.vars();
  auto profile_less = [n](const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.profile(n) < b.profile(n);
  };
  std::sort(comps.begin(), comps.end(), profile_less);
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

  // Irredundancy. When every component is prime (the square-free case) a
  // component is redundant exactly when it contains another one, which is a
  // pairwise support check. Otherwise drop a component when it contains the
  // intersection of all the others, repeating until stable; the irredundant
  // decomposition is unique, so scan order only affects intermediate states.
  bool all_prime = std::all_of(comps.begin(), comps.end(), [](const IrreducibleComponent& c) {
    return std::all_of(c.pure_powers.begin(), c.pure_powers.end(),
                       [](const auto& pe) { return pe.second == 1; });
  });
  if (all_prime) {
    std::vector<IrreducibleComponent> kept;
    for (const auto& c : comps) {
      PrimeSupport pc = c.support();
      bool redundant = std::any_of(comps.begin(), comps.end(), [&](const IrreducibleComponent& d) {
        if (d == c) return false;
        return pc.contains(d.support());
      });
      if (!redundant) kept.push_back(c);
    }
    return kept;
  }

  bool changed = true;
  while (changed && comps.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      MonomialIdeal rest = detail::intersect_components(I.ring(), comps, i);
      bool redundant = std::all_of(
          rest.generators().begin(), rest.generators().end(),
          [&](const Monomial& g) { return comps[i].contains(g); });
      if (redundant) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return comps;
}

/// Associated primes split into minimal and embedded.
struct AssociatedPrimeReport {
  std::vector<PrimeSupport> primes;    // in component order, deduplicated
  std::vector<PrimeSupport> minimal;
  std::vector<PrimeSupport> embedded;

  bool is_associated(const PrimeSupport& p) const {
    return std::find(primes.begin(), primes.end(), p) != primes.end();
  }
};

inline AssociatedPrimeReport associated_primes(const MonomialIdeal& I) {
  auto comps = irreducible_decomposition(I);
  AssociatedPrimeReport report;
  for (const auto& c : comps) {
    PrimeSupport p = c.support();
    if (!report.is_associated(p)) report.primes.push_back(p);
  }
  for (const PrimeSupport& p : report.primes) {
    bool minimal = std::none_of(report.primes.begin(), report.primes.end(),
                                [&](const PrimeSupport& q) { return q != p && p.contains(q); });
    (minimal ? report.minimal : report.embedded).push_back(p);
  }
  return report;
}

inline bool has_embedded_prime(const MonomialIdeal& I) {
  return !associated_primes(I).embedded.empty();
}

/// Height of I: smallest support size among its minimal primes.
inline Exponent height(const MonomialIdeal& I) {
  auto report = associated_primes(I);
  Exponent h = I.vars();
  for (const PrimeSupport& p : report.minimal) h = std::min<Exponent>(h, p.size());
  return h;
}

namespace detail {

/// Visit all exponent vectors within the cap box of the given total degree,
/// in ascending lexicographic order. Returns true when the visitor stops the
/// walk by returning true.
inline bool for_each_box_monomial_of_degree(const std::vector<Exponent>& caps, Exponent degree,
                                            const std::function<bool(const Monomial&)>& visit) {
  const int n = static_cast<int>(caps.size());
  std::vector<Exponent> cur(static_cast<std::size_t>(n), 0);
  std::function<bool(int, Exponent)> rec = [&](int pos, Exponent remaining) -> bool {
    if (pos == n) {
      if (remaining != 0) return false;
      return visit(Monomial(cur));
    }
    Exponent tail = 0;
    for (int j = pos + 1; j < n; ++j) tail += caps[static_cast<std::size_t>(j)];
    Exponent lo = std::max<Exponent>(0, remaining - tail);
    Exponent hi = std::min(caps[static_cast<std::size_t>(pos)], remaining);
    for (Exponent e = lo; e <= hi; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      if (rec(pos + 1, remaining - e)) return true;
    }
    cur[static_cast<std::size_t>(pos)] = 0;
    return false;
  };
  return rec(0, degree);
}

/// Smallest-degree monomial f inside the max_exponents box with
/// (I : f) = <p>, lexicographically least among ties. The box is complete:
/// capping any witness coordinatewise at the box never changes the colon
/// and never raises the degree.
inline std::optional<Monomial> min_prime_witness(const MonomialIdeal& I, const PrimeSupport& p) {
  const auto caps = max_exponents(I);
  const MonomialIdeal target = prime_ideal(I.ring(), p);
  Exponent total = 0;
  for (Exponent c : caps) total += c;

  std::optional<Monomial> found;
  for (Exponent d = 0; d <= total && !found; ++d) {
    for_each_box_monomial_of_degree(caps, d, [&](const Monomial& f) {
      if (I.contains(f)) return false;
      // Necessary condition, much cheaper than the full colon.
      for (int s : p.vars)
        if (!I.contains(f * Monomial::variable(I.vars(), s))) return false;
      if (colon(I, f) == target) {
        found = f;
        return true;
      }
      return false;
    });
  }
  return found;
}

}  // namespace detail

/// A minimum-degree monomial f with (I : f) = <p>; p must be associated.
inline Monomial witness_for_prime(const MonomialIdeal& I, const PrimeSupport& p) {
  if (!associated_primes(I).is_associated(p))
    throw std::invalid_argument("witness_for_prime: prime is not associated to the ideal");
  auto w = detail::min_prime_witness(I, p);
  if (!w) throw std::logic_error("witness_for_prime: no witness in the exponent box");
  return *w;
}

}  // namespace vnumkit
