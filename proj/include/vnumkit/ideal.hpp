#pragma once

#include <optional>
#include <set>

#include "vnumkit/monomial.hpp"

namespace vnumkit {

/// The monomial prime <x_s : s in vars>. Indices are 0-based and sorted.
struct PrimeSupport {
  std::vector<int> vars;

  PrimeSupport() = default;

  explicit PrimeSupport(std::vector<int> v) : vars(std::move(v)) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.empty()) throw std::invalid_argument("PrimeSupport: empty support");
    if (vars.front() < 0) throw std::invalid_argument("PrimeSupport: negative index");
  }

  int size() const { return static_cast<int>(vars.size()); }

  bool contains(int v) const {
    return std::binary_search(vars.begin(), vars.end(), v);
  }

  /// Set inclusion p >= q.
  bool contains(const PrimeSupport& q) const {
    return std::includes(vars.begin(), vars.end(), q.vars.begin(), q.vars.end());
  }

  friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) { return a.vars == b.vars; }
  friend bool operator!=(const PrimeSupport& a, const PrimeSupport& b) { return !(a == b); }
  friend bool operator<(const PrimeSupport& a, const PrimeSupport& b) { return a.vars < b.vars; }
};

namespace detail {

/// Divisibility-antichain of a non-empty generator list, in canonical
/// (lexicographic) order. Sorting by degree first makes the sweep linear in
/// the number of kept divisors.
inline std::vector<Monomial> antichain(std::vector<Monomial> gens) {
  if (gens.empty())
    throw std::invalid_argument("minimalize: empty generating set");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& k : kept)
      if (divides(k, g)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) {
    return a.exponents() < b.exponents();
  });
  return kept;
}

}  // namespace detail

/// A monomial ideal, held as its unique minimal generating set G(I) in
/// canonical order. The unit ideal is representable (as {1}) because colon
/// ideals produce it; operations that need a proper ideal reject it.
class MonomialIdeal {
 public:
  MonomialIdeal(RingDescriptor ring, std::vector<Monomial> gens)
      : ring_(std::move(ring)), gens_(detail::antichain(std::move(gens))) {
    for (const Monomial& g : gens_)
      if (g.vars() != ring_.size())
        throw std::invalid_argument("ambient mismatch: generator not in the given ring");
  }

  static MonomialIdeal unit(RingDescriptor ring) {
    int n = ring.size();
    return MonomialIdeal(std::move(ring), {Monomial::one(n)});
  }

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  int vars() const { return ring_.size(); }

  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
  }

  /// Membership: f lies in I iff some minimal generator divides f.
  bool contains(const Monomial& f) const {
    if (f.vars() != vars())
      throw std::invalid_argument("ambient mismatch: monomial not in the ideal's ring");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return divides(g, f); });
  }

  /// Ideal inclusion I >= J, i.e. every generator of J is a member of I.
  bool contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  RingDescriptor ring_;
  std::vector<Monomial> gens_;
};

/// Reduce an arbitrary generating set to the minimal one.
inline MonomialIdeal minimalize(RingDescriptor ring, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ring), std::move(gens));
}

/// True when a generator list is already a divisibility antichain without
/// repetition (used to warn about non-minimal parser input).
inline bool generators_minimal(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && divides(gens[i], gens[j])) return false;
  return true;
}

inline MonomialIdeal prime_ideal(const RingDescriptor& ring, const PrimeSupport& p) {
  std::vector<Monomial> gens;
  for (int v : p.vars) {
    if (v >= ring.size()) throw std::invalid_argument("prime_ideal: variable out of range");
    gens.push_back(Monomial::variable(ring.size(), v));
  }
  return MonomialIdeal(ring, std::move(gens));
}

/// (I : f) = < u / gcd(u, f) | u in G(I) >. Equals the unit ideal exactly
/// when f lies in I.
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f) {
  if (f.vars() != I.vars())
    throw std::invalid_argument("ambient mismatch: colon by monomial from another ring");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& u : I.generators()) gens.push_back(quotient_by_gcd(u, f));
  return MonomialIdeal(I.ring(), std::move(gens));
}

/// Intersection via the pairwise-lcm expansion, then minimalization.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.ring() == J.ring()))
    throw std::invalid_argument("ambient mismatch: intersecting ideals from different rings");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const Monomial& u : I.generators())
    for (const Monomial& v : J.generators()) gens.push_back(monomial_lcm(u, v));
  return MonomialIdeal(I.ring(), std::move(gens));
}

/// (I : J) as the intersection of (I : g) over g in G(J).
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.ring() == J.ring()))
    throw std::invalid_argument("ambient mismatch: colon by ideal from another ring");
  std::optional<MonomialIdeal> acc;
  for (const Monomial& g : J.generators()) {
    MonomialIdeal q = colon(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;  // G(J) is never empty
}

/// The support of I when I is a monomial prime (all generators single
/// variables); nothing otherwise.
inline std::optional<PrimeSupport> as_monomial_prime(const MonomialIdeal& I) {
  std::vector<int> vars;
  for (const Monomial& g : I.generators()) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(g.support().front());
  }
  return PrimeSupport(std::move(vars));
}

/// r_i = the highest power of x_i appearing in G(I); the box that bounds
/// every search this library performs over colon witnesses.
inline std::vector<Exponent> max_exponents(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("max_exponents: proper ideal required");
  std::vector<Exponent> r(static_cast<std::size_t>(I.vars()), 0);
  for (const Monomial& g : I.generators())
    for (int i = 0; i < I.vars(); ++i)
      r[static_cast<std::size_t>(i)] = std::max(r[static_cast<std::size_t>(i)], g.exponent(i));
  return r;
}

/// I + <extra monomials>, minimalized.
inline MonomialIdeal add_generators(const MonomialIdeal& I, const std::vector<Monomial>& extra) {
  std::vector<Monomial> gens = I.generators();
  for (const Monomial& m : extra) {
    if (m.vars() != I.vars())
      throw std::invalid_argument("ambient mismatch: added generator from another ring");
    gens.push_back(m);
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

}  // namespace vnumkit
