#pragma once

#include "vnumkit/ideal.hpp"

namespace vnumkit {

/// Bookkeeping for the substitution x_i^j-th slot <-> x_{i,j}. Target
/// variables are ordered by (i, j); a source variable with cap 0 simply
/// contributes no slots.
struct PolarizationContext {
  RingDescriptor source;
  RingDescriptor target;
  std::vector<Exponent> caps;                    // r_i per source variable
  std::vector<std::pair<int, int>> slot_of;      // target position -> (source var, copy), 0-based
  std::vector<std::vector<int>> positions;       // source var -> target positions
};

inline PolarizationContext make_polarization_context(const RingDescriptor& source,
                                                     std::vector<Exponent> caps) {
  if (static_cast<int>(caps.size()) != source.size())
    throw std::invalid_argument("polarization: cap vector does not match the ring");
  PolarizationContext ctx;
  ctx.source = source;
  ctx.caps = std::move(caps);
  ctx.positions.resize(static_cast<std::size_t>(source.size()));
  std::vector<std::string> names;
  for (int i = 0; i < source.size(); ++i) {
    for (Exponent j = 1; j <= ctx.caps[static_cast<std::size_t>(i)]; ++j) {
      ctx.positions[static_cast<std::size_t>(i)].push_back(static_cast<int>(names.size()));
      ctx.slot_of.emplace_back(i, static_cast<int>(j) - 1);
      names.push_back(source.names[static_cast<std::size_t>(i)] + "_" + std::to_string(j));
    }
  }
  if (names.empty())
    throw std::invalid_argument("polarization: all caps are zero");
  ctx.target = RingDescriptor(std::move(names));
  return ctx;
}

/// x_i^{a_i} |-> x_{i,1} ... x_{i,a_i}; requires a_i <= r_i throughout.
inline Monomial polarize_monomial(const PolarizationContext& ctx, const Monomial& f) {
  if (f.vars() != ctx.source.size())
    throw std::invalid_argument("ambient mismatch: monomial not in the polarization source ring");
  std::vector<Exponent> e(static_cast<std::size_t>(ctx.target.size()), 0);
  for (int i = 0; i < f.vars(); ++i) {
    Exponent a = f.exponent(i);
    if (a > ctx.caps[static_cast<std::size_t>(i)])
      throw std::invalid_argument("polarize_monomial: exponent exceeds the polarization cap");
    for (Exponent j = 0; j < a; ++j)
      e[static_cast<std::size_t>(ctx.positions[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] = 1;
  }
  return Monomial(std::move(e));
}

/// Substitution x_{i,j} -> x_i; defined for every target monomial.
inline Monomial depolarize_monomial(const PolarizationContext& ctx, const Monomial& g) {
  if (g.vars() != ctx.target.size())
    throw std::invalid_argument("ambient mismatch: monomial not in the polarization target ring");
  std::vector<Exponent> e(static_cast<std::size_t>(ctx.source.size()), 0);
  for (int t = 0; t < g.vars(); ++t)
    e[static_cast<std::size_t>(ctx.slot_of[static_cast<std::size_t>(t)].first)] += g.exponent(t);
  return Monomial(std::move(e));
}

/// I(pol): square-free, one generator per generator of I, degrees preserved.
inline std::pair<MonomialIdeal, PolarizationContext> polarize_ideal(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("polarize_ideal: proper ideal required");
  PolarizationContext ctx = make_polarization_context(I.ring(), max_exponents(I));
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(polarize_monomial(ctx, g));
  return {MonomialIdeal(ctx.target, std::move(gens)), ctx};
}

/// When (I : f) = <x_{s_1},...,x_{s_k}> and f fits the caps, the polarized
/// colon (I(pol) : f(pol)) is the prime on the slots (s_i, b_i) with
/// b_i - 1 = the power of x_{s_i} in f. Returns that target-ring support.
inline PrimeSupport polarized_colon_prime(const PolarizationContext& ctx, const MonomialIdeal& I,
                                          const Monomial& f) {
  auto q = colon(I, f);
  auto p = as_monomial_prime(q);
  if (!p || q.is_unit())
    throw std::invalid_argument("polarized_colon_prime: (I : f) is not a monomial prime");
  std::vector<int> slots;
  for (int s : p->vars) {
    Exponent b = f.exponent(s) + 1;
    if (b > ctx.caps[static_cast<std::size_t>(s)])
      throw std::invalid_argument("polarized_colon_prime: monomial exceeds the polarization caps");
    slots.push_back(ctx.positions[static_cast<std::size_t>(s)][static_cast<std::size_t>(b - 1)]);
  }
  return PrimeSupport(std::move(slots));
}

inline PrimeSupport polarized_colon_prime(const MonomialIdeal& I, const Monomial& f) {
  PolarizationContext ctx = make_polarization_context(I.ring(), max_exponents(I));
  return polarized_colon_prime(ctx, I, f);
}

}  // namespace vnumkit
