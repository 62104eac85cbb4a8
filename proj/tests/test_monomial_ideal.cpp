#include <catch2/catch_amalgamated.hpp>

#include "vnumkit/ideal.hpp"
#include "vnumkit/io.hpp"

using namespace vnumkit;

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal3(std::initializer_list<std::vector<Exponent>> gens) {
  std::vector<Monomial> ms;
  for (const auto& e : gens) ms.emplace_back(e);
  return MonomialIdeal(RingDescriptor::standard(3), std::move(ms));
}

// The running example ideal <x1*x2^2, x2*x3^2, x1^2*x3>.
MonomialIdeal running_example() {
  return ideal3({{1, 2, 0}, {0, 1, 2}, {2, 0, 1}});
}

/// Brute-force membership equality of two ideals on all monomials within a
/// box, independent of minimal-generator bookkeeping.
bool equal_on_box(const MonomialIdeal& a, const MonomialIdeal& b, Exponent cap) {
  const int n = a.vars();
  std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
  while (true) {
    Monomial m(e);
    if (a.contains(m) != b.contains(m)) return false;
    int i = 0;
    while (i < n && e[static_cast<std::size_t>(i)] == cap) e[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return true;
    ++e[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST_CASE("divides is componentwise") {
  CHECK(divides(mono({1, 0, 0}), mono({2, 0, 1})));
  CHECK_FALSE(divides(mono({0, 2, 0}), mono({1, 1, 0})));
  CHECK(divides(Monomial::one(3), mono({5, 1, 2})));
  CHECK_THROWS_AS(divides(Monomial::one(2), Monomial::one(3)), std::invalid_argument);
}

TEST_CASE("gcd and lcm") {
  CHECK(monomial_gcd(mono({1, 2, 0}), mono({2, 0, 1})) == mono({1, 0, 0}));
  CHECK(monomial_lcm(mono({1, 2, 0}), mono({0, 1, 2})) == mono({1, 2, 2}));
  CHECK(monomial_gcd(mono({3, 1, 4}), Monomial::one(3)) == Monomial::one(3));

  // Algebraic laws on a small sweep.
  std::vector<Monomial> pool;
  for (Exponent a = 0; a <= 2; ++a)
    for (Exponent b = 0; b <= 2; ++b) pool.push_back(mono({a, b, (a + b) % 3}));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK(monomial_gcd(a, b) == monomial_gcd(b, a));
      CHECK(monomial_lcm(a, b) == monomial_lcm(b, a));
      CHECK(monomial_gcd(a, a) == a);
      CHECK(monomial_lcm(a, a) == a);
      CHECK(divides(monomial_gcd(a, b), a));
      CHECK(divides(a, monomial_lcm(a, b)));
      CHECK(monomial_gcd(a, b) * monomial_lcm(a, b) == a * b);
      for (const auto& c : pool) {
        CHECK(monomial_gcd(monomial_gcd(a, b), c) == monomial_gcd(a, monomial_gcd(b, c)));
        CHECK(monomial_lcm(monomial_lcm(a, b), c) == monomial_lcm(a, monomial_lcm(b, c)));
      }
    }
}

TEST_CASE("minimalize yields the divisibility antichain") {
  auto I = minimalize(RingDescriptor::standard(2), {Monomial({1, 0}), Monomial({1, 1})});
  CHECK(I.generators() == std::vector<Monomial>{Monomial({1, 0})});

  auto J = running_example();
  CHECK(J.num_generators() == 3);  // already minimal

  auto U = minimalize(RingDescriptor::standard(2), {Monomial::one(2), Monomial({1, 0})});
  CHECK(U.is_unit());

  CHECK_THROWS_AS(MonomialIdeal(RingDescriptor::standard(2), {}), std::invalid_argument);

  // Antichain invariant after construction.
  for (const auto& a : J.generators())
    for (const auto& b : J.generators())
      if (&a != &b) CHECK_FALSE(divides(a, b));
}

TEST_CASE("membership") {
  auto I = running_example();
  CHECK(I.contains(mono({1, 2, 1})));        // x1*x2^2*x3 via x1*x2^2
  CHECK_FALSE(I.contains(mono({1, 1, 1})));  // x1*x2*x3
  CHECK_FALSE(I.contains(Monomial::one(3)));
  CHECK(MonomialIdeal::unit(RingDescriptor::standard(3)).contains(Monomial::one(3)));
}

TEST_CASE("colon by monomial") {
  auto I = running_example();
  // (I : x1*x2*x3) = <x1, x2, x3>
  auto q = colon(I, mono({1, 1, 1}));
  CHECK(q == ideal3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  CHECK(colon(I, Monomial::one(3)) == I);

  auto P = minimalize(RingDescriptor::standard(2), {Monomial({1, 1})});
  CHECK(colon(P, Monomial({1, 0})) ==
        minimalize(RingDescriptor::standard(2), {Monomial({0, 1})}));

  // Unit result exactly when f lies in I.
  CHECK(colon(I, mono({1, 2, 0})).is_unit());
  CHECK_FALSE(colon(I, mono({1, 1, 0})).is_unit());
}

TEST_CASE("colon oracle: m in (I:f) iff m*f in I") {
  auto I = running_example();
  std::vector<Monomial> fs = {mono({1, 1, 1}), mono({0, 2, 0}), mono({2, 2, 2}),
                              Monomial::one(3), mono({1, 0, 2})};
  for (const auto& f : fs) {
    auto q = colon(I, f);
    std::vector<Exponent> e(3, 0);
    while (true) {
      Monomial m(e);
      CHECK(q.contains(m) == I.contains(m * f));
      int i = 0;
      while (i < 3 && e[static_cast<std::size_t>(i)] == 3) e[static_cast<std::size_t>(i++)] = 0;
      if (i == 3) break;
      ++e[static_cast<std::size_t>(i)];
    }
    // (I : f) contains I; unit iff f in I.
    CHECK(q.contains(I));
    CHECK(q.is_unit() == I.contains(f));
  }
}

TEST_CASE("colon by ideal") {
  auto I = running_example();
  CHECK(colon(I, I).is_unit());
  CHECK(colon(I, MonomialIdeal::unit(RingDescriptor::standard(3))) == I);

  // (<x1x2> : <x1, x2>) = <x1x2>, frozen from the membership oracle.
  auto P = minimalize(RingDescriptor::standard(2), {Monomial({1, 1})});
  auto J = minimalize(RingDescriptor::standard(2), {Monomial({1, 0}), Monomial({0, 1})});
  auto q = colon(P, J);
  CHECK(q == P);
  // Oracle: u in (P:J) iff u*g in P for every generator g of J.
  for (Exponent a = 0; a <= 3; ++a)
    for (Exponent b = 0; b <= 3; ++b) {
      Monomial u({a, b});
      bool in_all = P.contains(u * Monomial({1, 0})) && P.contains(u * Monomial({0, 1}));
      CHECK(q.contains(u) == in_all);
    }

  // colon by a principal ideal matches colon by its generator.
  for (const auto& f : {mono({1, 1, 0}), mono({0, 0, 2}), mono({2, 1, 1})}) {
    auto principal = minimalize(RingDescriptor::standard(3), {f});
    CHECK(colon(I, principal) == colon(I, f));
  }
}

TEST_CASE("intersection is exact on a box") {
  auto A = ideal3({{2, 0, 0}, {0, 1, 1}});
  auto B = ideal3({{1, 1, 0}, {0, 0, 2}});
  auto I = intersect(A, B);
  // Independent check: membership in the intersection is conjunction.
  std::vector<Exponent> e(3, 0);
  while (true) {
    Monomial m(e);
    CHECK(I.contains(m) == (A.contains(m) && B.contains(m)));
    int i = 0;
    while (i < 3 && e[static_cast<std::size_t>(i)] == 3) e[static_cast<std::size_t>(i++)] = 0;
    if (i == 3) break;
    ++e[static_cast<std::size_t>(i)];
  }
}

TEST_CASE("monomial prime detection") {
  CHECK(as_monomial_prime(ideal3({{1, 0, 0}, {0, 0, 1}})) == PrimeSupport({0, 2}));
  CHECK_FALSE(as_monomial_prime(ideal3({{1, 1, 0}})).has_value());
  CHECK_FALSE(as_monomial_prime(ideal3({{0, 2, 0}, {0, 0, 1}})).has_value());
  CHECK_FALSE(as_monomial_prime(MonomialIdeal::unit(RingDescriptor::standard(2))).has_value());
}

TEST_CASE("max exponents") {
  CHECK(max_exponents(running_example()) == std::vector<Exponent>{2, 2, 2});
  CHECK(max_exponents(ideal3({{1, 1, 0}})) == std::vector<Exponent>{1, 1, 0});
  CHECK(max_exponents(minimalize(RingDescriptor::standard(1), {Monomial({3})})) ==
        std::vector<Exponent>{3});
  CHECK_THROWS_AS(max_exponents(MonomialIdeal::unit(RingDescriptor::standard(2))),
                  std::invalid_argument);
}

TEST_CASE("canonical generator order is deterministic") {
  auto I = ideal3({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
  auto J = ideal3({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(I.generators() == J.generators());
  CHECK(std::is_sorted(I.generators().begin(), I.generators().end(),
                       [](const Monomial& a, const Monomial& b) { return lex_less(a, b); }));
}

TEST_CASE("intersection against pairwise colon route") {
  // equal_on_box exercises minimalization-independent equality.
  auto A = ideal3({{1, 1, 0}});
  auto B = ideal3({{1, 0, 0}, {0, 1, 0}});
  CHECK(equal_on_box(intersect(A, B), A, 3));
}
