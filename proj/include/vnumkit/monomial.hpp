#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vnumkit {

/// Exponents are plain machine integers; callers should stay below 2^31-1.
/// Nothing in this library needs exponents anywhere near that.
using Exponent = std::int64_t;

/// Ambient polynomial ring K[x_1,...,x_n], described by its variable names.
/// The coefficient field is never stored: every ideal here is monomial.
struct RingDescriptor {
  std::vector<std::string> names;

  RingDescriptor() = default;

  explicit RingDescriptor(std::vector<std::string> variable_names)
      : names(std::move(variable_names)) {
    if (names.empty())
      throw std::invalid_argument("RingDescriptor: need at least one variable");
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("RingDescriptor: variable names must be distinct");
  }

  /// The ring K[x1,...,xn] with the default naming scheme.
  static RingDescriptor standard(int n) {
    if (n < 1) throw std::invalid_argument("RingDescriptor: need at least one variable");
    std::vector<std::string> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return RingDescriptor(std::move(v));
  }

  int size() const { return static_cast<int>(names.size()); }

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.names == b.names;
  }
};

/// A monomial x^a, stored as the exponent vector a. The constant 1 is the
/// all-zero vector. All arithmetic is exact.
class Monomial {
 public:
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    if (exps_.empty()) throw std::invalid_argument("Monomial: empty exponent vector");
    for (Exponent e : exps_)
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial one(int n) { return Monomial(std::vector<Exponent>(static_cast<std::size_t>(n), 0)); }

  /// x_i (0-based index).
  static Monomial variable(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("Monomial::variable: index out of range");
    std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return Monomial(std::move(e));
  }

  int vars() const { return static_cast<int>(exps_.size()); }
  Exponent exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Exponent degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), Exponent{0});
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  /// 0-based indices of the variables with positive exponent.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < vars(); ++i)
      if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<Exponent> exps_;
};

namespace detail {

inline void check_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("ambient mismatch: monomials live in different rings");
}

}  // namespace detail

/// Lexicographic comparison of exponent vectors; the canonical total order
/// used for generator lists and witness tie-breaking throughout.
inline bool lex_less(const Monomial& a, const Monomial& b) {
  detail::check_same_ambient(a, b);
  return a.exponents() < b.exponents();
}

inline bool divides(const Monomial& a, const Monomial& b) {
  detail::check_same_ambient(a, b);
  for (int i = 0; i < a.vars(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

inline Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  detail::check_same_ambient(a, b);
  std::vector<Exponent> e(static_cast<std::size_t>(a.vars()));
  for (int i = 0; i < a.vars(); ++i)
    e[static_cast<std::size_t>(i)] = std::min(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  detail::check_same_ambient(a, b);
  std::vector<Exponent> e(static_cast<std::size_t>(a.vars()));
  for (int i = 0; i < a.vars(); ++i)
    e[static_cast<std::size_t>(i)] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  detail::check_same_ambient(a, b);
  std::vector<Exponent> e(static_cast<std::size_t>(a.vars()));
  for (int i = 0; i < a.vars(); ++i)
    e[static_cast<std::size_t>(i)] = a.exponent(i) + b.exponent(i);
  return Monomial(std::move(e));
}

/// u / gcd(u, f): the generator map of the colon ideal (I : f).
inline Monomial quotient_by_gcd(const Monomial& u, const Monomial& f) {
  detail::check_same_ambient(u, f);
  std::vector<Exponent> e(static_cast<std::size_t>(u.vars()));
  for (int i = 0; i < u.vars(); ++i)
    e[static_cast<std::size_t>(i)] = u.exponent(i) - std::min(u.exponent(i), f.exponent(i));
  return Monomial(std::move(e));
}

}  // namespace vnumkit
