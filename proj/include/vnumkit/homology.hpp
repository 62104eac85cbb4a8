#pragma once

#include <cstdlib>
#include <limits>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "vnumkit/complex.hpp"
#include "vnumkit/vnumber.hpp"

namespace vnumkit {

/// Homology coefficients: the rationals (characteristic 0) or Z/p.
struct FieldChoice {
  std::int64_t characteristic = 0;

  FieldChoice() = default;

  explicit FieldChoice(std::int64_t ch) : characteristic(ch) {
    if (ch == 0) return;
    if (ch < 2 || ch >= (std::int64_t{1} << 31))
      throw std::invalid_argument("FieldChoice: characteristic must be 0 or a prime < 2^31");
    for (std::int64_t d = 2; d * d <= ch; ++d)
      if (ch % d == 0) throw std::invalid_argument("FieldChoice: characteristic must be prime");
  }
};

/// Hard limits on the exponential homology computations. Exceeding one is an
/// error, never a silent approximation. VNUMKIT_SIZE_GUARD in the environment
/// raises both (explicit opt-in).
struct HomologyGuards {
  int single_complex = 20;  // one complex, all subsets of its vertices
  int betti = 16;           // 2^n restriction subcomplexes
};

inline HomologyGuards homology_guards() {
  HomologyGuards g;
  if (const char* e = std::getenv("VNUMKIT_SIZE_GUARD")) {
    int v = std::atoi(e);
    if (v > 0) {
      g.single_complex = std::min(v, 62);
      g.betti = std::min(v, 62);
    }
  }
  return g;
}

namespace detail {

struct Int64Overflow {};

/// Fraction-free (Bareiss) rank over the integers, machine words with
/// overflow detection. Intermediate entries are minors of the input, so the
/// exact division always succeeds; only the size can fail.
inline std::int64_t rank_bareiss_int64(std::vector<std::vector<std::int64_t>> a) {
  const std::int64_t lim = std::numeric_limits<std::int64_t>::max();
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0 && prev == 1) continue;
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 num = static_cast<__int128>(a[rank][c]) * a[i][j] -
                       static_cast<__int128>(a[i][c]) * a[rank][j];
        __int128 q = num / prev;
        if (num % prev != 0) throw std::logic_error("bareiss: inexact division");
        if (q > lim || q < -static_cast<__int128>(lim) - 1) throw Int64Overflow{};
        a[i][j] = static_cast<std::int64_t>(q);
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

inline std::int64_t rank_bareiss_bigint(const std::vector<std::vector<std::int64_t>>& input) {
  using Big = boost::multiprecision::cpp_int;
  std::size_t rows = input.size();
  std::size_t cols = rows ? input[0].size() : 0;
  std::vector<std::vector<Big>> a(rows, std::vector<Big>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = input[i][j];
  Big prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

inline std::int64_t rank_char0(const std::vector<std::vector<std::int64_t>>& m) {
  try {
    return rank_bareiss_int64(m);
  } catch (const Int64Overflow&) {
    return rank_bareiss_bigint(m);
  }
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

inline std::int64_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    std::int64_t inv = mod_pow(a[rank][c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      std::int64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

inline std::int64_t matrix_rank(const std::vector<std::vector<std::int64_t>>& m,
                                const FieldChoice& field) {
  if (m.empty() || m[0].empty()) return 0;
  return field.characteristic == 0 ? rank_char0(m) : rank_mod_p(m, field.characteristic);
}

/// All faces, bucketed by vertex count: out[k] holds the k-vertex faces
/// (dimension k-1), each bucket sorted. Empty result for the void complex.
inline std::vector<std::vector<VertexSet>> faces_by_count(const SimplicialComplex& d) {
  if (d.is_void()) return {};
  std::unordered_set<VertexSet> seen;
  for (VertexSet f : d.facets) {
    VertexSet s = f;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(d.dimension() + 2));
  for (VertexSet s : seen) out[static_cast<std::size_t>(popcount(s))].push_back(s);
  for (auto& bucket : out) std::sort(bucket.begin(), bucket.end());
  return out;
}

/// Boundary matrix from k-vertex faces to (k-1)-vertex faces; entries are
/// the usual alternating signs by vertex position.
inline std::vector<std::vector<std::int64_t>> boundary_matrix(
    const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
  std::vector<std::vector<std::int64_t>> m(lower.size(),
                                           std::vector<std::int64_t>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    VertexSet f = upper[col];
    int t = 0;
    for (int v : to_vertices(f)) {
      VertexSet sub = f & ~bit(v);
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      m[static_cast<std::size_t>(it - lower.begin())][col] = (t % 2 == 0) ? 1 : -1;
      ++t;
    }
  }
  return m;
}

inline std::vector<std::int64_t> reduced_ranks_impl(const SimplicialComplex& d,
                                                    const FieldChoice& field) {
  auto faces = faces_by_count(d);
  if (faces.empty()) return {};
  std::vector<std::int64_t> boundary_rank(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k)
    boundary_rank[k] = matrix_rank(boundary_matrix(faces[k - 1], faces[k]), field);
  std::vector<std::int64_t> h(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k)
    h[k] = static_cast<std::int64_t>(faces[k].size()) - boundary_rank[k] - boundary_rank[k + 1];
  return h;
}

}  // namespace detail

/// Exact reduced homology ranks over the chosen field. Entry [d+1] is the
/// rank in dimension d, starting at d = -1; the void complex returns an
/// empty vector. Guarded by the single-complex size limit.
inline std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& d,
                                                        const FieldChoice& field = {}) {
  if (detail::popcount(d.vertices()) > homology_guards().single_complex)
    throw std::runtime_error("reduced_homology_ranks: size guard exceeded (set VNUMKIT_SIZE_GUARD to override)");
  return detail::reduced_ranks_impl(d, field);
}

/// Graded Betti numbers of R/I (beta_{0,0} = 1 left implicit), from the
/// homology of all restriction subcomplexes of the independence complex:
/// beta_{i,j} = sum over |W| = j of rank H~_{j-i-1}(Delta|_W).
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;  // (i, j) -> rank, i >= 1
  std::int64_t field_characteristic = 0;

  Exponent regularity() const {
    Exponent r = 0;
    for (const auto& [ij, rank] : entries) r = std::max<Exponent>(r, ij.second - ij.first);
    return r;
  }

  Exponent projective_dimension() const {
    Exponent p = 0;
    for (const auto& [ij, rank] : entries) p = std::max<Exponent>(p, ij.first);
    return p;
  }
};

inline BettiTable betti_table(const MonomialIdeal& I, const FieldChoice& field = {}) {
  if (!I.is_squarefree()) throw std::invalid_argument("betti_table: square-free ideal required");
  if (I.is_unit()) throw std::invalid_argument("betti_table: proper ideal required");
  const int n = I.vars();
  if (n > homology_guards().betti)
    throw std::runtime_error("betti_table: size guard exceeded (set VNUMKIT_SIZE_GUARD to override)");

  Clutter c = clutter_of(I);
  SimplicialComplex delta = independence_complex(c);
  VertexSet support = 0;
  for (VertexSet e : c.edges) support |= e;

  BettiTable table;
  table.field_characteristic = field.characteristic;
  for (VertexSet w = 1; w < detail::bit(n); ++w) {
    // A vertex outside every generator cones the restriction: contractible,
    // no contribution.
    if (w & ~support) continue;
    auto ranks = detail::reduced_ranks_impl(delta.restriction(w), field);
    int j = detail::popcount(w);
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      if (ranks[k] == 0) continue;
      int dim = static_cast<int>(k) - 1;
      int i = j - dim - 1;
      if (i >= 1) table.entries[{i, j}] += ranks[k];
    }
  }
  return table;
}

/// reg(R/I); non-square-free ideals go through polarization, which preserves
/// the value.
inline Exponent regularity(const MonomialIdeal& I, const FieldChoice& field = {}) {
  if (I.is_squarefree()) return betti_table(I, field).regularity();
  return betti_table(polarize_ideal(I).first, field).regularity();
}

/// pd(R/I); invariant under polarization by Auslander-Buchsbaum on both
/// sides, so the same route applies.
inline Exponent projective_dimension(const MonomialIdeal& I, const FieldChoice& field = {}) {
  if (I.is_squarefree()) return betti_table(I, field).projective_dimension();
  return betti_table(polarize_ideal(I).first, field).projective_dimension();
}

inline Exponent depth(const MonomialIdeal& I, const FieldChoice& field = {}) {
  return I.vars() - projective_dimension(I, field);
}

/// Krull dimension of R/I(C) is the independence number.
inline Exponent krull_dim(const Clutter& c) {
  if (c.edges.empty()) return c.n;
  if (std::all_of(c.edges.begin(), c.edges.end(),
                  [](VertexSet e) { return detail::popcount(e) == 2; }))
    return max_stable_set_size(Graph::from_clutter(c));
  return cover_numbers(c).beta0;
}

inline Exponent krull_dim(const MonomialIdeal& I) { return I.vars() - height(I); }

inline bool is_cohen_macaulay(const MonomialIdeal& I, const FieldChoice& field = {}) {
  return depth(I, field) == krull_dim(I);
}

/// Two independent computations of the same number: reg(I) = reg(R/I) + 1
/// and pd(R/I^v). Disagreement signals an implementation bug.
struct TeraiReport {
  Exponent reg_plus_one = 0;
  Exponent pd_dual = 0;
  bool consistent = false;
};

inline TeraiReport terai_check(const MonomialIdeal& I, const FieldChoice& field = {}) {
  TeraiReport r;
  r.reg_plus_one = regularity(I, field) + 1;
  r.pd_dual = projective_dimension(alexander_dual(I), field);
  r.consistent = r.reg_plus_one == r.pd_dual;
  return r;
}

/// Sufficient criterion for non-Cohen-Macaulayness through the dual:
/// alpha_0(C) <= v(I^v) <= reg(R/I^v) forces depth < dim. When it fires,
/// the CM flag is asserted false. Also records the general lower bound
/// v(I^v) >= alpha_0(C) - 1.
struct NonCmReport {
  Exponent alpha0 = 0;
  Exponent v_dual = 0;
  Exponent reg_dual = 0;
  bool certified = false;
  bool dual_lower_bound_ok = false;
  std::optional<std::string> explanation;
};

inline NonCmReport non_cm_certificate(const Clutter& c, const FieldChoice& field = {}) {
  NonCmReport r;
  MonomialIdeal I = edge_ideal(c);
  MonomialIdeal dual = alexander_dual(I);
  r.alpha0 = cover_numbers(c).alpha0;
  r.v_dual = v_number_squarefree(clutter_of(dual)).degree;
  r.reg_dual = regularity(dual, field);
  r.dual_lower_bound_ok = r.v_dual >= r.alpha0 - 1;
  r.certified = r.alpha0 <= r.v_dual && r.v_dual <= r.reg_dual;
  if (r.certified) {
    if (is_cohen_macaulay(I, field))
      throw std::logic_error("non_cm_certificate: certified ideal computed as Cohen-Macaulay");
    r.explanation = "alpha0 = " + std::to_string(r.alpha0) + " <= v(dual) = " +
                    std::to_string(r.v_dual) + " <= reg(R/dual) = " + std::to_string(r.reg_dual) +
                    ", so depth(R/I) < dim(R/I)";
  }
  return r;
}

}  // namespace vnumkit
