#pragma once

#include <map>

#include "vnumkit/clutter.hpp"

namespace vnumkit {

/// A simplicial complex given by its facets (inclusion-maximal faces).
/// Two degenerate shapes matter downstream and are distinguished here:
/// no facets at all (the void complex, no faces) versus the single facet {}
/// (only the empty face). Vertices of the ambient range may be absent from
/// every facet; the effective vertex set is the union of the facets.
struct SimplicialComplex {
  int n = 0;
  std::vector<VertexSet> facets;

  SimplicialComplex() = default;

  SimplicialComplex(int vertex_count, std::vector<VertexSet> facet_sets)
      : n(vertex_count), facets(detail::maximal_sets(std::move(facet_sets))) {
    if (n < 0 || n > 64) throw std::invalid_argument("SimplicialComplex: vertex count out of range");
    VertexSet all = n == 64 ? ~VertexSet{0} : (detail::bit(n) - 1);
    for (VertexSet f : facets)
      if (f & ~all) throw std::invalid_argument("SimplicialComplex: facet vertex out of range");
  }

  bool is_void() const { return facets.empty(); }
  bool is_irrelevant() const { return facets.size() == 1 && facets.front() == 0; }

  VertexSet vertices() const {
    VertexSet u = 0;
    for (VertexSet f : facets) u |= f;
    return u;
  }

  int dimension() const {
    int d = -2;  // void
    for (VertexSet f : facets) d = std::max(d, detail::popcount(f) - 1);
    return d;
  }

  bool is_face(VertexSet s) const {
    for (VertexSet f : facets)
      if ((s & ~f) == 0) return true;
    return false;
  }

  /// The subcomplex of faces contained in w.
  SimplicialComplex restriction(VertexSet w) const {
    std::vector<VertexSet> fs;
    fs.reserve(facets.size());
    for (VertexSet f : facets) fs.push_back(f & w);
    return SimplicialComplex(n, std::move(fs));
  }

  /// del(v): faces avoiding v.
  SimplicialComplex deletion(int v) const { return restriction(vertices() & ~detail::bit(v)); }

  /// lk(v): faces F with v not in F and F u {v} a face.
  SimplicialComplex link(int v) const {
    std::vector<VertexSet> fs;
    for (VertexSet f : facets)
      if (f & detail::bit(v)) fs.push_back(f & ~detail::bit(v));
    return SimplicialComplex(n, std::move(fs));
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n == b.n && a.facets == b.facets;
  }
};

/// Faces of the independence complex are the stable sets of the clutter.
inline SimplicialComplex independence_complex(const Clutter& c) {
  return SimplicialComplex(c.n, maximal_stable_sets(c));
}

namespace detail {

inline bool vertex_decomposable_impl(const SimplicialComplex& d,
                                     std::map<std::vector<VertexSet>, bool>& memo) {
  if (d.is_void() || d.is_irrelevant()) return true;
  if (d.facets.size() == 1) return true;  // simplex on its effective vertices

  auto it = memo.find(d.facets);
  if (it != memo.end()) return it->second;

  bool ok = false;
  for (int v : to_vertices(d.vertices())) {
    SimplicialComplex del = d.deletion(v);
    // Shedding condition: every facet of del(v) must already be a facet.
    bool shedding = std::all_of(del.facets.begin(), del.facets.end(), [&](VertexSet f) {
      return std::find(d.facets.begin(), d.facets.end(), f) != d.facets.end();
    });
    if (!shedding) continue;
    if (vertex_decomposable_impl(del, memo) && vertex_decomposable_impl(d.link(v), memo)) {
      ok = true;
      break;
    }
  }
  memo.emplace(d.facets, ok);
  return ok;
}

}  // namespace detail

/// Recursive shedding-vertex definition with memoization on the facet list.
inline bool is_vertex_decomposable(const SimplicialComplex& d) {
  std::map<std::vector<VertexSet>, bool> memo;
  return detail::vertex_decomposable_impl(d, memo);
}

}  // namespace vnumkit
