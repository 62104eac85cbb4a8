#pragma once

#include <bit>
#include <cstdint>
#include <functional>

#include "vnumkit/ideal.hpp"

namespace vnumkit {

/// Vertex sets are 64-bit masks, which caps supported instances at 64
/// vertices. Everything here is desk scale, far below that.
using VertexSet = std::uint64_t;

namespace detail {

inline VertexSet bit(int v) { return VertexSet{1} << v; }

inline int popcount(VertexSet s) { return std::popcount(s); }

inline std::vector<int> to_vertices(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

/// Lexicographic order on sorted vertex lists; the canonical order for edge
/// lists, covers, cliques and facets.
inline bool vertex_lex_less(VertexSet a, VertexSet b) {
  while (a && b) {
    int va = std::countr_zero(a);
    int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline void sort_vertex_lex(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), vertex_lex_less);
}

/// Keep only inclusion-maximal sets, canonical order.
inline std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet t : sets)
      if (t != s && (s & t) == s) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  sort_vertex_lex(kept);
  return kept;
}

}  // namespace detail

/// A clutter (simple hypergraph): vertices 0..n-1 plus an inclusion
/// antichain of non-empty edges.
struct Clutter {
  int n = 0;
  std::vector<VertexSet> edges;

  Clutter() = default;

  Clutter(int vertex_count, std::vector<VertexSet> edge_sets)
      : n(vertex_count), edges(std::move(edge_sets)) {
    if (n < 0 || n > 64) throw std::invalid_argument("Clutter: vertex count out of range");
    VertexSet all = n == 64 ? ~VertexSet{0} : (detail::bit(n) - 1);
    for (VertexSet e : edges) {
      if (e == 0) throw std::invalid_argument("Clutter: empty edge");
      if (e & ~all) throw std::invalid_argument("Clutter: edge vertex out of range");
    }
    detail::sort_vertex_lex(edges);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (VertexSet e : edges)
      for (VertexSet f : edges)
        if (e != f && (e & f) == e)
          throw std::invalid_argument("Clutter: edges must form an antichain");
  }

  VertexSet full_set() const { return n == 64 ? ~VertexSet{0} : (detail::bit(n) - 1); }

  friend bool operator==(const Clutter& a, const Clutter& b) {
    return a.n == b.n && a.edges == b.edges;
  }
};

/// A simple graph; a 2-uniform clutter with precomputed adjacency masks.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // canonical: a < b, lexicographic
  std::vector<VertexSet> adj;

  Graph() = default;

  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
      : n(vertex_count) {
    if (n < 0 || n > 64) throw std::invalid_argument("Graph: vertex count out of range");
    adj.assign(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> masks;
    for (auto [a, b] : edge_list) {
      if (a == b) throw std::invalid_argument("Graph: loop edge");
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("Graph: edge vertex out of range");
      masks.push_back(detail::bit(a) | detail::bit(b));
    }
    std::sort(masks.begin(), masks.end(), detail::vertex_lex_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (VertexSet m : masks) {
      auto vs = detail::to_vertices(m);
      edges.emplace_back(vs[0], vs[1]);
      adj[static_cast<std::size_t>(vs[0])] |= detail::bit(vs[1]);
      adj[static_cast<std::size_t>(vs[1])] |= detail::bit(vs[0]);
    }
  }

  static Graph from_clutter(const Clutter& c) {
    std::vector<std::pair<int, int>> es;
    for (VertexSet e : c.edges) {
      if (detail::popcount(e) != 2)
        throw std::invalid_argument("Graph: clutter is not 2-uniform");
      auto vs = detail::to_vertices(e);
      es.emplace_back(vs[0], vs[1]);
    }
    return Graph(c.n, std::move(es));
  }

  Clutter to_clutter() const {
    std::vector<VertexSet> es;
    for (auto [a, b] : edges) es.push_back(detail::bit(a) | detail::bit(b));
    return Clutter(n, std::move(es));
  }

  VertexSet full_set() const { return n == 64 ? ~VertexSet{0} : (detail::bit(n) - 1); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  VertexSet neighbors(int v) const { return adj[static_cast<std::size_t>(v)]; }

  bool has_isolated_vertex() const {
    for (int v = 0; v < n; ++v)
      if (adj[static_cast<std::size_t>(v)] == 0) return true;
    return false;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
};

// ---------------------------------------------------------------------------
// Edge ideals and the square-free dictionary
// ---------------------------------------------------------------------------

inline MonomialIdeal edge_ideal(const Clutter& c) {
  if (c.n < 1) throw std::invalid_argument("edge_ideal: clutter has no vertices");
  if (c.edges.empty()) throw std::invalid_argument("edge_ideal: clutter has no edges");
  RingDescriptor ring = RingDescriptor::standard(c.n);
  std::vector<Monomial> gens;
  for (VertexSet e : c.edges) {
    std::vector<Exponent> exp(static_cast<std::size_t>(c.n), 0);
    for (int v : detail::to_vertices(e)) exp[static_cast<std::size_t>(v)] = 1;
    gens.emplace_back(std::move(exp));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

inline MonomialIdeal edge_ideal(const Graph& g) { return edge_ideal(g.to_clutter()); }

inline Clutter clutter_of(const MonomialIdeal& I) {
  if (!I.is_squarefree())
    throw std::invalid_argument("clutter_of: ideal is not square-free");
  if (I.is_unit()) throw std::invalid_argument("clutter_of: proper ideal required");
  std::vector<VertexSet> edges;
  for (const Monomial& g : I.generators()) {
    VertexSet e = 0;
    for (int v : g.support()) e |= detail::bit(v);
    edges.push_back(e);
  }
  return Clutter(I.vars(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Stability, neighbor sets, covers
// ---------------------------------------------------------------------------

inline bool is_stable(const Clutter& c, VertexSet a) {
  for (VertexSet e : c.edges)
    if ((e & ~a) == 0) return false;
  return true;
}

inline bool is_stable(const Graph& g, VertexSet a) {
  for (int v : detail::to_vertices(a))
    if (g.neighbors(v) & a) return false;
  return true;
}

inline bool is_vertex_cover(const Clutter& c, VertexSet s) {
  for (VertexSet e : c.edges)
    if ((e & s) == 0) return false;
  return true;
}

/// N_C(A) = { x : {x} u A contains an edge }. Requires A stable, so the
/// result is exactly the union of the single leftover vertices of edges
/// almost inside A.
inline VertexSet neighbor_set(const Clutter& c, VertexSet a) {
  if (!is_stable(c, a)) throw std::invalid_argument("neighbor_set: set is not stable");
  VertexSet out = 0;
  for (VertexSet e : c.edges) {
    VertexSet left = e & ~a;
    if (detail::popcount(left) == 1) out |= left;
  }
  return out;
}

inline VertexSet closed_neighbor_set(const Clutter& c, VertexSet a) {
  return neighbor_set(c, a) | a;
}

/// All maximal stable sets, canonical order. Plain include/exclude
/// enumeration; fine at the clutter sizes this library targets.
inline std::vector<VertexSet> maximal_stable_sets(const Clutter& c) {
  std::vector<VertexSet> out;
  std::function<void(int, VertexSet)> rec = [&](int v, VertexSet a) {
    if (v == c.n) {
      for (int x = 0; x < c.n; ++x)
        if (!(a & detail::bit(x)) && is_stable(c, a | detail::bit(x))) return;
      out.push_back(a);
      return;
    }
    rec(v + 1, a);
    if (is_stable(c, a | detail::bit(v))) rec(v + 1, a | detail::bit(v));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), detail::vertex_lex_less);
  return out;
}

struct CoverNumbers {
  int alpha0 = 0;                        // minimum vertex cover size
  int beta0 = 0;                         // maximum stable set size
  std::vector<VertexSet> minimal_covers; // canonical order
};

/// Minimal vertex covers are exactly the complements of maximal stable sets.
inline CoverNumbers cover_numbers(const Clutter& c) {
  CoverNumbers out;
  VertexSet full = c.full_set();
  for (VertexSet a : maximal_stable_sets(c)) out.minimal_covers.push_back(full & ~a);
  detail::sort_vertex_lex(out.minimal_covers);
  out.alpha0 = c.n;
  out.beta0 = 0;
  for (VertexSet cov : out.minimal_covers) {
    out.alpha0 = std::min(out.alpha0, detail::popcount(cov));
    out.beta0 = std::max(out.beta0, c.n - detail::popcount(cov));
  }
  if (c.edges.empty()) {
    out.alpha0 = 0;
    out.beta0 = c.n;
    out.minimal_covers = {0};
    if (c.n == 0) out.minimal_covers = {};
  }
  return out;
}

/// Alexander dual: generated by the monomials of the minimal vertex covers.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  Clutter c = clutter_of(I);
  auto covers = cover_numbers(c).minimal_covers;
  std::vector<Monomial> gens;
  for (VertexSet cov : covers) {
    std::vector<Exponent> exp(static_cast<std::size_t>(c.n), 0);
    for (int v : detail::to_vertices(cov)) exp[static_cast<std::size_t>(v)] = 1;
    gens.emplace_back(std::move(exp));
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Cliques and independent sets
// ---------------------------------------------------------------------------

namespace detail {

/// Bron-Kerbosch with pivoting.
inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of p|x with the most candidates in p.
  int pivot = -1, best = -1;
  for (int v : to_vertices(p | x)) {
    int cnt = popcount(p & g.neighbors(v));
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }
  VertexSet candidates = p & ~g.neighbors(pivot);
  for (int v : to_vertices(candidates)) {
    bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace detail

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.n == 0) return out;
  detail::bron_kerbosch(g, 0, g.full_set(), 0, out);
  detail::sort_vertex_lex(out);
  return out;
}

inline Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (!(g.neighbors(a) & detail::bit(b))) es.emplace_back(a, b);
  return Graph(g.n, std::move(es));
}

namespace detail {

/// Tomita-style max clique: branch and bound with a greedy coloring bound.
inline void max_clique_expand(const Graph& g, VertexSet p, int rsize, int& best) {
  if (p == 0) {
    best = std::max(best, rsize);
    return;
  }
  auto verts = to_vertices(p);
  // Greedy coloring of p; color numbers bound the clique size extension.
  std::vector<int> color(verts.size());
  std::vector<VertexSet> classes;
  std::vector<int> order;
  for (std::size_t idx = 0; idx < verts.size(); ++idx) {
    int v = verts[idx];
    std::size_t k = 0;
    while (k < classes.size() && (classes[k] & g.neighbors(v))) ++k;
    if (k == classes.size()) classes.push_back(0);
    classes[k] |= bit(v);
  }
  std::vector<std::pair<int, int>> by_color;  // (color, vertex)
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (int v : to_vertices(classes[k])) by_color.emplace_back(static_cast<int>(k) + 1, v);
  std::sort(by_color.begin(), by_color.end());
  VertexSet remaining = p;
  for (auto it = by_color.rbegin(); it != by_color.rend(); ++it) {
    auto [c, v] = *it;
    if (rsize + c <= best) return;
    max_clique_expand(g, remaining & g.neighbors(v), rsize + 1, best);
    remaining &= ~bit(v);
  }
}

}  // namespace detail

inline int max_clique_size(const Graph& g) {
  if (g.n == 0) return 0;
  int best = 0;
  detail::max_clique_expand(g, g.full_set(), 0, best);
  return best;
}

/// beta_0 of a graph through the complement's clique number; handles the
/// dense line-graph squares that direct stable-set enumeration cannot.
inline int max_stable_set_size(const Graph& g) { return max_clique_size(complement(g)); }

/// All cliques (as vertex sets, the empty one excluded). Exponential; only
/// meant for the disjoint clique-domination variant on small graphs.
inline std::vector<VertexSet> all_cliques(const Graph& g) {
  if (g.n > 25) throw std::invalid_argument("all_cliques: graph too large");
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet)> rec = [&](VertexSet cur, VertexSet cand) {
    if (cur) out.push_back(cur);
    for (int v : detail::to_vertices(cand)) {
      rec(cur | detail::bit(v), cand & g.neighbors(v) & ~(detail::bit(v) - 1) & ~detail::bit(v));
      cand &= ~detail::bit(v);
    }
  };
  rec(0, g.full_set());
  detail::sort_vertex_lex(out);
  return out;
}

namespace detail {

inline bool cover_search(const std::vector<VertexSet>& coverage, const std::vector<VertexSet>& bodies,
                         bool disjoint, VertexSet full, std::size_t idx, int left, VertexSet covered,
                         VertexSet used) {
  if (covered == full) return true;
  if (left == 0) return false;
  // Even taking every remaining candidate cannot help once their union stalls.
  VertexSet reach = covered;
  for (std::size_t i = idx; i < coverage.size(); ++i)
    if (!disjoint || !(bodies[i] & used)) reach |= coverage[i];
  if (reach != full) return false;
  for (std::size_t i = idx; i < coverage.size(); ++i) {
    if (disjoint && (bodies[i] & used)) continue;
    if ((coverage[i] & ~covered) == 0) continue;
    if (cover_search(coverage, bodies, disjoint, full, i + 1, left - 1, covered | coverage[i],
                     used | bodies[i]))
      return true;
  }
  return false;
}

}  // namespace detail

/// Minimum number of cliques whose closed neighborhoods cover every vertex.
/// The unrestricted search ranges over maximal cliques only (growing a
/// clique never shrinks its closed neighborhood); the disjoint variant must
/// consider every clique.
inline int clique_domination_number(const Graph& g, bool disjoint = false) {
  if (g.n == 0) return 0;
  std::vector<VertexSet> bodies = disjoint ? all_cliques(g) : maximal_cliques(g);
  std::vector<VertexSet> coverage;
  coverage.reserve(bodies.size());
  for (VertexSet k : bodies) {
    VertexSet cov = k;
    for (int v : detail::to_vertices(k)) cov |= g.neighbors(v);
    coverage.push_back(cov);
  }
  VertexSet full = g.full_set();
  for (int k = 1; k <= g.n; ++k)
    if (detail::cover_search(coverage, bodies, disjoint, full, 0, k, 0, 0)) return k;
  throw std::logic_error("clique_domination_number: no cover found");
}

// ---------------------------------------------------------------------------
// Line graphs, powers, induced matchings
// ---------------------------------------------------------------------------

/// Vertex i of L(G) is edge i of G in canonical order.
inline Graph line_graph(const Graph& g) {
  int m = g.num_edges();
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      VertexSet a = detail::bit(g.edges[static_cast<std::size_t>(i)].first) |
                    detail::bit(g.edges[static_cast<std::size_t>(i)].second);
      VertexSet b = detail::bit(g.edges[static_cast<std::size_t>(j)].first) |
                    detail::bit(g.edges[static_cast<std::size_t>(j)].second);
      if (a & b) es.emplace_back(i, j);
    }
  return Graph(m, std::move(es));
}

/// G^k: adjacency iff graph distance <= k.
inline Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("graph_power: k must be positive");
  std::vector<std::pair<int, int>> es;
  for (int s = 0; s < g.n; ++s) {
    // BFS out to depth k.
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    std::vector<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      if (dist[static_cast<std::size_t>(v)] == k) continue;
      for (int w : detail::to_vertices(g.neighbors(v)))
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
    }
    for (int t = s + 1; t < g.n; ++t)
      if (dist[static_cast<std::size_t>(t)] > 0) es.emplace_back(s, t);
  }
  return Graph(g.n, std::move(es));
}

/// im(G) as the independence number of the square of the line graph.
inline int induced_matching_number(const Graph& g) {
  if (g.num_edges() == 0)
    throw std::invalid_argument("induced_matching_number: graph has no edges");
  return max_stable_set_size(graph_power(line_graph(g), 2));
}

namespace detail {

/// DFS over induced matchings of an edge-mask list, maximizing a weight.
/// Once an unchosen edge falls inside the union of chosen ones, it can never
/// be chosen later (it would overlap) and never leave the union, so the
/// branch is dead and gets pruned.
inline void induced_matching_search(const std::vector<VertexSet>& masks, int from, VertexSet u,
                                    int weight, int& best) {
  best = std::max(best, weight);
  int m = static_cast<int>(masks.size());
  for (int j = from; j < m; ++j) {
    VertexSet e = masks[static_cast<std::size_t>(j)];
    if (e & u) continue;
    VertexSet nu = u | e;
    bool induced = true;
    for (int t = 0; t < m && induced; ++t) {
      VertexSet f = masks[static_cast<std::size_t>(t)];
      if (f != e && (f & ~nu) == 0 && (f & ~u) != 0) induced = false;
    }
    if (induced)
      induced_matching_search(masks, j + 1, nu, weight + popcount(e) - 1, best);
  }
}

}  // namespace detail

/// Direct exhaustive im(G), used as a cross-check oracle against the
/// L^2-independence route. Graph edges each weigh |e| - 1 = 1, so the
/// matching weight equals the matching size.
inline int induced_matching_number_direct(const Graph& g) {
  if (g.num_edges() == 0)
    throw std::invalid_argument("induced_matching_number_direct: graph has no edges");
  std::vector<VertexSet> masks;
  for (auto [a, b] : g.edges) masks.push_back(detail::bit(a) | detail::bit(b));
  int best = 0;
  detail::induced_matching_search(masks, 0, 0, 0, best);
  return best;
}

/// Max over induced matchings of a clutter of sum(|e_i| - 1), exhaustively.
inline int induced_matching_weight(const Clutter& c) {
  if (c.edges.empty())
    throw std::invalid_argument("induced_matching_weight: clutter has no edges");
  int best = 0;
  detail::induced_matching_search(c.edges, 0, 0, 0, best);
  return best;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// W_G: one pendant vertex n+i attached to each vertex i.
inline Graph whisker(const Graph& g) {
  std::vector<std::pair<int, int>> es = g.edges;
  for (int v = 0; v < g.n; ++v) es.emplace_back(v, g.n + v);
  return Graph(2 * g.n, std::move(es));
}

/// G^S: a new vertex adjacent to everything outside the stable set S.
inline Graph s_suspension(const Graph& g, VertexSet s) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("s_suspension: graph must have no isolated vertex");
  if (!is_stable(g.to_clutter(), s))
    throw std::invalid_argument("s_suspension: S must be stable");
  std::vector<std::pair<int, int>> es = g.edges;
  for (int v = 0; v < g.n; ++v)
    if (!(s & detail::bit(v))) es.emplace_back(v, g.n);
  return Graph(g.n + 1, std::move(es));
}

/// Induced subgraph on the kept vertices, renumbered compactly in order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> map(static_cast<std::size_t>(g.n), -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v)
    if (keep & detail::bit(v)) map[static_cast<std::size_t>(v)] = next++;
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges)
    if ((keep & detail::bit(a)) && (keep & detail::bit(b)))
      es.emplace_back(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
  return Graph(next, std::move(es));
}

inline Graph delete_vertices(const Graph& g, VertexSet drop) {
  return induced_subgraph(g, g.full_set() & ~drop);
}

/// Deletion of vertices from a clutter: keeps edges avoiding the set.
inline Clutter delete_vertices(const Clutter& c, VertexSet drop) {
  std::vector<int> map(static_cast<std::size_t>(c.n), -1);
  int next = 0;
  for (int v = 0; v < c.n; ++v)
    if (!(drop & detail::bit(v))) map[static_cast<std::size_t>(v)] = next++;
  std::vector<VertexSet> es;
  for (VertexSet e : c.edges) {
    if (e & drop) continue;
    VertexSet ne = 0;
    for (int v : detail::to_vertices(e)) ne |= detail::bit(map[static_cast<std::size_t>(v)]);
    es.push_back(ne);
  }
  return Clutter(next, std::move(es));
}

inline Graph delete_edge(const Graph& g, std::pair<int, int> e) {
  auto [a, b] = std::minmax(e.first, e.second);
  std::vector<std::pair<int, int>> es;
  bool found = false;
  for (auto [x, y] : g.edges) {
    if (x == a && y == b) {
      found = true;
      continue;
    }
    es.emplace_back(x, y);
  }
  if (!found) throw std::invalid_argument("delete_edge: edge not in graph");
  return Graph(g.n, std::move(es));
}

/// G/e: merge the endpoints into a fresh vertex adjacent to the neighbors of
/// the edge in G minus e, then simplify. The merged vertex takes the smaller
/// freed index; everything above the larger one shifts down.
inline Graph contract_edge(const Graph& g, std::pair<int, int> e) {
  auto [a, b] = std::minmax(e.first, e.second);
  if (!(g.neighbors(a) & detail::bit(b)))
    throw std::invalid_argument("contract_edge: edge not in graph");
  std::vector<int> map(static_cast<std::size_t>(g.n), -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    if (v == b) continue;
    map[static_cast<std::size_t>(v)] = next++;
  }
  map[static_cast<std::size_t>(b)] = map[static_cast<std::size_t>(a)];
  std::vector<std::pair<int, int>> es;
  for (auto [x, y] : g.edges) {
    int mx = map[static_cast<std::size_t>(x)];
    int my = map[static_cast<std::size_t>(y)];
    if (mx == my) continue;  // the contracted edge itself
    es.emplace_back(mx, my);
  }
  return Graph(g.n - 1, std::move(es));
}

/// G_e: induced subgraph on V minus the closed neighborhood of e in G - e.
inline Graph reduced_neighborhood_subgraph(const Graph& g, std::pair<int, int> e) {
  Graph minus = delete_edge(g, e);
  auto [a, b] = std::minmax(e.first, e.second);
  VertexSet closed = detail::bit(a) | detail::bit(b) | minus.neighbors(a) | minus.neighbors(b);
  return induced_subgraph(g, g.full_set() & ~closed);
}

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  VertexSet seen = detail::bit(0);
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : detail::to_vertices(g.neighbors(queue[qi]) & ~seen)) {
      seen |= detail::bit(w);
      queue.push_back(w);
    }
  return seen == g.full_set();
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n), -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : detail::to_vertices(g.neighbors(v))) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Chordality via maximum cardinality search and verification of the
/// resulting perfect elimination ordering.
inline bool is_chordal(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<int> weight(static_cast<std::size_t>(g.n), 0);
  std::vector<bool> done(static_cast<std::size_t>(g.n), false);
  std::vector<int> order;  // MCS visit sequence
  for (int step = 0; step < g.n; ++step) {
    int pick = -1;
    for (int v = 0; v < g.n; ++v)
      if (!done[static_cast<std::size_t>(v)] &&
          (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
        pick = v;
    done[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (int w : detail::to_vertices(g.neighbors(pick)))
      if (!done[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
  }
  // Reverse MCS order is the PEO candidate: check that each vertex's
  // earlier-visited neighbors form a clique through the latest of them.
  std::vector<int> pos(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (int i = g.n - 1; i >= 0; --i) {
    int v = order[static_cast<std::size_t>(i)];
    VertexSet earlier = 0;
    for (int w : detail::to_vertices(g.neighbors(v)))
      if (pos[static_cast<std::size_t>(w)] < i) earlier |= detail::bit(w);
    if (!earlier) continue;
    int latest = -1;
    for (int w : detail::to_vertices(earlier))
      if (latest < 0 || pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(latest)])
        latest = w;
    VertexSet rest = earlier & ~detail::bit(latest);
    if (rest & ~g.neighbors(latest)) return false;
  }
  return true;
}

namespace detail {

/// Is the induced subgraph on `s` a cycle (connected and 2-regular)?
inline bool induces_cycle(const Graph& g, VertexSet s) {
  int k = popcount(s);
  if (k < 3) return false;
  for (int v : to_vertices(s))
    if (popcount(g.neighbors(v) & s) != 2) return false;
  // Connectivity within s.
  int start = std::countr_zero(s);
  VertexSet seen = bit(start);
  std::vector<int> queue{start};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : to_vertices(g.neighbors(queue[qi]) & s & ~seen)) {
      seen |= bit(w);
      queue.push_back(w);
    }
  return seen == s;
}

}  // namespace detail

/// No induced C4 and no induced C5.
inline bool is_c4_c5_free(const Graph& g) {
  if (g.n > 24) throw std::invalid_argument("is_c4_c5_free: graph too large for subset scan");
  for (VertexSet s = 0; s < detail::bit(g.n); ++s) {
    int k = detail::popcount(s);
    if (k != 4 && k != 5) continue;
    if (detail::induces_cycle(g, s)) return false;
  }
  return true;
}

/// Exactly one induced cycle.
inline bool is_unicyclic(const Graph& g) {
  if (g.n > 24) throw std::invalid_argument("is_unicyclic: graph too large for subset scan");
  int count = 0;
  for (VertexSet s = 0; s < detail::bit(g.n); ++s) {
    if (detail::popcount(s) >= 3 && detail::induces_cycle(g, s)) ++count;
    if (count > 1) return false;
  }
  return count == 1;
}

struct StructuralFlags {
  bool bipartite = false;
  bool chordal = false;
  bool c4c5_free = false;
  bool unicyclic = false;
  bool connected = false;
};

inline StructuralFlags structural_predicates(const Graph& g) {
  StructuralFlags f;
  f.bipartite = is_bipartite(g);
  f.chordal = is_chordal(g);
  f.c4c5_free = is_c4_c5_free(g);
  f.unicyclic = is_unicyclic(g);
  f.connected = is_connected(g);
  return f;
}

/// A clutter counts as connected when every vertex lies in an edge and the
/// edges form a single overlap component; otherwise it splits as a disjoint
/// union of two clutters.
inline bool is_connected(const Clutter& c) {
  if (c.n == 0) return true;
  VertexSet covered = 0;
  for (VertexSet e : c.edges) covered |= e;
  if (covered != c.full_set()) return false;
  if (c.edges.empty()) return c.n <= 1;
  VertexSet comp = c.edges.front();
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexSet e : c.edges)
      if ((e & comp) && (e & ~comp)) {
        comp |= e;
        grew = true;
      }
  }
  return comp == covered;
}

}  // namespace vnumkit
