#pragma once

#include <random>

#include "vnumkit/homology.hpp"
#include "vnumkit/io.hpp"

namespace vnumkit {

/// Deterministic randomness: a fixed mt19937_64 stream consumed through
/// explicit arithmetic only, so identical (config, seed) pairs reproduce
/// byte-identical output on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) < p;
  }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

inline Graph random_graph(Rng& rng, int n, double density) {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.chance(density)) es.emplace_back(a, b);
  return Graph(n, std::move(es));
}

inline Graph random_graph_with_edges(Rng& rng, int n, double density) {
  for (int tries = 0; tries < 10000; ++tries) {
    Graph g = random_graph(rng, n, density);
    if (g.num_edges() > 0) return g;
  }
  throw std::runtime_error("random_graph_with_edges: density too low to produce edges");
}

inline Graph random_connected_graph(Rng& rng, int n, double density) {
  for (int tries = 0; tries < 10000; ++tries) {
    Graph g = random_graph(rng, n, density);
    if (g.num_edges() > 0 && is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_graph: rejection sampling failed; raise the density");
}

inline Graph random_bipartite_graph(Rng& rng, int n, double density) {
  for (int tries = 0; tries < 10000; ++tries) {
    int left = rng.range(1, std::max(1, n - 1));
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < left; ++a)
      for (int b = left; b < n; ++b)
        if (rng.chance(density)) es.emplace_back(a, b);
    if (!es.empty()) return Graph(n, std::move(es));
  }
  throw std::runtime_error("random_bipartite_graph: density too low to produce edges");
}

/// Chordal by construction: each new vertex attaches to a clique of the
/// existing graph (grown greedily from a random seed vertex).
inline Graph random_chordal_graph(Rng& rng, int n, double density) {
  std::vector<std::pair<int, int>> es;
  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    int seed = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    VertexSet clique = detail::bit(seed);
    VertexSet candidates = adj[static_cast<std::size_t>(seed)];
    while (candidates) {
      int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (rng.chance(density)) {
        clique |= detail::bit(w);
        candidates &= adj[static_cast<std::size_t>(w)];
      }
    }
    for (int w : detail::to_vertices(clique)) {
      es.emplace_back(w, v);
      adj[static_cast<std::size_t>(w)] |= detail::bit(v);
      adj[static_cast<std::size_t>(v)] |= detail::bit(w);
    }
  }
  Graph g(n, std::move(es));
  if (g.num_edges() == 0 && n >= 2) return Graph(n, {{0, 1}});
  return g;
}

inline Clutter random_clutter(Rng& rng, int n, int max_edge_size, double density) {
  for (int tries = 0; tries < 10000; ++tries) {
    int target = rng.range(1, std::max(1, n));
    std::vector<VertexSet> edges;
    for (int k = 0; k < target; ++k) {
      int size = rng.range(2, std::max(2, std::min(max_edge_size, n)));
      VertexSet e = 0;
      while (detail::popcount(e) < size) e |= detail::bit(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
      edges.push_back(e);
    }
    // Keep the inclusion-minimal ones; the constructor wants an antichain.
    std::vector<VertexSet> minimal;
    for (VertexSet e : edges) {
      bool dominated = false;
      for (VertexSet f : edges)
        if (f != e && (f & e) == f) dominated = true;
      if ((e & (e - 1)) && !dominated) minimal.push_back(e);
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    if (!minimal.empty()) return Clutter(n, std::move(minimal));
  }
  throw std::runtime_error("random_clutter: could not build a non-empty clutter");
}

inline MonomialIdeal random_monomial_ideal(Rng& rng, int n, Exponent max_exp, int max_gens) {
  int gens = rng.range(1, std::max(1, max_gens));
  std::vector<Monomial> ms;
  while (static_cast<int>(ms.size()) < gens) {
    std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<Exponent>(rng.below(static_cast<std::uint64_t>(max_exp + 1)));
    Monomial m(std::move(e));
    if (!m.is_one()) ms.push_back(std::move(m));
  }
  return MonomialIdeal(RingDescriptor::standard(n), std::move(ms));
}

/// Complete intersection: generators on pairwise disjoint variable blocks.
inline MonomialIdeal random_complete_intersection(Rng& rng, int n, Exponent max_exp) {
  int k = rng.range(1, std::max(1, n / 2));
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(vars[static_cast<std::size_t>(i)], vars[rng.below(static_cast<std::uint64_t>(i + 1))]);
  std::vector<Monomial> gens;
  std::size_t used = 0;
  for (int g = 0; g < k && used < vars.size(); ++g) {
    int block = rng.range(1, 2);
    std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < block && used < vars.size(); ++t)
      e[static_cast<std::size_t>(vars[used++])] = static_cast<Exponent>(rng.range(1, static_cast<int>(max_exp)));
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(RingDescriptor::standard(n), std::move(gens));
}

// ---------------------------------------------------------------------------
// The open-question survey
// ---------------------------------------------------------------------------

enum class InstanceClass { graph, bipartite, chordal, connected_graph, clutter, monomial_ideal };

inline const char* to_string(InstanceClass c) {
  switch (c) {
    case InstanceClass::graph: return "graph";
    case InstanceClass::bipartite: return "bipartite";
    case InstanceClass::chordal: return "chordal";
    case InstanceClass::connected_graph: return "connected-graph";
    case InstanceClass::clutter: return "clutter";
    case InstanceClass::monomial_ideal: return "monomial-ideal";
  }
  return "?";
}

inline InstanceClass instance_class_from_string(const std::string& s) {
  if (s == "graph") return InstanceClass::graph;
  if (s == "bipartite") return InstanceClass::bipartite;
  if (s == "chordal") return InstanceClass::chordal;
  if (s == "connected-graph") return InstanceClass::connected_graph;
  if (s == "clutter") return InstanceClass::clutter;
  if (s == "monomial-ideal") return InstanceClass::monomial_ideal;
  throw std::invalid_argument("unknown instance class: " + s);
}

struct SurveyConfig {
  InstanceClass cls = InstanceClass::connected_graph;
  int n_min = 4;
  int n_max = 8;
  double density = 0.5;
  Exponent max_exp = 3;   // monomial-ideal class
  int max_gens = 4;       // monomial-ideal class
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  bool emit_all = true;   // false: keep only finding records
};

struct SurveyRecord {
  std::uint64_t trial = 0;
  Json instance;
  Json invariants = Json::object();
  Json questions = Json::object();
  bool finding = false;
};

struct SurveyResult {
  SurveyConfig config;
  std::vector<SurveyRecord> records;
  Json aggregate;
  std::uint64_t findings = 0;
};

namespace detail {

struct QuestionTally {
  std::uint64_t evaluated = 0;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
};

inline void tally(std::map<std::string, QuestionTally>& agg, Json& questions,
                  const std::string& name, bool value) {
  questions[name] = value;
  auto& t = agg[name];
  ++t.evaluated;
  (value ? t.holds : t.fails)++;
}

/// Evaluate the open questions on a square-free instance given as a clutter.
/// Candidate failures are re-validated with the definition-based engine
/// before they count.
inline void survey_clutter_instance(const Clutter& c, Json& invariants, Json& questions,
                                    std::map<std::string, QuestionTally>& agg, bool& finding) {
  MonomialIdeal I = edge_ideal(c);
  auto w = v_number_squarefree(c);
  Exponent v = w.degree;
  auto cov = cover_numbers(c);
  bool connected = is_connected(c);
  int weight = induced_matching_weight(c);

  invariants["v"] = v;
  invariants["alpha0"] = cov.alpha0;
  invariants["beta0"] = cov.beta0;
  invariants["induced_matching_weight"] = weight;
  invariants["connected"] = connected;

  bool graph_case = std::all_of(c.edges.begin(), c.edges.end(),
                                [](VertexSet e) { return popcount(e) == 2; });
  std::optional<int> im;
  if (graph_case) {
    im = induced_matching_number(Graph::from_clutter(c));
    invariants["im"] = *im;
  }

  std::optional<Exponent> reg, dep, dim;
  if (c.n <= homology_guards().betti) {
    reg = regularity(I);
    dep = depth(I);
    dim = krull_dim(c);
    invariants["reg"] = *reg;
    invariants["depth"] = *dep;
    invariants["dim"] = *dim;
  } else {
    invariants["reg"] = nullptr;
    invariants["homology_skipped"] = "size guard";
  }

  auto double_checked_v = [&]() { return v_number_definition(I).degree; };

  if (connected && reg) {
    bool ok = v <= *reg + 1;
    if (!ok) ok = double_checked_v() <= *reg + 1;
    tally(agg, questions, "q5.2: v <= reg+1 (connected)", ok);
    if (!ok) finding = true;
  }
  if (connected && graph_case) {
    bool ok = v <= *im + 1;
    if (!ok) ok = double_checked_v() <= induced_matching_number_direct(Graph::from_clutter(c)) + 1;
    tally(agg, questions, "q5.3: v <= im+1 (connected graph)", ok);
    if (!ok) finding = true;
  }
  if (connected) {
    bool ok = v <= weight + 1;
    if (!ok) ok = double_checked_v() <= weight + 1;
    tally(agg, questions, "q5.4: v <= matching weight+1 (connected)", ok);
    if (!ok) finding = true;
  }
  if (dep) {
    bool ok_a = v <= *dep;
    if (!ok_a) ok_a = double_checked_v() <= *dep;
    tally(agg, questions, "q5.5a: v <= depth", ok_a);
    bool ok_b = v >= *dim - *dep;
    if (!ok_b) ok_b = double_checked_v() >= *dim - *dep;
    tally(agg, questions, "q5.5b: v >= dim-depth", ok_b);
    if (!ok_a || !ok_b) finding = true;
  }
}

inline void survey_ideal_instance(const MonomialIdeal& I, Json& invariants, Json& questions,
                                  std::map<std::string, QuestionTally>& agg, bool& finding) {
  auto r = v_all_methods(I);
  invariants["v"] = r.definition.degree;
  invariants["v_polarization"] = r.via_polarization;
  invariants["v_alpha_formula"] = r.alpha;
  invariants["has_embedded_prime"] = r.has_embedded;
  invariants["polarization_hypothesis"] = r.polarization_hypothesis;
  invariants["weak_hypothesis"] = r.weak_hypothesis;

  tally(agg, questions, "pol: v(pol) <= v", r.via_polarization <= r.definition.degree);
  // Equality under the weak hypothesis only is open; divergence is a
  // recorded observation, not a bug.
  if (r.weak_hypothesis && !r.polarization_hypothesis) {
    tally(agg, questions, "obs: v = v(pol) under weak hypothesis", r.polarization_agrees);
    if (!r.polarization_agrees) finding = true;
  }
  if (!r.polarization_hypothesis) {
    tally(agg, questions, "obs: alpha formula agrees outside hypothesis", r.alpha_agrees);
    if (!r.alpha_agrees) finding = true;
  }
}

}  // namespace detail

inline SurveyResult survey(const SurveyConfig& config,
                           const std::function<void(const SurveyRecord&)>& sink = {}) {
  Rng rng(config.seed);
  SurveyResult result;
  result.config = config;
  std::map<std::string, detail::QuestionTally> agg;

  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    int n = rng.range(config.n_min, config.n_max);
    SurveyRecord record;
    record.trial = trial;

    switch (config.cls) {
      case InstanceClass::graph:
      case InstanceClass::bipartite:
      case InstanceClass::chordal:
      case InstanceClass::connected_graph: {
        Graph g = config.cls == InstanceClass::graph ? random_graph_with_edges(rng, n, config.density)
                  : config.cls == InstanceClass::bipartite
                      ? random_bipartite_graph(rng, n, config.density)
                  : config.cls == InstanceClass::chordal
                      ? random_chordal_graph(rng, n, config.density)
                      : random_connected_graph(rng, n, config.density);
        record.instance = graph_to_json(g);
        detail::survey_clutter_instance(g.to_clutter(), record.invariants, record.questions, agg,
                                        record.finding);
        break;
      }
      case InstanceClass::clutter: {
        Clutter c = random_clutter(rng, n, std::max(2, n - 1), config.density);
        record.instance = clutter_to_json(c);
        detail::survey_clutter_instance(c, record.invariants, record.questions, agg,
                                        record.finding);
        break;
      }
      case InstanceClass::monomial_ideal: {
        // Variable count capped: the polarization-hypothesis scan is
        // exponential in the total polarized size.
        MonomialIdeal I = random_monomial_ideal(rng, std::min(n, 6), config.max_exp, config.max_gens);
        record.instance = format_ideal(I);
        detail::survey_ideal_instance(I, record.invariants, record.questions, agg, record.finding);
        break;
      }
    }

    if (record.finding) ++result.findings;
    if (sink && (config.emit_all || record.finding)) sink(record);
    if (config.emit_all || record.finding) result.records.push_back(std::move(record));
  }

  Json agg_json;
  agg_json["class"] = to_string(config.cls);
  agg_json["trials"] = config.trials;
  agg_json["seed"] = config.seed;
  agg_json["findings"] = result.findings;
  Json qs;
  for (const auto& [name, t] : agg) {
    Json q;
    q["evaluated"] = t.evaluated;
    q["holds"] = t.holds;
    q["fails"] = t.fails;
    qs[name] = q;
  }
  agg_json["questions"] = qs;
  result.aggregate = std::move(agg_json);
  return result;
}

}  // namespace vnumkit
