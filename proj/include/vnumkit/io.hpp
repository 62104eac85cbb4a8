#pragma once

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "vnumkit/clutter.hpp"
#include "vnumkit/ideal.hpp"

namespace vnumkit {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct ParsedIdeal {
  MonomialIdeal ideal;
  bool minimal_input = true;  // false when the parser had to minimalize
};

namespace detail {

/// Recursive-descent scanner for the ideal grammar:
///   ideal     := ["ring" int ";"] generator ("," generator)*
///   generator := factor ("*" factor)* | "1"
///   factor    := "x" int ["^" int]
/// Whitespace is ignored; variable indices are 1-based.
class IdealScanner {
 public:
  explicit IdealScanner(const std::string& text) : text_(text) {}

  ParsedIdeal run() {
    skip_ws();
    std::optional<int> declared;
    if (text_.compare(pos_, 4, "ring") == 0) {
      pos_ += 4;
      declared = static_cast<int>(integer("ring size"));
      if (*declared < 1) fail("ring size must be at least 1");
      skip_ws();
      expect(';');
    }

    std::vector<std::vector<std::pair<int, Exponent>>> raw;  // (1-based var, exp)
    int max_index = 0;
    while (true) {
      raw.push_back(generator(max_index));
      skip_ws();
      if (pos_ >= text_.size()) break;
      expect(',');
    }
    if (raw.empty()) fail("no generators");

    int n = declared ? *declared : std::max(max_index, 1);
    if (max_index > n) fail("variable index exceeds the declared ring size");

    std::vector<Monomial> gens;
    for (const auto& factors : raw) {
      std::vector<Exponent> exp(static_cast<std::size_t>(n), 0);
      for (auto [v, e] : factors) exp[static_cast<std::size_t>(v - 1)] += e;
      gens.emplace_back(std::move(exp));
    }
    bool minimal = generators_minimal(gens);
    return ParsedIdeal{MonomialIdeal(RingDescriptor::standard(n), std::move(gens)), minimal};
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Exponent integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return std::stoll(text_.substr(start, pos_ - start));
  }

  std::vector<std::pair<int, Exponent>> generator(int& max_index) {
    std::vector<std::pair<int, Exponent>> factors;
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '1') {
        ++pos_;
      } else {
        if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected a factor 'x<i>' or '1'");
        ++pos_;
        int v = static_cast<int>(integer("variable index"));
        if (v < 1) fail("variable indices are 1-based");
        Exponent e = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          e = integer("exponent");
        }
        max_index = std::max(max_index, v);
        factors.emplace_back(v, e);
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return factors;  // empty list = the constant generator 1
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ParsedIdeal parse_ideal(const std::string& text) {
  return detail::IdealScanner(text).run();
}

inline std::string format_monomial(const RingDescriptor& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.vars(); ++i) {
    Exponent e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.names[static_cast<std::size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string format_ideal(const MonomialIdeal& I) {
  std::string out;
  for (const Monomial& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(I.ring(), g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph / clutter JSON: {"n": 5, "edges": [[1,2],[1,3],...]}, 1-based,
// each edge emitted as a sorted array.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<VertexSet> edges_from_json(const Json& j, int n, bool allow_big) {
  if (!j.is_array()) throw std::invalid_argument("edges must be an array of arrays");
  std::vector<VertexSet> out;
  for (const auto& edge : j) {
    if (!edge.is_array() || edge.empty())
      throw std::invalid_argument("each edge must be a non-empty array of vertices");
    VertexSet mask = 0;
    for (const auto& v : edge) {
      if (!v.is_number_integer()) throw std::invalid_argument("edge vertices must be integers");
      long long x = v.get<long long>();
      if (x < 1 || x > n) throw std::invalid_argument("edge vertex out of range 1..n");
      mask |= bit(static_cast<int>(x - 1));
    }
    if (!allow_big && popcount(mask) != 2)
      throw std::invalid_argument("graph edges must have exactly two distinct vertices");
    if (static_cast<std::size_t>(popcount(mask)) != edge.size())
      throw std::invalid_argument("edge lists a vertex twice");
    out.push_back(mask);
  }
  return out;
}

inline Json vertex_set_to_json(VertexSet s) {
  Json arr = Json::array();
  for (int v : to_vertices(s)) arr.push_back(v + 1);
  return arr;
}

}  // namespace detail

inline Clutter parse_clutter_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("clutter JSON needs fields \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  if (n < 1 || n > 64) throw std::invalid_argument("clutter vertex count out of range");
  return Clutter(n, detail::edges_from_json(j.at("edges"), n, true));
}

inline Graph parse_graph_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs fields \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  if (n < 1 || n > 64) throw std::invalid_argument("graph vertex count out of range");
  auto masks = detail::edges_from_json(j.at("edges"), n, false);
  std::sort(masks.begin(), masks.end());
  if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
    throw std::invalid_argument("graph lists an edge twice");
  std::vector<std::pair<int, int>> es;
  for (VertexSet m : masks) {
    auto vs = detail::to_vertices(m);
    es.emplace_back(vs[0], vs[1]);
  }
  return Graph(n, std::move(es));
}

inline Clutter parse_clutter_json(const std::string& text) {
  return parse_clutter_json(Json::parse(text));
}

inline Graph parse_graph_json(const std::string& text) {
  return parse_graph_json(Json::parse(text));
}

inline Json clutter_to_json(const Clutter& c) {
  Json j;
  j["n"] = c.n;
  Json edges = Json::array();
  for (VertexSet e : c.edges) edges.push_back(detail::vertex_set_to_json(e));
  j["edges"] = edges;
  return j;
}

inline Json graph_to_json(const Graph& g) { return clutter_to_json(g.to_clutter()); }

inline Json prime_to_json(const PrimeSupport& p) {
  Json arr = Json::array();
  for (int v : p.vars) arr.push_back(v + 1);
  return arr;
}

}  // namespace vnumkit
