#ifndef ARTK_GRAPH_HPP
#define ARTK_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artk/error.hpp"

namespace artk {

using Vertex = std::uint8_t;

inline constexpr std::size_t max_vertices = 64;

/// Subset of the vertices of a graph, stored as a bitmask over vertex
/// indices. Iteration follows vertex declaration order.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}

  static VertexSet singleton(Vertex v)
  { return VertexSet(std::uint64_t{1} << v); }

  static VertexSet first_n(std::size_t n)
  { return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }

  constexpr std::uint64_t bits() const { return _bits; }
  bool empty() const { return _bits == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(_bits)); }
  bool contains(Vertex v) const { return (_bits >> v) & 1u; }
  bool subset_of(VertexSet other) const { return (_bits & ~other._bits) == 0; }

  VertexSet with(Vertex v) const { return VertexSet(_bits | (std::uint64_t{1} << v)); }
  VertexSet without(Vertex v) const { return VertexSet(_bits & ~(std::uint64_t{1} << v)); }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a._bits | b._bits); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a._bits & b._bits); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a._bits & ~b._bits); }
  friend bool operator==(VertexSet a, VertexSet b) = default;

  std::vector<Vertex> members() const;

  /// ShortLex on subsets: smaller first, then lexicographic on the sorted
  /// index sequence.
  static bool shortlex_less(VertexSet a, VertexSet b);

private:
  std::uint64_t _bits = 0;
};

struct Edge {
  Vertex a;
  Vertex b;
  unsigned label;
};

/// Finite simplicial graph with edge labels m >= 2. A missing edge stands
/// for the label infinity. Immutable once constructed.
class LabeledGraph {
public:
  LabeledGraph() = default;

  /// Validates names and edges; throws artk::Error on any violation.
  LabeledGraph(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t size() const { return _names.size(); }
  const std::vector<std::string> &names() const { return _names; }
  const std::string &name(Vertex v) const { return _names.at(v); }
  const std::vector<Edge> &edges() const { return _edges; }
  VertexSet all() const { return VertexSet::first_n(size()); }

  std::optional<Vertex> find(std::string_view name) const;
  Vertex vertex(std::string_view name) const;

  /// Edge label, or 0 when the pair is not an edge (label infinity).
  unsigned label(Vertex a, Vertex b) const
  { return _labels[a * size() + b]; }

  bool adjacent(Vertex a, Vertex b) const
  { return a != b && label(a, b) != 0; }

  VertexSet neighbors(Vertex v) const { return _neighbors.at(v); }

  /// Canonical text form in the fixture format (round-trips through
  /// parse_graph).
  std::string to_text() const;

  /// FNV-1a hash of to_text(), rendered as 16 hex digits.
  std::string hash() const;

  friend bool operator==(const LabeledGraph &a, const LabeledGraph &b)
  { return a._names == b._names && a._labels == b._labels; }

private:
  std::vector<std::string> _names;
  std::vector<Edge> _edges;
  std::vector<unsigned> _labels;
  std::vector<VertexSet> _neighbors;
};

/// Parses the line-oriented graph format:
///
///   # comment
///   vertices: v w x y
///   edge: v w 2
///   edges: w x 3, x y 4
///
/// Vertex order is declaration order.
LabeledGraph parse_graph(std::string_view text);

LabeledGraph load_graph(const std::string &path);

VertexSet star(const LabeledGraph &g, Vertex v);
VertexSet link(const LabeledGraph &g, Vertex v);

/// The subgraph spanned by `subset`, with vertices renumbered in the original
/// declaration order.
LabeledGraph induced_subgraph(const LabeledGraph &g, VertexSet subset);

/// All complete vertex subsets including the empty set, sorted ShortLex.
std::vector<VertexSet> enumerate_cliques(const LabeledGraph &g);

bool is_free_of_infinity(const LabeledGraph &g, VertexSet subset);

/// Pairs {s,t} with s < t that are not edges, in ShortLex order.
std::vector<std::pair<Vertex, Vertex>> nonedge_pairs(const LabeledGraph &g);

/// Parses a whitespace or comma separated list of vertex names; `{}` and the
/// empty string denote the empty set.
VertexSet parse_subset(const LabeledGraph &g, std::string_view text);

/// Renders as `{a,b}` in vertex order.
std::string format_subset(const LabeledGraph &g, VertexSet subset);

} // namespace artk

#endif // ARTK_GRAPH_HPP
