#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kecrit {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex indices. Validity against a particular
// graph is checked by the operations that consume it.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(std::size_t n);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  void insert(Vertex v);

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  std::span<const Vertex> members() const { return members_; }

  bool is_subset_of(const VertexSet& other) const;

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph with unique string labels.
///
/// Vertex indices are 0..n-1 in label order. Adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labels and index pairs. Duplicate edges collapse.
  /// Throws std::invalid_argument on duplicate labels, out-of-range indices
  /// or self-loops.
  static Graph from_edges(std::vector<std::string> labels,
                          std::span<const Edge> edges);

  /// Builds a graph on labels given by name pairs; labels are assigned in
  /// first-appearance order after `isolated` (which may be empty).
  static Graph from_labeled_edges(
      std::span<const std::pair<std::string, std::string>> edges,
      std::span<const std::string> isolated = {});

  std::size_t n() const { return labels_.size(); }
  std::size_t m() const { return m_; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> index_of(std::string_view label) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Resolves labels to a VertexSet; throws std::invalid_argument on an
  /// unknown label.
  VertexSet vertices(std::initializer_list<std::string_view> labels) const;
  VertexSet vertices(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(const VertexSet& s) const;

  /// Throws std::out_of_range when s has a member >= n.
  void check(const VertexSet& s) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

VertexSet neighborhood(const Graph& g, const VertexSet& s);
std::int64_t difference(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // sub index -> host index

  VertexSet lift(const VertexSet& sub) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// ---------------------------------------------------------------------------
// Text formats

enum class Format { edge_list, dimacs };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph parse_graph(std::string_view text, Format format);
std::string to_edge_list(const Graph& g);
std::string to_dimacs(const Graph& g);
std::optional<Format> format_from_name(std::string_view name);

// ---------------------------------------------------------------------------
// Generators

enum class GeneratorKind { gnp, bipartite_gnp, disjoint_union, fixture };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::gnp;
  std::size_t n = 0;
  double p = 0.0;
  // bipartite_gnp: {left, right}; disjoint_union: one gnp(size, p) per entry
  std::vector<std::size_t> part_sizes;
  std::string fixture;
  std::uint64_t seed = 0;
};

Graph generate(const GeneratorSpec& spec);

/// Built-in fixtures by name: "G1", "G2", "GF". Throws std::invalid_argument.
Graph fixture(std::string_view name);

/// Deterministic member `index` of a seeded sweep over graph families
/// (gnp at p in {0.1,0.3,0.5,0.8}, bipartite gnp, disjoint unions) with
/// vertex counts in [n_min, n_max].
GeneratorSpec sweep_spec(std::uint64_t seed, std::size_t index,
                         std::size_t n_min, std::size_t n_max);

}  // namespace kecrit
