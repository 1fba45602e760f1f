#pragma once

#include <vector>

#include "kecrit/graph.hpp"

namespace kecrit {

inline constexpr Vertex kUnmatched = static_cast<Vertex>(-1);

/// A set of pairwise non-incident edges, stored as a mate array.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t n) : mate_(n, kUnmatched) {}

  /// Validates that `edges` are edges of g and pairwise non-incident.
  /// Throws std::invalid_argument otherwise.
  static Matching from_edges(const Graph& g, std::span<const Edge> edges);

  std::size_t size() const { return size_; }
  std::size_t vertex_count() const { return mate_.size(); }
  Vertex mate(Vertex v) const { return mate_.at(v); }
  bool is_saturated(Vertex v) const { return mate_.at(v) != kUnmatched; }
  VertexSet saturated() const;
  std::vector<Edge> edges() const;

  void match(Vertex u, Vertex v);

 private:
  std::vector<Vertex> mate_;
  std::size_t size_ = 0;
};

bool is_valid_matching(const Graph& g, const Matching& m);

struct BipartitePartition {
  VertexSet left;
  VertexSet right;
};

/// Throws std::invalid_argument unless parts is a bipartition of g.
void check_bipartition(const Graph& g, const BipartitePartition& parts);

/// Hopcroft-Karp, O(E sqrt V).
Matching max_matching_bipartite(const Graph& g, const BipartitePartition& parts);

/// König cover: vertices of left not reachable by alternating paths from an
/// unmatched left vertex, plus reachable right vertices. Throws
/// std::invalid_argument when m is not maximum (cover size differs).
VertexSet min_vertex_cover_bipartite(const Graph& g, const BipartitePartition& parts,
                                     const Matching& m);

/// Left vertices reachable from unmatched left vertices by alternating
/// paths. For a maximum matching this set maximises |S| - |N(S)| over
/// subsets of the left side.
VertexSet alternating_reach_left(const Graph& g, const BipartitePartition& parts,
                                 const Matching& m);

/// Edmonds' blossom algorithm.
Matching max_matching_general(const Graph& g);

/// Berge test: searches for an m-augmenting path in the general graph.
bool has_augmenting_path(const Graph& g, const Matching& m);

}  // namespace kecrit
