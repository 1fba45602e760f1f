#pragma once

#include <cstdint>
#include <optional>

#include "kecrit/graph.hpp"
#include "kecrit/matching.hpp"

namespace kecrit {

/// Bipartite graph on V and a primed copy V': u ~ v' iff u ~ v in the host.
/// Vertex v' has index n + v and label "v'".
struct BipartiteDouble {
  Graph graph;
  BipartitePartition parts;
  std::size_t host_n = 0;

  Vertex primed(Vertex v) const { return static_cast<Vertex>(host_n + v); }
};

BipartiteDouble bipartite_double(const Graph& g);

/// d(G) = max |X| - |N(X)| over all X, computed as n - mu(B(G)).
std::int64_t critical_difference(const Graph& g);

/// A critical set (not necessarily independent): the unprimed vertices
/// reachable by alternating paths from unmatched vertices in B(G).
VertexSet find_critical_set(const Graph& g);

/// X \ N(X) for the critical set X above; independent with d = d(G).
VertexSet find_critical_independent_set(const Graph& g);

struct ForcingConstraints {
  VertexSet force_in;
  VertexSet force_out;
};

struct ForcedOptimum {
  std::int64_t value = 0;
  VertexSet maximizer;  // some X attaining value under the constraints
};

/// max{ d(X) : force_in ⊆ X, X ∩ force_out = ∅ }. Vertices in force_out
/// still count when they fall in N(X). Throws std::invalid_argument when
/// the constraints overlap.
ForcedOptimum forced_optimum(const Graph& g, const ForcingConstraints& c);
std::int64_t forced_difference(const Graph& g, const ForcingConstraints& c);

/// Holds d(G) and a maximum matching of B(G) so that repeated extension
/// queries on the same graph warm-start from it.
class CriticalSolver {
 public:
  explicit CriticalSolver(const Graph& g);

  const Graph& graph() const { return g_; }
  std::int64_t critical_difference() const { return d_; }

  ForcedOptimum forced_optimum(const ForcingConstraints& c) const;

  /// A critical independent set containing j, if one exists.
  std::optional<VertexSet> critical_extension(const VertexSet& j) const;
  bool extends_to_critical_independent(const VertexSet& j) const {
    return critical_extension(j).has_value();
  }

  /// Greedy in ascending vertex order; maximum by the extension property.
  VertexSet max_critical_independent_set() const;
  VertexSet diadem() const;

 private:
  Graph g_;
  std::int64_t d_ = 0;
  VertexSet initial_witness_;
  std::vector<Vertex> mate_;  // host-indexed: left u matched to right mate_[u]
};

std::optional<VertexSet> critical_extension(const Graph& g, const VertexSet& j);
bool extends_to_critical_independent(const Graph& g, const VertexSet& j);
VertexSet max_critical_independent_set(const Graph& g);
VertexSet diadem(const Graph& g);

/// The unique X with X = I ∪ N(I) for every maximum critical independent
/// set I; `witness` is the I that was found.
struct Decomposition {
  VertexSet witness;
  VertexSet x;
  VertexSet complement;
};

Decomposition decompose(const Graph& g);
Decomposition decompose(const CriticalSolver& solver);

}  // namespace kecrit
