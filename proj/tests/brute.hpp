#pragma once

// Test-only exhaustive helpers. Deliberately naive: subsets are walked as
// plain integers and sets rebuilt through the public VertexSet API, so they
// share no code with the bitmask oracle or the matching-based fast paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>

#include "kecrit/graph.hpp"

namespace brute {

inline kecrit::VertexSet subset(std::uint32_t bits) {
  std::vector<kecrit::Vertex> out;
  for (kecrit::Vertex v = 0; v < 32; ++v)
    if (bits >> v & 1U) out.push_back(v);
  return kecrit::VertexSet(std::move(out));
}

inline void for_each_subset(const kecrit::Graph& g,
                            const std::function<void(const kecrit::VertexSet&)>& fn) {
  const std::uint32_t limit = 1U << g.n();
  for (std::uint32_t bits = 0; bits < limit; ++bits) fn(subset(bits));
}

/// max d(X) over X with must ⊆ X and X ∩ avoid = ∅.
inline std::int64_t constrained_difference(const kecrit::Graph& g, const kecrit::VertexSet& must,
                                           const kecrit::VertexSet& avoid) {
  std::int64_t best = INT64_MIN;
  for_each_subset(g, [&](const kecrit::VertexSet& x) {
    if (!must.is_subset_of(x) || !set_intersection(x, avoid).empty()) return;
    best = std::max(best, kecrit::difference(g, x));
  });
  return best;
}

/// Largest matching by trying every edge subset (m <= ~20).
inline std::size_t matching_number(const kecrit::Graph& g) {
  const auto edges = g.edges();
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << edges.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    std::vector<char> used(g.n(), 0);
    std::size_t count = 0;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(bits >> i & 1U)) continue;
      if (used[edges[i].u] || used[edges[i].v]) ok = false;
      used[edges[i].u] = used[edges[i].v] = 1;
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

inline kecrit::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<kecrit::Edge> edges;
  std::bernoulli_distribution coin(p);
  for (kecrit::Vertex u = 0; u < n; ++u)
    for (kecrit::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return kecrit::Graph::from_edges(std::move(labels), edges);
}

inline kecrit::Graph complete(std::size_t n) {
  std::mt19937_64 rng(0);
  return random_graph(rng, n, 1.0);
}

inline kecrit::Graph edgeless(std::size_t n) {
  std::mt19937_64 rng(0);
  return random_graph(rng, n, 0.0);
}

}  // namespace brute
