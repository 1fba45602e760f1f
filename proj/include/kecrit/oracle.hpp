#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kecrit/graph.hpp"

namespace kecrit {

// Exponential ground truth. Every entry point refuses graphs with more than
// `bound` vertices; the bitmask representation caps the bound at 64.
struct OracleOptions {
  std::size_t bound = 20;
};

class OracleBoundError : public std::runtime_error {
 public:
  OracleBoundError(std::size_t n, std::size_t bound);
};

struct IndependenceProfile {
  std::size_t alpha = 0;
  std::vector<VertexSet> omega;  // all maximum independent sets, sorted
  VertexSet core;
  VertexSet corona;
};

struct CriticalFamily {
  std::int64_t d = 0;
  std::vector<VertexSet> all_critical_independent;
  std::vector<VertexSet> maximum_critical_independent;
  VertexSet ker;
  VertexSet nucleus;
  VertexSet diadem;
};

IndependenceProfile independence_profile(const Graph& g, OracleOptions opts = {});
CriticalFamily critical_family(const Graph& g, OracleOptions opts = {});
std::size_t mu_exact(const Graph& g, OracleOptions opts = {});

/// max |S| - |N(S)| over all 2^n subsets, or over independent ones only.
std::int64_t brute_force_critical_difference(const Graph& g, bool independent_only,
                                             OracleOptions opts = {});

/// Calls fn once per independent set of g (including the empty set).
void for_each_independent_set(const Graph& g, const std::function<void(const VertexSet&)>& fn,
                              OracleOptions opts = {});

}  // namespace kecrit
