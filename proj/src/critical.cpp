#include "kecrit/critical.hpp"

#include <stdexcept>

#include "hopcroft_karp.hpp"

namespace kecrit {

BipartiteDouble bipartite_double(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::string> labels = g.labels();
  labels.reserve(2 * n);
  for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v) + "'");
  std::vector<Edge> edges;
  edges.reserve(2 * g.m());
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, static_cast<Vertex>(n + e.v)});
    edges.push_back({e.v, static_cast<Vertex>(n + e.u)});
  }
  BipartiteDouble out;
  out.graph = Graph::from_edges(std::move(labels), edges);
  out.host_n = n;
  std::vector<Vertex> right;
  for (Vertex v = 0; v < n; ++v) right.push_back(static_cast<Vertex>(n + v));
  out.parts = {VertexSet::range(n), VertexSet(std::move(right))};
  return out;
}

std::int64_t critical_difference(const Graph& g) {
  const BipartiteDouble b = bipartite_double(g);
  const Matching m = max_matching_bipartite(b.graph, b.parts);
  return static_cast<std::int64_t>(g.n()) - static_cast<std::int64_t>(m.size());
}

VertexSet find_critical_set(const Graph& g) {
  const BipartiteDouble b = bipartite_double(g);
  const Matching m = max_matching_bipartite(b.graph, b.parts);
  // left side of B(G) carries host indices unchanged
  return alternating_reach_left(b.graph, b.parts, m);
}

VertexSet find_critical_independent_set(const Graph& g) {
  const VertexSet x = find_critical_set(g);
  return set_difference(x, neighborhood(g, x));
}

// ---------------------------------------------------------------------------

namespace {

using AdjacencyLists = std::vector<std::vector<Vertex>>;

struct ListNeighbors {
  const AdjacencyLists* lists;
  const std::vector<Vertex>& operator()(Vertex u) const { return (*lists)[u]; }
};

struct HostNeighbors {
  const Graph* g;
  std::span<const Vertex> operator()(Vertex u) const { return g->neighbors(u); }
};

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Vertex>(i);
  return out;
}

}  // namespace

CriticalSolver::CriticalSolver(const Graph& g) : g_(g) {
  const std::size_t n = g_.n();
  detail::HopcroftKarp hk(n, all_vertices(n), HostNeighbors{&g_});
  const std::size_t mu = hk.run();
  d_ = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(mu);
  mate_ = hk.mate_left();
  const VertexSet x(hk.reach_left());
  initial_witness_ = set_difference(x, neighborhood(g_, x));
}

ForcedOptimum CriticalSolver::forced_optimum(const ForcingConstraints& c) const {
  g_.check(c.force_in);
  g_.check(c.force_out);
  if (!set_intersection(c.force_in, c.force_out).empty())
    throw std::invalid_argument("force_in and force_out overlap");

  const std::size_t n = g_.n();
  const VertexSet forced_nbrs = neighborhood(g_, c.force_in);
  std::vector<char> right_active(n, 1);
  for (Vertex w : forced_nbrs) right_active[w] = 0;
  std::vector<char> left_active(n, 1);
  for (Vertex v : c.force_in) left_active[v] = 0;
  for (Vertex v : c.force_out) left_active[v] = 0;

  // Remaining free part: left side V \ (force_in ∪ force_out), right side
  // V' \ N(force_in)'. Its deficiency is the best extra gain over force_in.
  AdjacencyLists lists(n);
  std::vector<Vertex> left;
  for (Vertex u = 0; u < n; ++u) {
    if (!left_active[u]) continue;
    left.push_back(u);
    for (Vertex w : g_.neighbors(u))
      if (right_active[w]) lists[u].push_back(w);
  }
  const std::size_t left_count = left.size();
  detail::HopcroftKarp hk(n, std::move(left), ListNeighbors{&lists});
  std::vector<char> right_taken(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    const Vertex w = mate_[u];
    if (left_active[u] && w != kUnmatched && right_active[w] && !right_taken[w]) {
      hk.warm_start(u, w);
      right_taken[w] = 1;
    }
  }
  const std::size_t mu = hk.run();

  ForcedOptimum out;
  out.value = static_cast<std::int64_t>(c.force_in.size()) -
              static_cast<std::int64_t>(forced_nbrs.size()) +
              static_cast<std::int64_t>(left_count) - static_cast<std::int64_t>(mu);
  out.maximizer = set_union(c.force_in, VertexSet(hk.reach_left()));
  return out;
}

std::optional<VertexSet> CriticalSolver::critical_extension(const VertexSet& j) const {
  g_.check(j);
  if (!is_independent(g_, j)) return std::nullopt;
  const VertexSet nj = neighborhood(g_, j);
  const ForcedOptimum opt = forced_optimum({j, nj});
  if (opt.value != d_) return std::nullopt;
  const VertexSet& x = opt.maximizer;
  VertexSet witness = set_difference(x, neighborhood(g_, x));
  if (!j.is_subset_of(witness) || !is_independent(g_, witness) ||
      difference(g_, witness) != d_)
    throw std::logic_error("critical extension witness failed its postcondition");
  return witness;
}

VertexSet CriticalSolver::max_critical_independent_set() const {
  const std::size_t n = g_.n();
  std::vector<Vertex> chosen;
  std::vector<char> blocked(n, 0);
  // Invariant: witness is a critical independent set containing `chosen`.
  // Members of it pass their extension test without running it.
  VertexSet witness = initial_witness_;
  for (Vertex v = 0; v < n; ++v) {
    if (blocked[v]) continue;
    if (!witness.contains(v)) {
      std::vector<Vertex> candidate = chosen;
      candidate.push_back(v);
      auto ext = critical_extension(VertexSet(std::move(candidate)));
      if (!ext) continue;
      witness = std::move(*ext);
    }
    chosen.push_back(v);
    blocked[v] = 1;
    for (Vertex w : g_.neighbors(v)) blocked[w] = 1;
  }
  return VertexSet(std::move(chosen));
}

VertexSet CriticalSolver::diadem() const {
  const std::size_t n = g_.n();
  std::vector<char> member(n, 0);
  for (Vertex v : max_critical_independent_set()) member[v] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (member[v]) continue;
    if (auto ext = critical_extension(VertexSet{v}))
      for (Vertex w : *ext) member[w] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (member[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------

ForcedOptimum forced_optimum(const Graph& g, const ForcingConstraints& c) {
  return CriticalSolver(g).forced_optimum(c);
}

std::int64_t forced_difference(const Graph& g, const ForcingConstraints& c) {
  return forced_optimum(g, c).value;
}

std::optional<VertexSet> critical_extension(const Graph& g, const VertexSet& j) {
  return CriticalSolver(g).critical_extension(j);
}

bool extends_to_critical_independent(const Graph& g, const VertexSet& j) {
  return critical_extension(g, j).has_value();
}

VertexSet max_critical_independent_set(const Graph& g) {
  return CriticalSolver(g).max_critical_independent_set();
}

VertexSet diadem(const Graph& g) { return CriticalSolver(g).diadem(); }

Decomposition decompose(const CriticalSolver& solver) {
  const Graph& g = solver.graph();
  Decomposition out;
  out.witness = solver.max_critical_independent_set();
  out.x = set_union(out.witness, neighborhood(g, out.witness));
  out.complement = set_difference(VertexSet::range(g.n()), out.x);
  return out;
}

Decomposition decompose(const Graph& g) { return decompose(CriticalSolver(g)); }

}  // namespace kecrit
