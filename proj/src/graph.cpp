#include "kecrit/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace kecrit {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  VertexSet s;
  s.members_ = std::move(all);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(),
                 b.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                        b.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.members_.begin(), a.members_.end(), b.members_.begin(),
                      b.members_.end(), std::back_inserter(out.members_));
  return out;
}

// ---------------------------------------------------------------------------

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const Edge> edges) {
  Graph g;
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw std::invalid_argument("duplicate vertex label '" + *dup + "'");
  }
  g.labels_ = std::move(labels);
  const std::size_t n = g.labels_.size();
  g.adj_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at '" + g.labels_[e.u] + "'");
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  std::size_t twice_m = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice_m += list.size();
  }
  g.m_ = twice_m / 2;
  return g;
}

Graph Graph::from_labeled_edges(
    std::span<const std::pair<std::string, std::string>> edges,
    std::span<const std::string> isolated) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  auto intern = [&](const std::string& s) {
    auto [it, inserted] = index.emplace(s, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(s);
    return it->second;
  };
  for (const auto& s : isolated) intern(s);
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    Vertex u = intern(a);
    Vertex v = intern(b);
    es.push_back({u, v});
  }
  return from_edges(std::move(labels), es);
}

std::optional<Vertex> Graph::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Vertex>(i);
  return std::nullopt;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

VertexSet Graph::vertices(std::initializer_list<std::string_view> labels) const {
  std::vector<Vertex> out;
  for (auto l : labels) {
    auto v = index_of(l);
    if (!v) throw std::invalid_argument("unknown vertex label '" + std::string(l) + "'");
    out.push_back(*v);
  }
  return VertexSet(std::move(out));
}

VertexSet Graph::vertices(std::span<const std::string> labels) const {
  std::vector<Vertex> out;
  for (const auto& l : labels) {
    auto v = index_of(l);
    if (!v) throw std::invalid_argument("unknown vertex label '" + l + "'");
    out.push_back(*v);
  }
  return VertexSet(std::move(out));
}

std::vector<std::string> Graph::labels_of(const VertexSet& s) const {
  check(s);
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(labels_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::check(const VertexSet& s) const {
  if (!s.empty() && *std::prev(s.end()) >= n())
    throw std::out_of_range("vertex index out of range for graph with n=" +
                            std::to_string(n()));
}

// ---------------------------------------------------------------------------

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  g.check(s);
  std::vector<char> mark(g.n(), 0);
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u)) mark[w] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (mark[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

std::int64_t difference(const Graph& g, const VertexSet& s) {
  return static_cast<std::int64_t>(s.size()) -
         static_cast<std::int64_t>(neighborhood(g, s).size());
}

bool is_independent(const Graph& g, const VertexSet& s) {
  g.check(s);
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (s.contains(w)) return false;
  return true;
}

VertexSet InducedSubgraph::lift(const VertexSet& sub) const {
  std::vector<Vertex> out;
  out.reserve(sub.size());
  for (Vertex v : sub) out.push_back(to_host.at(v));
  return VertexSet(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check(s);
  std::vector<Vertex> local(g.n(), static_cast<Vertex>(-1));
  InducedSubgraph out;
  std::vector<std::string> labels;
  for (Vertex v : s) {
    local[v] = static_cast<Vertex>(out.to_host.size());
    out.to_host.push_back(v);
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (u < w && local[w] != static_cast<Vertex>(-1))
        edges.push_back({local[u], local[w]});
  out.graph = Graph::from_edges(std::move(labels), edges);
  return out;
}

}  // namespace kecrit
