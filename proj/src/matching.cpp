#include "kecrit/matching.hpp"

#include "hopcroft_karp.hpp"

#include <algorithm>
#include <deque>

namespace kecrit {

Matching Matching::from_edges(const Graph& g, std::span<const Edge> edges) {
  Matching m(g.n());
  for (const Edge& e : edges) {
    if (e.u >= g.n() || e.v >= g.n() || !g.adjacent(e.u, e.v))
      throw std::invalid_argument("matching edge is not an edge of the graph");
    if (m.is_saturated(e.u) || m.is_saturated(e.v))
      throw std::invalid_argument("matching edges share an endpoint");
    m.match(e.u, e.v);
  }
  return m;
}

void Matching::match(Vertex u, Vertex v) {
  if (u == v || mate_.at(u) != kUnmatched || mate_.at(v) != kUnmatched)
    throw std::invalid_argument("matching edges share an endpoint");
  mate_[u] = v;
  mate_[v] = u;
  ++size_;
}

VertexSet Matching::saturated() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < mate_.size(); ++v)
    if (mate_[v] != kUnmatched) out.push_back(v);
  return VertexSet(std::move(out));
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < mate_.size(); ++v)
    if (mate_[v] != kUnmatched && v < mate_[v]) out.push_back({v, mate_[v]});
  return out;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  if (m.vertex_count() != g.n()) return false;
  std::size_t count = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    Vertex w = m.mate(v);
    if (w == kUnmatched) continue;
    if (w >= g.n() || m.mate(w) != v || !g.adjacent(v, w)) return false;
    ++count;
  }
  return count == 2 * m.size();
}

// ---------------------------------------------------------------------------
// Bipartite

void check_bipartition(const Graph& g, const BipartitePartition& parts) {
  g.check(parts.left);
  g.check(parts.right);
  if (!set_intersection(parts.left, parts.right).empty() ||
      parts.left.size() + parts.right.size() != g.n())
    throw std::invalid_argument("partition sides must be disjoint and cover all vertices");
  for (Vertex u : parts.left)
    for (Vertex w : g.neighbors(u))
      if (parts.left.contains(w))
        throw std::invalid_argument("edge inside the left side of the partition");
  for (Vertex u : parts.right)
    for (Vertex w : g.neighbors(u))
      if (parts.right.contains(w))
        throw std::invalid_argument("edge inside the right side of the partition");
}

Matching max_matching_bipartite(const Graph& g, const BipartitePartition& parts) {
  check_bipartition(g, parts);
  auto nbrs = [&g](Vertex u) { return g.neighbors(u); };
  detail::HopcroftKarp hk(g.n(), std::vector<Vertex>(parts.left.begin(), parts.left.end()),
                          nbrs);
  hk.run();
  Matching m(g.n());
  for (Vertex u : parts.left)
    if (hk.mate_left()[u] != kUnmatched) m.match(u, hk.mate_left()[u]);
  return m;
}

VertexSet alternating_reach_left(const Graph& g, const BipartitePartition& parts,
                                 const Matching& m) {
  std::vector<char> seen(g.n(), 0);
  std::deque<Vertex> queue;
  for (Vertex u : parts.left)
    if (!m.is_saturated(u)) {
      seen[u] = 1;
      queue.push_back(u);
    }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      Vertex next = m.mate(w);
      if (next != kUnmatched && !seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex u : parts.left)
    if (seen[u]) out.push_back(u);
  return VertexSet(std::move(out));
}

VertexSet min_vertex_cover_bipartite(const Graph& g, const BipartitePartition& parts,
                                     const Matching& m) {
  check_bipartition(g, parts);
  if (!is_valid_matching(g, m)) throw std::invalid_argument("not a matching of the graph");
  const VertexSet reach_left = alternating_reach_left(g, parts, m);
  const VertexSet reach_right = neighborhood(g, reach_left);
  VertexSet cover = set_union(set_difference(parts.left, reach_left), reach_right);
  if (cover.size() != m.size())
    throw std::invalid_argument("matching is not maximum: König cover has " +
                                std::to_string(cover.size()) + " vertices, matching " +
                                std::to_string(m.size()) + " edges");
  return cover;
}

// ---------------------------------------------------------------------------
// General graphs

namespace {

class Blossom {
 public:
  Blossom(const Graph& g, std::vector<Vertex> mate)
      : g_(g),
        n_(g.n()),
        mate_(std::move(mate)),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_),
        on_path_(n_) {}

  // Returns the exposed endpoint of an augmenting path from root, or
  // kUnmatched. parent_ links let augment() flip it.
  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
          Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == kUnmatched) {
          parent_[to] = v;
          if (mate_[to] == kUnmatched) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kUnmatched;
  }

  void augment(Vertex v) {
    while (v != kUnmatched) {
      Vertex pv = parent_[v];
      Vertex ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  const std::vector<Vertex>& mate() const { return mate_; }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    for (;;) {
      a = base_[a];
      on_path_[a] = 1;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<char> on_path_;
};

std::vector<Vertex> mate_array(const Matching& m) {
  std::vector<Vertex> mate(m.vertex_count());
  for (Vertex v = 0; v < mate.size(); ++v) mate[v] = m.mate(v);
  return mate;
}

}  // namespace

Matching max_matching_general(const Graph& g) {
  std::vector<Vertex> mate(g.n(), kUnmatched);
  // greedy warm start
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mate[v] != kUnmatched) continue;
    for (Vertex w : g.neighbors(v))
      if (mate[w] == kUnmatched) {
        mate[v] = w;
        mate[w] = v;
        break;
      }
  }
  Blossom search(g, std::move(mate));
  for (Vertex v = 0; v < g.n(); ++v) {
    if (search.mate()[v] != kUnmatched) continue;
    Vertex end = search.find_path(v);
    if (end != kUnmatched) search.augment(end);
  }
  Matching m(g.n());
  const auto& final_mate = search.mate();
  for (Vertex v = 0; v < g.n(); ++v)
    if (final_mate[v] != kUnmatched && v < final_mate[v]) m.match(v, final_mate[v]);
  return m;
}

bool has_augmenting_path(const Graph& g, const Matching& m) {
  if (!is_valid_matching(g, m)) throw std::invalid_argument("not a matching of the graph");
  Blossom search(g, mate_array(m));
  for (Vertex v = 0; v < g.n(); ++v)
    if (!m.is_saturated(v) && search.find_path(v) != kUnmatched) return true;
  return false;
}

}  // namespace kecrit
