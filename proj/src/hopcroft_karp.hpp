#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "kecrit/graph.hpp"

namespace kecrit::detail {

// Hopcroft-Karp over an implicit bipartite graph. Left and right vertices
// are both identified by ids in [0, size); `neighbors(u)` yields the right
// ids adjacent to left id u, and only ids with `left_active[u]` are
// matched from. Optionally warm-started with existing mate arrays.
template <typename Neighbors>
class HopcroftKarp {
 public:
  static constexpr Vertex kFree = static_cast<Vertex>(-1);

  HopcroftKarp(std::size_t size, std::vector<Vertex> left_ids, Neighbors neighbors)
      : left_(std::move(left_ids)),
        neighbors_(std::move(neighbors)),
        dist_(size, kInf),
        cursor_(size, 0),
        mate_left_(size, kFree),
        mate_right_(size, kFree) {}

  void warm_start(Vertex left, Vertex right) {
    mate_left_[left] = right;
    mate_right_[right] = left;
  }

  std::size_t run() {
    while (bfs()) {
      for (Vertex u : left_) cursor_[u] = 0;
      for (Vertex u : left_)
        if (mate_left_[u] == kFree) dfs(u);
    }
    std::size_t size = 0;
    for (Vertex u : left_)
      if (mate_left_[u] != kFree) ++size;
    return size;
  }

  const std::vector<Vertex>& mate_left() const { return mate_left_; }
  const std::vector<Vertex>& mate_right() const { return mate_right_; }

  // Left ids reachable from free left ids along alternating paths.
  std::vector<Vertex> reach_left() const {
    std::vector<char> seen_left(mate_left_.size(), 0);
    std::vector<char> seen_right(mate_right_.size(), 0);
    std::deque<Vertex> queue;
    for (Vertex u : left_)
      if (mate_left_[u] == kFree) {
        seen_left[u] = 1;
        queue.push_back(u);
      }
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : neighbors_(u)) {
        if (seen_right[w]) continue;
        seen_right[w] = 1;
        Vertex next = mate_right_[w];
        if (next != kFree && !seen_left[next]) {
          seen_left[next] = 1;
          queue.push_back(next);
        }
      }
    }
    std::vector<Vertex> out;
    for (Vertex u : left_)
      if (seen_left[u]) out.push_back(u);
    return out;
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  bool bfs() {
    std::deque<Vertex> queue;
    for (Vertex u : left_) {
      if (mate_left_[u] == kFree) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : neighbors_(u)) {
        Vertex next = mate_right_[w];
        if (next == kFree) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[u] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool dfs(Vertex u) {
    const auto& nbrs = neighbors_(u);
    for (std::size_t& i = cursor_[u]; i < nbrs.size(); ++i) {
      Vertex w = nbrs[i];
      Vertex next = mate_right_[w];
      if (next == kFree || (dist_[next] == dist_[u] + 1 && dfs(next))) {
        mate_left_[u] = w;
        mate_right_[w] = u;
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<Vertex> left_;
  Neighbors neighbors_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> cursor_;
  std::vector<Vertex> mate_left_;
  std::vector<Vertex> mate_right_;
};

}  // namespace kecrit::detail
