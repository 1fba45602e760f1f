#include "kecrit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace kecrit {

OracleBoundError::OracleBoundError(std::size_t n, std::size_t bound)
    : std::runtime_error("oracle refused graph with n=" + std::to_string(n) +
                         " (bound " + std::to_string(bound) + ")") {}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

// Bitmask view of a graph already checked against the oracle bound.
struct MaskGraph {
  std::size_t n = 0;
  std::vector<Mask> nbr;

  MaskGraph(const Graph& g, OracleOptions opts) : n(g.n()), nbr(g.n(), 0) {
    if (opts.bound > 64) throw std::invalid_argument("oracle bound cannot exceed 64");
    if (g.n() > opts.bound) throw OracleBoundError(g.n(), opts.bound);
    for (const Edge& e : g.edges()) {
      nbr[e.u] |= bit(e.v);
      nbr[e.v] |= bit(e.u);
    }
  }

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= nbr[std::countr_zero(s)];
    return out;
  }
};

VertexSet to_set(Mask s) {
  std::vector<Vertex> out;
  for (; s; s &= s - 1) out.push_back(static_cast<Vertex>(std::countr_zero(s)));
  return VertexSet(std::move(out));
}

template <typename Fn>
void enumerate_independent(const MaskGraph& mg, Mask chosen, Mask nbrs, Mask cand, Fn& fn) {
  fn(chosen, nbrs);
  while (cand) {
    const Vertex v = static_cast<Vertex>(std::countr_zero(cand));
    cand &= cand - 1;
    enumerate_independent(mg, chosen | bit(v), nbrs | mg.nbr[v], cand & ~mg.nbr[v], fn);
  }
}

// All maximum independent sets by branch and bound, branching on a vertex of
// maximum degree inside the candidate set.
class MaxIndependentSets {
 public:
  explicit MaxIndependentSets(const MaskGraph& mg) : mg_(mg) {}

  std::vector<Mask> run() {
    search(0, mg_.all());
    return std::move(found_);
  }

 private:
  void search(Mask chosen, Mask cand) {
    const int size = std::popcount(chosen);
    if (size + std::popcount(cand) < best_) return;
    if (cand == 0) {
      if (size > best_) {
        best_ = size;
        found_.clear();
      }
      found_.push_back(chosen);
      return;
    }
    Vertex pivot = 0;
    int pivot_degree = -1;
    for (Mask c = cand; c; c &= c - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(c));
      const int deg = std::popcount(mg_.nbr[v] & cand);
      if (deg > pivot_degree) {
        pivot_degree = deg;
        pivot = v;
      }
    }
    search(chosen | bit(pivot), cand & ~bit(pivot) & ~mg_.nbr[pivot]);
    // an isolated candidate belongs to every maximum extension
    if (pivot_degree > 0) search(chosen, cand & ~bit(pivot));
  }

  const MaskGraph& mg_;
  int best_ = 0;
  std::vector<Mask> found_;
};

VertexSet intersect_all(const std::vector<VertexSet>& family) {
  if (family.empty()) return {};
  VertexSet out = family.front();
  for (const auto& s : family) out = set_intersection(out, s);
  return out;
}

VertexSet unite_all(const std::vector<VertexSet>& family) {
  VertexSet out;
  for (const auto& s : family) out = set_union(out, s);
  return out;
}

}  // namespace

IndependenceProfile independence_profile(const Graph& g, OracleOptions opts) {
  const MaskGraph mg(g, opts);
  IndependenceProfile out;
  for (Mask s : MaxIndependentSets(mg).run()) out.omega.push_back(to_set(s));
  std::sort(out.omega.begin(), out.omega.end());
  out.alpha = out.omega.front().size();
  out.core = intersect_all(out.omega);
  out.corona = unite_all(out.omega);
  return out;
}

CriticalFamily critical_family(const Graph& g, OracleOptions opts) {
  const MaskGraph mg(g, opts);
  std::int64_t best = 0;  // d(∅) = 0
  std::vector<Mask> members;
  auto visit = [&](Mask s, Mask nbrs) {
    const std::int64_t d = std::popcount(s) - std::popcount(nbrs);
    if (d > best) {
      best = d;
      members.clear();
    }
    if (d == best) members.push_back(s);
  };
  enumerate_independent(mg, 0, 0, mg.all(), visit);

  CriticalFamily out;
  out.d = best;
  std::size_t max_size = 0;
  for (Mask s : members) {
    out.all_critical_independent.push_back(to_set(s));
    max_size = std::max<std::size_t>(max_size, std::popcount(s));
  }
  std::sort(out.all_critical_independent.begin(), out.all_critical_independent.end());
  for (const auto& s : out.all_critical_independent)
    if (s.size() == max_size) out.maximum_critical_independent.push_back(s);
  out.ker = intersect_all(out.all_critical_independent);
  out.nucleus = intersect_all(out.maximum_critical_independent);
  out.diadem = unite_all(out.maximum_critical_independent);
  return out;
}

std::size_t mu_exact(const Graph& g, OracleOptions opts) {
  const MaskGraph mg(g, opts);
  std::unordered_map<Mask, std::size_t> memo;
  // lowest remaining vertex is either left unmatched or matched to a
  // remaining neighbour
  auto solve = [&](auto& self, Mask rest) -> std::size_t {
    while (rest && (mg.nbr[std::countr_zero(rest)] & rest) == 0) rest &= rest - 1;
    if (rest == 0) return 0;
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    const Vertex v = static_cast<Vertex>(std::countr_zero(rest));
    const Mask without_v = rest & ~bit(v);
    std::size_t best = self(self, without_v);
    for (Mask c = mg.nbr[v] & rest; c; c &= c - 1) {
      const Vertex w = static_cast<Vertex>(std::countr_zero(c));
      best = std::max(best, 1 + self(self, without_v & ~bit(w)));
    }
    memo.emplace(rest, best);
    return best;
  };
  return solve(solve, mg.all());
}

std::int64_t brute_force_critical_difference(const Graph& g, bool independent_only,
                                             OracleOptions opts) {
  const MaskGraph mg(g, opts);
  std::int64_t best = 0;
  if (independent_only) {
    auto visit = [&](Mask s, Mask nbrs) {
      best = std::max<std::int64_t>(best, std::popcount(s) - std::popcount(nbrs));
    };
    enumerate_independent(mg, 0, 0, mg.all(), visit);
    return best;
  }
  if (mg.n > 30) throw OracleBoundError(mg.n, 30);
  const Mask limit = Mask{1} << mg.n;
  for (Mask s = 1; s < limit; ++s)
    best = std::max<std::int64_t>(best,
                                  std::popcount(s) - std::popcount(mg.neighborhood(s)));
  return best;
}

void for_each_independent_set(const Graph& g, const std::function<void(const VertexSet&)>& fn,
                              OracleOptions opts) {
  const MaskGraph mg(g, opts);
  auto visit = [&](Mask s, Mask) { fn(to_set(s)); };
  enumerate_independent(mg, 0, 0, mg.all(), visit);
}

}  // namespace kecrit
