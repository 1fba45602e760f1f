#include "brute.hpp"
#include "doctest.h"
#include "kecrit/critical.hpp"
#include "kecrit/oracle.hpp"

using namespace kecrit;

TEST_CASE("bipartite double") {
  SUBCASE("K2 doubles to two disjoint edges") {
    const auto b = bipartite_double(brute::complete(2));
    CHECK(b.graph.n() == 4);
    CHECK(b.graph.m() == 2);
    // 2m edges: a-b' and b-a' only
    CHECK(b.graph.adjacent(0, b.primed(1)));
    CHECK(b.graph.adjacent(1, b.primed(0)));
    CHECK(b.graph.label(b.primed(0)) == "x0'");
  }
  SUBCASE("edgeless") {
    const auto b = bipartite_double(brute::edgeless(3));
    CHECK(b.graph.n() == 6);
    CHECK(b.graph.m() == 0);
  }
  SUBCASE("G1 has 2n vertices and 2m edges, no edges inside a side") {
    const Graph g1 = fixture("G1");
    const auto b = bipartite_double(g1);
    CHECK(b.graph.n() == 14);
    CHECK(b.graph.m() == 14);
    CHECK_NOTHROW(check_bipartition(b.graph, b.parts));
    for (Vertex u = 0; u < g1.n(); ++u)
      for (Vertex v = 0; v < g1.n(); ++v)
        CHECK(b.graph.adjacent(u, b.primed(v)) == g1.adjacent(u, v));
  }
}

TEST_CASE("critical difference examples") {
  CHECK(critical_difference(fixture("GF")) == 1);
  CHECK(critical_difference(brute::complete(3)) == 0);
  CHECK(critical_difference(brute::edgeless(5)) == 5);
  CHECK(critical_difference(Graph{}) == 0);
}

TEST_CASE("critical independent set extraction examples") {
  const Graph gf = fixture("GF");
  const VertexSet s = find_critical_independent_set(gf);
  CHECK(is_independent(gf, s));
  CHECK(difference(gf, s) == 1);
  CHECK(find_critical_independent_set(brute::complete(3)).empty());
  CHECK(find_critical_independent_set(brute::edgeless(3)) == VertexSet{0, 1, 2});
  CHECK(find_critical_independent_set(Graph{}).empty());
}

TEST_CASE("forced difference examples") {
  const Graph gf = fixture("GF");
  const Graph g2 = fixture("G2");
  const VertexSet a = gf.vertices({"a"});
  CHECK(brute::constrained_difference(gf, a, {}) == 1);
  CHECK(forced_difference(gf, {a, {}}) == 1);

  // over all sets containing j the optimum is 1 ({a,b,c,d,h,i,j} attains it);
  // keeping N(j) out drops it to 0, so j lies in no critical independent set
  const VertexSet j = g2.vertices({"j"});
  const VertexSet nj = g2.vertices({"h", "i"});
  CHECK(brute::constrained_difference(g2, j, {}) == 1);
  CHECK(forced_difference(g2, {j, {}}) == 1);
  CHECK(brute::constrained_difference(g2, j, nj) == 0);
  CHECK(forced_difference(g2, {j, nj}) == 0);

  CHECK(forced_difference(g2, {}) == critical_difference(g2));
  CHECK_THROWS_AS(forced_difference(g2, {j, j}), std::invalid_argument);
}

TEST_CASE("extension test examples") {
  const Graph g2 = fixture("G2");
  CHECK(extends_to_critical_independent(g2, g2.vertices({"c"})));
  CHECK_FALSE(extends_to_critical_independent(g2, g2.vertices({"j"})));
  CHECK(extends_to_critical_independent(g2, {}));
  CHECK_FALSE(extends_to_critical_independent(g2, g2.vertices({"c", "f"})));  // adjacent
  const auto ext = critical_extension(g2, g2.vertices({"c"}));
  REQUIRE(ext);
  CHECK(ext->contains(*g2.index_of("c")));
  CHECK(difference(g2, *ext) == 1);
}

TEST_CASE("maximum critical independent set examples") {
  const Graph gf = fixture("GF");
  CHECK(max_critical_independent_set(gf) == gf.vertices({"a", "b", "c"}));

  const Graph g2 = fixture("G2");
  const VertexSet i2 = max_critical_independent_set(g2);
  CHECK(i2.size() == 4);
  CHECK(is_independent(g2, i2));
  CHECK(difference(g2, i2) == 1);
  const bool one_of_two = i2 == g2.vertices({"a", "b", "c", "d"}) ||
                          i2 == g2.vertices({"a", "b", "d", "f"});
  CHECK(one_of_two);

  CHECK(max_critical_independent_set(brute::complete(3)).empty());
}

TEST_CASE("diadem examples") {
  const Graph g1 = fixture("G1");
  const Graph g2 = fixture("G2");
  const Graph gf = fixture("GF");
  CHECK(diadem(g1) == g1.vertices({"a", "b", "c", "d", "f"}));
  CHECK(diadem(g2) == g2.vertices({"a", "b", "c", "d", "f"}));
  CHECK(diadem(gf) == gf.vertices({"a", "b", "c"}));
  CHECK(diadem(Graph{}).empty());
}

TEST_CASE("decomposition examples") {
  const Graph gf = fixture("GF");
  const Decomposition d = decompose(gf);
  CHECK(d.x == gf.vertices({"a", "b", "c", "d", "e"}));
  CHECK(d.complement == gf.vertices({"f", "g", "h", "i", "j"}));
  CHECK(d.witness == gf.vertices({"a", "b", "c"}));

  const Graph k3 = brute::complete(3);
  CHECK(decompose(k3).x.empty());
  CHECK(decompose(k3).complement == VertexSet{0, 1, 2});

  const Graph g1 = fixture("G1");
  CHECK(decompose(g1).x == VertexSet::range(7));
  CHECK(decompose(g1).complement.empty());

  const Decomposition empty = decompose(Graph{});
  CHECK(empty.witness.empty());
  CHECK(empty.x.empty());
  CHECK(empty.complement.empty());
}

TEST_CASE("fast paths agree with exhaustive search on random graphs") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = rng() % 13;
    const double p = std::array{0.1, 0.3, 0.5, 0.8}[trial % 4];
    const Graph g = brute::random_graph(rng, n, p);
    CAPTURE(to_edge_list(g));

    const std::int64_t d = critical_difference(g);
    CHECK(d == brute::constrained_difference(g, {}, {}));
    CHECK(d == brute_force_critical_difference(g, true));
    CHECK(d >= 0);

    const VertexSet s = find_critical_independent_set(g);
    CHECK(is_independent(g, s));
    CHECK(difference(g, s) == d);

    const CriticalFamily fam = critical_family(g);
    const VertexSet i = max_critical_independent_set(g);
    CHECK(std::binary_search(fam.maximum_critical_independent.begin(),
                             fam.maximum_critical_independent.end(), i));
    CHECK(diadem(g) == fam.diadem);

    const Decomposition dec = decompose(g);
    CHECK(set_union(fam.diadem, neighborhood(g, fam.diadem)) == dec.x);
  }
}

TEST_CASE("forced difference matches constrained brute force") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = brute::random_graph(rng, n, 0.35);
    std::vector<Vertex> in, out;
    for (Vertex v = 0; v < n; ++v) {
      const auto roll = rng() % 6;
      if (roll == 0) in.push_back(v);
      if (roll == 1) out.push_back(v);
    }
    const ForcingConstraints c{VertexSet(in), VertexSet(out)};
    const ForcedOptimum opt = forced_optimum(g, c);
    CHECK(opt.value == brute::constrained_difference(g, c.force_in, c.force_out));
    CHECK(difference(g, opt.maximizer) == opt.value);
    CHECK(c.force_in.is_subset_of(opt.maximizer));
    CHECK(set_intersection(opt.maximizer, c.force_out).empty());

    // adding a forced member never raises the optimum
    if (in.size() < n) {
      Vertex extra = 0;
      while (c.force_in.contains(extra) || c.force_out.contains(extra)) ++extra;
      if (extra < n) {
        std::vector<Vertex> more = in;
        more.push_back(extra);
        CHECK(forced_difference(g, {VertexSet(more), c.force_out}) <= opt.value);
      }
    }
  }
}

TEST_CASE("decomposition is independent of vertex order") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng() % 12;
    const Graph g = brute::random_graph(rng, n, 0.3);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels(n);
    for (Vertex v = 0; v < n; ++v) labels[perm[v]] = g.label(v);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    const Graph h = Graph::from_edges(labels, edges);
    std::vector<Vertex> back;
    for (Vertex v : decompose(h).x)
      back.push_back(*g.index_of(h.label(v)));
    CHECK(VertexSet(back) == decompose(g).x);
  }
}
