#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "kecrit/graph.hpp"

using namespace kecrit;

TEST_CASE("edge_list parsing") {
  SUBCASE("G1 from text") {
    const Graph g = parse_graph("7 7\na e\nb e\nc e\nc f\nc g\nd g\nf g", Format::edge_list);
    CHECK(g.n() == 7);
    CHECK(g.m() == 7);
    CHECK(g.labels() == std::vector<std::string>{"a", "e", "b", "c", "f", "g", "d"});
    CHECK(g.adjacent(*g.index_of("f"), *g.index_of("g")));
  }
  SUBCASE("isolated vertex declaration") {
    const Graph g = parse_graph("1 0\nz", Format::edge_list);
    CHECK(g.n() == 1);
    CHECK(g.m() == 0);
    CHECK(g.label(0) == "z");
  }
  SUBCASE("duplicate edges collapse") {
    const Graph g = parse_graph("2 2\na b\nb a", Format::edge_list);
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
  }
  SUBCASE("comments and blank lines") {
    const Graph g = parse_graph("# leading\n3 1 # header\n\na b # edge\nc\n", Format::edge_list);
    CHECK(g.n() == 3);
    CHECK(g.m() == 1);
  }
  SUBCASE("empty graph") {
    const Graph g = parse_graph("0 0\n", Format::edge_list);
    CHECK(g.n() == 0);
  }
}

TEST_CASE("edge_list errors carry line numbers") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph(text, Format::edge_list);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 1\na b\nc c") == 3);      // self-loop
  CHECK(line_of("x y\n") == 1);              // non-numeric header
  CHECK(line_of("2 1\na b c\n") == 2);       // too many tokens
  CHECK(line_of("1 1\na b\n") == 2);         // too many vertices for header
  CHECK(line_of("3 1\na b\n") == 1);         // header n mismatch
  CHECK(line_of("2 2\na b\n") == 1);         // header m mismatch
  CHECK(line_of("") == 1);                   // missing header
  CHECK_THROWS_AS(parse_graph("2 1\na a\n", Format::edge_list), ParseError);
}

TEST_CASE("dimacs parsing") {
  const Graph g = parse_graph("c comment\np edge 4 3\ne 1 2\ne 2 3\ne 2 1\n", Format::dimacs);
  CHECK(g.n() == 4);
  CHECK(g.m() == 2);
  CHECK(g.label(3) == "4");
  CHECK_THROWS_AS(parse_graph("e 1 2\n", Format::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n", Format::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 2 2\n", Format::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge x 1\n", Format::dimacs), ParseError);
  CHECK(parse_graph(to_dimacs(fixture("GF")), Format::dimacs).edges() == fixture("GF").edges());
}

TEST_CASE("graph construction rejects non-simple input") {
  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::from_edges({"a"}, loop), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges({"a", "a"}, {}), std::invalid_argument);
  std::vector<Edge> far{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, far), std::invalid_argument);
}

TEST_CASE("neighborhood, difference and independence on fixtures") {
  const Graph g1 = fixture("G1");
  const Graph g2 = fixture("G2");
  const Graph gf = fixture("GF");

  CHECK(neighborhood(g1, g1.vertices({"a", "b"})) == g1.vertices({"e"}));
  CHECK(neighborhood(g1, {}).empty());
  CHECK(neighborhood(gf, gf.vertices({"a", "b", "c"})) == gf.vertices({"d", "e"}));

  CHECK(difference(gf, gf.vertices({"a", "b", "c"})) == 1);
  CHECK(difference(g1, {}) == 0);
  CHECK(difference(g2, g2.vertices({"a", "b", "c", "d"})) == 1);
  CHECK(neighborhood(g2, g2.vertices({"a", "b", "c", "d"})) == g2.vertices({"e", "f", "g"}));
  // N(S) may meet S
  CHECK(difference(g1, g1.vertices({"f", "g"})) == 2 - 4);

  CHECK(is_independent(g1, g1.vertices({"a", "b", "d", "f"})));
  CHECK_FALSE(is_independent(g1, g1.vertices({"f", "g"})));
  CHECK(is_independent(g1, {}));

  CHECK_THROWS_AS(neighborhood(g1, VertexSet{7}), std::out_of_range);
  CHECK_THROWS_AS(g1.vertices({"zz"}), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  const Graph gf = fixture("GF");
  const auto sub = induced_subgraph(gf, gf.vertices({"f", "g", "h", "i", "j"}));
  CHECK(sub.graph.n() == 5);
  CHECK(sub.graph.m() == 8);
  CHECK(sub.graph.labels() == std::vector<std::string>{"f", "g", "h", "i", "j"});

  const auto whole = induced_subgraph(gf, VertexSet::range(gf.n()));
  CHECK(whole.graph.edges() == gf.edges());
  for (Vertex v = 0; v < gf.n(); ++v) CHECK(whole.to_host[v] == v);

  const auto empty = induced_subgraph(gf, {});
  CHECK(empty.graph.n() == 0);
  CHECK(empty.graph.m() == 0);
}

TEST_CASE("induced subgraph keeps exactly the inner edges (exhaustive pair scan)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    const Graph g = brute::random_graph(rng, n, 0.4);
    const VertexSet s = brute::subset(static_cast<std::uint32_t>(rng() % (1U << n)));
    const auto sub = induced_subgraph(g, s);
    REQUIRE(sub.graph.n() == s.size());
    for (Vertex i = 0; i < sub.graph.n(); ++i)
      for (Vertex j = 0; j < sub.graph.n(); ++j)
        if (i != j) CHECK(sub.graph.adjacent(i, j) == g.adjacent(sub.to_host[i], sub.to_host[j]));
  }
}

TEST_CASE("difference equals |S| - |N(S)| for random sets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng() % 15;
    const Graph g = brute::random_graph(rng, n, 0.3);
    const VertexSet s = brute::subset(n == 0 ? 0 : static_cast<std::uint32_t>(rng() % (1U << n)));
    std::size_t count = 0;
    for (Vertex v = 0; v < n; ++v) {
      bool adjacent_to_s = false;
      for (Vertex u : s) adjacent_to_s = adjacent_to_s || g.adjacent(u, v);
      count += adjacent_to_s;
    }
    CHECK(difference(g, s) == static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(count));
  }
}

TEST_CASE("edge_list round trip preserves labels and edges") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 16;
    Graph g = brute::random_graph(rng, n, static_cast<double>(rng() % 5) / 8.0);
    // shuffle labels so index order differs from any textual order
    auto labels = g.labels();
    std::shuffle(labels.begin(), labels.end(), rng);
    g = Graph::from_edges(labels, g.edges());
    const Graph back = parse_graph(to_edge_list(g), Format::edge_list);
    CHECK(back.labels() == g.labels());
    CHECK(back.edges() == g.edges());
  }
  CHECK_THROWS_AS(to_edge_list(Graph::from_edges({"has space"}, {})), std::invalid_argument);
}

TEST_CASE("generators") {
  const Graph g2 = generate({.kind = GeneratorKind::fixture, .fixture = "G2"});
  CHECK(g2.n() == 10);
  CHECK(g2.m() == 11);
  CHECK(fixture("G1").m() == 7);
  CHECK(fixture("GF").m() == 16);
  CHECK_THROWS_AS(fixture("G9"), std::invalid_argument);

  const Graph empty = generate({.kind = GeneratorKind::gnp, .n = 5, .p = 0.0, .seed = 1});
  CHECK(empty.n() == 5);
  CHECK(empty.m() == 0);

  const GeneratorSpec spec{.kind = GeneratorKind::gnp, .n = 20, .p = 0.3, .seed = 7};
  CHECK(generate(spec).edges() == generate(spec).edges());
  CHECK(generate(spec).edges() !=
        generate({.kind = GeneratorKind::gnp, .n = 20, .p = 0.3, .seed = 8}).edges());

  const Graph k33 = generate(
      {.kind = GeneratorKind::bipartite_gnp, .p = 1.0, .part_sizes = {3, 3}, .seed = 1});
  CHECK(k33.n() == 6);
  CHECK(k33.m() == 9);

  const Graph cliques = generate(
      {.kind = GeneratorKind::disjoint_union, .p = 1.0, .part_sizes = {3, 2, 1}, .seed = 1});
  CHECK(cliques.n() == 6);
  CHECK(cliques.m() == 3 + 1);

  CHECK_THROWS_AS(generate({.kind = GeneratorKind::gnp, .n = 3, .p = 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(generate({.kind = GeneratorKind::bipartite_gnp, .p = 0.5, .part_sizes = {3}}),
                  std::invalid_argument);
}

TEST_CASE("sweep covers every family deterministically") {
  std::set<GeneratorKind> kinds;
  for (std::size_t i = 0; i < 12; ++i) {
    const GeneratorSpec a = sweep_spec(42, i, 3, 9);
    const GeneratorSpec b = sweep_spec(42, i, 3, 9);
    CHECK(generate(a).edges() == generate(b).edges());
    CHECK(generate(a).n() >= 3);
    CHECK(generate(a).n() <= 9);
    kinds.insert(a.kind);
  }
  CHECK(kinds.size() == 3);
  CHECK(generate(sweep_spec(1, 0, 0, 0)).n() == 0);
}
