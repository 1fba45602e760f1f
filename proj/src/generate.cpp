#include <array>
#include <random>

#include "kecrit/graph.hpp"

namespace kecrit {

namespace {

// Uniform double in [0,1) from the top 53 bits; keeps generated graphs
// identical across standard library implementations.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");
}

std::vector<std::string> numbered(std::string_view prefix, std::size_t count,
                                  std::size_t offset = 0) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(std::string(prefix) + std::to_string(offset + i));
  return out;
}

void gnp_edges(std::mt19937_64& rng, std::size_t offset, std::size_t n, double p,
               std::vector<Edge>& edges) {
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (unit(rng) < p)
        edges.push_back({static_cast<Vertex>(offset + u), static_cast<Vertex>(offset + v)});
}

Graph letters(std::string_view names, std::initializer_list<std::string_view> edges) {
  std::vector<std::string> labels;
  for (char c : names) labels.emplace_back(1, c);
  std::vector<Edge> es;
  for (auto e : edges)
    es.push_back({static_cast<Vertex>(e[0] - names[0]), static_cast<Vertex>(e[1] - names[0])});
  return Graph::from_edges(std::move(labels), es);
}

}  // namespace

Graph fixture(std::string_view name) {
  if (name == "G1")
    return letters("abcdefg", {"ae", "be", "ce", "cf", "cg", "dg", "fg"});
  if (name == "G2")
    return letters("abcdefghij", {"ae", "be", "ce", "cf", "dg", "fg", "eh", "gi", "hi",
                                  "hj", "ij"});
  if (name == "GF")
    return letters("abcdefghij", {"ad", "ae", "bd", "be", "cd", "ce", "df", "ej", "fj",
                                  "fg", "fi", "gj", "gi", "gh", "ij", "ih"});
  throw std::invalid_argument("unknown fixture '" + std::string(name) +
                              "' (expected G1, G2 or GF)");
}

Graph generate(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  switch (spec.kind) {
    case GeneratorKind::fixture:
      return fixture(spec.fixture);
    case GeneratorKind::gnp:
      check_probability(spec.p);
      gnp_edges(rng, 0, spec.n, spec.p, edges);
      return Graph::from_edges(numbered("v", spec.n), edges);
    case GeneratorKind::bipartite_gnp: {
      check_probability(spec.p);
      if (spec.part_sizes.size() != 2)
        throw std::invalid_argument("bipartite generator needs exactly two part sizes");
      const std::size_t left = spec.part_sizes[0];
      const std::size_t right = spec.part_sizes[1];
      for (std::size_t u = 0; u < left; ++u)
        for (std::size_t v = 0; v < right; ++v)
          if (unit(rng) < spec.p)
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(left + v)});
      auto labels = numbered("l", left);
      auto rlabels = numbered("r", right);
      labels.insert(labels.end(), rlabels.begin(), rlabels.end());
      return Graph::from_edges(std::move(labels), edges);
    }
    case GeneratorKind::disjoint_union: {
      check_probability(spec.p);
      std::size_t offset = 0;
      for (std::size_t size : spec.part_sizes) {
        gnp_edges(rng, offset, size, spec.p, edges);
        offset += size;
      }
      return Graph::from_edges(numbered("v", offset), edges);
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

GeneratorSpec sweep_spec(std::uint64_t seed, std::size_t index, std::size_t n_min,
                         std::size_t n_max) {
  if (n_min > n_max) throw std::invalid_argument("empty vertex-count range");
  static constexpr std::array<double, 4> kDensities = {0.1, 0.3, 0.5, 0.8};
  const std::uint64_t mixed = splitmix64(seed ^ splitmix64(index));
  std::mt19937_64 rng(mixed);
  const std::size_t span = n_max - n_min + 1;
  const std::size_t n = n_min + static_cast<std::size_t>(rng() % span);

  GeneratorSpec spec;
  spec.seed = rng();
  spec.n = n;
  switch (index % 6) {
    case 0: case 1: case 2: case 3:
      spec.kind = GeneratorKind::gnp;
      spec.p = kDensities[index % 6];
      break;
    case 4: {
      spec.kind = GeneratorKind::bipartite_gnp;
      spec.p = kDensities[rng() % kDensities.size()];
      const std::size_t left = n == 0 ? 0 : static_cast<std::size_t>(rng() % (n + 1));
      spec.part_sizes = {left, n - left};
      break;
    }
    default: {
      spec.kind = GeneratorKind::disjoint_union;
      spec.p = kDensities[1 + rng() % 3];
      std::size_t remaining = n;
      while (remaining > 0) {
        const std::size_t size = 1 + static_cast<std::size_t>(rng() % remaining);
        spec.part_sizes.push_back(size);
        remaining -= size;
      }
      break;
    }
  }
  return spec;
}

}  // namespace kecrit
