#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "kecrit/graph.hpp"

namespace kecrit {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_count(std::string_view tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

// Splits text into lines, yielding (1-based line number, tokens) for every
// line that is not blank after comment stripping.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineno;
    auto toks = tokenize(text.substr(pos, nl - pos));
    if (!toks.empty()) fn(lineno, toks);
    pos = nl + 1;
  }
}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::size_t header_line = 0;
  std::size_t edge_lines = 0;
  std::size_t last_line = 0;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view tok) {
    auto [it, inserted] = index.emplace(std::string(tok), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(tok);
    return it->second;
  };

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& toks) {
    last_line = line;
    if (!header) {
      if (toks.size() != 2) throw ParseError(line, "expected header 'n m'");
      auto n = to_count(toks[0]);
      auto m = to_count(toks[1]);
      if (!n || !m) throw ParseError(line, "header counts must be non-negative integers");
      header = {*n, *m};
      header_line = line;
      return;
    }
    if (toks.size() == 1) {
      intern(toks[0]);
    } else if (toks.size() == 2) {
      if (toks[0] == toks[1])
        throw ParseError(line, "self-loop at '" + std::string(toks[0]) + "'");
      Vertex u = intern(toks[0]);
      Vertex v = intern(toks[1]);
      edges.push_back({u, v});
      ++edge_lines;
    } else {
      throw ParseError(line, "expected 'u v' or 'u', got " + std::to_string(toks.size()) +
                                 " tokens");
    }
    if (labels.size() > header->first)
      throw ParseError(line, "more than " + std::to_string(header->first) +
                                 " distinct vertices (header declares n=" +
                                 std::to_string(header->first) + ")");
  });

  if (!header) throw ParseError(last_line + 1, "missing header 'n m'");
  if (labels.size() != header->first)
    throw ParseError(header_line, "header declares n=" + std::to_string(header->first) +
                                      " but " + std::to_string(labels.size()) +
                                      " vertices appear");
  if (edge_lines != header->second)
    throw ParseError(header_line, "header declares m=" + std::to_string(header->second) +
                                      " but " + std::to_string(edge_lines) +
                                      " edge lines appear");
  return Graph::from_edges(std::move(labels), edges);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t last_line = 0;
  std::vector<Edge> edges;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& toks) {
    last_line = line;
    if (toks[0] == "c") return;
    if (toks[0] == "p") {
      if (n) throw ParseError(line, "duplicate problem line");
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
        throw ParseError(line, "expected 'p edge n m'");
      auto nv = to_count(toks[2]);
      auto mv = to_count(toks[3]);
      if (!nv || !mv) throw ParseError(line, "problem line counts must be non-negative integers");
      n = *nv;
      return;
    }
    if (toks[0] == "e") {
      if (!n) throw ParseError(line, "edge line before 'p edge n m'");
      if (toks.size() != 3) throw ParseError(line, "expected 'e i j'");
      auto i = to_count(toks[1]);
      auto j = to_count(toks[2]);
      if (!i || !j || *i < 1 || *j < 1 || *i > *n || *j > *n)
        throw ParseError(line, "edge endpoint outside 1.." + std::to_string(*n));
      if (*i == *j) throw ParseError(line, "self-loop at vertex " + std::to_string(*i));
      edges.push_back({static_cast<Vertex>(*i - 1), static_cast<Vertex>(*j - 1)});
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(toks[0]) + "'");
  });

  if (!n) throw ParseError(last_line + 1, "missing 'p edge n m' line");
  std::vector<std::string> labels;
  labels.reserve(*n);
  for (std::size_t i = 1; i <= *n; ++i) labels.push_back(std::to_string(i));
  return Graph::from_edges(std::move(labels), edges);
}

void check_serializable(const std::string& label) {
  if (label.empty() || label.find('#') != std::string::npos ||
      std::any_of(label.begin(), label.end(),
                  [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("label '" + label + "' cannot be written as edge_list");
}

}  // namespace

Graph parse_graph(std::string_view text, Format format) {
  switch (format) {
    case Format::edge_list: return parse_edge_list(text);
    case Format::dimacs: return parse_dimacs(text);
  }
  throw std::invalid_argument("unknown format");
}

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "edge_list") return Format::edge_list;
  if (name == "dimacs") return Format::dimacs;
  return std::nullopt;
}

// Emits edges in sorted order, inserting single-label declarations wherever
// an edge would otherwise introduce a vertex ahead of its index. Reparsing
// therefore reproduces the label order exactly.
std::string to_edge_list(const Graph& g) {
  for (const auto& l : g.labels()) check_serializable(l);
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  std::vector<char> seen(g.n(), 0);
  Vertex next = 0;
  auto advance = [&] {
    while (next < g.n() && seen[next]) ++next;
  };
  auto declare_until = [&](Vertex x) {
    while (next < x) {
      out << g.label(next) << '\n';
      seen[next] = 1;
      advance();
    }
  };
  for (const Edge& e : g.edges()) {
    declare_until(e.u);
    if (!seen[e.u]) {
      seen[e.u] = 1;
      advance();
      if (!seen[e.v] && next < e.v) {
        out << g.label(e.u) << '\n';
        declare_until(e.v);
      }
    } else if (!seen[e.v]) {
      declare_until(e.v);
    }
    seen[e.v] = 1;
    advance();
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
  declare_until(static_cast<Vertex>(g.n()));
  return out.str();
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace kecrit
