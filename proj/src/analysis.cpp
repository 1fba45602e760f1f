#include "kecrit/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "kecrit/matching.hpp"

namespace kecrit {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "fails";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

bool AnalysisReport::all_checks_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t ssize(const VertexSet& s) { return static_cast<std::int64_t>(s.size()); }

TheoremCheck check(std::string id, std::string statement, bool holds,
                   std::optional<std::int64_t> lhs = std::nullopt,
                   std::optional<std::int64_t> rhs = std::nullopt) {
  TheoremCheck c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.status = holds ? CheckStatus::holds : CheckStatus::fails;
  c.lhs = lhs;
  c.rhs = rhs;
  return c;
}

TheoremCheck not_applicable(std::string id, std::string statement, std::string why) {
  TheoremCheck c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.status = CheckStatus::not_applicable;
  c.detail = std::move(why);
  return c;
}

// Everything the checks need, computed once.
struct Profile {
  const Graph& g;
  OracleOptions opts;
  IndependenceProfile independence;
  CriticalFamily family;
  std::size_t mu = 0;
  Decomposition decomposition;

  Profile(const Graph& graph, OracleOptions o, const CriticalSolver& solver)
      : g(graph),
        opts(o),
        independence(independence_profile(graph, o)),
        family(critical_family(graph, o)),
        mu(max_matching_general(graph).size()),
        decomposition(decompose(solver)) {}
};

KEVerdicts verdicts_from(const Profile& p) {
  const auto& ip = p.independence;
  const auto& fam = p.family;
  KEVerdicts v;
  v.by_definition = ip.alpha + p.mu == p.g.n();
  v.by_all_mis_critical = std::all_of(ip.omega.begin(), ip.omega.end(), [&](const auto& s) {
    return difference(p.g, s) == fam.d;
  });
  v.by_diadem_corona = fam.diadem == ip.corona;
  v.by_counting = fam.diadem.size() + fam.nucleus.size() == 2 * ip.alpha;
  return v;
}

// Oracle data of an induced subgraph, expressed in host indices.
struct SubProfile {
  std::size_t alpha = 0;
  std::size_t mu = 0;
  VertexSet nucleus;
  VertexSet diadem;
};

SubProfile sub_profile(const Graph& g, const VertexSet& s, OracleOptions opts) {
  const InducedSubgraph sub = induced_subgraph(g, s);
  SubProfile out;
  out.alpha = independence_profile(sub.graph, opts).alpha;
  out.mu = max_matching_general(sub.graph).size();
  const CriticalFamily fam = critical_family(sub.graph, opts);
  out.nucleus = sub.lift(fam.nucleus);
  out.diadem = sub.lift(fam.diadem);
  return out;
}

std::vector<TheoremCheck> theorem_checks(const Profile& p, const KEVerdicts& verdicts) {
  const Graph& g = p.g;
  const auto& ip = p.independence;
  const auto& fam = p.family;
  const auto& dec = p.decomposition;
  const std::int64_t two_alpha = 2 * static_cast<std::int64_t>(ip.alpha);
  const std::int64_t nuc_dia = ssize(fam.nucleus) + ssize(fam.diadem);
  const bool ke = verdicts.by_definition;
  std::vector<TheoremCheck> out;

  out.push_back(check("ke_iff_mis_critical",
                      "G is KE iff every maximum independent set is critical",
                      ke == verdicts.by_all_mis_critical));

  out.push_back(check("ke_verdicts_agree",
                      "KE by definition, all-MIS-critical, diadem=corona and "
                      "|diadem|+|nucleus|=2alpha coincide",
                      verdicts.agree()));

  // decomposition X = I ∪ N(I)
  const SubProfile on_x = sub_profile(g, dec.x, p.opts);
  const SubProfile on_xc = sub_profile(g, dec.complement, p.opts);
  out.push_back(check("decomposition.alpha_split", "alpha(G) = alpha(G[X]) + alpha(G[X^c])",
                      ip.alpha == on_x.alpha + on_xc.alpha,
                      static_cast<std::int64_t>(ip.alpha),
                      static_cast<std::int64_t>(on_x.alpha + on_xc.alpha)));
  out.push_back(check("decomposition.x_is_ke", "G[X] is KE",
                      on_x.alpha + on_x.mu == dec.x.size(),
                      static_cast<std::int64_t>(on_x.alpha + on_x.mu), ssize(dec.x)));
  {
    const InducedSubgraph rest = induced_subgraph(g, dec.complement);
    std::int64_t worst = std::numeric_limits<std::int64_t>::min();
    VertexSet worst_set;
    for_each_independent_set(
        rest.graph,
        [&](const VertexSet& s) {
          if (s.empty()) return;
          const std::int64_t surplus = difference(rest.graph, s);
          if (surplus > worst) {
            worst = surplus;
            worst_set = s;
          }
        },
        p.opts);
    auto c = check("decomposition.xc_surplus",
                   "every non-empty independent S in G[X^c] has |N(S)| >= |S|",
                   worst <= 0);
    if (dec.complement.empty()) {
      c.detail = "X^c empty";
    } else {
      c.lhs = worst;
      c.rhs = 0;
      c.witness = rest.lift(worst_set);
    }
    out.push_back(std::move(c));
  }
  {
    bool unique = true;
    VertexSet offender;
    for (const auto& s : fam.maximum_critical_independent) {
      if (set_union(s, neighborhood(g, s)) != dec.x) {
        unique = false;
        offender = s;
        break;
      }
    }
    auto c = check("decomposition.x_unique",
                   "I ∪ N(I) = X for every maximum critical independent set I", unique);
    c.witness = offender;
    out.push_back(std::move(c));
  }

  {
    bool all_contained = true;
    VertexSet offender;
    for (const auto& s : fam.all_critical_independent) {
      const bool inside = std::any_of(
          fam.maximum_critical_independent.begin(), fam.maximum_critical_independent.end(),
          [&](const auto& big) { return s.is_subset_of(big); });
      if (!inside) {
        all_contained = false;
        offender = s;
        break;
      }
    }
    auto c = check("critical_extends_to_maximum",
                   "every critical independent set lies in a maximum critical independent set",
                   all_contained);
    c.witness = offender;
    out.push_back(std::move(c));
  }

  if (ke) {
    out.push_back(check("ke.diadem_equals_corona", "if G is KE then diadem = corona",
                        fam.diadem == ip.corona, ssize(fam.diadem), ssize(ip.corona)));
    out.push_back(check("ke.ker_diadem_bound", "if G is KE then |ker|+|diadem| <= 2alpha",
                        ssize(fam.ker) + ssize(fam.diadem) <= two_alpha,
                        ssize(fam.ker) + ssize(fam.diadem), two_alpha));
    out.push_back(check("ke.nucleus_diadem_tight", "if G is KE then |nucleus|+|diadem| = 2alpha",
                        nuc_dia == two_alpha, nuc_dia, two_alpha));
  } else {
    out.push_back(not_applicable("ke.diadem_equals_corona", "if G is KE then diadem = corona",
                                 "non-KE"));
    out.push_back(not_applicable("ke.ker_diadem_bound",
                                 "if G is KE then |ker|+|diadem| <= 2alpha", "non-KE"));
    out.push_back(not_applicable("ke.nucleus_diadem_tight",
                                 "if G is KE then |nucleus|+|diadem| = 2alpha", "non-KE"));
  }

  out.push_back(check("nucleus_diadem_bound", "|nucleus|+|diadem| <= 2alpha",
                      nuc_dia <= two_alpha, nuc_dia, two_alpha));
  {
    const std::int64_t core_corona = ssize(ip.core) + ssize(ip.corona);
    auto c = check("alpha_sandwich", "|nucleus|+|diadem| <= 2alpha <= |core|+|corona|",
                   nuc_dia <= two_alpha && two_alpha <= core_corona, nuc_dia, core_corona);
    c.detail = std::to_string(nuc_dia) + " <= " + std::to_string(two_alpha) + " <= " +
               std::to_string(core_corona);
    out.push_back(std::move(c));
  }

  out.push_back(check("diadem_closure_is_x", "diadem ∪ N(diadem) = X",
                      set_union(fam.diadem, neighborhood(g, fam.diadem)) == dec.x));

  out.push_back(check("subgraph.inclusions",
                      "diadem(G) ⊆ diadem(G[X]) and nucleus(G[X]) ⊆ nucleus(G)",
                      fam.diadem.is_subset_of(on_x.diadem) &&
                          on_x.nucleus.is_subset_of(fam.nucleus)));

  const std::int64_t nuc_dia_x = ssize(on_x.nucleus) + ssize(on_x.diadem);
  out.push_back(check("subgraph.nucleus_diadem_bound",
                      "|nucleus(G)|+|diadem(G)| <= |nucleus(G[X])|+|diadem(G[X])|",
                      nuc_dia <= nuc_dia_x, nuc_dia, nuc_dia_x));

  {
    // A = nucleus(G) \ nucleus(G[X]) must be matched into
    // B = diadem(G[X]) \ diadem(G) along edges of G.
    const VertexSet a = set_difference(fam.nucleus, on_x.nucleus);
    const VertexSet b = set_difference(on_x.diadem, fam.diadem);
    std::vector<std::string> labels;
    std::vector<Vertex> host;
    for (Vertex v : a) host.push_back(v);
    for (Vertex v : b) host.push_back(v);
    for (Vertex v : host) labels.push_back(g.label(v));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a.size(); ++i)
      for (Vertex j = 0; j < b.size(); ++j)
        if (g.adjacent(host[i], host[a.size() + j]))
          edges.push_back({i, static_cast<Vertex>(a.size() + j)});
    const Graph cross = Graph::from_edges(std::move(labels), edges);
    std::vector<Vertex> right;
    for (std::size_t j = 0; j < b.size(); ++j) right.push_back(static_cast<Vertex>(a.size() + j));
    const Matching m =
        max_matching_bipartite(cross, {VertexSet::range(a.size()), VertexSet(std::move(right))});
    auto c = check("subgraph.saturating_matching",
                   "nucleus(G)\\nucleus(G[X]) has a saturating matching into "
                   "diadem(G[X])\\diadem(G)",
                   m.size() == a.size(), static_cast<std::int64_t>(m.size()), ssize(a));
    c.witness = a;
    out.push_back(std::move(c));
  }

  out.push_back(check("ker_in_nucleus", "ker ⊆ nucleus", fam.ker.is_subset_of(fam.nucleus),
                      ssize(fam.ker), ssize(fam.nucleus)));
  out.push_back(check("diadem_in_corona", "diadem ⊆ corona",
                      fam.diadem.is_subset_of(ip.corona), ssize(fam.diadem),
                      ssize(ip.corona)));

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return out;
}

Graph reversed(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::string> labels(g.labels().rbegin(), g.labels().rend());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back({static_cast<Vertex>(n - 1 - e.u), static_cast<Vertex>(n - 1 - e.v)});
  return Graph::from_edges(std::move(labels), edges);
}

std::vector<TheoremCheck> fast_path_checks(const Profile& p, const CriticalSolver& solver,
                                           const VertexSet& fast_diadem) {
  const Graph& g = p.g;
  const auto& fam = p.family;
  std::vector<TheoremCheck> out;

  const std::int64_t d = critical_difference(g);
  const std::int64_t all = brute_force_critical_difference(g, false, p.opts);
  const std::int64_t indep = brute_force_critical_difference(g, true, p.opts);
  out.push_back(check("fast.d_all_subsets", "n - mu(B(G)) = max d over all subsets",
                      d == all, d, all));
  out.push_back(check("fast.d_independent_subsets",
                      "n - mu(B(G)) = max d over independent subsets", d == indep, d, indep));
  out.push_back(check("fast.d_two_routes", "explicit and implicit bipartite double agree",
                      d == solver.critical_difference(), d, solver.critical_difference()));

  {
    const VertexSet s = find_critical_independent_set(g);
    auto c = check("fast.critical_independent_set",
                   "extracted set is independent with d(S) = d(G)",
                   is_independent(g, s) && difference(g, s) == d, difference(g, s), d);
    c.witness = s;
    out.push_back(std::move(c));
  }
  {
    const VertexSet& i = p.decomposition.witness;
    const std::int64_t oracle_size =
        fam.maximum_critical_independent.empty()
            ? 0
            : ssize(fam.maximum_critical_independent.front());
    const bool member = std::binary_search(fam.maximum_critical_independent.begin(),
                                           fam.maximum_critical_independent.end(), i);
    auto c = check("fast.max_critical_independent_set",
                   "greedy set is a maximum critical independent set", member, ssize(i),
                   oracle_size);
    c.witness = i;
    out.push_back(std::move(c));
  }
  out.push_back(check("fast.diadem", "extension-test diadem = enumerated diadem",
                      fast_diadem == fam.diadem, ssize(fast_diadem), ssize(fam.diadem)));
  {
    const Matching m = max_matching_general(g);
    const std::size_t exact = mu_exact(g, p.opts);
    out.push_back(check("fast.mu", "blossom matching size = exhaustive mu",
                        m.size() == exact && is_valid_matching(g, m),
                        static_cast<std::int64_t>(m.size()), static_cast<std::int64_t>(exact)));
    out.push_back(check("fast.no_augmenting_path", "blossom matching has no augmenting path",
                        !has_augmenting_path(g, m)));
  }
  {
    const std::size_t n = g.n();
    const Decomposition other = decompose(reversed(g));
    std::vector<Vertex> back;
    for (Vertex v : other.x) back.push_back(static_cast<Vertex>(n - 1 - v));
    out.push_back(check("fast.decomposition_order_invariant",
                        "X is unchanged when vertices are scanned in reverse order",
                        VertexSet(std::move(back)) == p.decomposition.x));
  }

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return out;
}

}  // namespace

KEVerdicts ke_verdicts(const Graph& g, OracleOptions opts) {
  const CriticalSolver solver(g);
  return verdicts_from(Profile(g, opts, solver));
}

std::vector<TheoremCheck> verify_theorems(const Graph& g, OracleOptions opts) {
  const CriticalSolver solver(g);
  const Profile p(g, opts, solver);
  return theorem_checks(p, verdicts_from(p));
}

std::vector<TheoremCheck> verify_fast_paths(const Graph& g, OracleOptions opts) {
  const CriticalSolver solver(g);
  const Profile p(g, opts, solver);
  return fast_path_checks(p, solver, solver.diadem());
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& opts) {
  AnalysisReport r;
  r.labels = g.labels();
  r.n = g.n();
  r.m = g.m();

  auto t = Clock::now();
  const CriticalSolver solver(g);
  r.d = solver.critical_difference();
  r.timings_ms.emplace_back("critical_difference", elapsed_ms(t));

  t = Clock::now();
  r.decomposition = decompose(solver);
  r.timings_ms.emplace_back("decomposition", elapsed_ms(t));

  t = Clock::now();
  r.diadem = solver.diadem();
  r.timings_ms.emplace_back("diadem", elapsed_ms(t));

  t = Clock::now();
  r.mu = max_matching_general(g).size();
  r.timings_ms.emplace_back("matching", elapsed_ms(t));

  if (g.n() > opts.oracle_bound) return r;

  t = Clock::now();
  const OracleOptions oo{opts.oracle_bound};
  const Profile p(g, oo, solver);
  OracleSection o;
  o.alpha = p.independence.alpha;
  o.core = p.independence.core;
  o.corona = p.independence.corona;
  o.ker = p.family.ker;
  o.nucleus = p.family.nucleus;
  o.verdicts = verdicts_from(p);
  r.oracle = o;
  r.timings_ms.emplace_back("oracle", elapsed_ms(t));

  if (opts.include_checks) {
    t = Clock::now();
    r.checks = theorem_checks(p, o.verdicts);
    auto fast = fast_path_checks(p, solver, r.diadem);
    r.checks.insert(r.checks.end(), fast.begin(), fast.end());
    r.timings_ms.emplace_back("checks", elapsed_ms(t));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

using nlohmann::json;

std::vector<std::string> names(const AnalysisReport& r, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(r.labels.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string braces(const AnalysisReport& r, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : names(r, s)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

const json kSkipped = json{{"skipped", true}};

}  // namespace

std::string report_to_json(const AnalysisReport& r, int indent) {
  json j;
  j["graph"] = {{"n", r.n}, {"m", r.m}};
  j["d"] = r.d;
  j["mu"] = r.mu;
  j["diadem"] = names(r, r.diadem);
  j["decomposition"] = {{"I", names(r, r.decomposition.witness)},
                        {"X", names(r, r.decomposition.x)},
                        {"Xc", names(r, r.decomposition.complement)}};
  if (r.oracle) {
    const auto& o = *r.oracle;
    j["alpha"] = o.alpha;
    j["core"] = names(r, o.core);
    j["corona"] = names(r, o.corona);
    j["ker"] = names(r, o.ker);
    j["nucleus"] = names(r, o.nucleus);
    j["verdicts"] = {{"by_definition", o.verdicts.by_definition},
                     {"by_all_mis_critical", o.verdicts.by_all_mis_critical},
                     {"by_diadem_corona", o.verdicts.by_diadem_corona},
                     {"by_counting", o.verdicts.by_counting}};
  } else {
    for (const char* key : {"alpha", "core", "corona", "ker", "nucleus"}) j[key] = kSkipped;
    j["verdicts"] = {{"by_definition", kSkipped},
                     {"by_all_mis_critical", kSkipped},
                     {"by_diadem_corona", kSkipped},
                     {"by_counting", kSkipped}};
  }
  if (!r.oracle) {
    j["checks"] = kSkipped;
  } else {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json item = {{"id", c.id}, {"statement", c.statement},
                   {"status", std::string(to_string(c.status))}};
      item["holds"] = c.status == CheckStatus::not_applicable ? json(nullptr)
                                                              : json(c.status == CheckStatus::holds);
      if (c.lhs) item["lhs"] = *c.lhs;
      if (c.rhs) item["rhs"] = *c.rhs;
      if (!c.witness.empty()) item["witness"] = names(r, c.witness);
      if (!c.detail.empty()) item["detail"] = c.detail;
      checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
  }
  json timings = json::object();
  for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
  j["timings_ms"] = std::move(timings);
  return j.dump(indent);
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << std::boolalpha;
  out << "graph n " << r.n << " m " << r.m << '\n';
  out << "d " << r.d << " mu " << r.mu;
  if (r.oracle) out << " alpha " << r.oracle->alpha;
  out << '\n';
  out << "I " << braces(r, r.decomposition.witness) << " X " << braces(r, r.decomposition.x)
      << " Xc " << braces(r, r.decomposition.complement) << '\n';
  if (r.oracle) {
    const auto& o = *r.oracle;
    out << "ker " << braces(r, o.ker) << " nucleus " << braces(r, o.nucleus) << " core "
        << braces(r, o.core) << " diadem " << braces(r, r.diadem) << " corona "
        << braces(r, o.corona) << '\n';
    const auto& v = o.verdicts;
    out << "ke by_definition " << v.by_definition << " by_all_mis_critical "
        << v.by_all_mis_critical << " by_diadem_corona " << v.by_diadem_corona
        << " by_counting " << v.by_counting << '\n';
    if (!r.checks.empty()) {
      std::size_t held = 0, skipped = 0;
      for (const auto& c : r.checks) {
        if (c.status == CheckStatus::holds) ++held;
        if (c.status == CheckStatus::not_applicable) ++skipped;
      }
      out << "checks " << held << " hold, " << skipped << " not applicable, "
          << r.checks.size() - held - skipped << " fail\n";
      for (const auto& c : r.checks)
        if (c.status == CheckStatus::fails) out << "  FAIL " << c.id << ": " << c.statement << '\n';
    }
  } else {
    out << "diadem " << braces(r, r.diadem) << '\n';
    out << "oracle skipped (n " << r.n << " exceeds bound)\n";
  }
  return out.str();
}

}  // namespace kecrit
