// kecrit: critical-independence profile and König-Egerváry analysis of
// simple graphs.
//
//   kecrit analyze [FILE|-] [--fixture G1] [--format dimacs] [--output text]
//   kecrit verify --trials 1000 --n 4..12 --seed 42
//   kecrit generate --gnp 20 0.3 --seed 7
//
// Exit codes: 0 ok, 1 check failure, 2 input error, 3 oracle bound refusal.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "kecrit/analysis.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;
constexpr int kBoundRefusal = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

kecrit::Format parse_format(const std::string& name) {
  auto f = kecrit::format_from_name(name);
  if (!f) throw InputError("unknown format '" + name + "' (expected edge_list or dimacs)");
  return *f;
}

double parse_probability(const std::string& s) {
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("invalid probability '" + s + "'");
  }
  if (used != s.size() || !(p >= 0.0 && p <= 1.0))
    throw InputError("probability must lie in [0,1], got '" + s + "'");
  return p;
}

std::size_t parse_count(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw InputError("invalid count '" + s + "'");
  }
  if (used != s.size()) throw InputError("invalid count '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_count(s);
    return {n, n};
  }
  const std::size_t lo = parse_count(s.substr(0, dots));
  const std::size_t hi = parse_count(s.substr(dots + 2));
  if (lo > hi) throw InputError("empty range '" + s + "'");
  return {lo, hi};
}

std::string describe(const kecrit::GeneratorSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case kecrit::GeneratorKind::gnp:
      out << "gnp n=" << spec.n << " p=" << spec.p;
      break;
    case kecrit::GeneratorKind::bipartite_gnp:
      out << "bipartite " << spec.part_sizes.at(0) << "+" << spec.part_sizes.at(1)
          << " p=" << spec.p;
      break;
    case kecrit::GeneratorKind::disjoint_union:
      out << "union of gnp parts";
      for (auto s : spec.part_sizes) out << ' ' << s;
      out << " p=" << spec.p;
      break;
    case kecrit::GeneratorKind::fixture:
      out << "fixture " << spec.fixture;
      break;
  }
  out << " seed=" << spec.seed;
  return out.str();
}

// ---------------------------------------------------------------------------

struct AnalyzeConfig {
  std::string input;
  std::string fixture;
  std::string format = "edge_list";
  std::string output = "json";
  std::size_t oracle_bound = 20;
  bool no_checks = false;
  bool full = false;
};

int cmd_analyze(const AnalyzeConfig& cfg) {
  kecrit::Graph g;
  if (!cfg.fixture.empty()) {
    g = kecrit::fixture(cfg.fixture);
  } else {
    const std::string path = cfg.input.empty() ? "-" : cfg.input;
    g = kecrit::parse_graph(read_input(path), parse_format(cfg.format));
  }
  if (cfg.output != "json" && cfg.output != "text")
    throw InputError("unknown output '" + cfg.output + "' (expected json or text)");
  if (cfg.oracle_bound > 64) throw InputError("oracle bound cannot exceed 64");
  if (cfg.full && g.n() > cfg.oracle_bound) {
    std::cerr << "kecrit: full profile requested but n=" << g.n() << " exceeds oracle bound "
              << cfg.oracle_bound << '\n';
    return kBoundRefusal;
  }

  kecrit::AnalysisOptions opts;
  opts.oracle_bound = cfg.oracle_bound;
  opts.include_checks = !cfg.no_checks;
  const kecrit::AnalysisReport report = kecrit::analyze(g, opts);
  if (cfg.output == "json")
    std::cout << kecrit::report_to_json(report) << '\n';
  else
    std::cout << kecrit::report_to_text(report);
  return report.all_checks_hold() ? kOk : kCheckFailure;
}

struct VerifyConfig {
  std::size_t trials = 1000;
  std::string n_range = "4..12";
  std::uint64_t seed = 42;
  std::size_t oracle_bound = 20;
};

int cmd_verify(const VerifyConfig& cfg) {
  if (cfg.trials < 1) throw InputError("--trials must be at least 1");
  const auto [n_min, n_max] = parse_range(cfg.n_range);
  if (cfg.oracle_bound > 64) throw InputError("oracle bound cannot exceed 64");
  if (n_max > cfg.oracle_bound)
    throw InputError("--n upper end " + std::to_string(n_max) + " exceeds oracle bound " +
                     std::to_string(cfg.oracle_bound));

  const kecrit::OracleOptions oo{cfg.oracle_bound};
  std::size_t passed = 0;
  std::size_t ke_graphs = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const kecrit::GeneratorSpec spec = kecrit::sweep_spec(cfg.seed, i, n_min, n_max);
    const kecrit::Graph g = kecrit::generate(spec);
    auto checks = kecrit::verify_theorems(g, oo);
    auto fast = kecrit::verify_fast_paths(g, oo);
    checks.insert(checks.end(), fast.begin(), fast.end());

    std::vector<std::string> failed;
    for (const auto& c : checks) {
      if (!c.ok()) failed.push_back(c.id);
      if (c.id == "ke.nucleus_diadem_tight" && c.status == kecrit::CheckStatus::holds) ++ke_graphs;
    }
    if (failed.empty()) {
      ++passed;
      continue;
    }
    std::cout << "trial " << i << " FAILED (" << describe(spec) << "):";
    for (const auto& id : failed) std::cout << ' ' << id;
    std::cout << "\n# reproduce with: kecrit analyze <file>\n" << kecrit::to_edge_list(g);
  }
  std::cout << passed << "/" << cfg.trials << " passed (seed " << cfg.seed << ", n "
            << n_min << ".." << n_max << ", " << ke_graphs << " KE graphs)\n";
  return passed == cfg.trials ? kOk : kCheckFailure;
}

struct GenerateConfig {
  std::string fixture;
  std::vector<std::string> gnp;
  std::vector<std::string> bipartite;
  std::vector<std::string> union_sizes;
  std::string p = "0.5";
  std::uint64_t seed = 1;
  std::string format = "edge_list";
};

int cmd_generate(const GenerateConfig& cfg) {
  const int chosen = !cfg.fixture.empty() + !cfg.gnp.empty() + !cfg.bipartite.empty() +
                     !cfg.union_sizes.empty();
  if (chosen != 1)
    throw InputError("choose exactly one of --fixture, --gnp, --bipartite, --union");
  kecrit::GeneratorSpec spec;
  spec.seed = cfg.seed;
  if (!cfg.fixture.empty()) {
    spec.kind = kecrit::GeneratorKind::fixture;
    spec.fixture = cfg.fixture;
  } else if (!cfg.gnp.empty()) {
    spec.kind = kecrit::GeneratorKind::gnp;
    spec.n = parse_count(cfg.gnp.at(0));
    spec.p = parse_probability(cfg.gnp.at(1));
  } else if (!cfg.bipartite.empty()) {
    spec.kind = kecrit::GeneratorKind::bipartite_gnp;
    spec.part_sizes = {parse_count(cfg.bipartite.at(0)), parse_count(cfg.bipartite.at(1))};
    spec.p = parse_probability(cfg.bipartite.at(2));
  } else {
    spec.kind = kecrit::GeneratorKind::disjoint_union;
    for (const auto& s : cfg.union_sizes) spec.part_sizes.push_back(parse_count(s));
    spec.p = parse_probability(cfg.p);
  }
  const kecrit::Graph g = kecrit::generate(spec);
  const auto format = parse_format(cfg.format);
  std::cout << (format == kecrit::Format::edge_list ? kecrit::to_edge_list(g)
                                                    : kecrit::to_dimacs(g));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical independence and König-Egerváry analysis of simple graphs"};
  app.require_subcommand(1);

  AnalyzeConfig analyze_cfg;
  auto* analyze = app.add_subcommand("analyze", "Compute the full analysis report of one graph");
  analyze->add_option("input", analyze_cfg.input, "Graph file, or - for stdin");
  analyze->add_option("--fixture", analyze_cfg.fixture, "Built-in fixture: G1, G2 or GF");
  analyze->add_option("--format", analyze_cfg.format, "edge_list or dimacs");
  analyze->add_option("--output", analyze_cfg.output, "json or text");
  analyze->add_option("--oracle-bound", analyze_cfg.oracle_bound,
                      "Largest n for exhaustive fields");
  analyze->add_flag("--no-checks", analyze_cfg.no_checks, "Skip theorem checks");
  analyze->add_flag("--full", analyze_cfg.full,
                    "Require the oracle-backed profile (exit 3 if n exceeds the bound)");

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Check every statement on a seeded random corpus");
  verify->add_option("--trials", verify_cfg.trials, "Number of random graphs");
  verify->add_option("--n", verify_cfg.n_range, "Vertex-count range, e.g. 4..12");
  verify->add_option("--seed", verify_cfg.seed, "Corpus seed");
  verify->add_option("--oracle-bound", verify_cfg.oracle_bound, "Largest n for the oracle");

  GenerateConfig gen_cfg;
  auto* generate = app.add_subcommand("generate", "Emit a fixture or random graph");
  generate->add_option("--fixture", gen_cfg.fixture, "G1, G2 or GF");
  generate->add_option("--gnp", gen_cfg.gnp, "N P: Erdős-Rényi graph")->expected(2);
  generate->add_option("--bipartite", gen_cfg.bipartite, "L R P: random bipartite graph")
      ->expected(3);
  generate->add_option("--union", gen_cfg.union_sizes, "Component sizes of a gnp union")
      ->expected(1, 64);
  generate->add_option("--p", gen_cfg.p, "Edge probability for --union");
  generate->add_option("--seed", gen_cfg.seed, "Generator seed");
  generate->add_option("--format", gen_cfg.format, "edge_list or dimacs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_cfg);
    if (*verify) return cmd_verify(verify_cfg);
    if (*generate) return cmd_generate(gen_cfg);
  } catch (const kecrit::ParseError& e) {
    std::cerr << "kecrit: parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const kecrit::OracleBoundError& e) {
    std::cerr << "kecrit: " << e.what() << '\n';
    return kBoundRefusal;
  } catch (const InputError& e) {
    std::cerr << "kecrit: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kecrit: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
