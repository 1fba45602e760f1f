#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kecrit/critical.hpp"
#include "kecrit/graph.hpp"
#include "kecrit/oracle.hpp"

namespace kecrit {

/// The König-Egerváry property decided four ways. They must agree.
struct KEVerdicts {
  bool by_definition = false;        // alpha + mu = n
  bool by_all_mis_critical = false;  // every maximum independent set is critical
  bool by_diadem_corona = false;     // diadem = corona
  bool by_counting = false;          // |diadem| + |nucleus| = 2 alpha

  bool agree() const {
    return by_definition == by_all_mis_critical && by_definition == by_diadem_corona &&
           by_definition == by_counting;
  }
  friend bool operator==(const KEVerdicts&, const KEVerdicts&) = default;
};

KEVerdicts ke_verdicts(const Graph& g, OracleOptions opts = {});

enum class CheckStatus { holds, fails, not_applicable };

std::string_view to_string(CheckStatus s);

struct TheoremCheck {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::holds;
  std::optional<std::int64_t> lhs;
  std::optional<std::int64_t> rhs;
  VertexSet witness;
  std::string detail;

  bool ok() const { return status != CheckStatus::fails; }
};

/// Runs every structural statement about critical independence on g against
/// oracle ground truth. Results are sorted by id.
std::vector<TheoremCheck> verify_theorems(const Graph& g, OracleOptions opts = {});

/// Cross-checks each polynomial-time route against brute force.
std::vector<TheoremCheck> verify_fast_paths(const Graph& g, OracleOptions opts = {});

struct AnalysisOptions {
  std::size_t oracle_bound = 20;
  bool include_checks = true;
};

struct OracleSection {
  std::size_t alpha = 0;
  VertexSet core;
  VertexSet corona;
  VertexSet ker;
  VertexSet nucleus;
  KEVerdicts verdicts;
};

struct AnalysisReport {
  std::vector<std::string> labels;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t mu = 0;
  std::int64_t d = 0;
  VertexSet diadem;
  Decomposition decomposition;
  std::optional<OracleSection> oracle;  // empty when n exceeds the bound
  std::vector<TheoremCheck> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool all_checks_hold() const;
};

/// Polynomial profile always; oracle-backed fields and checks only when
/// n <= oracle_bound.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& opts = {});

std::string report_to_json(const AnalysisReport& report, int indent = 2);
std::string report_to_text(const AnalysisReport& report);

}  // namespace kecrit
