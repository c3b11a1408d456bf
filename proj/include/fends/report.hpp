#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fends/ends.hpp"
#include "fends/job.hpp"
#include "fends/subgroup.hpp"

namespace fends {

enum class Verdict { Confirmed, Violated, Inconclusive };

std::string to_string(Verdict v);

/// Cells of the end-behaviour picture around a subgroup H with e(G,H) = n.
enum class Regime {
  Zero,          // [G:K] < inf: e(G,K) = 0
  SameAbove,     // H <= K, [K:H] < inf: e(G,K) = n
  InfiniteAbove, // H <= K, [K:H] = inf, [G:K] = inf: e(G,K) = inf
  SameBelow,     // K <= H, [H:K] < inf: e(G,K) = n
  One,           // K <= H, [H:K] = inf: e(G,K) = 1
  Unclassified,
};

struct RegimeClassification {
  Regime regime = Regime::Unclassified;
  /// Predicted e(G,K); empty for the infinite cell and when unclassified.
  std::optional<std::size_t> predicted;
  /// The infinite cell cannot be certified by truncation.
  bool diagnostic_only = false;
  std::string reason;

  std::string label() const;
  std::string side() const;
};

/// Classifies K against H from indices and an estimate of e(G,H).
RegimeClassification classify_regime(const GroupModel &m, const SubgroupSpec &h,
                                     const SubgroupSpec &k, const EndsEstimate &e_h);
RegimeClassification classify_regime(const GroupModel &m, const SubgroupSpec &h,
                                     const SubgroupSpec &k, const EndsParams &params);

struct ChainCheck {
  Verdict verdict = Verdict::Inconclusive;
  IndexClass index_g_h = IndexClass::infinite();
  IndexClass index_h_k = IndexClass::infinite();
  EndsEstimate e_h;
  EndsEstimate e_k;
  std::optional<std::size_t> predicted;
  std::optional<std::size_t> computed;
  RegimeClassification regime;
  std::string note;
};

/// For K <= H with 0 < e(G,H) = n < inf and [G:H] = inf, predicts
/// e(G,K) = n when [H:K] < inf and 1 otherwise, and compares with the
/// computed e(G,K). Throws ChainViolation unless K <= H.
ChainCheck check_corollary(const GroupModel &m, const SubgroupSpec &h, const SubgroupSpec &k,
                           const EndsParams &params);

/// e(G,K) <= e(G,H) for K <= H. When H has finite index (e(G,H) = 0) the
/// comparison does not apply and the verdict checks e(G,H) = 0 instead.
ChainCheck check_monotonicity(const GroupModel &m, const SubgroupSpec &h, const SubgroupSpec &k,
                              const EndsParams &params);

struct TaskResult {
  Task task;
  std::vector<std::size_t> counts_per_level;
  bool stabilized = false;
  std::optional<std::size_t> value;
  std::size_t lower_bound = 0;
  bool increasing = false;
  bool saturated = false;
  std::optional<Verdict> verdict;
  std::optional<RegimeClassification> regime;
  /// Task-specific fields (indices, nested estimates, notes).
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  /// Per-level counts of secondary estimates, for CSV (name, counts).
  std::vector<std::pair<std::string, std::vector<std::size_t>>> series;
  std::string dot;
  double elapsed_ms = 0.0;
};

struct Report {
  std::string group;
  std::vector<TaskResult> results;
  double elapsed_ms = 0.0;

  std::size_t count(Verdict v) const;
};

/// Runs every task in order. Chain tasks validate K <= H before anything
/// runs.
Report run_job(const Job &job);

/// 0: all confirmed or computed; 2: something VIOLATED; 3: INCONCLUSIVE only.
int exit_code(const Report &report);

nlohmann::ordered_json to_json(const Report &report, bool with_timing = true);
nlohmann::ordered_json to_json(const EndsEstimate &est);

/// JSON, CSV of per-level counts, or the DOT graphs of export-dot tasks.
std::string export_report(const Report &report, OutputFormat format, bool with_timing = true);

} // namespace fends
