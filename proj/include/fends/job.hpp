#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fends/ends.hpp"
#include "fends/group_model.hpp"
#include "fends/subgroup.hpp"

namespace fends {

enum class TaskKind {
  Ends,
  PairEnds,
  CheckCorollary,
  CheckMonotonicity,
  ClassifyRegime,
  ExportDot,
};

std::string to_string(TaskKind kind);

enum class OutputFormat { Json, Csv, Dot };

std::string to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);

struct Task {
  TaskKind kind = TaskKind::Ends;
  /// pair-ends and export-dot (empty: the Cayley graph).
  std::string subgroup;
  /// Chain tasks: K <= H.
  std::string upper;
  std::string lower;
  EndsParams params;
  /// export-dot only.
  int radius = 2;
  std::optional<int> level;
};

/// A group, named subgroups and a list of tasks, read from a YAML file:
///
///   group: "Z^3"                      # or F2, Z, "F2 x Z", or a mapping
///   subgroups:
///     H: ["x", "y"]
///     K: ["x"]
///   params: {nmax: 5, margin: 5, window: 3, budget: 500000}
///   tasks:
///     - ends
///     - {kind: pair-ends, subgroup: H}
///     - {kind: check-corollary, H: H, K: K}
///   format: json
struct Job {
  GroupModel group;
  std::vector<std::pair<std::string, SubgroupSpec>> subgroups;
  EndsParams defaults;
  std::vector<Task> tasks;
  OutputFormat format = OutputFormat::Json;

  const SubgroupSpec &subgroup(const std::string &name) const;
  bool has_subgroup(const std::string &name) const;
};

/// "F2", "Z", "Z^3", "F2 x Z^2".
GroupModel parse_group(std::string_view text);

/// Throws ParseError on malformed YAML or words, ValidationError on
/// references to undefined subgroups or bad parameters.
Job parse_job(std::string_view yaml);
Job load_job(const std::filesystem::path &path);

/// Command-line overrides applied on top of the job file.
struct JobOverrides {
  std::optional<int> n_max;
  std::optional<int> margin;
  std::optional<std::size_t> window;
  std::optional<std::size_t> budget;
  std::optional<OutputFormat> format;
};

void apply_overrides(Job &job, const JobOverrides &overrides);

} // namespace fends
