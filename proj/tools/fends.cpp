// Command-line front end: runs the tasks of a YAML job file and writes a
// JSON / CSV / DOT report.
//
//   fends ends       --job z3.yaml
//   fends pair-ends  --job z3.yaml --nmax 4 --margin 4
//   fends check      --job z3.yaml --format csv --out checks.csv
//   fends export     --job z3.yaml --format dot
//
// Exit codes: 0 values computed / all CONFIRMED, 2 some VIOLATED,
// 3 INCONCLUSIVE only, 64 usage, 65 job parse error, 66 invalid job,
// 67 K not contained in H, 68 vertex budget exceeded, 69 I/O error,
// 70 other computation errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fends/error.hpp"
#include "fends/job.hpp"
#include "fends/report.hpp"

namespace {

enum Exit : int {
  kUsage = 64,
  kParse = 65,
  kInvalid = 66,
  kChain = 67,
  kBudget = 68,
  kIo = 69,
  kOther = 70,
};

struct Options {
  std::string job_path;
  std::optional<int> n_max;
  std::optional<int> margin;
  std::optional<std::size_t> window;
  std::optional<std::size_t> budget;
  std::optional<std::string> format;
  std::string out;
  bool no_timing = false;
  std::string subgroup;
};

void add_common(CLI::App *cmd, Options &o) {
  cmd->add_option("--job", o.job_path, "YAML job file")->required();
  cmd->add_option("--nmax", o.n_max, "filtration depth");
  cmd->add_option("--margin", o.margin, "extra cover radius beyond nmax (default nmax)");
  cmd->add_option("--window", o.window, "levels that must agree for stabilization");
  cmd->add_option("--budget", o.budget, "vertex budget per ball");
  cmd->add_option("--format", o.format, "json | csv | dot");
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_flag("--no-timing", o.no_timing, "omit timing fields (byte-stable output)");
}

// Keeps the tasks a subcommand is about, synthesizing defaults when the job
// declares none.
void select_tasks(fends::Job &job, const std::string &command, const std::string &subgroup) {
  using fends::TaskKind;
  std::vector<fends::Task> keep;
  for (const auto &t : job.tasks) {
    const bool wanted =
        (command == "ends" && t.kind == TaskKind::Ends) ||
        (command == "pair-ends" && t.kind == TaskKind::PairEnds &&
         (subgroup.empty() || t.subgroup == subgroup)) ||
        (command == "check" &&
         (t.kind == TaskKind::CheckCorollary || t.kind == TaskKind::CheckMonotonicity ||
          t.kind == TaskKind::ClassifyRegime)) ||
        command == "export";
    if (wanted)
      keep.push_back(t);
  }
  if (keep.empty() && command == "ends") {
    fends::Task t;
    t.kind = TaskKind::Ends;
    t.params = job.defaults;
    keep.push_back(t);
  }
  if (keep.empty() && command == "pair-ends") {
    for (const auto &[name, spec] : job.subgroups) {
      if (!subgroup.empty() && name != subgroup)
        continue;
      fends::Task t;
      t.kind = TaskKind::PairEnds;
      t.subgroup = name;
      t.params = job.defaults;
      keep.push_back(t);
    }
    if (!subgroup.empty() && keep.empty())
      throw fends::ValidationError("undefined subgroup \"" + subgroup + "\"");
  }
  job.tasks = std::move(keep);
}

int run(const std::string &command, const Options &o) {
  fends::Job job = fends::load_job(o.job_path);
  fends::JobOverrides overrides{o.n_max, o.margin, o.window, o.budget, std::nullopt};
  if (o.format)
    overrides.format = fends::parse_format(*o.format);
  fends::apply_overrides(job, overrides);
  select_tasks(job, command, o.subgroup);

  const fends::Report report = fends::run_job(job);
  const std::string text = fends::export_report(report, job.format, !o.no_timing);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!(out << text))
      throw std::ios_base::failure("cannot write " + o.out);
  }
  return fends::exit_code(report);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Filtered ends of groups and pairs from covering-graph ball truncations"};
  app.require_subcommand(1);
  Options opts;
  const std::pair<const char *, const char *> commands[] = {
      {"ends", "number of ends e(G) of the job's group"},
      {"pair-ends", "filtered ends e(G,H) for the job's subgroups"},
      {"check", "corollary, monotonicity and regime checks on subgroup chains"},
      {"export", "run every task and write the report (json, csv or dot)"},
  };
  for (const auto &[name, help] : commands) {
    CLI::App *cmd = app.add_subcommand(name, help);
    add_common(cmd, opts);
    if (std::string(name) == "pair-ends")
      cmd->add_option("--subgroup", opts.subgroup, "only this subgroup");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opts);
  } catch (const fends::ParseError &e) {
    std::cerr << "fends: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const fends::ValidationError &e) {
    std::cerr << "fends: invalid job: " << e.what() << '\n';
    return kInvalid;
  } catch (const fends::UnsupportedSubgroup &e) {
    std::cerr << "fends: invalid job: " << e.what() << '\n';
    return kInvalid;
  } catch (const fends::ChainViolation &e) {
    std::cerr << "fends: invalid chain: " << e.what() << '\n';
    return kChain;
  } catch (const fends::BudgetExceeded &e) {
    std::cerr << "fends: " << e.what() << " (raise --budget or lower --nmax/--margin)\n";
    return kBudget;
  } catch (const std::ios_base::failure &e) {
    std::cerr << "fends: " << e.what() << '\n';
    return kIo;
  } catch (const fends::Error &e) {
    std::cerr << "fends: " << e.what() << '\n';
    return kOther;
  }
}
