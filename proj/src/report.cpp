#include "fends/report.hpp"

#include <chrono>
#include <sstream>

#include "fends/dot.hpp"
#include "fends/error.hpp"

namespace fends {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Confirmed:
    return "CONFIRMED";
  case Verdict::Violated:
    return "VIOLATED";
  case Verdict::Inconclusive:
    return "INCONCLUSIVE";
  }
  return "?";
}

std::string RegimeClassification::label() const {
  switch (regime) {
  case Regime::Zero:
    return "0";
  case Regime::SameAbove:
  case Regime::SameBelow:
    return "n";
  case Regime::InfiniteAbove:
    return "inf";
  case Regime::One:
    return "1";
  case Regime::Unclassified:
    return "none";
  }
  return "none";
}

std::string RegimeClassification::side() const {
  switch (regime) {
  case Regime::SameAbove:
  case Regime::InfiniteAbove:
    return "above";
  case Regime::SameBelow:
  case Regime::One:
    return "below";
  default:
    return "";
  }
}

namespace {

std::optional<std::size_t> finite_nonzero(const EndsEstimate &e) {
  if (e.stabilized && e.value && *e.value > 0)
    return e.value;
  return std::nullopt;
}

} // namespace

RegimeClassification classify_regime(const GroupModel &m, const SubgroupSpec &h,
                                     const SubgroupSpec &k, const EndsEstimate &e_h) {
  const Subgroup hs(m, h);
  const Subgroup ks(m, k);
  RegimeClassification out;
  if (ks.index().is_finite()) {
    out.regime = Regime::Zero;
    out.predicted = 0;
    out.reason = "[G:K] = " + ks.index().str();
    return out;
  }
  const auto n = finite_nonzero(e_h);
  if (hs.contains_subgroup(ks)) {
    if (!n) {
      out.reason = "K <= H but e(G,H) is not a stabilized finite non-zero value";
      return out;
    }
    const IndexClass idx = hs.index_of(ks);
    if (idx.is_finite()) {
      out.regime = Regime::SameBelow;
      out.predicted = *n;
    } else {
      out.regime = Regime::One;
      out.predicted = 1;
    }
    out.reason = "K <= H, [H:K] = " + idx.str();
    return out;
  }
  if (ks.contains_subgroup(hs)) {
    if (!n || *n < 2) {
      out.reason = "H <= K but e(G,H) is not a stabilized value in (1, inf)";
      return out;
    }
    const IndexClass idx = ks.index_of(hs);
    if (idx.is_finite()) {
      out.regime = Regime::SameAbove;
      out.predicted = *n;
    } else {
      out.regime = Regime::InfiniteAbove;
      out.diagnostic_only = true;
    }
    out.reason = "H <= K, [K:H] = " + idx.str() + ", [G:K] = infinite";
    return out;
  }
  out.reason = "K and H are not nested";
  return out;
}

RegimeClassification classify_regime(const GroupModel &m, const SubgroupSpec &h,
                                     const SubgroupSpec &k, const EndsParams &params) {
  return classify_regime(m, h, k, pair_ends(m, h, params));
}

namespace {

const char *kViolatedNote =
    "VIOLATED: the statement is a theorem, so this points at truncation "
    "parameters (nmax, margin) or an implementation bug, not at the mathematics";

void require_chain(const Subgroup &hs, const Subgroup &ks) {
  if (!hs.contains_subgroup(ks))
    throw ChainViolation("K is not contained in H: some generator of K is not a member of H");
}

} // namespace

ChainCheck check_corollary(const GroupModel &m, const SubgroupSpec &h, const SubgroupSpec &k,
                           const EndsParams &params) {
  const Subgroup hs(m, h);
  const Subgroup ks(m, k);
  require_chain(hs, ks);
  ChainCheck out;
  out.index_g_h = hs.index();
  out.index_h_k = hs.index_of(ks);
  out.e_h = pair_ends(m, h, params);
  out.e_k = pair_ends(m, k, params);
  out.regime = classify_regime(m, h, k, out.e_h);
  if (out.e_k.stabilized)
    out.computed = out.e_k.value;

  const auto n = finite_nonzero(out.e_h);
  if (!n) {
    out.note = "hypothesis not met: e(G,H) is not a stabilized finite non-zero value";
    return out;
  }
  if (out.index_g_h.is_finite()) {
    out.note = "hypothesis not met: [G:H] is finite";
    return out;
  }
  out.predicted = out.index_h_k.is_finite() ? *n : 1;
  if (!out.computed) {
    out.note = "e(G,K) did not stabilize";
    return out;
  }
  if (*out.computed == *out.predicted) {
    out.verdict = Verdict::Confirmed;
  } else {
    out.verdict = Verdict::Violated;
    out.note = kViolatedNote;
  }
  return out;
}

ChainCheck check_monotonicity(const GroupModel &m, const SubgroupSpec &h, const SubgroupSpec &k,
                              const EndsParams &params) {
  const Subgroup hs(m, h);
  const Subgroup ks(m, k);
  require_chain(hs, ks);
  ChainCheck out;
  out.index_g_h = hs.index();
  out.index_h_k = hs.index_of(ks);
  out.e_h = pair_ends(m, h, params);
  out.e_k = pair_ends(m, k, params);
  out.regime = classify_regime(m, h, k, out.e_h);
  if (out.e_k.stabilized)
    out.computed = out.e_k.value;

  if (out.index_g_h.is_finite()) {
    // The base of p is finite, so e(Y|p) = 0 and the comparison is out of
    // scope; check the [G:H] < inf cell instead.
    out.predicted = 0;
    out.note = "[G:H] is finite: monotonicity does not apply, checked e(G,H) = 0 instead";
    if (!out.e_h.stabilized)
      return out;
    out.verdict = *out.e_h.value == 0 ? Verdict::Confirmed : Verdict::Violated;
    if (out.verdict == Verdict::Violated)
      out.note += std::string("; ") + kViolatedNote;
    return out;
  }
  if (!out.e_h.stabilized || !out.e_k.stabilized) {
    out.note = "an estimate did not stabilize";
    return out;
  }
  out.predicted = out.e_h.value; // upper bound for e(G,K)
  if (*out.e_k.value <= *out.e_h.value) {
    out.verdict = Verdict::Confirmed;
  } else {
    out.verdict = Verdict::Violated;
    out.note = kViolatedNote;
  }
  return out;
}

json to_json(const EndsEstimate &est) {
  json j;
  j["counts_per_level"] = est.counts;
  j["stabilized"] = est.stabilized;
  j["value"] = est.value ? json(*est.value) : json(nullptr);
  j["lower_bound"] = est.lower_bound;
  j["increasing"] = est.increasing;
  j["saturated"] = est.saturated;
  j["window"] = est.window;
  j["margin"] = est.margin;
  return j;
}

namespace {

json regime_json(const RegimeClassification &r) {
  json j;
  j["label"] = r.label();
  j["side"] = r.side();
  j["predicted"] = r.predicted ? json(*r.predicted) : json(nullptr);
  j["diagnostic_only"] = r.diagnostic_only;
  j["reason"] = r.reason;
  return j;
}

json params_json(const Task &t) {
  json j;
  if (!t.subgroup.empty())
    j["subgroup"] = t.subgroup;
  if (!t.upper.empty())
    j["H"] = t.upper;
  if (!t.lower.empty())
    j["K"] = t.lower;
  if (t.kind == TaskKind::ExportDot) {
    j["radius"] = t.radius;
    j["level"] = t.level ? json(*t.level) : json(nullptr);
  } else {
    j["nmax"] = t.params.n_max;
    j["margin"] = t.params.effective_margin();
    j["window"] = t.params.window;
  }
  j["budget"] = t.params.vertex_budget;
  return j;
}

void fill_estimate(TaskResult &r, const EndsEstimate &e) {
  r.counts_per_level = e.counts;
  r.stabilized = e.stabilized;
  r.value = e.value;
  r.lower_bound = e.lower_bound;
  r.increasing = e.increasing;
  r.saturated = e.saturated;
}

void fill_chain(TaskResult &r, const ChainCheck &c) {
  fill_estimate(r, c.e_k);
  r.verdict = c.verdict;
  r.regime = c.regime;
  r.details["predicted"] = c.predicted ? json(*c.predicted) : json(nullptr);
  r.details["computed"] = c.computed ? json(*c.computed) : json(nullptr);
  r.details["index_G_H"] = c.index_g_h.str();
  r.details["index_H_K"] = c.index_h_k.str();
  r.details["e_G_H"] = to_json(c.e_h);
  r.details["e_G_K"] = to_json(c.e_k);
  r.details["note"] = c.note;
  r.series = {{r.task.upper, c.e_h.counts}, {r.task.lower, c.e_k.counts}};
}

TaskResult run_task(const Job &job, const Task &t) {
  TaskResult r;
  r.task = t;
  const GroupModel &g = job.group;
  switch (t.kind) {
  case TaskKind::Ends: {
    fill_estimate(r, group_ends(g, t.params));
    if (!r.stabilized) {
      r.verdict = Verdict::Inconclusive;
      if (r.increasing)
        r.details["note"] = "counts strictly increasing: infinitely many ends signalled";
    }
    r.series = {{"", r.counts_per_level}};
    break;
  }
  case TaskKind::PairEnds: {
    fill_estimate(r, pair_ends(g, job.subgroup(t.subgroup), t.params));
    r.details["index_G_H"] = subgroup_index(g, job.subgroup(t.subgroup)).str();
    if (!r.stabilized) {
      r.verdict = Verdict::Inconclusive;
      if (r.increasing)
        r.details["note"] = "counts strictly increasing: infinitely many ends signalled";
    }
    r.series = {{t.subgroup, r.counts_per_level}};
    break;
  }
  case TaskKind::CheckCorollary:
    fill_chain(r, check_corollary(g, job.subgroup(t.upper), job.subgroup(t.lower), t.params));
    break;
  case TaskKind::CheckMonotonicity:
    fill_chain(r, check_monotonicity(g, job.subgroup(t.upper), job.subgroup(t.lower), t.params));
    break;
  case TaskKind::ClassifyRegime: {
    const EndsEstimate e_h = pair_ends(g, job.subgroup(t.upper), t.params);
    fill_estimate(r, e_h);
    r.regime = classify_regime(g, job.subgroup(t.upper), job.subgroup(t.lower), e_h);
    r.series = {{t.upper, e_h.counts}};
    break;
  }
  case TaskKind::ExportDot: {
    BallPtr ball = t.subgroup.empty()
                       ? cayley_ball(g, t.radius, t.params.vertex_budget)
                       : schreier_ball(g, job.subgroup(t.subgroup), t.radius, t.params.vertex_budget);
    const std::string name = t.subgroup.empty() ? "cayley" : "schreier_" + t.subgroup;
    r.dot = t.level ? to_dot(Subgraph::metric_ball(ball, *t.level), name) : to_dot(*ball, name);
    r.details["nodes"] = ball->vertex_count();
    r.details["edges"] = ball->edge_count();
    r.details["complete"] = ball->complete();
    break;
  }
  }
  return r;
}

} // namespace

std::size_t Report::count(Verdict v) const {
  std::size_t n = 0;
  for (const TaskResult &r : results)
    if (r.verdict == v)
      ++n;
  return n;
}

Report run_job(const Job &job) {
  for (const Task &t : job.tasks) {
    if (t.kind != TaskKind::CheckCorollary && t.kind != TaskKind::CheckMonotonicity)
      continue;
    if (!Subgroup(job.group, job.subgroup(t.upper))
             .contains_subgroup(Subgroup(job.group, job.subgroup(t.lower))))
      throw ChainViolation(to_string(t.kind) + ": subgroup " + t.lower + " is not contained in " +
                           t.upper);
  }
  using clock = std::chrono::steady_clock;
  Report report;
  report.group = job.group.describe();
  const auto start = clock::now();
  for (const Task &t : job.tasks) {
    const auto t0 = clock::now();
    TaskResult r = run_task(job, t);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    report.results.push_back(std::move(r));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return report;
}

int exit_code(const Report &report) {
  if (report.count(Verdict::Violated) > 0)
    return 2;
  if (report.count(Verdict::Inconclusive) > 0)
    return 3;
  return 0;
}

json to_json(const Report &report, bool with_timing) {
  json j;
  j["group"] = report.group;
  j["results"] = json::array();
  for (const TaskResult &r : report.results) {
    json t;
    t["task"] = to_string(r.task.kind);
    t["params"] = params_json(r.task);
    t["counts_per_level"] = r.counts_per_level;
    t["stabilized"] = r.stabilized;
    t["value"] = r.value ? json(*r.value) : json(nullptr);
    t["lower_bound"] = r.lower_bound;
    t["increasing"] = r.increasing;
    t["saturated"] = r.saturated;
    t["verdict"] = r.verdict ? json(to_string(*r.verdict)) : json(nullptr);
    t["regime"] = r.regime ? regime_json(*r.regime) : json(nullptr);
    for (const auto &[key, value] : r.details.items())
      t[key] = value;
    if (with_timing)
      t["elapsed_ms"] = r.elapsed_ms;
    j["results"].push_back(std::move(t));
  }
  j["summary"] = {{"confirmed", report.count(Verdict::Confirmed)},
                  {"violated", report.count(Verdict::Violated)},
                  {"inconclusive", report.count(Verdict::Inconclusive)}};
  if (with_timing)
    j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string export_report(const Report &report, OutputFormat format, bool with_timing) {
  switch (format) {
  case OutputFormat::Json:
    return to_json(report, with_timing).dump(2) + "\n";
  case OutputFormat::Csv: {
    std::ostringstream out;
    out << "task_index,task,subgroup,level,count\n";
    for (std::size_t i = 0; i < report.results.size(); ++i) {
      const TaskResult &r = report.results[i];
      for (const auto &[name, counts] : r.series)
        for (std::size_t n = 0; n < counts.size(); ++n)
          out << i << ',' << to_string(r.task.kind) << ',' << name << ',' << n << ','
              << counts[n] << '\n';
    }
    return out.str();
  }
  case OutputFormat::Dot: {
    std::string out;
    for (const TaskResult &r : report.results)
      out += r.dot;
    if (out.empty())
      throw ValidationError("dot output needs at least one export-dot task");
    return out;
  }
  }
  throw ValidationError("unsupported output format");
}

} // namespace fends
