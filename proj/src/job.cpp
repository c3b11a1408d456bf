#include "fends/job.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "fends/error.hpp"

namespace fends {

std::string to_string(TaskKind kind) {
  switch (kind) {
  case TaskKind::Ends:
    return "ends";
  case TaskKind::PairEnds:
    return "pair-ends";
  case TaskKind::CheckCorollary:
    return "check-corollary";
  case TaskKind::CheckMonotonicity:
    return "check-monotonicity";
  case TaskKind::ClassifyRegime:
    return "classify-regime";
  case TaskKind::ExportDot:
    return "export-dot";
  }
  return "?";
}

std::string to_string(OutputFormat format) {
  switch (format) {
  case OutputFormat::Json:
    return "json";
  case OutputFormat::Csv:
    return "csv";
  case OutputFormat::Dot:
    return "dot";
  }
  return "?";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "json")
    return OutputFormat::Json;
  if (text == "csv")
    return OutputFormat::Csv;
  if (text == "dot")
    return OutputFormat::Dot;
  throw ValidationError("unsupported output format \"" + std::string(text) + "\"");
}

const SubgroupSpec &Job::subgroup(const std::string &name) const {
  for (const auto &[n, spec] : subgroups)
    if (n == name)
      return spec;
  throw ValidationError("undefined subgroup \"" + name + "\"");
}

bool Job::has_subgroup(const std::string &name) const {
  for (const auto &entry : subgroups)
    if (entry.first == name)
      return true;
  return false;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

int parse_rank(const std::string &digits, std::string_view whole) {
  if (digits.empty())
    return 1;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad group factor \"" + std::string(whole) + "\"");
  return std::stoi(digits);
}

GroupModel parse_factor(std::string_view text) {
  const std::string t = trim(text);
  if (t.size() >= 1 && t[0] == 'F')
    return GroupModel::free_group(parse_rank(t.substr(1), text));
  if (t == "Z")
    return GroupModel::free_abelian(1);
  if (t.size() >= 3 && t[0] == 'Z' && t[1] == '^')
    return GroupModel::free_abelian(parse_rank(t.substr(2), text));
  throw ParseError("bad group factor \"" + std::string(text) + "\" (expected Fk, Z or Z^k)");
}

template <typename T> T scalar(const YAML::Node &node, const std::string &what) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception &) {
    throw ParseError("bad value for " + what);
  }
}

GroupModel group_from(const YAML::Node &node) {
  if (node.IsScalar())
    return parse_group(scalar<std::string>(node, "group"));
  if (!node.IsMap())
    throw ParseError("group must be a string or a mapping");
  if (node["product"]) {
    std::vector<GroupModel> factors;
    for (const auto &f : node["product"])
      factors.push_back(group_from(f));
    return GroupModel::direct_product(std::move(factors));
  }
  const auto family = scalar<std::string>(node["family"], "group.family");
  const int rank = node["rank"] ? scalar<int>(node["rank"], "group.rank") : 1;
  if (family == "free")
    return GroupModel::free_group(rank);
  if (family == "free_abelian" || family == "free-abelian")
    return GroupModel::free_abelian(rank);
  throw ParseError("unknown group family \"" + family + "\"");
}

std::vector<Word> words_from(const GroupModel &g, const YAML::Node &node, const std::string &what) {
  if (!node.IsSequence())
    throw ParseError(what + " must be a list of quoted words");
  std::vector<Word> out;
  for (const auto &w : node)
    out.push_back(g.parse(scalar<std::string>(w, what)));
  return out;
}

SubgroupSpec subgroup_from(const GroupModel &g, const YAML::Node &node, const std::string &name) {
  if (node.IsSequence())
    return SubgroupSpec::of(words_from(g, node, "subgroup " + name));
  if (node.IsMap()) {
    SubgroupSpec spec;
    if (node["generators"])
      spec.generators = words_from(g, node["generators"], "subgroup " + name);
    if (node["factors"]) {
      std::vector<std::vector<Word>> lists;
      for (const auto &list : node["factors"])
        lists.push_back(words_from(g, list, "subgroup " + name + " factor"));
      spec.factor_generators = std::move(lists);
    }
    return spec;
  }
  if (node.IsNull())
    return SubgroupSpec::trivial();
  throw ParseError("subgroup " + name + " must be a list of words or a mapping");
}

void read_params(const YAML::Node &node, EndsParams &p) {
  if (!node || !node.IsMap())
    return;
  if (node["nmax"])
    p.n_max = scalar<int>(node["nmax"], "nmax");
  if (node["margin"])
    p.margin = scalar<int>(node["margin"], "margin");
  if (node["window"])
    p.window = scalar<std::size_t>(node["window"], "window");
  if (node["budget"])
    p.vertex_budget = scalar<std::size_t>(node["budget"], "budget");
}

TaskKind kind_from(const std::string &s) {
  for (TaskKind k : {TaskKind::Ends, TaskKind::PairEnds, TaskKind::CheckCorollary,
                     TaskKind::CheckMonotonicity, TaskKind::ClassifyRegime, TaskKind::ExportDot})
    if (to_string(k) == s)
      return k;
  throw ParseError("unknown task kind \"" + s + "\"");
}

void check_params(const EndsParams &p) {
  if (p.n_max < 0 || p.effective_margin() < 0 || p.window < 1 || p.vertex_budget < 1)
    throw ValidationError("nmax and margin must be non-negative, window and budget positive");
}

void validate(const Job &job) {
  check_params(job.defaults);
  auto need = [&](const std::string &name, const Task &t) {
    if (name.empty())
      throw ValidationError(to_string(t.kind) + " task needs a subgroup name");
    if (!job.has_subgroup(name))
      throw ValidationError(to_string(t.kind) + " task refers to undefined subgroup \"" + name +
                            "\"");
  };
  for (const Task &t : job.tasks) {
    switch (t.kind) {
    case TaskKind::Ends:
      break;
    case TaskKind::PairEnds:
      need(t.subgroup, t);
      break;
    case TaskKind::CheckCorollary:
    case TaskKind::CheckMonotonicity:
    case TaskKind::ClassifyRegime:
      need(t.upper, t);
      need(t.lower, t);
      break;
    case TaskKind::ExportDot:
      if (!t.subgroup.empty())
        need(t.subgroup, t);
      if (t.radius < 0)
        throw ValidationError("export-dot radius must be non-negative");
      if (t.level && (*t.level < 0 || *t.level > t.radius))
        throw ValidationError("export-dot level must lie within the radius");
      break;
    }
    check_params(t.params);
  }
}

} // namespace

GroupModel parse_group(std::string_view text) {
  std::vector<GroupModel> factors;
  std::size_t start = 0;
  const std::string t(text);
  try {
    while (true) {
      const std::size_t cut = t.find(" x ", start);
      factors.push_back(parse_factor(std::string_view(t).substr(start, cut - start)));
      if (cut == std::string::npos)
        break;
      start = cut + 3;
    }
    if (factors.size() == 1)
      return factors.front();
    return GroupModel::direct_product(std::move(factors));
  } catch (const InvalidModel &e) {
    throw ParseError("group \"" + t + "\": " + e.what());
  }
}

Job parse_job(std::string_view yaml) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception &e) {
    throw ParseError(std::string("malformed job file: ") + e.what());
  }
  if (!root.IsMap() || !root["group"])
    throw ParseError("job file needs a top-level `group`");

  try {
    Job job{group_from(root["group"]), {}, {}, {}, OutputFormat::Json};
    if (const auto subs = root["subgroups"]) {
      if (!subs.IsMap())
        throw ParseError("subgroups must be a mapping from names to generator lists");
      for (const auto &entry : subs) {
        const auto name = scalar<std::string>(entry.first, "subgroup name");
        if (job.has_subgroup(name))
          throw ValidationError("subgroup \"" + name + "\" defined twice");
        job.subgroups.emplace_back(name, subgroup_from(job.group, entry.second, name));
        try {
          (void)Subgroup(job.group, job.subgroups.back().second);
        } catch (const UnsupportedSubgroup &e) {
          throw ValidationError("subgroup \"" + name + "\": " + e.what());
        }
      }
    }
    read_params(root["params"], job.defaults);
    if (const auto tasks = root["tasks"]) {
      if (!tasks.IsSequence())
        throw ParseError("tasks must be a list");
      for (const auto &node : tasks) {
        Task t;
        t.params = job.defaults;
        if (node.IsScalar()) {
          t.kind = kind_from(scalar<std::string>(node, "task"));
        } else {
          t.kind = kind_from(scalar<std::string>(node["kind"], "task kind"));
          if (node["subgroup"])
            t.subgroup = scalar<std::string>(node["subgroup"], "task subgroup");
          if (node["H"])
            t.upper = scalar<std::string>(node["H"], "task H");
          if (node["K"])
            t.lower = scalar<std::string>(node["K"], "task K");
          if (node["radius"])
            t.radius = scalar<int>(node["radius"], "radius");
          if (node["level"])
            t.level = scalar<int>(node["level"], "level");
          read_params(node, t.params);
        }
        job.tasks.push_back(std::move(t));
      }
    }
    if (root["format"])
      job.format = parse_format(scalar<std::string>(root["format"], "format"));
    validate(job);
    return job;
  } catch (const InvalidWord &e) {
    throw ParseError(e.what());
  } catch (const InvalidModel &e) {
    throw ValidationError(e.what());
  } catch (const YAML::Exception &e) {
    throw ParseError(std::string("malformed job file: ") + e.what());
  }
}

Job load_job(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::ios_base::failure("cannot open job file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_job(text.str());
}

void apply_overrides(Job &job, const JobOverrides &o) {
  auto patch = [&](EndsParams &p) {
    if (o.n_max)
      p.n_max = *o.n_max;
    if (o.margin)
      p.margin = *o.margin;
    if (o.window)
      p.window = *o.window;
    if (o.budget)
      p.vertex_budget = *o.budget;
  };
  patch(job.defaults);
  for (Task &t : job.tasks)
    patch(t.params);
  if (o.format)
    job.format = *o.format;
  validate(job);
}

} // namespace fends
