#include "fends/dot.hpp"

#include <array>
#include <sstream>

namespace fends {

namespace {

constexpr std::array<const char *, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#ffbb78"};

std::string node_name(const Ball &b, VertexId v) {
  const Word &k = b.key(v);
  if (k.empty())
    return "\"1\"";
  std::string s = b.model().format(k);
  std::string compact;
  for (char c : s)
    if (c != ' ')
      compact += c;
  return "\"" + compact + "\"";
}

std::string render(const Ball &b, const Subgraph *level, const std::string &name) {
  std::vector<std::int32_t> label(b.vertex_count(), kNoId);
  std::vector<Component> comps;
  if (level) {
    comps = components(cw_complement(level->ball_ptr(), *level));
    label = component_labels(cw_complement(level->ball_ptr(), *level), comps);
  }

  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (std::size_t i = 0; i < b.vertex_count(); ++i) {
    const auto v = static_cast<VertexId>(i);
    out << "  " << node_name(b, v) << " [dist=" << b.distance(v);
    if (level && level->has_vertex(v)) {
      out << ", fillcolor=\"#cccccc\"";
    } else if (level && label[i] != kNoId) {
      const auto c = static_cast<std::size_t>(label[i]);
      out << ", fillcolor=\"" << kPalette[c % kPalette.size()] << "\", component=" << c;
      if (comps[c].horizon)
        out << ", peripheries=2";
    }
    out << "];\n";
  }
  for (const Edge &e : b.edges())
    out << "  " << node_name(b, e.source) << " -> " << node_name(b, e.target) << " [label=\""
        << b.model().generator_name(e.generator) << "\"];\n";
  out << "}\n";
  return out.str();
}

} // namespace

std::string to_dot(const Ball &ball, const std::string &name) {
  return render(ball, nullptr, name);
}

std::string to_dot(const Subgraph &level, const std::string &name) {
  return render(level.ball(), &level, name);
}

} // namespace fends
