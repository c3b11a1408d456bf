#pragma once

#include <random>

#include "fends/group_model.hpp"
#include "fends/word.hpp"

namespace testing_support {

/// Random raw letters over m's alphabet, reduced on construction.
inline fends::Word random_word(const fends::GroupModel &m, int length, std::mt19937 &rng) {
  std::uniform_int_distribution<int> pick(0, 2 * m.generator_count() - 1);
  std::vector<fends::Letter> raw;
  for (int i = 0; i < length; ++i)
    raw.push_back(fends::Letter::from_code(pick(rng)));
  return fends::Word(raw);
}

} // namespace testing_support

#include <algorithm>
#include <string>

#include "fends/subgraph.hpp"

namespace testing_support {

/// Random subgraph of g: each vertex with probability p, each edge between
/// chosen vertices with probability q. Not induced in general.
inline fends::Subgraph random_subgraph(const fends::BallPtr &g, double p, double q,
                                       std::mt19937 &rng) {
  std::bernoulli_distribution vp(p), ep(q);
  std::vector<std::uint8_t> verts(g->vertex_count()), edges(g->edge_count());
  for (auto &v : verts)
    v = vp(rng);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto &edge = g->edge(static_cast<fends::EdgeId>(e));
    edges[e] = verts[edge.source] && verts[edge.target] && ep(rng);
  }
  return fends::Subgraph(g, std::move(verts), std::move(edges));
}

/// Partition, neighbourhood law and the complement definition, checked
/// edge by edge. Returns an empty string on success, otherwise what broke.
inline std::string check_calculus(const fends::BallPtr &g, const fends::Subgraph &a) {
  using namespace fends;
  const Subgraph comp = cw_complement(g, a);
  const Subgraph nbhd = cw_neighborhood(g, a);
  const std::vector<EdgeId> bridges = bridge_edges(g, a);
  std::vector<char> is_bridge(g->edge_count(), 0);
  for (EdgeId e : bridges)
    is_bridge[e] = 1;

  for (std::size_t i = 0; i < g->vertex_count(); ++i) {
    const auto v = static_cast<VertexId>(i);
    if (a.has_vertex(v) == comp.has_vertex(v))
      return "vertex partition fails at " + std::to_string(i);
  }
  std::vector<char> touched(g->vertex_count(), 0);
  for (std::size_t i = 0; i < g->edge_count(); ++i) {
    const auto e = static_cast<EdgeId>(i);
    const Edge &edge = g->edge(e);
    const bool out_s = !a.has_vertex(edge.source), out_t = !a.has_vertex(edge.target);
    if (comp.has_edge(e) != (out_s && out_t))
      return "complement edge rule fails at " + std::to_string(i);
    const int places = a.has_edge(e) + comp.has_edge(e) + is_bridge[e];
    if (places != 1)
      return "edge partition fails at " + std::to_string(i);
    const bool meets_a = !out_s || !out_t;
    if (nbhd.has_edge(e) != meets_a)
      return "neighbourhood edge rule fails at " + std::to_string(i);
    if (nbhd.has_edge(e) != (a.has_edge(e) || is_bridge[e]))
      return "N(A) != A + bridges at edge " + std::to_string(i);
    if (meets_a)
      touched[edge.source] = touched[edge.target] = 1;
  }
  for (std::size_t i = 0; i < g->vertex_count(); ++i) {
    const auto v = static_cast<VertexId>(i);
    if (nbhd.has_vertex(v) != (a.has_vertex(v) || touched[i]))
      return "neighbourhood vertex rule fails at " + std::to_string(i);
  }
  return {};
}

} // namespace testing_support

#include "fends/projection.hpp"

namespace testing_support {

/// preimage(p, base minus c) against cover minus preimage(p, c), on the
/// cover vertices whose image lies strictly inside the base ball. Compares
/// vertices and the edges between such vertices.
inline std::string check_exchange(const fends::Projection &p, const fends::Subgraph &c) {
  using namespace fends;
  const Ball &cover = *p.cover();
  const Ball &base = *p.base();
  const Subgraph lhs = preimage(p, cw_complement(p.base(), c));
  const Subgraph rhs = cw_complement(p.cover(), preimage(p, c));
  auto inside = [&](VertexId v) {
    const VertexId img = p.image(v);
    return img != kNoId && base.distance(img) < base.radius();
  };
  for (std::size_t i = 0; i < cover.vertex_count(); ++i) {
    const auto v = static_cast<VertexId>(i);
    if (inside(v) && lhs.has_vertex(v) != rhs.has_vertex(v))
      return "vertex " + cover.model().format(cover.key(v));
  }
  for (std::size_t i = 0; i < cover.edge_count(); ++i) {
    const auto e = static_cast<EdgeId>(i);
    const Edge &edge = cover.edge(e);
    if (inside(edge.source) && inside(edge.target) && lhs.has_edge(e) != rhs.has_edge(e))
      return "edge " + std::to_string(i);
  }
  return {};
}

} // namespace testing_support
