#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "fends/ball.hpp"
#include "fends/dot.hpp"
#include "fends/error.hpp"
#include "fends/projection.hpp"
#include "fends/subgraph.hpp"
#include "fends/subgroup.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fends;

namespace {

const GroupModel F2 = GroupModel::free_group(2);
const GroupModel Z1 = GroupModel::free_abelian(1);
const GroupModel Z2 = GroupModel::free_abelian(2);
const GroupModel Z3 = GroupModel::free_abelian(3);

SubgroupSpec spec(const GroupModel &m, std::initializer_list<const char *> words) {
  SubgroupSpec s;
  for (const char *w : words)
    s.generators.push_back(m.parse(w));
  return s;
}

VertexId at(const BallPtr &b, const char *w) {
  auto v = b->locate(b->model().parse(w));
  REQUIRE(v.has_value());
  return *v;
}

void check_ball_invariants(const Ball &b) {
  CHECK(b.distance(0) == 0);
  std::set<std::string> keys;
  for (std::size_t i = 0; i < b.vertex_count(); ++i) {
    const auto v = static_cast<VertexId>(i);
    CHECK(b.distance(v) <= b.radius());
    keys.insert(b.key(v).str());
    if (b.distance(v) < b.radius())
      for (int g = 0; g < b.model().generator_count(); ++g) {
        CHECK(b.out_edge(v, g) != kNoId);
        CHECK(b.in_edge(v, g) != kNoId);
      }
  }
  CHECK(keys.size() == b.vertex_count());
  for (const Edge &e : b.edges())
    CHECK(std::abs(b.distance(e.source) - b.distance(e.target)) <= 1);
}

} // namespace

TEST_CASE("cayley balls") {
  const BallPtr z = cayley_ball(Z1, 2);
  CHECK(z->vertex_count() == 5);
  CHECK(z->edge_count() == 4);
  CHECK_FALSE(z->complete());

  const BallPtr star = cayley_ball(F2, 1);
  CHECK(star->vertex_count() == 5);
  CHECK(star->edge_count() == 4);

  const BallPtr f = cayley_ball(F2, 3);
  CHECK(f->vertex_count() == 53);
  const oracle::Graph ref = oracle::free_ball(2, 3);
  CHECK(f->vertex_count() == static_cast<std::size_t>(ref.size()));
  for (int r = 0; r <= 3; ++r) {
    int a = 0, b = 0;
    for (std::size_t v = 0; v < f->vertex_count(); ++v)
      a += f->distance(static_cast<VertexId>(v)) == r;
    for (int d : ref.dist)
      b += d == r;
    CHECK(a == b);
  }

  for (const BallPtr &b : {z, star, f, cayley_ball(Z2, 4), cayley_ball(Z3, 3)})
    check_ball_invariants(*b);

  CHECK(cayley_ball(Z2, 0)->vertex_count() == 1);
  CHECK_THROWS_AS(cayley_ball(F2, 12, 1000), BudgetExceeded);
  CHECK_THROWS_AS(cayley_ball(F2, -1), InvalidArgument);
}

TEST_CASE("grid balls match the lattice count") {
  for (int d = 1; d <= 3; ++d)
    for (int r = 0; r <= 5; ++r) {
      const BallPtr b = cayley_ball(GroupModel::free_abelian(d), r);
      CHECK(b->vertex_count() == static_cast<std::size_t>(oracle::grid_ball(d, r).size()));
    }
}

TEST_CASE("schreier balls") {
  const BallPtr line = schreier_ball(Z2, spec(Z2, {"x"}), 3);
  CHECK(line->vertex_count() == 7);
  for (std::size_t i = 0; i < line->vertex_count(); ++i) {
    const auto v = static_cast<VertexId>(i);
    const EdgeId loop = line->out_edge(v, 0);
    REQUIRE(loop != kNoId);
    CHECK(line->edge(loop).target == v);
  }
  check_ball_invariants(*line);

  const BallPtr two = schreier_ball(Z1, spec(Z1, {"x x"}), 1);
  CHECK(two->vertex_count() == 2);
  CHECK(two->complete());
  CHECK(schreier_ball(Z1, spec(Z1, {"x x"}), 5)->vertex_count() == 2);

  // A trivial subgroup gives the Cayley ball back.
  for (const GroupModel *m : {&F2, &Z2}) {
    const BallPtr s = schreier_ball(*m, SubgroupSpec::trivial(), 3);
    const BallPtr c = cayley_ball(*m, 3);
    CHECK(s->vertex_count() == c->vertex_count());
    CHECK(s->edge_count() == c->edge_count());
    for (std::size_t i = 0; i < s->vertex_count(); ++i) {
      const auto v = static_cast<VertexId>(i);
      const auto w = c->find_key(normal_form(*m, s->key(v)));
      REQUIRE(w.has_value());
      CHECK(c->distance(*w) == s->distance(v));
    }
  }
  CHECK_THROWS_AS(schreier_ball(F2, spec(F2, {"a"}), 20, 100), BudgetExceeded);
}

TEST_CASE("finite index equals the saturated schreier graph size") {
  const std::vector<std::pair<const GroupModel *, SubgroupSpec>> cases = {
      {&F2, spec(F2, {"a a", "b", "a b A"})},
      {&F2, spec(F2, {"a a a", "b", "a b A", "a a b A A"})},
      {&F2, spec(F2, {"a b", "b a", "a a", "b b"})},
      {&Z2, spec(Z2, {"x x y", "y y y"})},
      {&Z1, spec(Z1, {"x x x x x"})},
  };
  for (const auto &[m, s] : cases) {
    const IndexClass idx = subgroup_index(*m, s);
    REQUIRE(idx.is_finite());
    const BallPtr b = schreier_ball(*m, s, 12);
    CHECK(b->complete());
    CHECK(b->vertex_count() == idx.value());
  }
}

TEST_CASE("projection examples") {
  SUBCASE("trivial subgroup") {
    const BallPtr c = cayley_ball(F2, 2);
    const BallPtr s = schreier_ball(F2, SubgroupSpec::trivial(), 2);
    const Projection p = project(c, s);
    std::set<VertexId> images;
    for (std::size_t i = 0; i < c->vertex_count(); ++i) {
      const auto v = static_cast<VertexId>(i);
      images.insert(p.image(v));
      CHECK(s->key(p.image(v)) == c->key(v));
    }
    CHECK(images.size() == s->vertex_count());
  }
  SUBCASE("axis of Z^2") {
    const BallPtr c = cayley_ball(Z2, 3);
    const BallPtr s = schreier_ball(Z2, spec(Z2, {"x"}), 3);
    const Projection p = project(c, s);
    for (const char *w : {"x", "X", ""})
      CHECK(p.image(at(c, w)) == 0);
    CHECK(p.image(at(c, "x y")) == p.image(at(c, "y")));
    CHECK(p.image(at(c, "y")) != 0);
  }
  SUBCASE("free group, cyclic subgroup") {
    const BallPtr c = cayley_ball(F2, 3);
    const BallPtr s = schreier_ball(F2, spec(F2, {"a"}), 3);
    const Projection p = project(c, s);
    CHECK(p.image(at(c, "a a a")) == 0);
    CHECK(p.image(at(c, "b")) == s->edge(s->out_edge(0, 1)).target);
    CHECK(p.image(at(c, "a b")) == p.image(at(c, "b")));
  }
  SUBCASE("cover larger than base") {
    const BallPtr c = cayley_ball(Z2, 4);
    const BallPtr s = schreier_ball(Z2, spec(Z2, {"x"}), 2);
    const Projection p = project(c, s);
    CHECK(p.image(at(c, "y y y")) == kNoId);
    CHECK(p.image(at(c, "x x x y")) != kNoId);
  }
  SUBCASE("subgroups must nest") {
    const BallPtr c = schreier_ball(Z2, spec(Z2, {"y"}), 3);
    const BallPtr s = schreier_ball(Z2, spec(Z2, {"x"}), 3);
    CHECK_THROWS_AS(project(c, s), InconsistentBalls);
  }
}

TEST_CASE("projection is a local isomorphism") {
  const std::vector<std::pair<const GroupModel *, SubgroupSpec>> cases = {
      {&Z2, spec(Z2, {"x"})},
      {&Z2, spec(Z2, {"x x"})},
      {&Z3, spec(Z3, {"x", "y"})},
      {&F2, spec(F2, {"a"})},
      {&F2, spec(F2, {"a a", "b"})},
  };
  const int R = 4;
  for (const auto &[m, s] : cases) {
    const BallPtr c = cayley_ball(*m, R);
    const BallPtr b = schreier_ball(*m, s, R);
    const Projection p = project(c, b);
    for (std::size_t i = 0; i < c->vertex_count(); ++i) {
      const auto v = static_cast<VertexId>(i);
      if (c->distance(v) >= R - 1)
        continue;
      for (int g = 0; g < m->generator_count(); ++g) {
        CHECK(p.image_edge(c->out_edge(v, g)) == b->out_edge(p.image(v), g));
        CHECK(p.image_edge(c->in_edge(v, g)) == b->in_edge(p.image(v), g));
      }
    }
  }
}

TEST_CASE("preimages") {
  const BallPtr c = cayley_ball(Z2, 4);
  const BallPtr s = schreier_ball(Z2, spec(Z2, {"x"}), 4);
  const Projection p = project(c, s);
  const Subgraph axis = preimage(p, Subgraph::induced(s, std::vector<VertexId>{0}));
  std::set<std::string> got;
  for (VertexId v : axis.vertex_list())
    got.insert(c->key(v).str());
  CHECK(got == std::set<std::string>{"1", "a", "a a", "a a a", "a a a a", "A", "A A", "A A A", "A A A A"});
  CHECK(axis.edge_count() == 8);

  CHECK(preimage(p, Subgraph::whole(s)).vertex_count() == c->vertex_count());

  const BallPtr f = cayley_ball(F2, 3);
  const Projection id = project(f, schreier_ball(F2, SubgroupSpec::trivial(), 3));
  const Subgraph lvl = Subgraph::metric_ball(id.base(), 2);
  const Subgraph pre = preimage(id, lvl);
  CHECK(pre.vertex_count() == lvl.vertex_count());
  CHECK(pre.edge_count() == lvl.edge_count());
}

TEST_CASE("deck invariance of preimages") {
  const std::vector<std::tuple<const GroupModel *, SubgroupSpec, std::vector<const char *>>>
      cases = {
          {&Z2, spec(Z2, {"x"}), {"x", "X X"}},
          {&F2, spec(F2, {"a"}), {"a", "A A"}},
          {&F2, spec(F2, {"a a", "b"}), {"b", "a a", "A A B"}},
      };
  const int R = 7;
  for (const auto &[m, s, hs] : cases) {
    const BallPtr c = cayley_ball(*m, R);
    const BallPtr b = schreier_ball(*m, s, R);
    const Projection p = project(c, b);
    for (int n = 0; n <= 3; ++n) {
      const Subgraph pre = preimage(p, Subgraph::metric_ball(b, n));
      for (const char *hw : hs) {
        const Word h = m->parse(hw);
        REQUIRE(static_cast<int>(h.size()) + n < R);
        for (VertexId v : pre.vertex_list()) {
          if (c->distance(v) + static_cast<int>(h.size()) > R)
            continue;
          const auto t = c->locate(h * c->key(v));
          REQUIRE(t.has_value());
          CHECK(pre.has_vertex(*t));
        }
      }
    }
  }
}

TEST_CASE("CW calculus examples") {
  // Z ball of radius 1 is the path X - 1 - x.
  const BallPtr path = cayley_ball(Z1, 1);
  const VertexId mid = at(path, "");
  const Subgraph a = Subgraph::induced(path, std::vector<VertexId>{mid});

  const Subgraph comp = cw_complement(path, a);
  CHECK(comp.vertex_count() == 2);
  CHECK(comp.edge_count() == 0);
  CHECK(cw_neighborhood(path, a) == Subgraph::whole(path));
  CHECK(bridge_edges(path, a).size() == 2);

  CHECK(cw_complement(path, Subgraph::empty(path)) == Subgraph::whole(path));
  CHECK(cw_neighborhood(path, Subgraph::empty(path)).vertex_count() == 0);
  CHECK(bridge_edges(path, Subgraph::whole(path)).empty());

  // Schreier graph of <x^4> in Z: a 4-cycle.
  const BallPtr cycle = schreier_ball(Z1, spec(Z1, {"x x x x"}), 2);
  REQUIRE(cycle->vertex_count() == 4);
  REQUIRE(cycle->edge_count() == 4);
  const Subgraph c0 = cw_complement(cycle, Subgraph::induced(cycle, std::vector<VertexId>{0}));
  CHECK(c0.vertex_count() == 3);
  CHECK(c0.edge_count() == 2);
  CHECK(components(c0).size() == 1);

  const VertexId one = at(cycle, "x");
  const Subgraph pair = Subgraph::induced(cycle, std::vector<VertexId>{0, one});
  REQUIRE(pair.edge_count() == 1);
  CHECK(bridge_edges(cycle, pair).size() == 2);

  const BallPtr star = cayley_ball(F2, 1);
  const Subgraph leaf = Subgraph::induced(star, std::vector<VertexId>{at(star, "a")});
  const Subgraph n = cw_neighborhood(star, leaf);
  CHECK(n.vertex_count() == 2);
  CHECK(n.edge_count() == 1);
  CHECK(n.has_vertex(0));
}

TEST_CASE("CW calculus on random subgraphs") {
  std::mt19937 rng(2024);
  const std::vector<BallPtr> balls = {cayley_ball(Z2, 4), cayley_ball(F2, 3),
                                      schreier_ball(Z2, spec(Z2, {"x x"}), 4),
                                      schreier_ball(F2, spec(F2, {"a"}), 3)};
  for (int i = 0; i < 400; ++i) {
    const BallPtr &g = balls[i % balls.size()];
    const Subgraph a = testing_support::random_subgraph(g, 0.4, 0.6, rng);
    CHECK(testing_support::check_calculus(g, a) == "");
  }
}

TEST_CASE("components") {
  const BallPtr z = cayley_ball(Z1, 3);
  const auto two = components(cw_complement(z, Subgraph::induced(z, std::vector<VertexId>{0})));
  REQUIRE(two.size() == 2);
  CHECK(two[0].horizon);
  CHECK(two[1].horizon);

  const BallPtr tri = schreier_ball(Z1, spec(Z1, {"x x x"}), 3);
  REQUIRE(tri->complete());
  const auto one = components(cw_complement(tri, Subgraph::induced(tri, std::vector<VertexId>{0})));
  REQUIRE(one.size() == 1);
  CHECK_FALSE(one[0].horizon);

  const BallPtr f = cayley_ball(F2, 3);
  const auto twelve = components(cw_complement(f, Subgraph::metric_ball(f, 1)));
  CHECK(twelve.size() == 12);
  for (const Component &c : twelve)
    CHECK(c.horizon);

  // Oracle: BFS on reduced strings, ball of radius 1 removed.
  const oracle::Graph ref = oracle::free_ball(2, 3);
  std::vector<char> removed(ref.size());
  for (int v = 0; v < ref.size(); ++v)
    removed[v] = ref.dist[v] <= 1;
  CHECK(oracle::horizon_components(ref, removed) == 12);

  // A vertex cut off inside the ball is not on the horizon.
  const BallPtr g = cayley_ball(Z2, 3);
  const Subgraph ring = Subgraph::induced(g, [&](VertexId v) { return g->distance(v) == 1; });
  const auto parts = components(cw_complement(g, ring));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].vertices == std::vector<VertexId>{0});
  CHECK_FALSE(parts[0].horizon);
  CHECK(parts[1].horizon);
}

TEST_CASE("shrinking a subgraph never merges components") {
  std::mt19937 rng(99);
  const BallPtr g = cayley_ball(Z2, 5);
  for (int i = 0; i < 100; ++i) {
    const Subgraph s = testing_support::random_subgraph(g, 0.7, 0.8, rng);
    std::bernoulli_distribution keep(0.8);
    std::vector<std::uint8_t> verts = s.vertex_mask(), edges = s.edge_mask();
    for (auto &v : verts)
      v = v && keep(rng);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge &edge = g->edge(static_cast<EdgeId>(e));
      edges[e] = edges[e] && verts[edge.source] && verts[edge.target] && keep(rng);
    }
    const Subgraph t(g, verts, edges);
    REQUIRE(t.is_subgraph_of(s));
    const auto big = components(s);
    const auto labels = component_labels(s, big);
    for (const Component &c : components(t))
      for (VertexId v : c.vertices)
        CHECK(labels[v] == labels[c.vertices.front()]);
  }
}

TEST_CASE("subgraph validation") {
  const BallPtr g = cayley_ball(Z1, 2);
  std::vector<std::uint8_t> verts(g->vertex_count(), 0), edges(g->edge_count(), 1);
  CHECK_THROWS_AS(Subgraph(g, verts, edges), InvalidArgument);
  CHECK_THROWS_AS(Subgraph(g, std::vector<std::uint8_t>(1), std::vector<std::uint8_t>(1)),
                  InvalidArgument);
  CHECK(Subgraph::metric_ball(g, 1).vertex_count() == 3);
  CHECK(Subgraph::metric_ball(g, 1).is_subgraph_of(Subgraph::whole(g)));
}

TEST_CASE("dot export") {
  const BallPtr f = cayley_ball(F2, 2);
  const std::string dot = to_dot(*f, "f2");
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find("[dist=") != std::string::npos)
      ++nodes;
    if (line.find(" -> ") != std::string::npos)
      ++edges;
  }
  CHECK(nodes == 17);
  CHECK(edges == 16);
  CHECK(dot.find("\"1\" [dist=0") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"ab\" [label=\"b\"]") != std::string::npos);

  const std::string coloured = to_dot(Subgraph::metric_ball(f, 0), "f2");
  CHECK(coloured.find("component=3") != std::string::npos);
  CHECK(coloured.find("peripheries=2") != std::string::npos);
}
