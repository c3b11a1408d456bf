#pragma once

// Brute-force reference computations. They share no code with the library:
// words are plain strings, grid points are integer tuples, components come
// from a hand-rolled BFS.

#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string reduce(const std::string &raw) {
  std::string out;
  for (char c : raw) {
    if (c == ' ')
      continue;
    if (!out.empty() && out.back() != c &&
        std::tolower(static_cast<unsigned char>(out.back())) ==
            std::tolower(static_cast<unsigned char>(c)))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

inline std::string invert(const std::string &w) {
  std::string out(w.rbegin(), w.rend());
  for (char &c : out)
    c = std::isupper(static_cast<unsigned char>(c))
            ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
            : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

/// Every reduced product of at most max_factors generators and inverses.
inline std::set<std::string> subgroup_products(const std::vector<std::string> &gens,
                                               int max_factors) {
  std::vector<std::string> pool;
  for (const auto &g : gens) {
    pool.push_back(reduce(g));
    pool.push_back(invert(reduce(g)));
  }
  std::set<std::string> seen{""};
  std::vector<std::string> layer{""};
  for (int k = 0; k < max_factors; ++k) {
    std::vector<std::string> next;
    for (const auto &w : layer)
      for (const auto &g : pool) {
        std::string r = reduce(w + g);
        if (seen.insert(r).second)
          next.push_back(r);
      }
    layer = std::move(next);
  }
  return seen;
}

/// An explicit finite graph with a base vertex 0 and BFS distances.
struct Graph {
  std::vector<std::vector<int>> adj;
  std::vector<int> dist;
  int radius = 0;

  int size() const { return static_cast<int>(adj.size()); }
};

/// The ball of radius R in the free group on `rank` letters, vertices
/// enumerated as reduced strings over a/A, b/B, ...
inline Graph free_ball(int rank, int radius, std::vector<std::string> *names = nullptr) {
  std::map<std::string, int> id{{"", 0}};
  std::vector<std::string> words{""};
  Graph g;
  g.radius = radius;
  g.adj.emplace_back();
  g.dist.push_back(0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string w = words[i];
    for (int k = 0; k < rank; ++k)
      for (char c : {static_cast<char>('a' + k), static_cast<char>('A' + k)}) {
        const std::string u = reduce(w + c);
        if (static_cast<int>(u.size()) > radius)
          continue;
        auto [it, fresh] = id.emplace(u, static_cast<int>(words.size()));
        if (fresh) {
          words.push_back(u);
          g.adj.emplace_back();
          g.dist.push_back(static_cast<int>(u.size()));
        }
        g.adj[i].push_back(it->second);
      }
  }
  if (names)
    *names = words;
  return g;
}

/// Lattice points of Z^d with l1 norm <= R, unit steps as edges.
inline Graph grid_ball(int d, int radius, std::vector<std::vector<int>> *points = nullptr) {
  std::vector<std::vector<int>> pts;
  std::vector<int> cur(d, 0);
  std::function<void(int, int)> rec = [&](int axis, int left) {
    if (axis == d) {
      pts.push_back(cur);
      return;
    }
    for (int v = -left; v <= left; ++v) {
      cur[axis] = v;
      rec(axis + 1, left - std::abs(v));
    }
    cur[axis] = 0;
  };
  rec(0, radius);
  // Put the origin first.
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == std::vector<int>(d, 0))
      std::swap(pts[0], pts[i]);
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < pts.size(); ++i)
    id[pts[i]] = static_cast<int>(i);
  Graph g;
  g.radius = radius;
  g.adj.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int norm = 0;
    for (int c : pts[i])
      norm += std::abs(c);
    g.dist.push_back(norm);
    for (int axis = 0; axis < d; ++axis)
      for (int step : {1, -1}) {
        auto q = pts[i];
        q[axis] += step;
        auto it = id.find(q);
        if (it != id.end())
          g.adj[i].push_back(it->second);
      }
  }
  if (points)
    *points = pts;
  return g;
}

/// Component label per vertex of the graph minus `removed` (-1 on removed).
inline std::vector<int> label_complement(const Graph &g, const std::vector<char> &removed,
                                         int *count = nullptr) {
  std::vector<int> label(g.size(), -1);
  int next = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (removed[s] || label[s] != -1)
      continue;
    std::queue<int> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.adj[v])
        if (!removed[u] && label[u] == -1) {
          label[u] = next;
          q.push(u);
        }
    }
    ++next;
  }
  if (count)
    *count = next;
  return label;
}

/// Components of the complement that reach the sphere of radius R.
inline int horizon_components(const Graph &g, const std::vector<char> &removed) {
  int count = 0;
  auto label = label_complement(g, removed, &count);
  std::set<int> hit;
  for (int v = 0; v < g.size(); ++v)
    if (label[v] != -1 && g.dist[v] == g.radius)
      hit.insert(label[v]);
  return static_cast<int>(hit.size());
}

inline int bounded_components(const Graph &g, const std::vector<char> &removed) {
  int count = 0;
  label_complement(g, removed, &count);
  return count - horizon_components(g, removed);
}

/// For nested removed sets S_0 <= ... <= S_top: per level below the top,
/// the number of complement components containing some horizon component
/// of the top level.
inline std::vector<int> surviving_counts(const Graph &g,
                                         const std::vector<std::vector<char>> &levels) {
  const auto top = label_complement(g, levels.back());
  std::map<int, int> witness;
  for (int v = 0; v < g.size(); ++v)
    if (top[v] != -1 && g.dist[v] == g.radius)
      witness.emplace(top[v], v);
  std::vector<int> out;
  for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
    const auto label = label_complement(g, levels[n]);
    std::set<int> seen;
    for (auto [comp, v] : witness)
      seen.insert(label[v]);
    out.push_back(static_cast<int>(seen.size()));
  }
  return out;
}

/// Coset distance of a lattice point from H in the Schreier graph of H,
/// worked out by hand for the subgroups the tests use.
enum class GridSubgroup { Trivial, XAxis, XYPlane, EvenX, XX_Y };

inline int coset_distance(GridSubgroup h, const std::vector<int> &p) {
  auto odd = [](int v) { return v % 2 != 0 ? 1 : 0; };
  switch (h) {
  case GridSubgroup::Trivial: {
    int n = 0;
    for (int c : p)
      n += std::abs(c);
    return n;
  }
  case GridSubgroup::XAxis: { // <x>: distance is the l1 norm of the rest
    int n = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
      n += std::abs(p[i]);
    return n;
  }
  case GridSubgroup::XYPlane:
    return std::abs(p[2]);
  case GridSubgroup::EvenX: { // <x^2>: a cylinder of circumference 2
    int n = odd(p[0]);
    for (std::size_t i = 1; i < p.size(); ++i)
      n += std::abs(p[i]);
    return n;
  }
  case GridSubgroup::XX_Y: // <x^2, y> in Z^2: two cosets
    return odd(p[0]);
  }
  return 0;
}

/// Removed sets p^-1(ball n) of the grid ball, n = 0..top.
inline std::vector<std::vector<char>> grid_levels(const std::vector<std::vector<int>> &points,
                                                  GridSubgroup h, int top) {
  std::vector<std::vector<char>> out;
  for (int n = 0; n <= top; ++n) {
    std::vector<char> removed(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
      removed[i] = coset_distance(h, points[i]) <= n;
    out.push_back(std::move(removed));
  }
  return out;
}

} // namespace oracle
