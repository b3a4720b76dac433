#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "bimoore/bipartite_graph.hpp"

namespace bimoore {

// Distances, diameter and girth by plain breadth-first search over the union
// of both sides. Global vertex ids: rows are 0..n1-1, columns n1..n1+n2-1.
// Infinite values (disconnected graphs, forests) are reported as nullopt.

namespace detail {

inline std::vector<std::vector<int>> adjacency(const BipartiteGraph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (int i = 0; i < g.n1(); ++i)
    for (int j : g.row_neighbors(i)) {
      adj[i].push_back(g.n1() + j);
      adj[g.n1() + j].push_back(i);
    }
  return adj;
}

}  // namespace detail

/// BFS distances from a global vertex id; unreachable entries are -1.
inline std::vector<int> bfs_distances(const BipartiteGraph& g, int source) {
  auto adj = detail::adjacency(g);
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

inline bool is_connected(const BipartiteGraph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

inline std::optional<int> diameter(const BipartiteGraph& g) {
  if (g.order() == 0) return 0;
  auto adj = detail::adjacency(g);
  int n = g.order();
  int diam = 0;
  std::vector<int> dist(n);
  std::vector<int> q(n);
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    dist[src] = 0;
    q[tail++] = src;
    while (head < tail) {
      int u = q[head++];
      for (int v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q[tail++] = v;
        }
    }
    if (tail < n) return std::nullopt;  // some vertex unreachable
    diam = std::max(diam, dist[q[tail - 1]]);
  }
  return diam;
}

/// Shortest cycle length, nullopt for forests. Uses the classic per-source
/// BFS bound: a non-tree edge (u, w) seen from source v closes a cycle of
/// length dist[u] + dist[w] + 1, and the minimum of those over all sources is
/// exact. Bipartite graphs only ever report even values.
inline std::optional<int> girth(const BipartiteGraph& g) {
  auto adj = detail::adjacency(g);
  int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n), q(n);
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    dist[src] = 0;
    parent[src] = -1;
    q[tail++] = src;
    while (head < tail) {
      int u = q[head++];
      if (best > 0 && 2 * dist[u] >= best) break;  // cannot find shorter from here
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q[tail++] = v;
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

struct GraphMetrics {
  std::vector<int> degrees1;
  std::vector<int> degrees2;
  bool connected = false;
  std::optional<int> diameter;  // nullopt = infinite
  std::optional<int> girth;     // nullopt = acyclic
};

inline GraphMetrics metrics(const BipartiteGraph& g) {
  GraphMetrics m;
  m.degrees1 = g.row_degrees();
  m.degrees2 = g.column_degrees();
  m.connected = is_connected(g);
  m.diameter = diameter(g);
  m.girth = girth(g);
  return m;
}

}  // namespace bimoore
