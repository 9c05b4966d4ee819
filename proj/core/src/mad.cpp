#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "recolor/structure.hpp"

namespace recolor {
namespace {

// Compact Dinic max-flow with integer capacities. The densest-subgraph
// networks here are tiny, but all arithmetic must stay exact.
struct Dinic {
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, iter;

  explicit Dinic(int n) : g(n), level(n), iter(n) {}

  void addEdge(int a, int b, long long c) {
    g[a].push_back({b, c, static_cast<int>(g[b].size())});
    g[b].push_back({a, 0, static_cast<int>(g[a].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : g[v])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(g[v].size()); ++i) {
      Arc& a = g[v][i];
      if (a.cap > 0 && level[v] < level[a.to]) {
        long long d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          g[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  long long maxflow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max()))
        flow += f;
    }
    return flow;
  }

  std::vector<char> sourceSide(int s) {
    std::vector<char> seen(g.size(), 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : g[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push(a.to);
        }
    }
    return seen;
  }
};

}  // namespace

MadResult mad(const Graph& g) {
  auto verts = g.vertices();
  if (verts.empty()) throw std::invalid_argument("mad: empty graph");
  auto es = g.edges();
  if (es.empty()) return {Rat(0), {verts.front()}};

  std::vector<int> index(g.idBound(), -1);
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  const int n = static_cast<int>(verts.size());
  const int m = static_cast<int>(es.size());

  Rat c(2LL * m, static_cast<long long>(n));
  std::vector<Vertex> witness = verts;

  // Dinkelbach: while some induced H has 2|E(H)|q - p|V(H)| > 0, jump to
  // its ratio. Each jump strictly increases the achieved value.
  const long long INF = std::numeric_limits<long long>::max() / 4;
  for (int guard = 0; guard <= 4 * n * n + 8; ++guard) {
    long long p = c.numerator(), q = c.denominator();
    int S = 0, T = 1 + m + n;
    Dinic net(T + 1);
    for (int e = 0; e < m; ++e) {
      net.addEdge(S, 1 + e, 2 * q);
      net.addEdge(1 + e, 1 + m + index[es[e].first], INF);
      net.addEdge(1 + e, 1 + m + index[es[e].second], INF);
    }
    for (int i = 0; i < n; ++i) net.addEdge(1 + m + i, T, p);

    long long flow = net.maxflow(S, T);
    long long best = 2 * q * m - flow;  // max over H of 2q|E(H)| - p|V(H)|
    if (best <= 0) return {c, witness};

    auto side = net.sourceSide(S);
    std::vector<Vertex> sel;
    for (int i = 0; i < n; ++i)
      if (side[1 + m + i]) sel.push_back(verts[i]);
    long long e_sel = 0;
    for (const auto& [u, v] : es)
      if (side[1 + m + index[u]] && side[1 + m + index[v]]) ++e_sel;
    if (sel.empty() || e_sel == 0)
      throw std::logic_error("mad: degenerate maximizer");
    Rat next(2 * e_sel, static_cast<long long>(sel.size()));
    if (next <= c) throw std::logic_error("mad: ratio failed to increase");
    c = next;
    witness = std::move(sel);
  }
  throw std::logic_error("mad: iteration guard exceeded");
}

}  // namespace recolor
