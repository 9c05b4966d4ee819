#include "recolor/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

namespace recolor {
namespace {

struct Codec {
  std::vector<Vertex> verts;
  std::vector<long long> radix;  // radix[i] = product of list sizes before i
  const ListAssignment* L;

  Codec(const Graph& g, const ListAssignment& lists) : L(&lists) {
    verts = g.vertices();
    radix.resize(verts.size());
    long long r = 1;
    for (size_t i = 0; i < verts.size(); ++i) {
      radix[i] = r;
      r *= std::max(1, lists.size(verts[i]));
    }
  }

  long long encode(const Coloring& c) const {
    long long code = 0;
    for (size_t i = 0; i < verts.size(); ++i) {
      const auto& list = L->at(verts[i]);
      auto it = std::lower_bound(list.begin(), list.end(), c.at(verts[i]));
      if (it == list.end() || *it != c.at(verts[i]))
        throw std::invalid_argument("oracle: coloring is off-list");
      code += radix[i] * (it - list.begin());
    }
    return code;
  }
};

}  // namespace

long long colorSpaceSize(const Graph& g, const ListAssignment& L, long long clamp) {
  long long p = 1;
  for (Vertex v : g.vertices()) {
    p *= std::max(1, L.size(v));
    if (p > clamp) return clamp + 1;
  }
  return p;
}

static void checkCap(const Graph& g, const ListAssignment& L,
                     const OracleLimits& limits) {
  if (colorSpaceSize(g, L, limits.max_states) > limits.max_states)
    throw StateCapError("oracle: color space exceeds state cap");
}

static void enumerate(const Graph& g, const ListAssignment& L,
                      const std::function<void(const Coloring&)>& fn) {
  auto verts = g.vertices();
  Coloring c(g.idBound());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == verts.size()) {
      fn(c);
      return;
    }
    Vertex v = verts[i];
    for (Color col : L.at(v)) {
      bool ok = true;
      for (Vertex u : g.neighbors(v))
        if (c.at(u) == col) {
          ok = false;
          break;
        }
      if (!ok) continue;
      c.set(v, col);
      rec(i + 1);
      c.set(v, -1);
    }
  };
  rec(0);
}

long long countColorings(const Graph& g, const ListAssignment& L,
                         const OracleLimits& limits) {
  checkCap(g, L, limits);
  long long n = 0;
  enumerate(g, L, [&](const Coloring&) { ++n; });
  return n;
}

void forEachColoring(const Graph& g, const ListAssignment& L,
                     const std::function<void(const Coloring&)>& fn,
                     const OracleLimits& limits) {
  checkCap(g, L, limits);
  enumerate(g, L, fn);
}

std::optional<long long> bfsDistance(const Graph& g, const ListAssignment& L,
                                     const Coloring& from, const Coloring& to,
                                     const OracleLimits& limits) {
  checkCap(g, L, limits);
  if (!properColoring(g, from) || !properColoring(g, to))
    throw std::invalid_argument("bfsDistance: endpoints must be proper");
  Codec codec(g, L);
  long long src = codec.encode(from), dst = codec.encode(to);
  if (src == dst) return 0;

  std::unordered_map<long long, long long> dist;
  dist[src] = 0;
  std::deque<std::pair<long long, Coloring>> queue{{src, from}};
  while (!queue.empty()) {
    auto [code, col] = queue.front();
    queue.pop_front();
    long long d = dist[code];
    for (Vertex v : codec.verts) {
      for (Color c : L.at(v)) {
        if (c == col.at(v)) continue;
        bool ok = true;
        for (Vertex u : g.neighbors(v))
          if (col.at(u) == c) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Coloring nxt = col;
        nxt.set(v, c);
        long long ncode = codec.encode(nxt);
        if (dist.count(ncode)) continue;
        dist[ncode] = d + 1;
        if (ncode == dst) return d + 1;
        if (static_cast<long long>(dist.size()) > limits.max_states)
          throw StateCapError("bfsDistance: state cap exceeded");
        queue.emplace_back(ncode, std::move(nxt));
      }
    }
  }
  return std::nullopt;
}

KGoodResult kgoodReachable(const Graph& g, const ListAssignment& L,
                           const Coloring& alpha, const Coloring& beta, int k,
                           const OracleLimits& limits) {
  checkCap(g, L, limits);
  if (!properColoring(g, alpha) || !properColoring(g, beta))
    throw std::invalid_argument("kgoodReachable: endpoints must be proper");
  if (k < 0) throw std::invalid_argument("kgoodReachable: negative budget");

  Codec codec(g, L);
  auto verts = codec.verts;
  std::vector<int> pos(g.idBound(), -1);
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);

  using Counts = std::vector<unsigned char>;
  struct State {
    long long code;
    Counts counts;
    Coloring col;
    long long parent;
    Step step;
  };

  std::vector<State> states;
  std::map<long long, std::vector<long long>> pareto;  // code -> state ids

  auto dominatedByStored = [&](long long code, const Counts& c) {
    auto it = pareto.find(code);
    if (it == pareto.end()) return false;
    for (long long id : it->second) {
      const Counts& s = states[id].counts;
      bool le = true;
      for (size_t i = 0; i < c.size(); ++i)
        if (s[i] > c[i]) {
          le = false;
          break;
        }
      if (le) return true;
    }
    return false;
  };
  auto store = [&](long long code, State&& st) -> long long {
    auto& ids = pareto[code];
    ids.erase(std::remove_if(ids.begin(), ids.end(),
                             [&](long long id) {
                               const Counts& s = states[id].counts;
                               for (size_t i = 0; i < st.counts.size(); ++i)
                                 if (st.counts[i] > s[i]) return false;
                               return true;  // st dominates stored
                             }),
              ids.end());
    states.push_back(std::move(st));
    long long id = static_cast<long long>(states.size()) - 1;
    ids.push_back(id);
    return id;
  };

  long long dst = codec.encode(beta);
  KGoodResult res;

  State init{codec.encode(alpha), Counts(verts.size(), 0), alpha, -1, {-1, -1}};
  long long src_id = store(init.code, std::move(init));
  if (states[src_id].code == dst) {
    res.answer = KGood::Yes;
    res.witness = RecolorSequence{alpha, {}, k};
    res.states = 1;
    return res;
  }

  std::deque<long long> queue{src_id};
  while (!queue.empty()) {
    long long id = queue.front();
    queue.pop_front();
    {
      // A queued state may have been displaced by a dominating one.
      const auto& ids = pareto[states[id].code];
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    }
    Coloring col = states[id].col;
    Counts counts = states[id].counts;
    for (Vertex v : verts) {
      if (counts[pos[v]] >= k) continue;
      for (Color c : L.at(v)) {
        if (c == col.at(v)) continue;
        bool ok = true;
        for (Vertex u : g.neighbors(v))
          if (col.at(u) == c) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Coloring nxt = col;
        nxt.set(v, c);
        Counts ncounts = counts;
        ++ncounts[pos[v]];
        long long ncode = codec.encode(nxt);
        if (dominatedByStored(ncode, ncounts)) continue;
        State st{ncode, ncounts, nxt, id, {v, c}};
        long long nid = store(ncode, std::move(st));
        if (ncode == dst) {
          std::vector<Step> steps;
          for (long long cur = nid; states[cur].parent >= 0;
               cur = states[cur].parent)
            steps.push_back(states[cur].step);
          std::reverse(steps.begin(), steps.end());
          res.answer = KGood::Yes;
          res.witness = RecolorSequence{alpha, std::move(steps), k};
          res.states = static_cast<long long>(states.size());
          return res;
        }
        if (static_cast<long long>(states.size()) > limits.max_states) {
          res.answer = KGood::Unknown;
          res.states = static_cast<long long>(states.size());
          return res;
        }
        queue.push_back(nid);
      }
    }
  }
  res.answer = KGood::No;
  res.states = static_cast<long long>(states.size());
  return res;
}

}  // namespace recolor
