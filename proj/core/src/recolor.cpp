#include "recolor/recolor.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace recolor {

ListAssignment ListAssignment::uniform(int id_bound, std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  ListAssignment L(id_bound);
  for (auto& l : L.lists) l = colors;
  return L;
}

void ListAssignment::set(Vertex v, std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  lists.at(v) = std::move(colors);
}

const std::vector<Color>& ListAssignment::at(Vertex v) const {
  return lists.at(v);
}

bool ListAssignment::has(Vertex v, Color c) const {
  const auto& l = at(v);
  return std::binary_search(l.begin(), l.end(), c);
}

Coloring Coloring::restrictedTo(const Graph& g) const {
  Coloring out(idBound());
  for (Vertex v : g.vertices()) out.color[v] = color[v];
  return out;
}

bool Coloring::sameOn(const Graph& g, const Coloring& other) const {
  for (Vertex v : g.vertices())
    if (color[v] != other.color[v]) return false;
  return true;
}

Coloring RecolorSequence::end() const {
  Coloring c = start;
  for (const Step& s : steps) c.color[s.v] = s.to;
  return c;
}

std::vector<int> recolorCounts(const RecolorSequence& seq, int id_bound) {
  std::vector<int> counts(id_bound, 0);
  for (const Step& s : seq.steps)
    if (s.v >= 0 && s.v < id_bound) ++counts[s.v];
  return counts;
}

bool properColoring(const Graph& g, const Coloring& c) {
  for (Vertex v : g.vertices())
    if (c.at(v) < 0) return false;
  for (auto [u, v] : g.edges())
    if (c.at(u) == c.at(v)) return false;
  return true;
}

bool respectsLists(const Graph& g, const ListAssignment& L, const Coloring& c) {
  for (Vertex v : g.vertices())
    if (!L.has(v, c.at(v))) return false;
  return true;
}

int VerifyReport::maxCount() const {
  int m = 0;
  for (int c : recolor_counts) m = std::max(m, c);
  return m;
}

VerifyReport verify(const Graph& g, const ListAssignment& L,
                    const RecolorSequence& seq,
                    const std::optional<Coloring>& target,
                    std::optional<int> budget) {
  VerifyReport rep;
  rep.recolor_counts.assign(g.idBound(), 0);
  Coloring cur = seq.start;
  rep.end = cur;

  auto fail = [&](int idx, std::string why) {
    rep.first_violation = Violation{idx, std::move(why)};
    rep.ok = false;
    rep.end = cur;
    return rep;
  };

  for (Vertex v : g.vertices()) {
    if (cur.at(v) < 0) return fail(-1, "start leaves vertex " + std::to_string(v) + " uncolored");
    if (!L.has(v, cur.at(v)))
      return fail(-1, "start color of vertex " + std::to_string(v) + " not in its list");
  }
  for (auto [u, v] : g.edges())
    if (cur.at(u) == cur.at(v))
      return fail(-1, "start is not proper on edge " + std::to_string(u) + "-" +
                          std::to_string(v));

  std::optional<int> k = budget ? budget : seq.budget;
  for (size_t i = 0; i < seq.steps.size(); ++i) {
    const Step& st = seq.steps[i];
    int idx = static_cast<int>(i);
    if (!g.contains(st.v))
      return fail(idx, "step recolors unknown vertex " + std::to_string(st.v));
    if (!L.has(st.v, st.to))
      return fail(idx, "step color " + std::to_string(st.to) + " not in list of " +
                           std::to_string(st.v));
    if (cur.at(st.v) == st.to)
      return fail(idx, "step does not change the color of " + std::to_string(st.v));
    for (Vertex u : g.neighbors(st.v))
      if (cur.at(u) == st.to)
        return fail(idx, "edge " + std::to_string(st.v) + "-" + std::to_string(u) +
                             " monochromatic after step");
    cur.color[st.v] = st.to;
    ++rep.recolor_counts[st.v];
    if (k && rep.recolor_counts[st.v] > *k)
      return fail(idx, "vertex " + std::to_string(st.v) + " recolored more than " +
                           std::to_string(*k) + " times");
  }
  if (target && !cur.sameOn(g, *target))
    return fail(static_cast<int>(seq.steps.size()), "end coloring differs from target");
  rep.ok = true;
  rep.end = cur;
  return rep;
}

long long keyLemmaCap(long long t, long long slack) {
  if (slack <= 0) throw SlackError("keyLemmaCap: nonpositive slack");
  return (t + slack - 1) / slack + 1;
}

namespace {

struct Scheduler {
  const Graph& g;
  const ListAssignment& L;
  std::vector<Vertex> members;
  const RecolorSequence& sigma;
  const Coloring& alpha;
  const Coloring& beta;

  std::vector<char> is_member;
  std::vector<Color> cur;
  std::vector<Step> out;
  std::map<Vertex, int> counts;
  // adoptions[u][c]: sigma step indices where an outside neighbor of u
  // adopts color c.
  std::map<Vertex, std::map<Color, std::vector<int>>> adoptions;

  Scheduler(const Graph& g_, const ListAssignment& L_, std::vector<Vertex> mem,
            const RecolorSequence& s, const Coloring& a, const Coloring& b)
      : g(g_), L(L_), members(std::move(mem)), sigma(s), alpha(a), beta(b) {
    is_member.assign(g.idBound(), 0);
    for (Vertex u : members) is_member[u] = 1;
    cur = alpha.color;
    for (Vertex u : members) {
      std::set<Vertex> outside;
      for (Vertex x : g.neighbors(u))
        if (!is_member[x]) outside.insert(x);
      auto& by_color = adoptions[u];
      for (size_t i = 0; i < sigma.steps.size(); ++i)
        if (outside.count(sigma.steps[i].v))
          by_color[sigma.steps[i].to].push_back(static_cast<int>(i));
      counts[u] = 0;
    }
  }

  int nextAdoption(Vertex u, Color c, int after) const {
    const auto& by_color = adoptions.at(u);
    auto it = by_color.find(c);
    if (it == by_color.end()) return std::numeric_limits<int>::max();
    const auto& v = it->second;
    auto p = std::upper_bound(v.begin(), v.end(), after);
    if (p == v.end()) return std::numeric_limits<int>::max();
    return *p;
  }

  std::vector<Color> available(Vertex u) const {
    std::vector<Color> a;
    for (Color c : L.at(u)) {
      if (c == cur[u]) continue;
      bool clash = false;
      for (Vertex x : g.neighbors(u))
        if (cur[x] == c) {
          clash = true;
          break;
        }
      if (!clash) a.push_back(c);
    }
    return a;
  }

  void move(Vertex u, Color c) {
    out.push_back({u, c});
    cur[u] = c;
    ++counts[u];
  }

  // Forced move of member u just before sigma step `idx`: pick the free
  // color whose next outside adoption is furthest away.
  void forcedMove(Vertex u, int idx) {
    auto a = available(u);
    if (a.empty()) throw std::logic_error("groupInsert: no color available");
    Color best = a.front();
    int best_next = -1;
    for (Color c : a) {
      int nxt = nextAdoption(u, c, idx);  // step idx adopts cur[u], never c
      if (nxt > best_next) {
        best_next = nxt;
        best = c;
      }
    }
    move(u, best);
  }

  void replay() {
    for (size_t i = 0; i < sigma.steps.size(); ++i) {
      const Step& st = sigma.steps[i];
      for (Vertex u : members)
        if (cur[u] == st.to && g.hasEdge(u, st.v))
          forcedMove(u, static_cast<int>(i));
      out.push_back(st);
      cur[st.v] = st.to;
    }
  }

  // Brings members to beta along the forest they induce; a child sitting on
  // its parent's target is bounced once (to its own target when possible).
  void finishTree(Vertex u, Vertex parent) {
    std::vector<Vertex> kids;
    for (Vertex x : g.neighbors(u))
      if (is_member[x] && x != parent) kids.push_back(x);
    for (Vertex c : kids) {
      if (cur[c] != beta.at(u)) continue;
      auto a = available(c);
      if (a.empty()) throw std::logic_error("groupInsert: stuck bounce");
      Color pick = a.front();
      for (Color x : a)
        if (x == beta.at(c)) pick = x;
      move(c, pick);
    }
    if (cur[u] != beta.at(u)) {
      for (Vertex x : g.neighbors(u))
        if (cur[x] == beta.at(u))
          throw std::logic_error("groupInsert: finish blocked at " + std::to_string(u));
      move(u, beta.at(u));
    }
    for (Vertex c : kids) finishTree(c, u);
  }

  void finish(Vertex root_hint) {
    std::set<Vertex> done;
    std::vector<Vertex> roots;
    if (root_hint >= 0) roots.push_back(root_hint);
    for (Vertex u : members) roots.push_back(u);
    for (Vertex r : roots) {
      if (done.count(r)) continue;
      // collect r's member-tree
      std::vector<Vertex> stack{r};
      std::set<Vertex> tree;
      tree.insert(r);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex x : g.neighbors(v))
          if (is_member[x] && !tree.count(x)) {
            tree.insert(x);
            stack.push_back(x);
          }
      }
      finishTree(r, -1);
      for (Vertex v : tree) done.insert(v);
    }
  }
};

void checkAcyclicMembers(const Graph& g, const std::vector<Vertex>& members) {
  std::set<Vertex> mem(members.begin(), members.end());
  int inner_edges = 0;
  for (Vertex u : members)
    for (Vertex v : g.neighbors(u))
      if (mem.count(v) && u < v) ++inner_edges;
  // a forest on |mem| vertices has < |mem| edges in every component union
  std::set<Vertex> seen;
  int comps = 0;
  for (Vertex u : members) {
    if (seen.count(u)) continue;
    ++comps;
    std::vector<Vertex> stack{u};
    seen.insert(u);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex x : g.neighbors(v))
        if (mem.count(x) && !seen.count(x)) {
          seen.insert(x);
          stack.push_back(x);
        }
    }
  }
  if (inner_edges != static_cast<int>(mem.size()) - comps)
    throw std::invalid_argument("groupInsert: members must induce a forest");
}

}  // namespace

InsertionResult groupInsert(const Graph& g, const ListAssignment& L,
                            const std::vector<Vertex>& members,
                            const RecolorSequence& sigma_prime,
                            const Coloring& alpha, const Coloring& beta,
                            Vertex finish_root) {
  std::set<Vertex> mem(members.begin(), members.end());
  if (mem.size() != members.size())
    throw std::invalid_argument("groupInsert: duplicate member");
  std::vector<Vertex> ordered(mem.begin(), mem.end());
  for (Vertex u : members) {
    if (!g.contains(u))
      throw std::invalid_argument("groupInsert: member not in graph");
    if (L.size(u) < g.degree(u) + 2)
      throw SlackError("groupInsert: |L(" + std::to_string(u) + ")| < d+2");
    if (!L.has(u, alpha.at(u)) || !L.has(u, beta.at(u)))
      throw std::invalid_argument("groupInsert: endpoint color off-list");
  }
  if (!properColoring(g, alpha) || !properColoring(g, beta))
    throw std::invalid_argument("groupInsert: endpoints not proper on g");
  checkAcyclicMembers(g, members);

  Scheduler sched(g, L, ordered, sigma_prime, alpha, beta);
  sched.replay();
  sched.finish(finish_root);

  InsertionResult res;
  res.seq.start = alpha;
  res.seq.steps = std::move(sched.out);
  res.counts = std::move(sched.counts);
  return res;
}

RecolorSequence keyLemmaExtend(const Graph& g, const ListAssignment& L, Vertex v,
                               const RecolorSequence& sigma_prime, Color alpha_v,
                               Color beta_v) {
  long long slack = L.size(v) - g.degree(v) - 1;
  if (slack <= 0)
    throw SlackError("keyLemmaExtend: |L(v)| - d(v) - 1 <= 0 at vertex " +
                     std::to_string(v));
  Coloring alpha = sigma_prime.start;
  alpha.color[v] = alpha_v;
  Coloring beta = sigma_prime.end();
  beta.color[v] = beta_v;
  auto res = groupInsert(g, L, {v}, sigma_prime, alpha, beta, v);

  long long t = 0;
  for (const Step& s : sigma_prime.steps)
    if (g.hasEdge(v, s.v)) ++t;
  if (res.counts.at(v) > keyLemmaCap(t, slack))
    throw std::logic_error("keyLemmaExtend: cap exceeded (bug)");
  return std::move(res.seq);
}

ThreadExtension extend2Thread(const Graph& h, const ListAssignment& L,
                              const std::array<Vertex, 4>& thread,
                              const RecolorSequence& sigma_prime,
                              const Coloring& alpha, const Coloring& beta, int k) {
  auto [v1, v2, v3, v4] = thread;
  if (!h.hasEdge(v1, v2) || !h.hasEdge(v2, v3) || !h.hasEdge(v3, v4))
    throw std::invalid_argument("extend2Thread: not a path");
  if (h.degree(v2) != 2 || h.degree(v3) != 2)
    throw std::invalid_argument("extend2Thread: interiors must have degree 2");

  int s = 0;
  for (const Step& st : sigma_prime.steps)
    if (st.v == v4) ++s;
  if (k >= 0 && s > k - 3)
    throw BudgetError("extend2Thread: endpoint recolored " + std::to_string(s) +
                      " times, needs <= k-3 = " + std::to_string(k - 3));

  auto res = groupInsert(h, L, {v2, v3}, sigma_prime, alpha, beta, v3);
  ThreadExtension ext;
  ext.s = s;
  ext.counts = res.counts;
  ext.seq = std::move(res.seq);
  if (ext.counts.at(v3) > s + 3)
    throw std::logic_error("extend2Thread: v3 cap exceeded (bug)");
  return ext;
}

ThreadExtension extend3Thread(const Graph& h, const ListAssignment& L,
                              const std::array<Vertex, 5>& thread,
                              const RecolorSequence& sigma_prime,
                              const Coloring& alpha, const Coloring& beta, int k) {
  (void)k;
  auto [v1, v2, v3, v4, v5] = thread;
  if (!h.hasEdge(v1, v2) || !h.hasEdge(v2, v3) || !h.hasEdge(v3, v4) ||
      !h.hasEdge(v4, v5))
    throw std::invalid_argument("extend3Thread: not a path");
  if (h.degree(v2) != 2 || h.degree(v3) != 2 || h.degree(v4) != 2)
    throw std::invalid_argument("extend3Thread: interiors must have degree 2");

  auto res = groupInsert(h, L, {v2, v3, v4}, sigma_prime, alpha, beta, v3);
  ThreadExtension ext;
  for (const Step& st : sigma_prime.steps)
    if (st.v == v5) ++ext.s;
  ext.counts = res.counts;
  ext.seq = std::move(res.seq);
  if (ext.counts.at(v3) > 4)
    throw std::logic_error("extend3Thread: center cap exceeded (bug)");
  return ext;
}

}  // namespace recolor
