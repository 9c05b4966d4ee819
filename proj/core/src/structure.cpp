#include "recolor/structure.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace recolor {

std::vector<int> FaceStructure::degreeTuple(const Graph& g, int f) const {
  std::vector<int> t;
  t.reserve(faces[f].size());
  for (Vertex v : faces[f]) t.push_back(g.degree(v));
  return t;
}

FaceStructure traceFaces(const Graph& g) {
  if (!g.hasRotation())
    throw std::invalid_argument("traceFaces: rotation system required");
  g.validateRotation();

  FaceStructure fs;
  fs.faces_at.assign(g.idBound(), {});

  // used[directed edge] keyed by (tail, index-of-head-in-adj(tail)).
  std::map<std::pair<Vertex, Vertex>, char> used;

  auto nextInRotation = [&](Vertex b, Vertex a) -> Vertex {
    const auto& rot = g.rotationAt(b);
    for (size_t i = 0; i < rot.size(); ++i)
      if (rot[i] == a) return rot[(i + 1) % rot.size()];
    throw std::logic_error("traceFaces: rotation lookup failed");
  };

  for (Vertex u : g.vertices()) {
    for (Vertex v : g.neighbors(u)) {
      if (used.count({u, v})) continue;
      std::vector<Vertex> walk;
      Vertex a = u, b = v;
      do {
        used[{a, b}] = 1;
        walk.push_back(a);
        Vertex c = nextInRotation(b, a);
        a = b;
        b = c;
      } while (!(a == u && b == v));
      int id = fs.faceCount();
      fs.faces.push_back(walk);
      for (Vertex w : walk) fs.faces_at[w].push_back(id);
    }
  }
  // An isolated vertex bounds a single face with an empty walk; this keeps
  // Euler's identity intact for one-vertex components.
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) fs.faces.push_back({});
  return fs;
}

std::vector<int> canonicalPattern(std::vector<int> tuple) {
  if (tuple.empty()) return tuple;
  std::vector<int> best = tuple;
  auto consider = [&](const std::vector<int>& t) {
    if (t < best) best = t;
  };
  std::vector<int> cur = tuple;
  for (size_t r = 0; r < tuple.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    consider(cur);
  }
  std::reverse(cur.begin(), cur.end());
  for (size_t r = 0; r < tuple.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    consider(cur);
  }
  return best;
}

bool facePatternIs(const Graph& g, const FaceStructure& fs, int f,
                   const std::vector<int>& pattern) {
  if (fs.faceDegree(f) != static_cast<int>(pattern.size())) return false;
  return canonicalPattern(fs.degreeTuple(g, f)) == canonicalPattern(pattern);
}

std::vector<std::vector<Vertex>> alignFacePattern(const Graph& g,
                                                  const FaceStructure& fs,
                                                  int f,
                                                  const std::vector<int>& pattern) {
  std::vector<std::vector<Vertex>> out;
  const auto& walk = fs.faces[f];
  size_t k = walk.size();
  if (k != pattern.size() || k == 0) return out;
  {
    std::set<Vertex> distinct(walk.begin(), walk.end());
    if (distinct.size() != k) return out;  // pinched walk, not a simple face
  }
  auto try_dir = [&](const std::vector<Vertex>& w) {
    for (size_t s = 0; s < k; ++s) {
      bool ok = true;
      for (size_t i = 0; i < k && ok; ++i)
        ok = g.degree(w[(s + i) % k]) == pattern[i];
      if (ok) {
        std::vector<Vertex> a(k);
        for (size_t i = 0; i < k; ++i) a[i] = w[(s + i) % k];
        out.push_back(std::move(a));
      }
    }
  };
  try_dir(walk);
  std::vector<Vertex> rev(walk.rbegin(), walk.rend());
  try_dir(rev);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::array<Vertex, 3>> findTriangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (auto [u, v] : g.edges()) {
    // edges() yields u < v; requiring w > v makes each triangle unique
    for (Vertex w : g.neighbors(v))
      if (w > v && g.hasEdge(u, w)) out.push_back({u, v, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> findFourCycles(const Graph& g) {
  // A 4-cycle a-b-c-d is identified by its diagonal pairs {a,c},{b,d};
  // emit it for the lexicographically smaller diagonal only.
  std::vector<std::vector<Vertex>> out;
  auto verts = g.vertices();
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      Vertex u = verts[i], w = verts[j];
      std::vector<Vertex> common;
      const auto& nu = g.neighbors(u);
      const auto& nw = g.neighbors(w);
      std::set_intersection(nu.begin(), nu.end(), nw.begin(), nw.end(),
                            std::back_inserter(common));
      for (size_t a = 0; a < common.size(); ++a)
        for (size_t b = a + 1; b < common.size(); ++b) {
          std::pair<Vertex, Vertex> d1{u, w}, d2{common[a], common[b]};
          if (d1 < d2) out.push_back({u, common[a], w, common[b]});
        }
    }
  }
  return out;
}

ClassReportPlanar6 classCheckPlanar6(const Graph& g, bool require_rotation) {
  ClassReportPlanar6 rep;
  rep.missing_rotation = require_rotation && !g.hasRotation();
  rep.triangles = findTriangles(g);
  rep.four_cycles = findFourCycles(g);
  for (size_t i = 0; i < rep.four_cycles.size(); ++i) {
    std::set<Vertex> si(rep.four_cycles[i].begin(), rep.four_cycles[i].end());
    for (size_t j = i + 1; j < rep.four_cycles.size(); ++j) {
      bool meet = false;
      for (Vertex v : rep.four_cycles[j])
        if (si.count(v)) {
          meet = true;
          break;
        }
      if (meet) rep.intersecting_pairs.emplace_back(static_cast<int>(i),
                                                    static_cast<int>(j));
    }
  }
  return rep;
}

std::optional<int> girth(const Graph& g) {
  auto verts = g.vertices();
  int best = std::numeric_limits<int>::max();
  for (Vertex r : verts) {
    std::map<Vertex, int> dist;
    std::map<Vertex, Vertex> parent;
    std::queue<Vertex> q;
    dist[r] = 0;
    parent[r] = -1;
    q.push(r);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (2 * dist[v] >= best) continue;
      for (Vertex u : g.neighbors(v)) {
        if (!dist.count(u)) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (parent[v] != u && parent[u] != v) {
          best = std::min(best, dist[v] + dist[u] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

ThreadWalk walkThread(const Graph& g, Vertex v, Vertex first) {
  if (!g.hasEdge(v, first))
    throw std::invalid_argument("walkThread: not an edge");
  ThreadWalk w;
  Vertex prev = v, cur = first;
  while (g.degree(cur) == 2 && cur != v) {
    w.interior.push_back(cur);
    const auto& nb = g.neighbors(cur);
    Vertex nxt = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
  }
  w.far = cur;
  w.closed = (cur == v);
  return w;
}

ThreadProfile threadProfile(const Graph& g, Vertex v) {
  if (g.degree(v) < 3)
    throw std::invalid_argument("threadProfile: vertex of degree < 3");
  ThreadProfile p;
  p.v = v;
  for (Vertex u : g.neighbors(v)) {
    auto w = walkThread(g, v, u);
    p.interior_counts.push_back(static_cast<int>(w.interior.size()));
  }
  std::sort(p.interior_counts.rbegin(), p.interior_counts.rend());
  for (int c : p.interior_counts) p.n2 += c;
  return p;
}

bool isThreeVertexType(const Graph& g, Vertex v, int a, int b, int c) {
  if (g.degree(v) != 3) return false;
  auto p = threadProfile(g, v);
  return p.interior_counts == std::vector<int>{a, b, c};
}

std::map<Vertex, VertexTag> tagVertices(const Graph& g) {
  std::map<Vertex, VertexTag> tags;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) < 3) continue;
    VertexTag t;
    t.v = v;
    for (Vertex u : g.neighbors(v)) {
      auto w = walkThread(g, v, u);
      int len = static_cast<int>(w.interior.size());
      t.profile.push_back(len);
      for (Vertex x : w.interior) t.nearby_two.push_back(x);
      if (len == 1 && !w.closed && g.degree(w.far) >= 3)
        t.weak_neighbors.push_back(w.far);
    }
    std::sort(t.profile.rbegin(), t.profile.rend());
    for (int c : t.profile) t.n2 += c;
    if (g.degree(v) == 3) {
      t.is_3111 = t.profile == std::vector<int>{1, 1, 1};
      t.is_3210 = t.profile == std::vector<int>{2, 1, 0};
    }
    tags[v] = std::move(t);
  }
  for (auto& [v, t] : tags) {
    if (g.degree(v) == 3 && t.profile == std::vector<int>{1, 1, 0}) {
      for (Vertex w : t.weak_neighbors)
        if (tags.count(w) && tags.at(w).is_3111) t.bad_3110 = true;
    }
  }
  return tags;
}

std::vector<SpecialFace> specialFaces(const FaceStructure& fs, const Graph& g,
                                      const std::vector<int>& adjacent_pattern) {
  // Undirected edge -> faces bordering it (each directed edge once).
  std::map<std::pair<Vertex, Vertex>, std::vector<int>> edge_faces;
  for (int f = 0; f < fs.faceCount(); ++f) {
    const auto& walk = fs.faces[f];
    for (size_t i = 0; i < walk.size(); ++i) {
      Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }

  std::vector<SpecialFace> out;
  const std::vector<int> pat{3, 4, 3, 3, 4};
  for (int f = 0; f < fs.faceCount(); ++f) {
    if (fs.faceDegree(f) != 5) continue;
    for (const auto& a : alignFacePattern(g, fs, f, pat)) {
      Vertex v1 = a[0], v2 = a[1], v5 = a[4];
      auto it = edge_faces.find({std::min(v1, v2), std::max(v1, v2)});
      if (it == edge_faces.end()) continue;
      for (int f2 : it->second) {
        if (f2 == f) continue;
        if (!facePatternIs(g, fs, f2, adjacent_pattern)) continue;
        if (alignFacePattern(g, fs, f2, adjacent_pattern).empty()) continue;
        SpecialFace s;
        s.face = f;
        s.four_face = f2;
        s.rich = v5;
        s.poor = v2;
        s.walk = {a[0], a[1], a[2], a[3], a[4]};
        out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecialFace& x, const SpecialFace& y) {
    return std::tie(x.face, x.four_face, x.rich, x.poor) <
           std::tie(y.face, y.four_face, y.rich, y.poor);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SpecialFace& x, const SpecialFace& y) {
                          return std::tie(x.face, x.four_face, x.rich, x.poor) ==
                                 std::tie(y.face, y.four_face, y.rich, y.poor);
                        }),
            out.end());
  return out;
}

}  // namespace recolor
