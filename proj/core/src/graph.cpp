#include "recolor/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace recolor {

Graph::Graph(int id_bound) {
  if (id_bound < 0) throw std::invalid_argument("graph: negative vertex count");
  alive_.assign(id_bound, 1);
  adj_.resize(id_bound);
  live_count_ = id_bound;
}

Graph Graph::fromEdges(int id_bound,
                       const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(id_bound);
  for (auto [u, v] : edges) g.addEdge(u, v);
  return g;
}

void Graph::checkVertex(Vertex v, const char* what) const {
  if (!contains(v))
    throw std::out_of_range(std::string(what) + ": unknown vertex id " +
                            std::to_string(v));
}

void Graph::addEdge(Vertex u, Vertex v) {
  checkVertex(u, "addEdge");
  checkVertex(v, "addEdge");
  if (u == v) throw std::invalid_argument("addEdge: loop at " + std::to_string(u));
  if (hasEdge(u, v))
    throw std::invalid_argument("addEdge: parallel edge " + std::to_string(u) +
                                "-" + std::to_string(v));
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

bool Graph::hasEdge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::degree(Vertex v) const {
  checkVertex(v, "degree");
  return static_cast<int>(adj_[v].size());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  checkVertex(v, "neighbors");
  return adj_[v];
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_count_);
  for (Vertex v = 0; v < idBound(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < idBound(); ++u) {
    if (!alive_[u]) continue;
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  }
  return out;
}

void Graph::setRotation(Vertex v, std::vector<Vertex> order) {
  checkVertex(v, "setRotation");
  if (!rotation_) rotation_.emplace(idBound());
  (*rotation_)[v] = std::move(order);
}

const std::vector<Vertex>& Graph::rotationAt(Vertex v) const {
  checkVertex(v, "rotationAt");
  if (!rotation_) throw std::invalid_argument("rotationAt: no rotation system");
  return (*rotation_)[v];
}

void Graph::validateRotation() const {
  if (!rotation_) throw std::invalid_argument("validateRotation: no rotation system");
  for (Vertex v = 0; v < idBound(); ++v) {
    if (!alive_[v]) continue;
    std::vector<Vertex> r = (*rotation_)[v];
    std::sort(r.begin(), r.end());
    if (r != adj_[v])
      throw std::invalid_argument(
          "rotation at vertex " + std::to_string(v) +
          " is not a permutation of its neighbors");
  }
}

Graph Graph::deleteVertices(const std::vector<Vertex>& s) const {
  for (Vertex v : s) checkVertex(v, "deleteVertices");
  Graph g(*this);
  for (Vertex v : s) {
    if (!g.alive_[v]) continue;  // duplicates in s are harmless
    g.alive_[v] = 0;
    --g.live_count_;
  }
  for (Vertex v = 0; v < g.idBound(); ++v) {
    if (!g.alive_[v]) {
      g.edge_count_ -= 0;  // edges counted below from scratch
      g.adj_[v].clear();
      if (g.rotation_) (*g.rotation_)[v].clear();
      continue;
    }
    auto keep = [&](Vertex u) { return g.alive_[u]; };
    auto& a = g.adj_[v];
    a.erase(std::remove_if(a.begin(), a.end(),
                           [&](Vertex u) { return !keep(u); }),
            a.end());
    if (g.rotation_) {
      auto& r = (*g.rotation_)[v];
      r.erase(std::remove_if(r.begin(), r.end(),
                             [&](Vertex u) { return !keep(u); }),
              r.end());
    }
  }
  int m = 0;
  for (Vertex v = 0; v < g.idBound(); ++v) m += static_cast<int>(g.adj_[v].size());
  g.edge_count_ = m / 2;
  return g;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(idBound(), 0);
  for (Vertex s = 0; s < idBound(); ++s) {
    if (!alive_[s] || seen[s]) continue;
    std::vector<Vertex> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : adj_[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::connected() const { return components().size() <= 1; }

}  // namespace recolor
