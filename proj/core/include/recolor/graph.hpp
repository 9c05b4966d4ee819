#pragma once

#include <optional>
#include <string>
#include <vector>

namespace recolor {

using Vertex = int;

/// Undirected simple graph over a fixed id space [0, idBound()).
///
/// Vertices can be masked out ("deleted"); ids are never reused, so a
/// subgraph produced by deleteVertices() keeps the parent's ids.  An
/// optional rotation system (cyclic neighbor order per vertex) encodes a
/// combinatorial embedding.  Once built, graphs are treated as immutable
/// values; deletion returns a new graph.
class Graph {
public:
  Graph() = default;
  explicit Graph(int id_bound);

  static Graph fromEdges(int id_bound,
                         const std::vector<std::pair<Vertex, Vertex>>& edges);

  int idBound() const { return static_cast<int>(adj_.size()); }
  int vertexCount() const { return live_count_; }
  int edgeCount() const { return edge_count_; }

  bool contains(Vertex v) const {
    return v >= 0 && v < idBound() && alive_[v];
  }
  bool hasEdge(Vertex u, Vertex v) const;

  // Construction-time mutation. Throws on loops, parallel edges, bad ids.
  void addEdge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;

  std::vector<Vertex> vertices() const;                    // ascending ids
  std::vector<std::pair<Vertex, Vertex>> edges() const;    // u < v, sorted

  bool hasRotation() const { return rotation_.has_value(); }
  // Sets the cyclic neighbor order of v. All live vertices must get one
  // before the rotation is usable; validateRotation() checks consistency.
  void setRotation(Vertex v, std::vector<Vertex> order);
  const std::vector<Vertex>& rotationAt(Vertex v) const;
  void validateRotation() const;  // throws std::invalid_argument if broken

  /// Induced subgraph on V \ s. Rotation, when present, is restricted.
  /// Throws std::out_of_range if s contains an unknown or dead id.
  Graph deleteVertices(const std::vector<Vertex>& s) const;

  std::vector<std::vector<Vertex>> components() const;
  bool connected() const;

private:
  void checkVertex(Vertex v, const char* what) const;

  std::vector<char> alive_;
  std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
  std::optional<std::vector<std::vector<Vertex>>> rotation_;
  int live_count_ = 0;
  int edge_count_ = 0;
};

}  // namespace recolor
