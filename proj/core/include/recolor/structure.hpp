#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/rational.hpp"

namespace recolor {

// ---------------------------------------------------------------------------
// Faces of an embedded graph.

struct FaceStructure {
  // Each face is a closed walk, listed as the cyclic sequence of vertices.
  // The walk length equals the face degree (bridges appear twice).
  std::vector<std::vector<Vertex>> faces;
  // facesAt[v]: face ids incident to v, one entry per occurrence on a walk.
  std::vector<std::vector<int>> faces_at;

  int faceDegree(int f) const { return static_cast<int>(faces[f].size()); }
  int faceCount() const { return static_cast<int>(faces.size()); }
  std::vector<int> degreeTuple(const Graph& g, int f) const;
};

/// Traces all faces from the rotation system. Every directed edge is used
/// by exactly one face walk. Requires a validated rotation.
FaceStructure traceFaces(const Graph& g);

/// Canonical form of a face degree tuple under rotation and reflection.
std::vector<int> canonicalPattern(std::vector<int> tuple);

/// True if the face's degree tuple equals `pattern` up to rotation/reflection.
bool facePatternIs(const Graph& g, const FaceStructure& fs, int f,
                   const std::vector<int>& pattern);

/// All rotations/reflections of face f's vertex walk whose degree sequence
/// matches `pattern` exactly as written.
std::vector<std::vector<Vertex>> alignFacePattern(const Graph& g,
                                                  const FaceStructure& fs,
                                                  int f,
                                                  const std::vector<int>& pattern);

// ---------------------------------------------------------------------------
// Class membership for the embedded theorem: no 3-cycles, no two distinct
// 4-cycles sharing a vertex.

struct ClassReportPlanar6 {
  std::vector<std::array<Vertex, 3>> triangles;
  std::vector<std::vector<Vertex>> four_cycles;  // each as a 4-vertex cycle walk
  std::vector<std::pair<int, int>> intersecting_pairs;  // indices into four_cycles
  bool missing_rotation = false;

  bool inClass() const {
    return triangles.empty() && intersecting_pairs.empty() && !missing_rotation;
  }
};

ClassReportPlanar6 classCheckPlanar6(const Graph& g, bool require_rotation = true);

/// All triangles of g (sorted triples).
std::vector<std::array<Vertex, 3>> findTriangles(const Graph& g);

/// All distinct 4-cycles of g, each reported once as a walk [a,b,c,d].
std::vector<std::vector<Vertex>> findFourCycles(const Graph& g);

/// Girth of g; nullopt for forests.
std::optional<int> girth(const Graph& g);

// ---------------------------------------------------------------------------
// Maximum average degree, exact.

struct MadResult {
  Rat value;                    // max over nonempty H of 2|E(H)| / |V(H)|
  std::vector<Vertex> witness;  // induced subgraph achieving it
};

/// Exact mad via Dinkelbach iteration over min-cuts (integer capacities).
/// Throws std::invalid_argument on an empty graph.
MadResult mad(const Graph& g);

// ---------------------------------------------------------------------------
// Threads (paths of internal degree-2 vertices) and the sparse-side
// vertex taxonomy.

struct ThreadWalk {
  std::vector<Vertex> interior;  // 2-vertices from v outward, in order
  Vertex far = -1;               // endpoint reached (may equal v for a cycle)
  bool closed = false;           // walk returned to v
};

/// Maximal thread leaving v through its neighbor `first`.
/// Pre: the walk terminates (any component containing a 3+-vertex does).
ThreadWalk walkThread(const Graph& g, Vertex v, Vertex first);

struct ThreadProfile {
  Vertex v;
  std::vector<int> interior_counts;  // sorted descending, one per incident edge
  int n2 = 0;                        // sum of interior_counts
};

/// Profile of maximal threads at a 3+-vertex. Throws on 2--vertices.
/// A thread from v back to v is counted on both incident edges.
ThreadProfile threadProfile(const Graph& g, Vertex v);

/// True if the sorted profile of 3-vertex v equals (a,b,c) with a>=b>=c.
bool isThreeVertexType(const Graph& g, Vertex v, int a, int b, int c);

struct VertexTag {
  Vertex v;
  std::vector<int> profile;          // sorted descending interior counts
  int n2 = 0;
  std::vector<Vertex> weak_neighbors;   // one entry per shared 1-thread
  std::vector<Vertex> nearby_two;       // one entry per (thread end at v, interior)
  bool is_3111 = false;
  bool is_3210 = false;
  bool bad_3110 = false;  // 3_{1,1,0} weak-adjacent to a 3_{1,1,1}
};

/// Tags every 3+-vertex with the sparse-proof vocabulary.
/// Cycle components (all 2-vertices) produce no tags.
std::map<Vertex, VertexTag> tagVertices(const Graph& g);

// ---------------------------------------------------------------------------
// Special 5-faces of the embedded proof.

struct SpecialFace {
  int face;        // id of the (3,4,3,3,4)-face
  int four_face;   // id of the adjacent 4-face certifying it
  Vertex rich;     // the 4-vertex in the v5 role
  Vertex poor;     // the 4-vertex in the v2 role
  std::array<Vertex, 5> walk;  // aligned as (v1,...,v5)
};

/// Special 5-faces: (3,4,3,3,4)-faces whose v1v2 edge lies on a 4-face with
/// degree tuple `adjacent_pattern` (the printed definition uses (3,4,4,3)).
std::vector<SpecialFace> specialFaces(const FaceStructure& fs, const Graph& g,
                                      const std::vector<int>& adjacent_pattern = {3, 4, 4, 3});

}  // namespace recolor
