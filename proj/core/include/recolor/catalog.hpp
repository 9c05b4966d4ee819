#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/recolor.hpp"
#include "recolor/structure.hpp"

namespace recolor {

enum class TheoremSide { Planar6, Mad4 };

// ---------------------------------------------------------------------------
// Recipes: ordered re-insertion programs over named roles.

struct KLStep {
  std::string role;
};
struct Thread2Step {
  std::array<std::string, 4> roles;  // [v1, v2, v3, v4]; v4 anchors the cap
};
struct Thread3Step {
  std::array<std::string, 5> roles;  // [v1..v5]; v3 is the center
};
struct GroupStep {
  std::vector<std::string> roles;
  std::string root;
};
using RecipeStep = std::variant<KLStep, Thread2Step, Thread3Step, GroupStep>;

struct Recipe {
  std::vector<RecipeStep> steps;
};

/// A detected reducible configuration with its bound re-insertion plan.
struct ConfigMatch {
  std::string pattern;
  std::map<std::string, Vertex> roles;  // all named roles (anchors included)
  std::vector<std::string> deleted;     // roles to delete; distinct vertices
  Recipe recipe;

  std::vector<Vertex> deletedVertices() const;
};

// ---------------------------------------------------------------------------
// Load-time symbolic cap evaluation.

struct RoleTemplate {
  std::map<std::string, int> degree;                       // G-degree of deleted roles
  std::set<std::pair<std::string, std::string>> edges;     // among deleted roles
};

struct SymbolicReport {
  std::map<std::string, long long> caps;  // per deleted role
  bool within_budget = true;
  std::vector<std::string> issues;

  long long maxCap() const;
};

/// Evaluates a recipe's worst-case per-role recolor caps: never-deleted
/// neighbors count k each, previously inserted roles count their own caps.
SymbolicReport symbolicCaps(const Recipe& recipe, const RoleTemplate& tmpl,
                            int list_size, int k);

// ---------------------------------------------------------------------------
// Catalog.

struct DetectContext {
  const Graph* g = nullptr;
  const FaceStructure* faces = nullptr;  // present for the embedded side
};

using Detector = std::function<std::optional<ConfigMatch>(const DetectContext&)>;

struct CatalogEntry {
  std::string id;
  std::string summary;
  Detector detect;
  RoleTemplate tmpl;   // representative template for the symbolic table
  Recipe tmpl_recipe;  // recipe over the template's roles
  SymbolicReport symbolic;
  bool runtime_guarded = false;  // symbolic cap above budget; runtime checks rule
};

struct Catalog {
  TheoremSide side;
  int k;          // recolor budget
  int list_size;  // 6 or 4
  std::vector<CatalogEntry> entries;

  static Catalog planar6(int k = 48);
  static Catalog mad4(int k = 18);

  std::string loadReport() const;
};

/// First match in catalog priority order; entries scan vertices in
/// ascending id order, so results are deterministic.
std::optional<ConfigMatch> findConfiguration(const Graph& g, const Catalog& cat,
                                             const FaceStructure* faces = nullptr);

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AppliedRecipe {
  RecolorSequence seq;
  std::map<Vertex, int> realized;            // counts of the inserted roles
  std::map<std::string, long long> declared; // runtime cap per role
};

/// Executes a match's recipe: deletes are assumed applied (sigma_prime lives
/// on g minus the deleted roles); re-inserts step by step, asserting every
/// realized count against the runtime-evaluated cap and the budget k.
AppliedRecipe applyRecipe(const Graph& g, const ListAssignment& L,
                          const ConfigMatch& match,
                          const RecolorSequence& sigma_prime,
                          const Coloring& alpha, const Coloring& beta, int k);

// Helpers shared by detectors and tests.
struct VertexThreads {
  std::vector<ThreadWalk> per_edge;   // one walk per incident edge
  std::vector<ThreadWalk> twos;       // distinct 2-threads (closed walks deduped)
  std::vector<ThreadWalk> ones;       // 1-threads
  std::vector<Vertex> zeros;          // direct 3+ neighbors
  std::vector<int> profile;           // per-edge interior counts, sorted desc
  int n2 = 0;
};
VertexThreads vertexThreads(const Graph& g, Vertex v);

}  // namespace recolor
