#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

using Color = int;

struct ListAssignment {
  std::vector<std::vector<Color>> lists;  // by vertex id, sorted, no duplicates

  ListAssignment() = default;
  explicit ListAssignment(int id_bound) : lists(id_bound) {}
  static ListAssignment uniform(int id_bound, std::vector<Color> colors);

  void set(Vertex v, std::vector<Color> colors);
  const std::vector<Color>& at(Vertex v) const;
  bool has(Vertex v, Color c) const;
  int size(Vertex v) const { return static_cast<int>(at(v).size()); }
  int idBound() const { return static_cast<int>(lists.size()); }
};

struct Coloring {
  std::vector<Color> color;  // by vertex id; -1 = unassigned

  Coloring() = default;
  explicit Coloring(int id_bound) : color(id_bound, -1) {}
  Color at(Vertex v) const { return color[v]; }
  void set(Vertex v, Color c) { color[v] = c; }
  int idBound() const { return static_cast<int>(color.size()); }

  /// Copy with ids outside g cleared to -1.
  Coloring restrictedTo(const Graph& g) const;
  bool sameOn(const Graph& g, const Coloring& other) const;
};

struct Step {
  Vertex v;
  Color to;
  bool operator==(const Step&) const = default;
};

struct RecolorSequence {
  Coloring start;
  std::vector<Step> steps;
  std::optional<int> budget;

  Coloring end() const;
};

/// Per-vertex recolor counts of a sequence.
std::vector<int> recolorCounts(const RecolorSequence& seq, int id_bound);

bool properColoring(const Graph& g, const Coloring& c);
bool respectsLists(const Graph& g, const ListAssignment& L, const Coloring& c);

struct Violation {
  int step_index;  // -1: start/precondition; steps.size(): end-target mismatch
  std::string reason;
};

struct VerifyReport {
  bool ok = false;
  std::optional<Violation> first_violation;
  std::vector<int> recolor_counts;
  Coloring end;

  int maxCount() const;
};

/// Checks a recoloring sequence step by step: properness after every step,
/// list membership, genuine color changes, optional per-vertex budget and
/// optional target coloring. A bad start yields a report, not an exception.
VerifyReport verify(const Graph& g, const ListAssignment& L,
                    const RecolorSequence& seq,
                    const std::optional<Coloring>& target = std::nullopt,
                    std::optional<int> budget = std::nullopt);

struct SlackError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// ceil(t/slack) + 1 — the Key-Lemma recolor cap.
long long keyLemmaCap(long long t, long long slack);

struct InsertionResult {
  RecolorSequence seq;           // on g, restricting to sigma_prime off the members
  std::map<Vertex, int> counts;  // realized recolor counts of the members
};

/// Schedules a set of absent vertices through sigma_prime with forced moves
/// only: a member moves exactly when a neighbor is about to adopt its color,
/// choosing the free color whose next adoption by an outside neighbor lies
/// furthest in the future (ties: smallest color). Members never force each
/// other. A final forest pass brings members to beta with at most one extra
/// bounce each. Singleton use realizes the Key Lemma bound.
///
/// Pre: |L(u)| >= deg_g(u) + 2 for each member (else SlackError); alpha and
/// beta are proper list colorings of g; sigma_prime lives on g minus the
/// members, starts at alpha and ends at beta there; members induce a forest.
InsertionResult groupInsert(const Graph& g, const ListAssignment& L,
                            const std::vector<Vertex>& members,
                            const RecolorSequence& sigma_prime,
                            const Coloring& alpha, const Coloring& beta,
                            Vertex finish_root = -1);

/// Key Lemma: extend sigma_prime (on g - v) to g, recoloring v at most
/// ceil(t / (|L(v)| - d(v) - 1)) + 1 times, where t is the number of
/// sigma_prime steps at N(v).
RecolorSequence keyLemmaExtend(const Graph& g, const ListAssignment& L, Vertex v,
                               const RecolorSequence& sigma_prime, Color alpha_v,
                               Color beta_v);

struct ThreadExtension {
  RecolorSequence seq;
  std::map<Vertex, int> counts;
  int s = 0;  // recolor count of the anchor endpoint in sigma_prime
};

/// 2-thread extension on thread v1-v2-v3-v4 (interiors v2, v3). If
/// sigma_prime recolors v4 at most s times with s <= k-3, the result
/// recolors v3 at most s+3 times and stays k-good on the interiors
/// (the verifier enforces the global budget).
ThreadExtension extend2Thread(const Graph& h, const ListAssignment& L,
                              const std::array<Vertex, 4>& thread,
                              const RecolorSequence& sigma_prime,
                              const Coloring& alpha, const Coloring& beta, int k);

/// 3-thread extension on v1-v2-v3-v4-v5 (interiors v2, v3, v4); the center
/// v3 is recolored at most 4 times.
ThreadExtension extend3Thread(const Graph& h, const ListAssignment& L,
                              const std::array<Vertex, 5>& thread,
                              const RecolorSequence& sigma_prime,
                              const Coloring& alpha, const Coloring& beta, int k);

}  // namespace recolor
