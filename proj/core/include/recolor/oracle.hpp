#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "recolor/graph.hpp"
#include "recolor/recolor.hpp"

namespace recolor {

struct StateCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  long long max_states = 10'000'000;
};

/// Product of list sizes over live vertices, clamped at `clamp`.
long long colorSpaceSize(const Graph& g, const ListAssignment& L, long long clamp);

/// Exact number of proper list colorings. Throws StateCapError when the
/// raw color space exceeds the limit.
long long countColorings(const Graph& g, const ListAssignment& L,
                         const OracleLimits& limits = {});

void forEachColoring(const Graph& g, const ListAssignment& L,
                     const std::function<void(const Coloring&)>& fn,
                     const OracleLimits& limits = {});

/// Exact shortest number of single-vertex recoloring steps from `from` to
/// `to` in the recoloring graph; nullopt if unreachable.
std::optional<long long> bfsDistance(const Graph& g, const ListAssignment& L,
                                     const Coloring& from, const Coloring& to,
                                     const OracleLimits& limits = {});

enum class KGood { Yes, No, Unknown };

struct KGoodResult {
  KGood answer = KGood::Unknown;
  std::optional<RecolorSequence> witness;
  long long states = 0;
};

/// Decides whether beta is reachable from alpha by a sequence recoloring
/// each vertex at most k times. Bounded search over (coloring, count
/// vector) states with dominance pruning; Unknown when the state cap is
/// hit.
KGoodResult kgoodReachable(const Graph& g, const ListAssignment& L,
                           const Coloring& alpha, const Coloring& beta, int k,
                           const OracleLimits& limits = {});

}  // namespace recolor
