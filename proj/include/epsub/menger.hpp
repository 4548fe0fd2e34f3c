#pragma once

#include <variant>
#include <vector>

#include "epsub/graph.hpp"

namespace epsub {

using MengerResult = std::variant<std::vector<Path>, Separation>;

/// Either j paths from y to A, pairwise vertex-disjoint except at y and each
/// containing exactly one A-vertex (its far endpoint), or a separation (M, N)
/// with |M n N| < j, y in M \ N and A subset of N. Exactly one branch is
/// returned.
///
/// Vertex-capacity max-flow over the standard splitting reduction: every
/// vertex outside {y} u A gets a unit in->out arc, each a in A a unit arc to
/// the sink, y is the source. Augmenting paths are found by BFS in canonical
/// vertex order, so witnesses are deterministic. The separation returned is
/// the one whose M side is the residual set reachable from y.
MengerResult disjoint_paths_or_separation(const Graph& g, VertexId y, const VertexSet& a, int j);

/// Separation with a singleton cut {x}, x outside A u {y}, y in M \ N,
/// A subset of N, and M inclusion-wise maximal over all such separations.
/// Requires that y-A connectivity through vertices outside A is exactly 1:
/// zero paths raise NoDangerousPathError, two disjoint ones WrongBranchError.
///
/// Computed as the min cut closest to A: contract A into the sink, run a
/// max flow of value 1, and take the unique saturated split arc that can
/// still reach the sink in the residual network. The maximality witness (two
/// paths from x to A, disjoint except at x) exists inside N and is left to
/// the caller to extract via disjoint_paths_or_separation.
std::pair<Separation, VertexId> maximal_separation(const Graph& g, VertexId y, const VertexSet& a);

/// Exact check of the paths branch: j paths starting at y, pairwise disjoint
/// except y, each ending at its only A-vertex.
bool paths_valid(const Graph& g, const std::vector<Path>& paths, VertexId y, const VertexSet& a,
                 int j);

}  // namespace epsub
