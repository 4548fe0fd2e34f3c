#pragma once

#include <cstdint>
#include <string>

#include "epsub/graph.hpp"

namespace epsub {

Graph gen_cycle(int n);     // n >= 3
Graph gen_path(int n);      // n >= 1
Graph gen_star(int n);      // n >= 2 vertices: center 0 plus n-1 leaves
Graph gen_complete(int n);  // n >= 1

/// Two hub vertices 0 and 1 joined by three internally disjoint paths with
/// a, b and c interior vertices. At most one of a, b, c may be zero.
Graph gen_theta(int a, int b, int c);

/// The depth-3 tree: a root of degree 6, six children with two children each,
/// twelve grandchildren with two leaves each. 43 vertices, 42 edges.
Graph gen_fig1_tree();

/// Erdos-Renyi G(n, p), deterministic for a fixed seed on every platform.
Graph gen_gnp(int n, double p, uint64_t seed);

/// Parses a generator spec string: "fig1-tree", "cycle N", "path N",
/// "star N", "complete N", "theta A B C", "gnp N P SEED".
Graph generate(const std::string& spec);

}  // namespace epsub
