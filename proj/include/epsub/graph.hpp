#pragma once

#include <span>
#include <utility>
#include <vector>

#include "epsub/vertex_set.hpp"

namespace epsub {

/// Finite simple graph over dense vertex ids 0..n-1. The construction order
/// 0 < 1 < ... < n-1 is the canonical total order used for every tie-break.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph, deduplicating edges. Loops or out-of-range endpoints
    /// raise MalformedInputError.
    static Graph build(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_[v].data(), adj_[v].size()};
    }

    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(VertexId u, VertexId v) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    VertexSet full_vertex_set() const;

private:
    int n_ = 0;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

/// Path as an explicit vertex sequence p_1 - ... - p_z, z >= 1.
struct Path {
    std::vector<VertexId> vertices;

    Path() = default;
    explicit Path(std::vector<VertexId> vs) : vertices(std::move(vs)) {}

    int size() const { return static_cast<int>(vertices.size()); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }

    /// Interior = all vertices except the two endpoints; empty when size <= 2.
    std::vector<VertexId> interior() const {
        if (vertices.size() <= 2) return {};
        return {vertices.begin() + 1, vertices.end() - 1};
    }

    Path reversed() const { return Path({vertices.rbegin(), vertices.rend()}); }

    /// Direction-independent form: the lexicographically smaller of the two
    /// orientations. Used when paths are compared as set objects.
    Path canonical() const {
        Path rev = reversed();
        return vertices <= rev.vertices ? *this : rev;
    }

    bool operator==(const Path& o) const { return vertices == o.vertices; }
    bool operator<(const Path& o) const { return vertices < o.vertices; }
};

/// Separation (M, N): M and N cover the vertex set and no edge joins
/// M \ N to N \ M. The cut is M n N.
struct Separation {
    VertexSet m;
    VertexSet n;

    VertexSet cut() const { return m & n; }
};

/// Result of a vertex deletion or induced-subgraph operation: the new graph
/// plus both directions of the relabeling (old_to_new holds -1 for dropped
/// vertices). Surviving vertices keep their relative order.
struct RelabeledGraph {
    Graph graph;
    std::vector<VertexId> old_to_new;
    std::vector<VertexId> new_to_old;
};

/// True iff the sequence has no repeated vertex and every consecutive pair is
/// adjacent in g. False (never throws) on malformed sequences.
bool is_path_in(const Graph& g, const Path& p);

/// Induced subgraph on V(g) \ drop. Throws MalformedInputError if drop
/// contains ids outside the graph.
RelabeledGraph delete_vertices(const Graph& g, const VertexSet& drop);

/// Induced subgraph on keep.
RelabeledGraph induced_subgraph(const Graph& g, const VertexSet& keep);

inline RelabeledGraph delete_vertices(const Graph& g, std::initializer_list<VertexId> drop) {
    return delete_vertices(g, VertexSet(g.n(), std::vector<VertexId>(drop)));
}

/// Checks the Separation contract against g plus the Menger-side conditions:
/// |cut| < j, y in M \ N, A subset of N.
bool separation_valid(const Graph& g, const Separation& sep, VertexId y, const VertexSet& a, int j);

}  // namespace epsub
