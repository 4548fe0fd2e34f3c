#pragma once

#include <map>
#include <vector>

#include "epsub/certificate.hpp"
#include "epsub/graph.hpp"
#include "epsub/pack_hit.hpp"
#include "epsub/subdivision.hpp"

namespace epsub {

/// Hitting triple (S, X, Y): S a family of k pairwise disjoint
/// H-subdivisions, X a subset of V(S) containing every branch vertex, Y
/// disjoint from S, with G minus (X u Y) free of H-subdivisions.
struct HittingTriple {
    std::vector<SubdivisionEmbedding> s;
    VertexSet x;
    std::vector<VertexId> y;  // ascending canonical order

    VertexSet s_vertices(int host_n) const;
    VertexSet branch_vertices(int host_n) const;
    VertexSet y_set(int host_n) const;
};

/// One path of the partition of S: a maximal run of an edge path between two
/// X-vertices with X-free interior.
struct PartitionPath {
    int emb_index;
    int h_edge;
    int offset;  // start position inside the embedding's edge path
    Path path;
};

struct PathPartition {
    std::vector<PartitionPath> paths;
    int size() const { return static_cast<int>(paths.size()); }
};

/// Per-run context: the instance, the constant C = 2^z * m * k, the shared
/// search budget, and the dangerous-set cache (keyed by a version that bumps
/// whenever X or S changes, since dangerousness depends on both).
struct LocalizeContext {
    const Graph& g;
    const Graph& h;
    int k;
    int z;
    BigInt c;
    SearchBudget* budget;

    long long state_version = 0;
    std::map<std::pair<long long, VertexId>, VertexSet> dangerous_cache;

    void bump_version() { ++state_version; }
};

LocalizeContext make_context(const Graph& g, const Graph& h, int k, int z, SearchBudget* budget);

/// Builds and fully validates a triple from explicit parts (used by tests and
/// by initial_triple). Throws InternalInvariantError on any violated triple
/// invariant.
HittingTriple make_triple(LocalizeContext& ctx, std::vector<SubdivisionEmbedding> embeddings,
                          const std::vector<VertexId>& x, std::vector<VertexId> y);

/// Re-checks every triple invariant; `where` tags the failure message.
void verify_triple(LocalizeContext& ctx, const HittingTriple& triple, const char* where);

/// S = packing, X = (V(S) n Z) u branch vertices, Y = Z \ V(S). Verifies the
/// triple and the initial acceptability |P| <= 2^(z-|Y|) * m * k.
HittingTriple initial_triple(LocalizeContext& ctx,
                             const std::vector<SubdivisionEmbedding>& packing,
                             const std::vector<VertexId>& hitting_set);

/// Splits S into maximal paths with endpoints in X and X-free interiors,
/// in (embedding, H-edge, offset) order. Asserts |P| = |X| + k(m-n).
PathPartition path_partition(LocalizeContext& ctx, const HittingTriple& triple);

/// Vertices outside S that lie on some X-avoiding H-subdivision through y_i
/// (i is 1-based). Cached per (state version, y_i).
VertexSet dangerous_vertices(LocalizeContext& ctx, const HittingTriple& triple, int i);

struct ActivePaths {
    std::vector<int> indices;  // into PathPartition::paths
    long long count = 0;       // N_i
};

/// Paths whose interior reaches y_i by a dangerous path. Internal vertices of
/// dangerous paths are restricted to dangerous vertices outside Y, so that
/// rewrites can never pull a Y-vertex into S.
ActivePaths active_paths(LocalizeContext& ctx, const HittingTriple& triple,
                         const PathPartition& partition, const VertexSet& dangerous, int i);

/// N_i for every i = 1..|Y|.
std::vector<long long> active_counts(LocalizeContext& ctx, const HittingTriple& triple,
                                     const PathPartition& partition);

/// score(S, X, Y) = sum over i of C^i * N_i, exact.
BigInt score(LocalizeContext& ctx, const HittingTriple& triple);

struct Classification {
    StepRecord::Kind kind;  // TypeI, TypeII or TypeIII
    VertexId x = -1;        // type II: the splitting vertex; type III: the cut vertex
    Path pa, pb;            // type I: paths from y_d; type III: paths from x; both end in P*
};

/// Decides the type of an active path for y_d (d is 1-based, normally |Y|).
/// If all dangerous paths enter P* at one vertex the path is type II;
/// otherwise a Menger call on the subgraph induced by P*, the dangerous
/// vertices (minus Y) and y_d separates type I (two disjoint dangerous paths)
/// from type III (inclusion-maximal unit separation with a dangerous cut
/// vertex, plus its two witness paths).
Classification classify_active_path(LocalizeContext& ctx, const HittingTriple& triple,
                                    const PathPartition& partition, int path_index,
                                    const VertexSet& dangerous, int d);

/// Reroutes P through y_d along the two witness paths; X gains y_d, Y loses
/// it. Branch vertices are untouched. Fully re-verified.
HittingTriple apply_type_i(LocalizeContext& ctx, const HittingTriple& triple,
                           const PathPartition& partition, int path_index,
                           const Classification& cls, int d);

/// X gains the splitting vertex x in P*; S and Y unchanged.
HittingTriple apply_type_ii(LocalizeContext& ctx, const HittingTriple& triple,
                            const PathPartition& partition, int path_index,
                            const Classification& cls);

/// Reroutes P through the dangerous cut vertex x; X gains x, Y unchanged.
HittingTriple apply_type_iii(LocalizeContext& ctx, const HittingTriple& triple,
                             const PathPartition& partition, int path_index,
                             const Classification& cls);

/// Drops y_d (the largest element); requires N_d = 0. The hitting property is
/// re-verified by the oracle, never assumed.
HittingTriple prune_y(LocalizeContext& ctx, const HittingTriple& triple);

struct LocalizeOptions {
    long long max_steps = 100000;
    long long max_search_nodes = 100000000;
};

/// Test hook: sees the state after every recorded step.
struct StepObserver {
    virtual ~StepObserver() = default;
    virtual void on_step(LocalizeContext& ctx, const HittingTriple& triple,
                         const PathPartition& partition, const StepRecord& record) = 0;
};

/// The full pipeline: exact packing number, exact minimum hitting set,
/// initial triple, then the score-decreasing rewrite loop until Y is empty.
/// Returns a certificate with status "budget_exceeded" and a partial trace if
/// a budget runs out. Internal invariant violations throw.
Certificate localize(const Graph& g, const Graph& h, const LocalizeOptions& options = {},
                     StepObserver* observer = nullptr);

}  // namespace epsub
