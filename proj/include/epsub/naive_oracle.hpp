#pragma once

#include <functional>
#include <vector>

#include "epsub/embedding.hpp"
#include "epsub/graph.hpp"

namespace epsub {

/// Independent brute-force subdivision enumerator. Deliberately shares no
/// search logic with the optimized detector: plain lexicographic branch
/// assignments without degree filtering, plain depth-first path enumeration,
/// no pruning beyond feasibility. The certificate verifier and the
/// equivalence tests rely on this module only.
namespace naive {

/// Visits every embedding avoiding `avoid` and covering `must_include`;
/// stops early when visit returns true. Returns true iff stopped.
bool for_each_embedding(const Graph& g, const Graph& h, const VertexSet& avoid,
                        const VertexSet& must_include,
                        const std::function<bool(const SubdivisionEmbedding&)>& visit);

bool exists_subdivision(const Graph& g, const Graph& h, const VertexSet& avoid,
                        const VertexSet& must_include);

inline bool exists_subdivision(const Graph& g, const Graph& h,
                               std::initializer_list<VertexId> avoid = {},
                               std::initializer_list<VertexId> must_include = {}) {
    return exists_subdivision(g, h, VertexSet(g.n(), std::vector<VertexId>(avoid)),
                              VertexSet(g.n(), std::vector<VertexId>(must_include)));
}

bool is_subdivision_free(const Graph& g, const Graph& h, const VertexSet& x);

/// Distinct vertex sets of embeddings avoiding `avoid` (for packing oracles).
std::vector<VertexSet> embedding_vertex_sets(const Graph& g, const Graph& h,
                                             const VertexSet& avoid);

}  // namespace naive

}  // namespace epsub
