#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "epsub/embedding.hpp"
#include "epsub/errors.hpp"
#include "epsub/graph.hpp"

namespace epsub {

/// Shared node budget for the backtracking searches. A single run (for
/// example one localize call) owns one budget; every branch trial and path
/// extension charges it.
struct SearchBudget {
    long long remaining = 100'000'000;

    SearchBudget() = default;
    explicit SearchBudget(long long nodes) : remaining(nodes) {}

    void charge() {
        if (--remaining < 0) throw BudgetExceededError("search node budget exhausted");
    }
};

/// Validates a pattern for subdivision search: at least one edge and no
/// isolated vertices (isolated branch vertices lie on no path, which breaks
/// the path-partition counting downstream). Throws UnsupportedPatternError.
void validate_pattern(const Graph& h);

/// First H-subdivision in g whose vertex set avoids `avoid` and covers all of
/// `must_include` (as branch or interior vertices), or nullopt. Deterministic:
/// branch candidates by descending degree then vertex id, H-edges routed in
/// ascending endpoint order, candidate paths shortest first with ties broken
/// by neighbor order.
std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, const Graph& h,
                                                     const VertexSet& avoid,
                                                     const VertexSet& must_include,
                                                     SearchBudget* budget = nullptr);

std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, const Graph& h,
                                                     std::initializer_list<VertexId> avoid = {},
                                                     std::initializer_list<VertexId> must_include = {},
                                                     SearchBudget* budget = nullptr);

/// True iff g minus x contains no H-subdivision.
bool is_subdivision_free(const Graph& g, const Graph& h, const VertexSet& x,
                         SearchBudget* budget = nullptr);

/// Up to `limit` embeddings avoiding `avoid`, duplicate-free as subgraph
/// objects (vertex set plus orientation-free path set), in search order.
std::vector<SubdivisionEmbedding> enumerate_subdivisions(const Graph& g, const Graph& h,
                                                         const VertexSet& avoid, int limit,
                                                         SearchBudget* budget = nullptr);

/// Vertex sets of embeddings that live inside `avail` and contain `through`,
/// filtered so that no returned set contains another returned set. Every
/// embeddable vertex set within avail through `through` is a superset of some
/// returned set, which is exactly what exact packing needs to branch on.
std::vector<VertexSet> minimal_embedding_sets_through(const Graph& g, const Graph& h,
                                                      const VertexSet& avail, VertexId through,
                                                      SearchBudget* budget = nullptr);

/// Streaming form: consume(set) is called per accepted set; returning true
/// stops the enumeration early (the sets seen so far are still a complete
/// dominating family for everything enumerated up to that point).
void for_each_minimal_set_through(const Graph& g, const Graph& h, const VertexSet& avail,
                                  VertexId through, SearchBudget* budget,
                                  const std::function<bool(const VertexSet&)>& consume);

/// Every inclusion-minimal vertex set of an H-subdivision in g, smallest
/// first. Exact set packing branches over this list. Hosts must have at most
/// 62 vertices; intended for small hosts where one 2^n sweep is affordable.
std::vector<VertexSet> all_minimal_embedding_sets(const Graph& g, const Graph& h,
                                                  SearchBudget* budget = nullptr);

}  // namespace epsub
