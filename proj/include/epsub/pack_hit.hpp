#pragma once

#include <vector>

#include "epsub/bigint.hpp"
#include "epsub/embedding.hpp"
#include "epsub/subdivision.hpp"

namespace epsub {

/// Maximum family of pairwise vertex-disjoint H-subdivisions in g, truncated
/// to cap+1 members. Exact: branch and bound on the lowest coverable vertex,
/// branching over inclusion-minimal embedding vertex sets, memoized on the
/// remaining vertex set.
std::vector<SubdivisionEmbedding> max_packing(const Graph& g, const Graph& h, int cap,
                                              SearchBudget* budget = nullptr);

/// Packing number nu(g, h).
int packing_number(const Graph& g, const Graph& h, SearchBudget* budget = nullptr);

/// Minimum-cardinality Z with g minus Z free of H-subdivisions; ties broken
/// by lexicographic vertex order. Plain cardinality-ordered subset
/// enumeration; candidate subsets that miss a previously found embedding are
/// skipped without a search.
std::vector<VertexId> min_hitting_set(const Graph& g, const Graph& h,
                                      SearchBudget* budget = nullptr);

/// Hitting bound t*k - t' for a forest on t vertices whose largest component
/// has t' vertices. Requires t >= t' >= 1, k >= 1.
BigInt ep_bound_forest(long long t, long long t_prime, long long k);

/// The two bound expressions for the localized hitting set:
/// stated  = 2^f_k * m * k + k * (m - n)
/// derived = 2^f_k * m * k - k * (m - n)
/// The derived form is what the certificate verifier checks.
struct LocalityBound {
    BigInt stated;
    BigInt derived;
};
LocalityBound locality_bound(long long f_k, long long m, long long n, long long k);

}  // namespace epsub
