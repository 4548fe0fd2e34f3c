#pragma once

#include <string>
#include <vector>

#include "epsub/bigint.hpp"
#include "epsub/embedding.hpp"

namespace epsub {

/// One entry of a localization trace.
struct StepRecord {
    enum class Kind { Init, TypeI, TypeII, TypeIII, PruneY };

    Kind kind = Kind::Init;
    int y_index = 0;                 // 1-based index d of the targeted y; 0 for init
    std::vector<VertexId> path;      // partition path acted on; empty for init/prune
    VertexId added_x = -1;           // vertex that entered X; -1 for init/prune
    BigInt score_before;
    BigInt score_after;
    std::vector<long long> n_vector;  // N_i after the step, i = 1..|Y|
};

std::string step_kind_name(StepRecord::Kind kind);

/// Final localization output: l pairwise disjoint embeddings, a hitting set
/// X inside their union, the bound values, and the full rewrite trace.
struct Certificate {
    int k = 0;
    int l = 0;
    int z = 0;  // instance hitting number used in the bounds
    std::vector<SubdivisionEmbedding> embeddings;
    std::vector<VertexId> x;
    BigInt bound_stated;
    BigInt bound_derived;
    std::vector<StepRecord> trace;
    std::string status = "ok";  // "ok" | "budget_exceeded"
    std::vector<std::string> warnings;
};

/// Big integers are serialized as decimal strings.
std::string certificate_to_json(const Graph& h, const Certificate& cert);
Certificate certificate_from_json(const Graph& h, const std::string& text);

}  // namespace epsub
