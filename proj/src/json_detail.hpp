#pragma once

// Internal nlohmann-level helpers shared by the JSON translation units.

#include "json.hpp"

#include "epsub/embedding.hpp"

namespace epsub::detail {

nlohmann::json embedding_obj(const Graph& h, const SubdivisionEmbedding& emb);
SubdivisionEmbedding embedding_from_obj(const Graph& h, const nlohmann::json& j);

}  // namespace epsub::detail
