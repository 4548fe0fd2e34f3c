#pragma once

#include <string>
#include <vector>

#include "epsub/graph.hpp"

namespace epsub {

/// A subdivision of a pattern H inside a host G: an injective branch map
/// V(H) -> V(G) plus one path per H-edge, indexed in the order of
/// H.edges(). Two edge paths may only meet at shared branch endpoints, and
/// no branch vertex is interior to any path.
struct SubdivisionEmbedding {
    std::vector<VertexId> branch_map;  // indexed by H-vertex
    std::vector<Path> edge_paths;      // indexed like H.edges()

    /// All host vertices used by the subdivision (branch + path interiors).
    VertexSet vertex_set(int host_n) const;

    /// Host vertices that are images of H-vertices.
    VertexSet branch_set(int host_n) const;

    bool operator==(const SubdivisionEmbedding& o) const {
        return branch_map == o.branch_map && edge_paths == o.edge_paths;
    }
};

/// True iff emb satisfies all conditions of the subdivision definition with
/// respect to g and h, with every edge path a path of g.
bool verify_embedding(const Graph& g, const Graph& h, const SubdivisionEmbedding& emb);

/// Embeddings compared as subgraph objects: sorted vertex set plus the set of
/// edge paths up to orientation. Distinct branch placements on the same
/// subgraph compare equal only if they induce the same path set.
struct EmbeddingKey {
    std::vector<VertexId> vertices;
    std::vector<std::vector<VertexId>> paths;

    static EmbeddingKey of(const SubdivisionEmbedding& emb, int host_n);
    bool operator<(const EmbeddingKey& o) const {
        if (vertices != o.vertices) return vertices < o.vertices;
        return paths < o.paths;
    }
};

/// Certificate-side JSON: {"branch": {"hVertex": gVertex,...},
/// "paths": {"u-v": [gVertex,...],...}}.
std::string embedding_to_json(const Graph& h, const SubdivisionEmbedding& emb);
SubdivisionEmbedding embedding_from_json(const Graph& h, const std::string& text);

}  // namespace epsub
