#include "epsub/embedding.hpp"

#include <algorithm>

#include "json_detail.hpp"

#include "epsub/errors.hpp"

namespace epsub {

using nlohmann::json;

VertexSet SubdivisionEmbedding::vertex_set(int host_n) const {
    VertexSet s(host_n);
    for (VertexId v : branch_map) s.insert(v);
    for (const Path& p : edge_paths)
        for (VertexId v : p.vertices) s.insert(v);
    return s;
}

VertexSet SubdivisionEmbedding::branch_set(int host_n) const {
    return VertexSet(host_n, branch_map);
}

bool verify_embedding(const Graph& g, const Graph& h, const SubdivisionEmbedding& emb) {
    if (static_cast<int>(emb.branch_map.size()) != h.n()) return false;
    if (static_cast<int>(emb.edge_paths.size()) != h.m()) return false;

    VertexSet branches(g.n());
    for (VertexId v : emb.branch_map) {
        if (v < 0 || v >= g.n() || branches.contains(v)) return false;  // injective
        branches.insert(v);
    }

    // Condition 2: endpoints match the branch images. Paths are undirected,
    // so either orientation is fine.
    for (int e = 0; e < h.m(); ++e) {
        const Path& p = emb.edge_paths[e];
        if (!is_path_in(g, p)) return false;
        auto [hu, hv] = h.edges()[e];
        VertexId bu = emb.branch_map[hu], bv = emb.branch_map[hv];
        bool forward = p.front() == bu && p.back() == bv;
        bool backward = p.front() == bv && p.back() == bu;
        if (!forward && !backward) return false;
    }

    // Conditions 3 and 4: interiors avoid branch vertices and all other paths.
    VertexSet interiors(g.n());
    for (const Path& p : emb.edge_paths) {
        for (VertexId v : p.interior()) {
            if (branches.contains(v)) return false;
            if (interiors.contains(v)) return false;
            interiors.insert(v);
        }
    }
    return true;
}

EmbeddingKey EmbeddingKey::of(const SubdivisionEmbedding& emb, int host_n) {
    EmbeddingKey key;
    key.vertices = emb.vertex_set(host_n).to_vector();
    for (const Path& p : emb.edge_paths) key.paths.push_back(p.canonical().vertices);
    std::sort(key.paths.begin(), key.paths.end());
    return key;
}

std::string embedding_to_json(const Graph& h, const SubdivisionEmbedding& emb) {
    return detail::embedding_obj(h, emb).dump();
}

SubdivisionEmbedding embedding_from_json(const Graph& h, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw MalformedInputError(std::string("bad embedding JSON: ") + e.what());
    }
    return detail::embedding_from_obj(h, j);
}

namespace detail {

json embedding_obj(const Graph& h, const SubdivisionEmbedding& emb) {
    json j;
    j["branch"] = json::object();
    for (int v = 0; v < h.n(); ++v) j["branch"][std::to_string(v)] = emb.branch_map[v];
    j["paths"] = json::object();
    for (int e = 0; e < h.m(); ++e) {
        auto [u, v] = h.edges()[e];
        j["paths"][std::to_string(u) + "-" + std::to_string(v)] = emb.edge_paths[e].vertices;
    }
    return j;
}

SubdivisionEmbedding embedding_from_obj(const Graph& h, const json& j) {
    if (!j.is_object() || !j.contains("branch") || !j.contains("paths"))
        throw MalformedInputError("embedding JSON must have branch and paths objects");

    SubdivisionEmbedding emb;
    emb.branch_map.assign(h.n(), -1);
    for (auto& [key, val] : j["branch"].items()) {
        int hv = std::stoi(key);
        if (hv < 0 || hv >= h.n() || !val.is_number_integer())
            throw MalformedInputError("bad branch entry in embedding JSON");
        emb.branch_map[hv] = val.get<VertexId>();
    }
    for (VertexId v : emb.branch_map)
        if (v < 0) throw MalformedInputError("embedding JSON misses a branch vertex");

    emb.edge_paths.assign(h.m(), Path{});
    for (auto& [key, val] : j["paths"].items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos || !val.is_array())
            throw MalformedInputError("bad path entry in embedding JSON");
        VertexId u = std::stoi(key.substr(0, dash));
        VertexId v = std::stoi(key.substr(dash + 1));
        if (u > v) std::swap(u, v);
        auto it = std::find(h.edges().begin(), h.edges().end(), std::make_pair(u, v));
        if (it == h.edges().end())
            throw MalformedInputError("embedding JSON path for a non-edge of the pattern");
        std::vector<VertexId> seq;
        for (const auto& x : val) seq.push_back(x.get<VertexId>());
        emb.edge_paths[it - h.edges().begin()] = Path(std::move(seq));
    }
    for (const Path& p : emb.edge_paths)
        if (p.vertices.empty()) throw MalformedInputError("embedding JSON misses an edge path");
    return emb;
}

}  // namespace detail

}  // namespace epsub
