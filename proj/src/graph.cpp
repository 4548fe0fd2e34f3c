#include "epsub/graph.hpp"

#include <algorithm>

#include "epsub/errors.hpp"

namespace epsub {

Graph Graph::build(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges) {
    if (vertex_count < 0) throw MalformedInputError("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw MalformedInputError("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw MalformedInputError("edge endpoint outside 0.." + std::to_string(vertex_count - 1));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = vertex_count;
    g.edges_ = std::move(edges);
    g.adj_.assign(vertex_count, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet Graph::full_vertex_set() const {
    VertexSet s(n_);
    for (VertexId v = 0; v < n_; ++v) s.insert(v);
    return s;
}

bool is_path_in(const Graph& g, const Path& p) {
    const auto& vs = p.vertices;
    if (vs.empty()) return false;
    VertexSet seen(g.n());
    for (VertexId v : vs) {
        if (v < 0 || v >= g.n() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[i + 1])) return false;
    return true;
}

RelabeledGraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.n())
        throw MalformedInputError("keep set universe does not match graph");

    RelabeledGraph out;
    out.old_to_new.assign(g.n(), -1);
    for (VertexId v : keep.to_vector()) {
        out.old_to_new[v] = static_cast<VertexId>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v))
            edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    out.graph = Graph::build(static_cast<int>(out.new_to_old.size()), std::move(edges));
    return out;
}

RelabeledGraph delete_vertices(const Graph& g, const VertexSet& drop) {
    if (drop.universe() != g.n())
        throw MalformedInputError("drop set universe does not match graph");
    return induced_subgraph(g, g.full_vertex_set() - drop);
}

bool separation_valid(const Graph& g, const Separation& sep, VertexId y, const VertexSet& a,
                      int j) {
    if (sep.m.universe() != g.n() || sep.n.universe() != g.n()) return false;
    if ((sep.m | sep.n) != g.full_vertex_set()) return false;
    VertexSet cut = sep.cut();
    if (cut.size() >= j) return false;
    if (!sep.m.contains(y) || sep.n.contains(y)) return false;
    if (!a.is_subset_of(sep.n)) return false;
    for (auto [u, v] : g.edges()) {
        bool u_m_only = sep.m.contains(u) && !sep.n.contains(u);
        bool v_m_only = sep.m.contains(v) && !sep.n.contains(v);
        bool u_n_only = sep.n.contains(u) && !sep.m.contains(u);
        bool v_n_only = sep.n.contains(v) && !sep.m.contains(v);
        if ((u_m_only && v_n_only) || (u_n_only && v_m_only)) return false;
    }
    return true;
}

}  // namespace epsub
