#include "epsub/naive_oracle.hpp"

#include <set>

namespace epsub::naive {

namespace {

struct NaiveState {
    const Graph& g;
    const Graph& h;
    const VertexSet& avoid;
    const VertexSet& must;
    const std::function<bool(const SubdivisionEmbedding&)>& visit;

    std::vector<VertexId> phi;
    VertexSet used;
    std::vector<Path> paths;
    bool stopped = false;

    NaiveState(const Graph& g_, const Graph& h_, const VertexSet& avoid_, const VertexSet& must_,
               const std::function<bool(const SubdivisionEmbedding&)>& visit_)
        : g(g_), h(h_), avoid(avoid_), must(must_), visit(visit_) {
        phi.assign(h.n(), -1);
        used = VertexSet(g.n());
    }

    void branches(int hv) {
        if (stopped) return;
        if (hv == h.n()) {
            route(0);
            return;
        }
        for (VertexId v = 0; v < g.n() && !stopped; ++v) {
            if (avoid.contains(v) || used.contains(v)) continue;
            phi[hv] = v;
            used.insert(v);
            branches(hv + 1);
            used.erase(v);
            phi[hv] = -1;
        }
    }

    void route(int e) {
        if (stopped) return;
        if (e == h.m()) {
            if (!must.is_subset_of(used)) return;
            if (visit(SubdivisionEmbedding{phi, paths})) stopped = true;
            return;
        }
        auto [hu, hv] = h.edges()[e];
        std::vector<VertexId> seq = {phi[hu]};
        walk(e, phi[hv], seq);
    }

    void walk(int e, VertexId target, std::vector<VertexId>& seq) {
        if (stopped) return;
        VertexId cur = seq.back();
        for (VertexId w : g.neighbors(cur)) {
            if (stopped) return;
            if (w == target) {
                seq.push_back(w);
                paths.emplace_back(seq);
                route(e + 1);
                paths.pop_back();
                seq.pop_back();
                continue;
            }
            if (avoid.contains(w) || used.contains(w)) continue;
            seq.push_back(w);
            used.insert(w);
            walk(e, target, seq);
            used.erase(w);
            seq.pop_back();
        }
    }
};

}  // namespace

bool for_each_embedding(const Graph& g, const Graph& h, const VertexSet& avoid,
                        const VertexSet& must_include,
                        const std::function<bool(const SubdivisionEmbedding&)>& visit) {
    if (must_include.intersects(avoid)) return false;
    NaiveState st(g, h, avoid, must_include, visit);
    st.branches(0);
    return st.stopped;
}

bool exists_subdivision(const Graph& g, const Graph& h, const VertexSet& avoid,
                        const VertexSet& must_include) {
    return for_each_embedding(g, h, avoid, must_include,
                              [](const SubdivisionEmbedding&) { return true; });
}

bool is_subdivision_free(const Graph& g, const Graph& h, const VertexSet& x) {
    return !exists_subdivision(g, h, x, VertexSet(g.n()));
}

std::vector<VertexSet> embedding_vertex_sets(const Graph& g, const Graph& h,
                                             const VertexSet& avoid) {
    std::set<std::vector<uint64_t>> seen;
    std::vector<VertexSet> out;
    for_each_embedding(g, h, avoid, VertexSet(g.n()), [&](const SubdivisionEmbedding& emb) {
        VertexSet vs = emb.vertex_set(g.n());
        if (seen.insert(vs.words()).second) out.push_back(vs);
        return false;
    });
    return out;
}

}  // namespace epsub::naive
