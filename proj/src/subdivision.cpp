#include "epsub/subdivision.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace epsub {

void validate_pattern(const Graph& h) {
    if (h.m() < 1) throw UnsupportedPatternError("pattern must have at least one edge");
    for (VertexId v = 0; v < h.n(); ++v)
        if (h.degree(v) == 0)
            throw UnsupportedPatternError("pattern has isolated vertex " + std::to_string(v));
}

namespace {

// Backtracking state for one search call. The search first assigns all branch
// vertices, then routes edge paths one at a time; paths for an edge are tried
// shortest first (iterative deepening), extending by neighbor order.
struct Searcher {
    const Graph& g;
    const Graph& h;
    VertexSet avoid;
    VertexSet must;
    SearchBudget& budget;

    // cb returns true to stop the whole search.
    std::function<bool(const SubdivisionEmbedding&)> emit;

    // Domination pruning for packing-style enumeration: abandon any partial
    // whose used set already contains an accepted set.
    const std::vector<VertexSet>* dominators = nullptr;

    std::vector<VertexId> phi;          // H-vertex -> G-vertex
    VertexSet used;                     // branches + routed interiors
    std::vector<Path> routed;           // per H-edge, filled in order
    std::vector<int> unrouted_at_branch;  // per G-vertex: unrouted H-edges at this branch image

    bool chordless = false;      // set for minimal-vertex-set enumeration
    bool break_twins = false;    // order images of twin H-vertices ascending
    bool depth_limited = false;  // per deepening pass: a dead end hit the depth cap
    bool stopped = false;
    std::vector<std::vector<int>> twin_before;  // per H-vertex: twin predecessors

    Searcher(const Graph& g_, const Graph& h_, const VertexSet& avoid_, const VertexSet& must_,
             SearchBudget& budget_)
        : g(g_), h(h_), avoid(avoid_), must(must_), budget(budget_) {
        phi.assign(h.n(), -1);
        used = VertexSet(g.n());
        unrouted_at_branch.assign(g.n(), 0);

        // Twin H-vertices (equal neighborhoods apart from each other) are
        // interchangeable by an automorphism: any embedding can be relabeled
        // so their images ascend, with the same vertex set and paths.
        twin_before.assign(h.n(), {});
        for (int u = 0; u < h.n(); ++u) {
            for (int v = u + 1; v < h.n(); ++v) {
                auto nu = h.neighbors(u);
                auto nv = h.neighbors(v);
                std::vector<VertexId> a(nu.begin(), nu.end()), b(nv.begin(), nv.end());
                std::erase(a, v);
                std::erase(b, u);
                if (a == b) twin_before[v].push_back(u);
            }
        }
    }

    bool dominated() const {
        if (!dominators) return false;
        for (const VertexSet& w : *dominators)
            if (w.is_subset_of(used)) return true;
        return false;
    }

    // A must vertex not yet covered can only become a path interior, which
    // needs two usable path neighbors: fresh vertices or branch images that
    // still have unrouted edges.
    bool must_still_coverable() const {
        for (VertexId v : must.to_vector()) {
            if (used.contains(v)) continue;
            int usable = 0;
            for (VertexId w : g.neighbors(v)) {
                if (avoid.contains(w)) continue;
                if (!used.contains(w) || unrouted_at_branch[w] > 0) ++usable;
                if (usable >= 2) break;
            }
            if (usable < 2) return false;
        }
        return true;
    }

    void run() {
        // Quick impossibility: not enough free vertices for the branch set.
        int free_count = g.n() - avoid.size();
        if (free_count < h.n()) return;
        if (must.intersects(avoid)) return;
        assign_branch(0);
    }

    void assign_branch(int hv) {
        if (stopped) return;
        if (hv == h.n()) {
            for (int e = 0; e < h.m(); ++e) {
                auto [u, v] = h.edges()[e];
                ++unrouted_at_branch[phi[u]];
                ++unrouted_at_branch[phi[v]];
            }
            if (must_still_coverable()) route_edge(0);
            for (int e = 0; e < h.m(); ++e) {
                auto [u, v] = h.edges()[e];
                --unrouted_at_branch[phi[u]];
                --unrouted_at_branch[phi[v]];
            }
            return;
        }
        // Candidates: descending host degree, then vertex order.
        VertexId floor_id = -1;
        if (break_twins)
            for (int u : twin_before[hv]) floor_id = std::max(floor_id, phi[u]);
        std::vector<VertexId> cands;
        for (VertexId v = 0; v < g.n(); ++v) {
            if (v <= floor_id) continue;
            if (avoid.contains(v) || used.contains(v)) continue;
            if (g.degree(v) < h.degree(hv)) continue;
            cands.push_back(v);
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
        for (VertexId v : cands) {
            budget.charge();
            phi[hv] = v;
            used.insert(v);
            if (!dominated()) assign_branch(hv + 1);
            used.erase(v);
            phi[hv] = -1;
            if (stopped) return;
        }
    }

    // Shortest path length from `from` to `to` through fresh vertices, or -1.
    // A lower bound for every candidate route of the current edge.
    int route_distance(VertexId from, VertexId to) {
        std::vector<int> dist(g.n(), -1);
        std::vector<VertexId> queue = {from};
        dist[from] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            VertexId u = queue[head];
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] >= 0) continue;
                if (w == to) return dist[u] + 1;
                if (avoid.contains(w) || used.contains(w)) continue;
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
        return -1;
    }

    void route_edge(int e) {
        if (stopped) return;
        if (e == h.m()) {
            if (!must.is_subset_of(used)) return;
            SubdivisionEmbedding emb{phi, routed};
            assert(verify_embedding(g, h, emb));  // debug builds re-check every emission
            if (emit(emb)) stopped = true;
            return;
        }
        auto [hu, hv] = h.edges()[e];
        VertexId from = phi[hu], to = phi[hv];
        int dist = route_distance(from, to);
        if (dist < 0) return;
        int free_count = 0;
        for (VertexId v = 0; v < g.n(); ++v)
            if (!avoid.contains(v) && !used.contains(v)) ++free_count;
        // Shortest candidate paths first: iterative deepening on edge count,
        // stopping once a pass was never cut off by its depth limit. The flag
        // is saved around this call since deeper edges run their own passes.
        bool saved = depth_limited;
        int max_len = free_count + 1;
        for (int len = dist; len <= max_len && !stopped; ++len) {
            depth_limited = false;
            std::vector<VertexId> seq = {from};
            extend_path(e, to, seq, len);
            if (!depth_limited) break;
        }
        depth_limited = saved;
    }

    void extend_path(int e, VertexId target, std::vector<VertexId>& seq, int remaining) {
        if (stopped) return;
        budget.charge();
        VertexId cur = seq.back();
        if (remaining == 0) {
            if (cur != target) return;
            accept_path(e, seq);
            return;
        }
        for (VertexId w : g.neighbors(cur)) {
            if (stopped) return;
            if (remaining == 1) {
                if (w != target) {
                    // a longer path could continue through a fresh vertex here
                    if (!avoid.contains(w) && !used.contains(w)) depth_limited = true;
                    continue;
                }
            } else {
                // interior vertex: fresh, outside avoid, never a branch image
                if (w == target || avoid.contains(w) || used.contains(w)) continue;
            }
            // minimal-set enumeration routes chordless paths only: a chord
            // would shortcut to a strictly smaller embeddable vertex set
            if (chordless && has_chord(seq, w)) continue;
            seq.push_back(w);
            if (remaining > 1) used.insert(w);
            if (!(remaining > 1 && dominated())) extend_path(e, target, seq, remaining - 1);
            if (remaining > 1) used.erase(w);
            seq.pop_back();
        }
    }

    bool has_chord(const std::vector<VertexId>& seq, VertexId next) const {
        for (size_t i = 0; i + 1 < seq.size(); ++i)
            if (g.has_edge(seq[i], next)) return true;
        return false;
    }

    // Interior vertices of seq are already held in `used` by the enclosing
    // extend_path frames; only the routing bookkeeping changes here.
    void accept_path(int e, const std::vector<VertexId>& seq) {
        auto [hu, hv] = h.edges()[e];
        --unrouted_at_branch[phi[hu]];
        --unrouted_at_branch[phi[hv]];
        routed.emplace_back(seq);
        if (must_still_coverable() && !dominated()) route_edge(e + 1);
        routed.pop_back();
        ++unrouted_at_branch[phi[hu]];
        ++unrouted_at_branch[phi[hv]];
    }
};

SearchBudget& local_or(SearchBudget* budget, SearchBudget& local) {
    return budget ? *budget : local;
}

}  // namespace

std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, const Graph& h,
                                                     const VertexSet& avoid,
                                                     const VertexSet& must_include,
                                                     SearchBudget* budget) {
    validate_pattern(h);
    if (avoid.intersects(must_include))
        throw MalformedInputError("avoid and must_include sets intersect");
    SearchBudget local;
    Searcher s(g, h, avoid, must_include, local_or(budget, local));
    std::optional<SubdivisionEmbedding> found;
    s.emit = [&](const SubdivisionEmbedding& emb) {
        found = emb;
        return true;
    };
    s.run();
    return found;
}

std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, const Graph& h,
                                                     std::initializer_list<VertexId> avoid,
                                                     std::initializer_list<VertexId> must_include,
                                                     SearchBudget* budget) {
    return find_subdivision(g, h, VertexSet(g.n(), std::vector<VertexId>(avoid)),
                            VertexSet(g.n(), std::vector<VertexId>(must_include)), budget);
}

bool is_subdivision_free(const Graph& g, const Graph& h, const VertexSet& x,
                         SearchBudget* budget) {
    return !find_subdivision(g, h, x, VertexSet(g.n()), budget).has_value();
}

std::vector<SubdivisionEmbedding> enumerate_subdivisions(const Graph& g, const Graph& h,
                                                         const VertexSet& avoid, int limit,
                                                         SearchBudget* budget) {
    validate_pattern(h);
    if (limit < 1) throw MalformedInputError("limit must be >= 1");
    SearchBudget local;
    Searcher s(g, h, avoid, VertexSet(g.n()), local_or(budget, local));
    std::vector<SubdivisionEmbedding> out;
    std::set<EmbeddingKey> seen;
    s.emit = [&](const SubdivisionEmbedding& emb) {
        if (seen.insert(EmbeddingKey::of(emb, g.n())).second) out.push_back(emb);
        return static_cast<int>(out.size()) >= limit;
    };
    s.run();
    return out;
}

namespace {

}  // namespace

std::vector<VertexSet> all_minimal_embedding_sets(const Graph& g, const Graph& h,
                                                  SearchBudget* budget) {
    validate_pattern(h);
    if (g.n() > 62) throw MalformedInputError("global minimal-set sweep needs n <= 62");
    SearchBudget local;
    SearchBudget& bud = budget ? *budget : local;

    std::vector<VertexSet> accepted;
    if (!find_subdivision(g, h, VertexSet(g.n()), VertexSet(g.n()), &bud)) return accepted;

    // connected patterns only embed into connected vertex sets
    bool h_connected = [&] {
        std::vector<char> seen(h.n(), 0);
        std::vector<VertexId> stack = {0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : h.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == h.n();
    }();

    auto connected_mask = [&](uint64_t mask) {
        int start = __builtin_ctzll(mask);
        uint64_t seen = uint64_t(1) << start;
        std::vector<VertexId> stack = {start};
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(u)) {
                uint64_t bit = uint64_t(1) << w;
                if ((mask & bit) && !(seen & bit)) {
                    seen |= bit;
                    stack.push_back(w);
                }
            }
        }
        return seen == mask;
    };

    std::vector<uint64_t> accepted_masks;
    std::vector<uint64_t> failed;  // maximal infeasible masks (capped cache)
    const size_t failed_cap = 4096;

    for (int size = h.n(); size <= g.n(); ++size) {
        std::vector<int> combo(size);
        for (int i = 0; i < size; ++i) combo[i] = i;
        while (true) {
            bud.charge();
            uint64_t mask = 0;
            for (int i : combo) mask |= uint64_t(1) << i;
            bool skip = false;
            for (uint64_t prev : accepted_masks)
                if ((prev & ~mask) == 0) {
                    skip = true;
                    break;
                }
            if (!skip && h_connected && !connected_mask(mask)) skip = true;
            if (!skip)
                for (uint64_t f : failed)
                    if ((mask & ~f) == 0) {  // subset of a known-infeasible set
                        skip = true;
                        break;
                    }
            if (!skip) {
                VertexSet w(g.n());
                for (VertexId v = 0; v < g.n(); ++v)
                    if (mask >> v & 1) w.insert(v);
                if (find_subdivision(g, h, w.complement(), VertexSet(g.n()), &bud)) {
                    accepted_masks.push_back(mask);
                    accepted.push_back(w);
                } else if (failed.size() < failed_cap) {
                    std::erase_if(failed, [&](uint64_t f) { return (f & ~mask) == 0; });
                    failed.push_back(mask);
                }
            }
            int i = size - 1;
            while (i >= 0 && combo[i] == g.n() - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return accepted;
}

void for_each_minimal_set_through(const Graph& g, const Graph& h, const VertexSet& avail,
                                  VertexId through, SearchBudget* budget,
                                  const std::function<bool(const VertexSet&)>& consume) {
    validate_pattern(h);
    SearchBudget local;
    SearchBudget& bud = local_or(budget, local);

    // Search-based enumeration; accepted sets form a dominating family but
    // may need a final minimality cleanup, so early stops hand out members as
    // they come.
    VertexSet avoid = avail.complement();
    VertexSet must(g.n());
    must.insert(through);
    Searcher s(g, h, avoid, must, bud);
    s.chordless = true;
    s.break_twins = true;
    std::vector<VertexSet> accepted;
    s.dominators = &accepted;
    s.emit = [&](const SubdivisionEmbedding& emb) {
        VertexSet w = emb.vertex_set(g.n());
        for (const VertexSet& prev : accepted)
            if (prev.is_subset_of(w)) return false;
        accepted.push_back(w);
        return consume(w);
    };
    s.run();
}

std::vector<VertexSet> minimal_embedding_sets_through(const Graph& g, const Graph& h,
                                                      const VertexSet& avail, VertexId through,
                                                      SearchBudget* budget) {
    std::vector<VertexSet> accepted;
    for_each_minimal_set_through(g, h, avail, through, budget, [&](const VertexSet& w) {
        accepted.push_back(w);
        return false;
    });
    // Drop members dominated by later, smaller finds (search-based order is
    // not size-sorted).
    std::vector<VertexSet> out;
    for (size_t i = 0; i < accepted.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < accepted.size() && !dominated; ++j)
            if (j != i && accepted[j].is_subset_of(accepted[i]) && !(accepted[i] == accepted[j]))
                dominated = true;
        if (!dominated) out.push_back(accepted[i]);
    }
    return out;
}

}  // namespace epsub
