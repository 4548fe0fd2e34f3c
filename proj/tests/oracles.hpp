#pragma once

// Test-only brute-force oracles. Everything here favors obviousness over
// speed and shares no logic with the implementations under test.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "epsub/graph.hpp"
#include "epsub/naive_oracle.hpp"

namespace epsub::test_oracle {

// Enumerates simple paths from y that stop at their first A-vertex, with
// every vertex outside `blocked`; calls visit(path).
inline void each_y_to_a_path(const Graph& g, VertexId y, const VertexSet& a,
                             const VertexSet& blocked,
                             const std::function<void(const Path&)>& visit) {
    std::vector<VertexId> seq = {y};
    VertexSet used(g.n());
    used.insert(y);
    std::function<void()> go = [&]() {
        VertexId cur = seq.back();
        for (VertexId w : g.neighbors(cur)) {
            if (used.contains(w) || blocked.contains(w)) continue;
            seq.push_back(w);
            if (a.contains(w)) {
                visit(Path(seq));
            } else {
                used.insert(w);
                go();
                used.erase(w);
            }
            seq.pop_back();
        }
    };
    go();
}

// True iff j paths from y to A exist, pairwise disjoint except at y
// (recursive enumeration over all path systems).
inline bool exists_disjoint_paths(const Graph& g, VertexId y, const VertexSet& a, int j,
                                  VertexSet blocked) {
    if (j == 0) return true;
    bool found = false;
    std::vector<Path> candidates;
    each_y_to_a_path(g, y, a, blocked, [&](const Path& p) { candidates.push_back(p); });
    for (const Path& p : candidates) {
        if (found) break;
        VertexSet next = blocked;
        for (VertexId v : p.vertices)
            if (v != y) next.insert(v);
        if (exists_disjoint_paths(g, y, a, j - 1, next)) found = true;
    }
    return found;
}

inline int max_disjoint_paths(const Graph& g, VertexId y, const VertexSet& a, int cap) {
    int best = 0;
    while (best < cap && exists_disjoint_paths(g, y, a, best + 1, VertexSet(g.n()))) ++best;
    return best;
}

// All separations (M, N) with a singleton cut outside A u {y}, y in M \ N and
// A inside N.
inline std::vector<Separation> all_unit_separations(const Graph& g, VertexId y,
                                                    const VertexSet& a) {
    std::vector<Separation> out;
    std::vector<VertexId> free_vertices;
    for (VertexId v = 0; v < g.n(); ++v)
        if (v != y && !a.contains(v)) free_vertices.push_back(v);

    for (VertexId x : free_vertices) {
        std::vector<VertexId> rest;
        for (VertexId v : free_vertices)
            if (v != x) rest.push_back(v);
        for (uint64_t bits = 0; bits < (uint64_t(1) << rest.size()); ++bits) {
            Separation sep{VertexSet(g.n()), VertexSet(g.n())};
            sep.m.insert(x);
            sep.n.insert(x);
            sep.m.insert(y);
            for (VertexId v : a.to_vector()) sep.n.insert(v);
            for (size_t i = 0; i < rest.size(); ++i)
                (bits >> i & 1) ? sep.m.insert(rest[i]) : sep.n.insert(rest[i]);
            if (separation_valid(g, sep, y, a, 2)) out.push_back(sep);
        }
    }
    return out;
}

// Exact maximum packing: dynamic program over the naive enumerator's
// embedding vertex sets (hosts up to 64 vertices).
inline int brute_packing_number(const Graph& g, const Graph& h) {
    std::vector<uint64_t> sets;
    for (const VertexSet& w : naive::embedding_vertex_sets(g, h, VertexSet(g.n())))
        sets.push_back(w.word0());
    std::map<uint64_t, int> memo;
    std::function<int(uint64_t)> best = [&](uint64_t avail) -> int {
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second;
        int r = 0;
        for (uint64_t w : sets)
            if ((w & ~avail) == 0) r = std::max(r, 1 + best(avail & ~w));
        memo[avail] = r;
        return r;
    };
    uint64_t all = g.n() == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n()) - 1;
    return best(all);
}

// Exact minimum hitting set size via cardinality-ordered subsets and the
// naive freeness check.
inline int brute_hitting_number(const Graph& g, const Graph& h) {
    for (int size = 0; size <= g.n(); ++size) {
        std::vector<VertexId> combo(size);
        for (int i = 0; i < size; ++i) combo[i] = i;
        while (true) {
            if (naive::is_subdivision_free(g, h, VertexSet(g.n(), combo))) return size;
            int i = size - 1;
            while (i >= 0 && combo[i] == g.n() - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return g.n();
}

}  // namespace epsub::test_oracle
