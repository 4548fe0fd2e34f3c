#include "epsub/pack_hit.hpp"

#include <algorithm>
#include <map>

#include "epsub/errors.hpp"

namespace epsub {

namespace {

// Exact packing. At each state either the lowest remaining vertex stays
// unused, or it is covered by some embedding; only inclusion-minimal
// embedding vertex sets need to be branched on (any packing member can be
// shrunk to one). States that split into several components are summed
// component by component, which keeps the memo keys small; inside one
// component, branches that provably cannot beat the running maximum are cut,
// and the search stops early once the vertex-count ceiling is reached.
struct Packer {
    const Graph& g;
    const Graph& h;
    SearchBudget& budget;
    std::map<std::vector<uint64_t>, int> memo;

    std::vector<VertexSet> components_of(const VertexSet& avail) {
        std::vector<VertexSet> comps;
        VertexSet left = avail;
        while (!left.empty()) {
            VertexId start = left.to_vector().front();
            VertexSet comp(g.n());
            std::vector<VertexId> stack = {start};
            comp.insert(start);
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (VertexId w : g.neighbors(u))
                    if (left.contains(w) && !comp.contains(w)) {
                        comp.insert(w);
                        stack.push_back(w);
                    }
            }
            left -= comp;
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    int ceiling(const VertexSet& avail) const { return avail.size() / h.n(); }

    // Pivot with the fewest covering sets in practice: minimum degree inside
    // the remaining graph, ties by vertex order.
    VertexId pivot(const VertexSet& avail) const {
        VertexId best = -1;
        int best_deg = g.n() + 1;
        for (VertexId v : avail.to_vector()) {
            int deg = 0;
            for (VertexId w : g.neighbors(v)) deg += avail.contains(w);
            if (deg < best_deg) {
                best_deg = deg;
                best = v;
            }
        }
        return best;
    }

    int nu(const VertexSet& avail) {
        if (avail.size() < h.n()) return 0;
        auto it = memo.find(avail.words());
        if (it != memo.end()) return it->second;
        budget.charge();

        int result = 0;
        auto comps = components_of(avail);
        if (comps.size() > 1) {
            for (const VertexSet& comp : comps) result += nu(comp);
        } else if (find_subdivision(g, h, avail.complement(), VertexSet(g.n()), &budget)) {
            VertexId v = pivot(avail);
            int cap = ceiling(avail);
            // lazy consumption: stop pulling candidate sets once the
            // vertex-count ceiling is reached
            for_each_minimal_set_through(g, h, avail, v, &budget, [&](const VertexSet& w) {
                VertexSet rest = avail - w;
                if (1 + ceiling(rest) > result) result = std::max(result, 1 + nu(rest));
                return result == cap;
            });
            if (result < cap) {
                VertexSet rest = avail;
                rest.erase(v);
                if (ceiling(rest) > result) result = std::max(result, nu(rest));
            }
        }
        memo.emplace(avail.words(), result);
        return result;
    }

    // Walks one optimal choice sequence again, collecting member vertex sets.
    void collect(const VertexSet& avail, std::vector<VertexSet>& out, size_t limit) {
        if (out.size() >= limit || avail.size() < h.n()) return;
        int target = nu(avail);
        if (target == 0) return;

        auto comps = components_of(avail);
        if (comps.size() > 1) {
            for (const VertexSet& comp : comps) collect(comp, out, limit);
            return;
        }
        VertexId v = pivot(avail);
        bool used_v = false;
        for_each_minimal_set_through(g, h, avail, v, &budget, [&](const VertexSet& w) {
            if (1 + nu(avail - w) != target) return false;
            out.push_back(w);
            collect(avail - w, out, limit);
            used_v = true;
            return true;
        });
        if (used_v) return;
        VertexSet rest = avail;
        rest.erase(v);
        collect(rest, out, limit);
    }
};

// Exact set packing over a precomputed list of minimal embedding vertex
// sets. The pivot vertex is the lowest one that still has a candidate set;
// vertices with no candidate left are dropped without branching. Used for
// small hosts, where the one-off global sweep is affordable and every later
// state costs only mask arithmetic.
struct ListPacker {
    int n_h;
    std::vector<uint64_t> sets;                  // ascending size, then lex
    std::vector<std::vector<int>> sets_at;       // per vertex: indices of sets containing it
    std::map<uint64_t, int> memo;
    SearchBudget& budget;

    ListPacker(const Graph& g, const Graph& h, const std::vector<VertexSet>& minimal,
               SearchBudget& bud)
        : n_h(h.n()), sets_at(g.n()), budget(bud) {
        for (const VertexSet& w : minimal) sets.push_back(w.word0());
        for (size_t i = 0; i < sets.size(); ++i)
            for (VertexId v = 0; v < g.n(); ++v)
                if (sets[i] >> v & 1) sets_at[v].push_back(static_cast<int>(i));
    }

    // Drops vertices no candidate set can cover any more.
    uint64_t canonical(uint64_t avail) const {
        while (true) {
            uint64_t keep = 0;
            for (uint64_t rest = avail; rest;) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                for (int i : sets_at[v])
                    if ((sets[i] & ~avail) == 0) {
                        keep |= uint64_t(1) << v;
                        break;
                    }
            }
            if (keep == avail) return avail;
            avail = keep;
        }
    }

    int nu(uint64_t avail) {
        avail = canonical(avail);
        if (avail == 0) return 0;
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second;
        budget.charge();

        int cap = __builtin_popcountll(avail) / n_h;
        int v = __builtin_ctzll(avail);
        int result = 0;
        for (int i : sets_at[v]) {
            if ((sets[i] & ~avail) != 0) continue;
            uint64_t rest = avail & ~sets[i];
            if (1 + __builtin_popcountll(rest) / n_h <= result) continue;
            result = std::max(result, 1 + nu(rest));
            if (result == cap) break;
        }
        if (result < cap) result = std::max(result, nu(avail & ~(uint64_t(1) << v)));

        memo.emplace(avail, result);
        return result;
    }

    void collect(uint64_t avail, std::vector<uint64_t>& out, size_t limit) {
        while (out.size() < limit) {
            avail = canonical(avail);
            if (avail == 0) return;
            int target = nu(avail);
            if (target == 0) return;
            int v = __builtin_ctzll(avail);
            bool used = false;
            for (int i : sets_at[v]) {
                if ((sets[i] & ~avail) != 0) continue;
                if (1 + nu(avail & ~sets[i]) == target) {
                    out.push_back(sets[i]);
                    avail &= ~sets[i];
                    used = true;
                    break;
                }
            }
            if (!used) avail &= ~(uint64_t(1) << v);
        }
    }
};

std::vector<VertexSet> packing_sets(const Graph& g, const Graph& h, size_t limit,
                                    SearchBudget& bud) {
    if (g.n() <= 16) {
        ListPacker packer(g, h, all_minimal_embedding_sets(g, h, &bud), bud);
        uint64_t all = g.n() == 0 ? 0 : (~uint64_t(0) >> (64 - g.n()));
        std::vector<uint64_t> masks;
        packer.collect(all, masks, limit);
        std::vector<VertexSet> out;
        for (uint64_t mask : masks) {
            VertexSet w(g.n());
            for (VertexId v = 0; v < g.n(); ++v)
                if (mask >> v & 1) w.insert(v);
            out.push_back(w);
        }
        return out;
    }
    Packer packer{g, h, bud, {}};
    std::vector<VertexSet> out;
    packer.collect(g.full_vertex_set(), out, limit);
    return out;
}

}  // namespace

std::vector<SubdivisionEmbedding> max_packing(const Graph& g, const Graph& h, int cap,
                                              SearchBudget* budget) {
    validate_pattern(h);
    if (cap < 0) throw MalformedInputError("cap must be >= 0");
    SearchBudget local;
    SearchBudget& bud = budget ? *budget : local;
    std::vector<VertexSet> sets = packing_sets(g, h, static_cast<size_t>(cap) + 1, bud);

    std::vector<SubdivisionEmbedding> out;
    for (const VertexSet& w : sets) {
        auto emb = find_subdivision(g, h, w.complement(), VertexSet(g.n()), &bud);
        if (!emb) throw InternalInvariantError("packing reconstruction lost an embedding");
        out.push_back(*emb);
    }
    return out;
}

int packing_number(const Graph& g, const Graph& h, SearchBudget* budget) {
    validate_pattern(h);
    SearchBudget local;
    SearchBudget& bud = budget ? *budget : local;
    if (g.n() <= 16) {
        ListPacker packer(g, h, all_minimal_embedding_sets(g, h, &bud), bud);
        uint64_t all = g.n() == 0 ? 0 : (~uint64_t(0) >> (64 - g.n()));
        return packer.nu(all);
    }
    Packer packer{g, h, bud, {}};
    return packer.nu(g.full_vertex_set());
}

std::vector<VertexId> min_hitting_set(const Graph& g, const Graph& h, SearchBudget* budget) {
    validate_pattern(h);
    SearchBudget local;
    SearchBudget& bud = budget ? *budget : local;

    std::vector<VertexSet> known;  // embedding vertex sets seen so far

    auto is_free_or_learn = [&](const VertexSet& z) {
        for (const VertexSet& w : known)
            if (!w.intersects(z)) return false;  // misses a known embedding
        auto emb = find_subdivision(g, h, z, VertexSet(g.n()), &bud);
        if (!emb) return true;
        known.push_back(emb->vertex_set(g.n()));
        return false;
    };

    for (int size = 0; size <= g.n(); ++size) {
        // lexicographically ordered size-subsets of 0..n-1
        std::vector<VertexId> combo(size);
        for (int i = 0; i < size; ++i) combo[i] = i;
        while (true) {
            VertexSet z(g.n(), combo);
            if (is_free_or_learn(z)) return combo;
            // next combination
            int i = size - 1;
            while (i >= 0 && combo[i] == g.n() - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    throw InternalInvariantError("no hitting set found, not even V(G)");
}

BigInt ep_bound_forest(long long t, long long t_prime, long long k) {
    if (t < t_prime || t_prime < 1 || k < 1)
        throw MalformedInputError("ep_bound_forest requires t >= t' >= 1 and k >= 1");
    return BigInt(t) * k - t_prime;
}

LocalityBound locality_bound(long long f_k, long long m, long long n, long long k) {
    if (m < 1 || k < 0 || f_k < 0)
        throw MalformedInputError("locality_bound requires m >= 1, k >= 0, f_k >= 0");
    BigInt base = pow2(static_cast<unsigned>(f_k)) * m * k;
    BigInt delta = BigInt(k) * (BigInt(m) - n);
    return {base + delta, base - delta};
}

}  // namespace epsub
