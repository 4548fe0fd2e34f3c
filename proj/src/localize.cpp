#include "epsub/localize.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "epsub/errors.hpp"
#include "epsub/menger.hpp"

namespace epsub {

VertexSet HittingTriple::s_vertices(int host_n) const {
    VertexSet out(host_n);
    for (const auto& emb : s) out |= emb.vertex_set(host_n);
    return out;
}

VertexSet HittingTriple::branch_vertices(int host_n) const {
    VertexSet out(host_n);
    for (const auto& emb : s) out |= emb.branch_set(host_n);
    return out;
}

VertexSet HittingTriple::y_set(int host_n) const { return VertexSet(host_n, y); }

LocalizeContext make_context(const Graph& g, const Graph& h, int k, int z, SearchBudget* budget) {
    return LocalizeContext{g, h, k, z, pow2(static_cast<unsigned>(z)) * h.m() * k, budget};
}

void verify_triple(LocalizeContext& ctx, const HittingTriple& triple, const char* where) {
    const Graph& g = ctx.g;
    auto fail = [&](const std::string& what) {
        throw InternalInvariantError(std::string(where) + ": " + what);
    };

    if (static_cast<int>(triple.s.size()) != ctx.k) fail("embedding count differs from k");
    VertexSet seen(g.n());
    for (const auto& emb : triple.s) {
        if (!verify_embedding(g, ctx.h, emb)) fail("invalid embedding in S");
        VertexSet vs = emb.vertex_set(g.n());
        if (vs.intersects(seen)) fail("embeddings in S are not pairwise disjoint");
        seen |= vs;
    }

    VertexSet s_set = triple.s_vertices(g.n());
    if (!triple.branch_vertices(g.n()).is_subset_of(triple.x))
        fail("X misses a branch vertex");
    if (!triple.x.is_subset_of(s_set)) fail("X is not contained in V(S)");

    for (size_t i = 0; i < triple.y.size(); ++i) {
        VertexId v = triple.y[i];
        if (v < 0 || v >= g.n()) fail("Y vertex outside graph");
        if (i > 0 && triple.y[i - 1] >= v) fail("Y is not strictly ascending");
        if (s_set.contains(v)) fail("Y intersects V(S)");
    }

    if (!is_subdivision_free(g, ctx.h, triple.x | triple.y_set(g.n()), ctx.budget))
        fail("G minus (X u Y) still contains an H-subdivision");
}

HittingTriple make_triple(LocalizeContext& ctx, std::vector<SubdivisionEmbedding> embeddings,
                          const std::vector<VertexId>& x, std::vector<VertexId> y) {
    HittingTriple triple{std::move(embeddings), VertexSet(ctx.g.n(), x), std::move(y)};
    std::sort(triple.y.begin(), triple.y.end());
    verify_triple(ctx, triple, "make_triple");
    return triple;
}

namespace {

BigInt score_from(const LocalizeContext& ctx, const std::vector<long long>& counts) {
    BigInt total = 0, cpow = 1;
    for (long long ni : counts) {
        cpow *= ctx.c;
        total += cpow * ni;
    }
    return total;
}

BigInt acceptability_cap(const LocalizeContext& ctx, int y_size, int slack) {
    int expo = ctx.z - y_size + slack;
    if (expo < 0) throw InternalInvariantError("|Y| exceeds z in acceptability exponent");
    return pow2(static_cast<unsigned>(expo)) * ctx.h.m() * ctx.k;
}

// Vertices reachable from start moving only through `through` vertices;
// start itself is included in the result.
VertexSet reach_through(const Graph& g, VertexId start, const VertexSet& through) {
    VertexSet seen(g.n());
    seen.insert(start);
    std::vector<VertexId> stack = {start};
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(u)) {
            if (!through.contains(w) || seen.contains(w)) continue;
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen;
}

Path map_path_back(const Path& p, const std::vector<VertexId>& new_to_old) {
    std::vector<VertexId> seq;
    seq.reserve(p.vertices.size());
    for (VertexId v : p.vertices) seq.push_back(new_to_old[v]);
    return Path(std::move(seq));
}

// Replaces the stretch of edge_path strictly between pos_a and pos_b with the
// detour a -...- junction -...- b given by the two witness paths (each runs
// from the junction to its P* endpoint).
Path rerouted_edge_path(const Path& edge_path, int pos_a, int pos_b, const Path& pa,
                        const Path& pb) {
    std::vector<VertexId> seq(edge_path.vertices.begin(), edge_path.vertices.begin() + pos_a + 1);
    seq.insert(seq.end(), pa.vertices.rbegin() + 1, pa.vertices.rend());
    seq.insert(seq.end(), pb.vertices.begin() + 1, pb.vertices.end());
    seq.insert(seq.end(), edge_path.vertices.begin() + pos_b + 1, edge_path.vertices.end());
    return Path(std::move(seq));
}

HittingTriple reroute(LocalizeContext& ctx, const HittingTriple& triple,
                      const PartitionPath& pp, const Classification& cls, VertexId junction,
                      bool drop_junction_from_y, const char* where) {
    Path pa = cls.pa, pb = cls.pb;
    const auto& vs = pp.path.vertices;
    auto local_pos = [&](VertexId v) {
        auto it = std::find(vs.begin(), vs.end(), v);
        if (it == vs.end() || it == vs.begin() || it + 1 == vs.end())
            throw InternalInvariantError(std::string(where) + ": witness endpoint not in P*");
        return static_cast<int>(it - vs.begin());
    };
    int ia = local_pos(pa.back());
    int ib = local_pos(pb.back());
    if (ia == ib) throw InternalInvariantError(std::string(where) + ": witness endpoints coincide");
    if (ia > ib) {
        std::swap(ia, ib);
        std::swap(pa, pb);
    }

    HittingTriple next = triple;
    Path& edge_path = next.s[pp.emb_index].edge_paths[pp.h_edge];
    edge_path = rerouted_edge_path(edge_path, pp.offset + ia, pp.offset + ib, pa, pb);

    next.x.insert(junction);
    if (drop_junction_from_y)
        next.y.erase(std::remove(next.y.begin(), next.y.end(), junction), next.y.end());

    ctx.bump_version();
    verify_triple(ctx, next, where);
    if (!(next.branch_vertices(ctx.g.n()) == triple.branch_vertices(ctx.g.n())))
        throw InternalInvariantError(std::string(where) + ": branch vertices changed");
    return next;
}

}  // namespace

HittingTriple initial_triple(LocalizeContext& ctx, const std::vector<SubdivisionEmbedding>& packing,
                             const std::vector<VertexId>& hitting_set) {
    const Graph& g = ctx.g;
    if (static_cast<int>(packing.size()) != ctx.k)
        throw MalformedInputError("initial_triple: packing size differs from k");

    HittingTriple triple;
    triple.s = packing;
    VertexSet s_set = triple.s_vertices(g.n());
    VertexSet z_set(g.n(), hitting_set);

    triple.x = triple.branch_vertices(g.n()) | (s_set & z_set);
    triple.y = (z_set - s_set).to_vector();  // ascending

    verify_triple(ctx, triple, "initial_triple");

    PathPartition part = path_partition(ctx, triple);
    if (BigInt(part.size()) > acceptability_cap(ctx, static_cast<int>(triple.y.size()), 0))
        throw InternalInvariantError("initial triple is not acceptable");
    return triple;
}

PathPartition path_partition(LocalizeContext& ctx, const HittingTriple& triple) {
    PathPartition out;
    for (size_t ei = 0; ei < triple.s.size(); ++ei) {
        const auto& emb = triple.s[ei];
        for (size_t e = 0; e < emb.edge_paths.size(); ++e) {
            const auto& vs = emb.edge_paths[e].vertices;
            int start = 0;
            for (int pos = 1; pos < static_cast<int>(vs.size()); ++pos) {
                if (!triple.x.contains(vs[pos])) continue;
                out.paths.push_back({static_cast<int>(ei), static_cast<int>(e), start,
                                     Path({vs.begin() + start, vs.begin() + pos + 1})});
                start = pos;
            }
            if (start != static_cast<int>(vs.size()) - 1)
                throw InternalInvariantError("edge path does not end in X");
        }
    }

    long long expected = triple.x.size() +
                         static_cast<long long>(ctx.k) * (ctx.h.m() - ctx.h.n());
    if (out.size() != expected)
        throw InternalInvariantError("path partition identity |P| = |X| + k(m-n) violated");
    return out;
}

VertexSet dangerous_vertices(LocalizeContext& ctx, const HittingTriple& triple, int i) {
    if (i < 1 || i > static_cast<int>(triple.y.size()))
        throw MalformedInputError("dangerous_vertices: index out of range");
    VertexId yi = triple.y[i - 1];
    auto key = std::make_pair(ctx.state_version, yi);
    auto it = ctx.dangerous_cache.find(key);
    if (it != ctx.dangerous_cache.end()) return it->second;

    const Graph& g = ctx.g;
    VertexSet s_set = triple.s_vertices(g.n());
    VertexSet out(g.n());
    for (VertexId v = 0; v < g.n(); ++v) {
        if (s_set.contains(v)) continue;
        VertexSet must(g.n());
        must.insert(v);
        must.insert(yi);
        if (find_subdivision(g, ctx.h, triple.x, must, ctx.budget)) out.insert(v);
    }
    ctx.dangerous_cache.emplace(key, out);
    return out;
}

ActivePaths active_paths(LocalizeContext& ctx, const HittingTriple& triple,
                         const PathPartition& partition, const VertexSet& dangerous, int i) {
    const Graph& g = ctx.g;
    VertexId yi = triple.y[i - 1];
    // Interiors of dangerous paths may not touch Y: a later rewrite would
    // otherwise pull a Y-vertex into S.
    VertexSet eligible = dangerous - triple.y_set(g.n());
    VertexSet reach = reach_through(g, yi, eligible);

    ActivePaths out;
    for (int idx = 0; idx < partition.size(); ++idx) {
        bool active = false;
        for (VertexId p : partition.paths[idx].path.interior()) {
            for (VertexId w : g.neighbors(p)) {
                if (reach.contains(w)) {
                    active = true;
                    break;
                }
            }
            if (active) break;
        }
        if (active) out.indices.push_back(idx);
    }
    out.count = static_cast<long long>(out.indices.size());
    return out;
}

std::vector<long long> active_counts(LocalizeContext& ctx, const HittingTriple& triple,
                                     const PathPartition& partition) {
    std::vector<long long> counts;
    for (int i = 1; i <= static_cast<int>(triple.y.size()); ++i) {
        VertexSet dang = dangerous_vertices(ctx, triple, i);
        counts.push_back(active_paths(ctx, triple, partition, dang, i).count);
    }
    return counts;
}

BigInt score(LocalizeContext& ctx, const HittingTriple& triple) {
    PathPartition part = path_partition(ctx, triple);
    return score_from(ctx, active_counts(ctx, triple, part));
}

Classification classify_active_path(LocalizeContext& ctx, const HittingTriple& triple,
                                    const PathPartition& partition, int path_index,
                                    const VertexSet& dangerous, int d) {
    const Graph& g = ctx.g;
    VertexId yd = triple.y[d - 1];
    const PartitionPath& pp = partition.paths[path_index];
    VertexSet pstar(g.n(), pp.path.interior());
    VertexSet eligible = dangerous - triple.y_set(g.n());
    VertexSet reach = reach_through(g, yd, eligible);

    // Entry points of dangerous paths into P*. Every type-II witness x must
    // satisfy T = {x}, so |T| = 1 decides type II exactly and first.
    std::vector<VertexId> entries;
    for (VertexId p : pstar.to_vector()) {
        for (VertexId w : g.neighbors(p)) {
            if (reach.contains(w)) {
                entries.push_back(p);
                break;
            }
        }
    }
    if (entries.empty())
        throw InternalInvariantError("classify_active_path called on an inactive path");
    if (entries.size() == 1) return Classification{StepRecord::Kind::TypeII, entries[0], {}, {}};

    // Menger on G' = induced(P* u dangerous-outside-Y u {y_d}).
    VertexSet keep = pstar | eligible;
    keep.insert(yd);
    RelabeledGraph sub = induced_subgraph(g, keep);
    VertexSet a2(sub.graph.n());
    for (VertexId p : pstar.to_vector()) a2.insert(sub.old_to_new[p]);

    MengerResult res = disjoint_paths_or_separation(sub.graph, sub.old_to_new[yd], a2, 2);
    if (auto* paths = std::get_if<std::vector<Path>>(&res)) {
        return Classification{StepRecord::Kind::TypeI, -1,
                              map_path_back((*paths)[0], sub.new_to_old),
                              map_path_back((*paths)[1], sub.new_to_old)};
    }

    // With >= 2 entries the inclusion-maximal unit cut is a dangerous vertex,
    // and two disjoint witness paths from it into P* exist inside N.
    auto [sep, x2] = maximal_separation(sub.graph, sub.old_to_new[yd], a2);
    VertexId x = sub.new_to_old[x2];
    if (pstar.contains(x))
        throw InternalInvariantError("maximal separation cut landed in P* despite two entries");

    RelabeledGraph nsub = induced_subgraph(sub.graph, sep.n);
    VertexSet a3(nsub.graph.n());
    for (VertexId p : a2.to_vector()) a3.insert(nsub.old_to_new[p]);
    MengerResult witness = disjoint_paths_or_separation(nsub.graph, nsub.old_to_new[x2], a3, 2);
    auto* wpaths = std::get_if<std::vector<Path>>(&witness);
    if (!wpaths)
        throw InternalInvariantError("maximal separation has no two-path witness from its cut");
    return Classification{StepRecord::Kind::TypeIII, x,
                          map_path_back(map_path_back((*wpaths)[0], nsub.new_to_old), sub.new_to_old),
                          map_path_back(map_path_back((*wpaths)[1], nsub.new_to_old), sub.new_to_old)};
}

HittingTriple apply_type_i(LocalizeContext& ctx, const HittingTriple& triple,
                           const PathPartition& partition, int path_index,
                           const Classification& cls, int d) {
    VertexId yd = triple.y[d - 1];
    HittingTriple next =
        reroute(ctx, triple, partition.paths[path_index], cls, yd, true, "apply_type_i");
    if (next.x.size() != triple.x.size() + 1 || next.y.size() + 1 != triple.y.size())
        throw InternalInvariantError("apply_type_i: |X| or |Y| did not move by one");
    return next;
}

HittingTriple apply_type_ii(LocalizeContext& ctx, const HittingTriple& triple,
                            const PathPartition& partition, int path_index,
                            const Classification& cls) {
    const PartitionPath& pp = partition.paths[path_index];
    const auto& interior = pp.path.interior();
    if (std::find(interior.begin(), interior.end(), cls.x) == interior.end())
        throw InternalInvariantError("apply_type_ii: witness vertex is not in P*");

    HittingTriple next = triple;
    next.x.insert(cls.x);
    ctx.bump_version();
    verify_triple(ctx, next, "apply_type_ii");
    if (next.x.size() != triple.x.size() + 1)
        throw InternalInvariantError("apply_type_ii: X did not grow by one");
    return next;
}

HittingTriple apply_type_iii(LocalizeContext& ctx, const HittingTriple& triple,
                             const PathPartition& partition, int path_index,
                             const Classification& cls) {
    HittingTriple next =
        reroute(ctx, triple, partition.paths[path_index], cls, cls.x, false, "apply_type_iii");
    if (next.x.size() != triple.x.size() + 1 || next.y.size() != triple.y.size())
        throw InternalInvariantError("apply_type_iii: |X| or |Y| moved unexpectedly");
    return next;
}

HittingTriple prune_y(LocalizeContext& ctx, const HittingTriple& triple) {
    if (triple.y.empty()) throw MalformedInputError("prune_y on empty Y");
    HittingTriple next = triple;
    next.y.pop_back();
    // Dangerousness depends only on X and S, so the cache stays valid, but
    // the hitting property must be re-established by the oracle.
    verify_triple(ctx, next, "prune_y");
    return next;
}

Certificate localize(const Graph& g, const Graph& h, const LocalizeOptions& options,
                     StepObserver* observer) {
    validate_pattern(h);
    SearchBudget budget(options.max_search_nodes);
    Certificate cert;
    LocalizeContext ctx = make_context(g, h, 0, 0, &budget);
    std::optional<HittingTriple> current;

    try {
        auto packing = max_packing(g, h, std::numeric_limits<int>::max() - 1, &budget);
        int k = static_cast<int>(packing.size());
        auto hitting = min_hitting_set(g, h, &budget);
        int z = static_cast<int>(hitting.size());

        cert.k = k;
        cert.z = z;
        LocalityBound lb = locality_bound(z, h.m(), h.n(), k);
        cert.bound_stated = lb.stated;
        cert.bound_derived = lb.derived;
        if (k == 0) return cert;

        ctx.k = k;
        ctx.z = z;
        ctx.c = pow2(static_cast<unsigned>(z)) * h.m() * k;

        HittingTriple triple = initial_triple(ctx, packing, hitting);
        current = triple;
        const VertexSet initial_branches = triple.branch_vertices(g.n());

        long long steps = 0;
        auto charge_step = [&]() {
            if (++steps > options.max_steps) throw BudgetExceededError("step budget exhausted");
        };

        auto finish_record = [&](StepRecord rec, const HittingTriple& after) {
            PathPartition part_after = path_partition(ctx, after);
            auto counts_after = active_counts(ctx, after, part_after);
            rec.score_after = score_from(ctx, counts_after);
            rec.n_vector = counts_after;
            cert.trace.push_back(std::move(rec));
            if (observer) observer->on_step(ctx, after, part_after, cert.trace.back());
            return cert.trace.back().score_after;
        };

        {
            PathPartition part0 = path_partition(ctx, triple);
            auto counts0 = active_counts(ctx, triple, part0);
            StepRecord rec;
            rec.kind = StepRecord::Kind::Init;
            rec.score_before = score_from(ctx, counts0);
            rec.score_after = rec.score_before;
            rec.n_vector = counts0;
            cert.trace.push_back(std::move(rec));
            if (observer) observer->on_step(ctx, triple, part0, cert.trace.back());
        }

        // Rewrite loop. A "round" is the span of steps that eliminates the
        // current largest y_d with at least one type operation; prunes of a
        // y_d that was never active this visit are Y-minimalization only.
        bool in_round = false;
        VertexId round_target = -1;
        BigInt round_start_score = 0;
        long long round_nd = 0, round_ops = 0;

        while (true) {
            PathPartition part = path_partition(ctx, triple);
            auto counts = active_counts(ctx, triple, part);
            BigInt sc = score_from(ctx, counts);

            if (!(triple.branch_vertices(g.n()) == initial_branches))
                throw InternalInvariantError("branch vertex set drifted during the run");
            if (BigInt(part.size()) >
                acceptability_cap(ctx, static_cast<int>(triple.y.size()), in_round ? 1 : 0))
                throw InternalInvariantError(in_round ? "in-flight acceptability violated"
                                                      : "acceptability violated");

            if (triple.y.empty()) break;
            int d = static_cast<int>(triple.y.size());
            VertexId yd = triple.y.back();

            if (counts[d - 1] == 0) {
                charge_step();
                HittingTriple next = prune_y(ctx, triple);
                StepRecord rec;
                rec.kind = StepRecord::Kind::PruneY;
                rec.y_index = d;
                rec.score_before = sc;
                BigInt sc_after = finish_record(std::move(rec), next);
                if (in_round && round_target == yd) {
                    if (round_start_score - sc_after < ctx.c)
                        throw InternalInvariantError("score did not drop by C over a round");
                    in_round = false;
                    round_target = -1;
                }
                triple = std::move(next);
                current = triple;
                continue;
            }

            if (!in_round || round_target != yd) {
                in_round = true;
                round_target = yd;
                round_start_score = sc;
                round_nd = counts[d - 1];
                round_ops = 0;
            }

            VertexSet dang = dangerous_vertices(ctx, triple, d);
            ActivePaths act = active_paths(ctx, triple, part, dang, d);

            // Deterministic choice: the active path whose interior holds the
            // smallest-ordered vertex.
            int chosen = -1;
            VertexId best = std::numeric_limits<VertexId>::max();
            for (int idx : act.indices) {
                for (VertexId v : part.paths[idx].path.interior())
                    if (v < best) {
                        best = v;
                        chosen = idx;
                    }
            }
            if (chosen < 0) throw InternalInvariantError("active count positive but no path chosen");

            Classification cls = classify_active_path(ctx, triple, part, chosen, dang, d);
            charge_step();
            HittingTriple next = cls.kind == StepRecord::Kind::TypeI
                                     ? apply_type_i(ctx, triple, part, chosen, cls, d)
                                 : cls.kind == StepRecord::Kind::TypeII
                                     ? apply_type_ii(ctx, triple, part, chosen, cls)
                                     : apply_type_iii(ctx, triple, part, chosen, cls);
            if (++round_ops == round_nd + 1)
                cert.warnings.push_back("round for y=" + std::to_string(yd) +
                                        " exceeded its initial N_d budget");

            StepRecord rec;
            rec.kind = cls.kind;
            rec.y_index = d;
            rec.path = part.paths[chosen].path.vertices;
            rec.added_x = cls.kind == StepRecord::Kind::TypeI ? yd : cls.x;
            rec.score_before = sc;
            BigInt sc_after = finish_record(std::move(rec), next);

            if (cls.kind == StepRecord::Kind::TypeI) {
                if (round_start_score - sc_after < ctx.c)
                    throw InternalInvariantError("score did not drop by C over a round");
                in_round = false;
                round_target = -1;
            }
            triple = std::move(next);
            current = triple;
        }

        cert.l = ctx.k;
        cert.embeddings = triple.s;
        cert.x = triple.x.to_vector();
        if (BigInt(static_cast<long long>(cert.x.size())) > cert.bound_derived)
            throw InternalInvariantError("final |X| exceeds the derived bound");
        return cert;
    } catch (const BudgetExceededError& e) {
        cert.status = "budget_exceeded";
        cert.warnings.push_back(e.what());
        if (current) {
            cert.l = static_cast<int>(current->s.size());
            cert.embeddings = current->s;
            cert.x = current->x.to_vector();
        }
        return cert;
    }
}

}  // namespace epsub
