#include "epsub/menger.hpp"

#include <algorithm>
#include <queue>

#include "epsub/errors.hpp"

namespace epsub {

namespace {

// Minimal deterministic max-flow network. Arcs are explored in insertion
// order, which we keep aligned with the canonical vertex order.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int flow = 0;
    };

    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;  // arc ids per node

    explicit FlowNet(int nodes) : out(nodes) {}

    void add_arc(int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap, 0});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0, 0});  // reverse arc
    }

    int residual(int arc_id) const { return arcs[arc_id].cap - arcs[arc_id].flow; }

    void push(int arc_id, int amount) {
        arcs[arc_id].flow += amount;
        arcs[arc_id ^ 1].flow -= amount;
    }

    // One unit-augmentation via BFS (all arc capacities used here are >= 1,
    // and unit augmentations keep path extraction trivial).
    bool augment_unit(int s, int t) {
        std::vector<int> pred_arc(out.size(), -1);
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (u == t) break;
            for (int id : out[u]) {
                if (residual(id) <= 0) continue;
                int w = arcs[id].to;
                if (seen[w]) continue;
                seen[w] = 1;
                pred_arc[w] = id;
                q.push(w);
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            int id = pred_arc[v];
            push(id, 1);
            v = arcs[id ^ 1].to;
        }
        return true;
    }

    // Nodes reachable from s in the residual network.
    std::vector<char> reachable_from(int s) const {
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : out[u]) {
                if (residual(id) <= 0 || seen[arcs[id].to]) continue;
                seen[arcs[id].to] = 1;
                q.push(arcs[id].to);
            }
        }
        return seen;
    }

    // Nodes from which t is reachable in the residual network.
    std::vector<char> reaching(int t) const {
        // arc (u -> w) usable iff residual > 0; walk backwards over all arcs.
        std::vector<std::vector<int>> into(out.size());
        for (int u = 0; u < static_cast<int>(out.size()); ++u)
            for (int id : out[u])
                if (residual(id) > 0) into[arcs[id].to].push_back(u);
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(t);
        seen[t] = 1;
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            for (int u : into[w]) {
                if (seen[u]) continue;
                seen[u] = 1;
                q.push(u);
            }
        }
        return seen;
    }
};

void check_menger_inputs(const Graph& g, VertexId y, const VertexSet& a, int j) {
    if (y < 0 || y >= g.n()) throw MalformedInputError("y outside graph");
    if (a.universe() != g.n()) throw MalformedInputError("A universe does not match graph");
    if (a.contains(y)) throw MalformedInputError("y must not be in A");
    if (j < 0) throw MalformedInputError("j must be >= 0");
}

}  // namespace

bool paths_valid(const Graph& g, const std::vector<Path>& paths, VertexId y, const VertexSet& a,
                 int j) {
    if (static_cast<int>(paths.size()) != j) return false;
    VertexSet used(g.n());
    for (const Path& p : paths) {
        if (!is_path_in(g, p)) return false;
        if (p.front() != y) return false;
        if (p.size() < 2 || !a.contains(p.back())) return false;
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
            if (a.contains(p.vertices[i])) return false;  // only the far endpoint is in A
        for (VertexId v : p.vertices) {
            if (v == y) continue;
            if (used.contains(v)) return false;
            used.insert(v);
        }
    }
    return true;
}

MengerResult disjoint_paths_or_separation(const Graph& g, VertexId y, const VertexSet& a, int j) {
    check_menger_inputs(g, y, a, j);
    if (j == 0) return std::vector<Path>{};

    // Node layout: 0 = source (y), 1 = sink, then v_in = 2 + 2v, v_out = 3 + 2v.
    // A-vertices only use their in node; y uses the source directly.
    const int big = g.n() + 1;  // effectively infinite for unit-capacity cuts
    auto node_in = [&](VertexId v) { return 2 + 2 * v; };
    auto node_out = [&](VertexId v) { return 3 + 2 * v; };
    FlowNet net(2 + 2 * g.n());

    for (VertexId v = 0; v < g.n(); ++v) {
        if (v == y) continue;
        if (a.contains(v))
            net.add_arc(node_in(v), 1, 1);  // endpoint used at most once
        else
            net.add_arc(node_in(v), node_out(v), 1);  // internal capacity 1
    }
    for (VertexId u = 0; u < g.n(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (v == y) continue;  // paths never re-enter y
            if (u == y)
                net.add_arc(0, node_in(v), big);
            else if (!a.contains(u))
                net.add_arc(node_out(u), node_in(v), big);
            // edges leaving an A-vertex are unusable: paths stop at A
        }
    }

    int flow = 0;
    while (flow < j && net.augment_unit(0, 1)) ++flow;

    if (flow >= j) {
        // Decompose: every arc carries at most one unit, walk each path.
        std::vector<Path> paths;
        for (int p = 0; p < j; ++p) {
            std::vector<VertexId> seq = {y};
            int node = 0;
            while (node != 1) {
                for (int id : net.out[node]) {
                    FlowNet::Arc& arc = net.arcs[id];
                    if (arc.cap > 0 && arc.flow > 0) {
                        net.push(id, -1);
                        node = arc.to;
                        // record a vertex once, on entering its in node
                        if (node != 1 && node % 2 == 0) seq.push_back((node - 2) / 2);
                        break;
                    }
                }
            }
            paths.emplace_back(std::move(seq));
        }
        return paths;
    }

    // Min cut on the y side: cut vertices are those whose unit arc crosses
    // the residual reachability frontier. Edge arcs cannot be cut (cap big).
    std::vector<char> reach = net.reachable_from(0);
    Separation sep{VertexSet(g.n()), VertexSet(g.n())};
    sep.m.insert(y);
    for (VertexId v = 0; v < g.n(); ++v) {
        if (v == y) continue;
        bool in_reached = reach[node_in(v)];
        bool out_reached = a.contains(v) ? false : static_cast<bool>(reach[node_out(v)]);
        if (in_reached) sep.m.insert(v);
        if (!in_reached || !out_reached) sep.n.insert(v);  // cut vertices land in both
    }
    return sep;
}

std::pair<Separation, VertexId> maximal_separation(const Graph& g, VertexId y, const VertexSet& a) {
    check_menger_inputs(g, y, a, 2);

    // A-contracted network: A is the sink itself, so cut vertices are always
    // outside A. Node layout: 0 = source (y), 1 = sink (A), v_in/v_out for
    // the rest.
    const int big = g.n() + 1;
    auto node_in = [&](VertexId v) { return 2 + 2 * v; };
    auto node_out = [&](VertexId v) { return 3 + 2 * v; };
    FlowNet net(2 + 2 * g.n());

    for (VertexId v = 0; v < g.n(); ++v)
        if (v != y && !a.contains(v)) net.add_arc(node_in(v), node_out(v), 1);
    for (VertexId u = 0; u < g.n(); ++u) {
        if (a.contains(u)) continue;  // paths stop at A; nothing leaves it
        int from = (u == y) ? 0 : node_out(u);
        for (VertexId v : g.neighbors(u)) {
            if (v == y) continue;
            net.add_arc(from, a.contains(v) ? 1 : node_in(v), big);
        }
    }

    int flow = 0;
    while (flow < 2 && net.augment_unit(0, 1)) ++flow;
    if (flow == 0) throw NoDangerousPathError("no path from y to A");
    if (flow >= 2)
        throw WrongBranchError("y-A connectivity off A is >= 2; no unit separation with cut outside A");

    // Cut closest to A: the unique saturated split arc whose out node still
    // reaches the sink in the residual network.
    std::vector<char> reach_t = net.reaching(1);
    VertexId x = -1;
    for (VertexId v = 0; v < g.n(); ++v) {
        if (v == y || a.contains(v)) continue;
        if (reach_t[node_out(v)] && !reach_t[node_in(v)]) {
            x = v;
            break;
        }
    }
    if (x < 0) throw InternalInvariantError("unit cut vertex not found in residual network");

    // N = x plus every component of G - x that touches A; M = the rest plus x.
    // This is the unique inclusion-maximal M for the sink-side cut vertex.
    VertexSet keep = g.full_vertex_set();
    keep.erase(x);
    RelabeledGraph rest = induced_subgraph(g, keep);
    std::vector<int> comp(rest.graph.n(), -1);
    int ncomp = 0;
    for (VertexId v = 0; v < rest.graph.n(); ++v) {
        if (comp[v] >= 0) continue;
        std::vector<VertexId> stack = {v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : rest.graph.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<char> comp_touches_a(ncomp, 0);
    for (VertexId v : a.to_vector()) comp_touches_a[comp[rest.old_to_new[v]]] = 1;

    Separation sep{VertexSet(g.n()), VertexSet(g.n())};
    sep.m.insert(x);
    sep.n.insert(x);
    for (VertexId v = 0; v < g.n(); ++v) {
        if (v == x) continue;
        if (comp_touches_a[comp[rest.old_to_new[v]]])
            sep.n.insert(v);
        else
            sep.m.insert(v);
    }
    return {sep, x};
}

}  // namespace epsub
