#include "epsub/generators.hpp"

#include <random>
#include <sstream>

#include "epsub/errors.hpp"

namespace epsub {

Graph gen_cycle(int n) {
    if (n < 3) throw MalformedInputError("cycle needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, std::move(edges));
}

Graph gen_path(int n) {
    if (n < 1) throw MalformedInputError("path needs n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, std::move(edges));
}

Graph gen_star(int n) {
    if (n < 2) throw MalformedInputError("star needs n >= 2");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::build(n, std::move(edges));
}

Graph gen_complete(int n) {
    if (n < 1) throw MalformedInputError("complete needs n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::build(n, std::move(edges));
}

Graph gen_theta(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw MalformedInputError("theta needs nonnegative arm sizes");
    if ((a == 0) + (b == 0) + (c == 0) > 1)
        throw MalformedInputError("theta allows at most one direct arm (parallel edges otherwise)");
    std::vector<std::pair<VertexId, VertexId>> edges;
    int next = 2;
    for (int arm : {a, b, c}) {
        VertexId prev = 0;
        for (int i = 0; i < arm; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph::build(next, std::move(edges));
}

Graph gen_fig1_tree() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= 6; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= 18; ++i) {
        edges.emplace_back(i, 2 * i + 5);
        edges.emplace_back(i, 2 * i + 6);
    }
    return Graph::build(43, std::move(edges));
}

Graph gen_gnp(int n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw MalformedInputError("gnp needs n >= 0 and p in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // 53-bit draw; identical on every platform for a fixed seed
            double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, std::move(edges));
}

Graph generate(const std::string& spec) {
    std::istringstream in(spec);
    std::string kind;
    if (!(in >> kind)) throw MalformedInputError("empty generator spec");

    auto want_int = [&](const char* what) {
        long long x;
        if (!(in >> x)) throw MalformedInputError(std::string("generator spec needs ") + what);
        return static_cast<int>(x);
    };

    if (kind == "fig1-tree") return gen_fig1_tree();
    if (kind == "cycle") return gen_cycle(want_int("n"));
    if (kind == "path") return gen_path(want_int("n"));
    if (kind == "star") return gen_star(want_int("n"));
    if (kind == "complete") return gen_complete(want_int("n"));
    if (kind == "theta") {
        int a = want_int("a"), b = want_int("b"), c = want_int("c");
        return gen_theta(a, b, c);
    }
    if (kind == "gnp") {
        int n = want_int("n");
        double p;
        if (!(in >> p)) throw MalformedInputError("gnp spec needs p");
        long long seed;
        if (!(in >> seed)) throw MalformedInputError("gnp spec needs seed");
        return gen_gnp(n, p, static_cast<uint64_t>(seed));
    }
    throw MalformedInputError("unknown generator kind: " + kind);
}

}  // namespace epsub
