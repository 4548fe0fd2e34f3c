#include "doctest.h"

#include "epsub/errors.hpp"
#include "epsub/generators.hpp"
#include "epsub/graph_json.hpp"
#include "epsub/subdivision.hpp"

using namespace epsub;

TEST_CASE("fig1-tree structure") {
    Graph t = gen_fig1_tree();
    CHECK(t.n() == 43);
    CHECK(t.m() == 42);
    CHECK(t.degree(0) == 6);
    int deg3_depth1 = 0, deg3_depth2 = 0, leaves = 0;
    for (VertexId v = 1; v <= 6; ++v) deg3_depth1 += t.degree(v) == 3;
    for (VertexId v = 7; v <= 18; ++v) deg3_depth2 += t.degree(v) == 3;
    for (VertexId v = 19; v <= 42; ++v) leaves += t.degree(v) == 1;
    CHECK(deg3_depth1 == 6);
    CHECK(deg3_depth2 == 12);
    CHECK(leaves == 24);
}

TEST_CASE("simple generators") {
    CHECK(gen_cycle(5).m() == 5);
    CHECK(gen_path(1).m() == 0);
    CHECK(gen_path(4).m() == 3);
    CHECK(gen_star(4).degree(0) == 3);
    CHECK(gen_complete(5).m() == 10);

    Graph theta = gen_theta(1, 2, 3);
    CHECK(theta.n() == 8);
    CHECK(theta.m() == 9);
    CHECK(theta.degree(0) == 3);
    CHECK(theta.degree(1) == 3);
    // a theta graph carries a C3-subdivision through its two hubs
    CHECK(find_subdivision(theta, gen_cycle(3)).has_value());

    CHECK_THROWS_AS(gen_cycle(2), MalformedInputError);
    CHECK_THROWS_AS(gen_theta(0, 0, 3), MalformedInputError);
    CHECK_THROWS_AS(gen_gnp(5, 1.5, 1), MalformedInputError);
}

TEST_CASE("gnp determinism and spec parsing") {
    Graph a = gen_gnp(12, 0.3, 7);
    Graph b = gen_gnp(12, 0.3, 7);
    CHECK(graph_to_json(a) == graph_to_json(b));
    CHECK(a.edges() == generate("gnp 12 0.3 7").edges());

    Graph c = gen_gnp(12, 0.3, 8);
    CHECK(graph_to_json(a) != graph_to_json(c));  // different seed, different graph

    CHECK(generate("fig1-tree").n() == 43);
    CHECK(generate("cycle 6").m() == 6);
    CHECK_THROWS_AS(generate("cycle"), MalformedInputError);
    CHECK_THROWS_AS(generate("hypercube 3"), MalformedInputError);
}

TEST_CASE("graph JSON round trip") {
    Graph g = gen_gnp(10, 0.4, 99);
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());

    CHECK_THROWS_AS(graph_from_json("not json"), MalformedInputError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 3}"), MalformedInputError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[0,5]]}"), MalformedInputError);
}

TEST_CASE("embedding JSON round trip") {
    Graph g = gen_cycle(5);
    Graph h = gen_cycle(3);
    auto emb = find_subdivision(g, h);
    REQUIRE(emb.has_value());
    SubdivisionEmbedding back = embedding_from_json(h, embedding_to_json(h, *emb));
    CHECK(back == *emb);
}
