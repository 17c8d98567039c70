#include <doctest.h>

#include "qtough/graph.hpp"
#include "qtough/graph_io.hpp"
#include "qtough/random_graphs.hpp"

using namespace qtough;

TEST_CASE("graph6 known encodings") {
    CHECK(to_graph6(make_complete(4)) == "C~");
    CHECK(to_graph6(make_complete(3)) == "Bw");
    CHECK(to_graph6(make_empty(5)) == "D??");
    CHECK(to_graph6(make_empty(0)) == "?");
    CHECK(from_graph6("C~") == make_complete(4));
    CHECK(from_graph6("D??") == make_empty(5));

    // the reference vector: n=5 with edges 02, 04, 13, 34 encodes as DQc
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(0, 4);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    CHECK(to_graph6(g) == "DQc");
    CHECK(from_graph6("DQc") == g);
}

TEST_CASE("graph6 header handling") {
    CHECK(from_graph6(">>graph6<<Bw") == make_complete(3));
    CHECK(from_graph6("Bw\n") == make_complete(3));
    CHECK_THROWS_AS(from_graph6(">>sparse6<<Bw"), ParseError);
}

TEST_CASE("graph6 malformed input carries a byte offset") {
    try {
        from_graph6(std::string("D~") + '\x01' + "xx");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(from_graph6("D"), ParseError);      // truncated
    CHECK_THROWS_AS(from_graph6("C~~~"), ParseError);   // trailing data
    CHECK_THROWS_AS(from_graph6(""), ParseError);
}

TEST_CASE("graph6 rejects oversized orders") {
    // 18-bit size form announcing 100000 vertices
    std::string big = "~";
    big += static_cast<char>(63 + ((100000 >> 12) & 0x3f));
    big += static_cast<char>(63 + ((100000 >> 6) & 0x3f));
    big += static_cast<char>(63 + (100000 & 0x3f));
    CHECK_THROWS_AS(from_graph6(big), ParseError);
}

TEST_CASE("graph6 encodes 63 and 64 vertex graphs") {
    const Graph g63 = make_cycle(63);
    const Graph g64 = make_cycle(64);
    CHECK(from_graph6(to_graph6(g63)) == g63);
    CHECK(from_graph6(to_graph6(g64)) == g64);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng = stream_rng(21, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(bounded(rng, 20));
        const Graph g = gnp(n, unit_real(rng), rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("edge list round trip") {
    const Graph g = make_cycle(6);
    CHECK(from_edge_list(to_edge_list(g)) == g);
    CHECK(from_edge_list("2 0") == make_empty(2));
    CHECK(from_edge_list("0 0") == make_empty(0));
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_AS(from_edge_list("abc"), ParseError);
    CHECK_THROWS_AS(from_edge_list("3 2\n0 1"), ParseError);        // missing edge
    CHECK_THROWS_AS(from_edge_list("3 1\n0 3"), ParseError);        // out of range
    CHECK_THROWS_AS(from_edge_list("3 1\n1 1"), ParseError);        // self-loop
    CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n0 1"), ParseError);   // duplicate
    CHECK_THROWS_AS(from_edge_list("3 1\n0 1\nrest"), ParseError);  // trailing data
}

TEST_CASE("format auto-detection") {
    CHECK(detect_format("5 0\n") == GraphFormat::EdgeList);
    CHECK(detect_format("D~{") == GraphFormat::Graph6);
    CHECK(detect_format(">>graph6<<D~{") == GraphFormat::Graph6);
    CHECK(parse_graph("Bw") == make_complete(3));
    CHECK(parse_graph("3 3\n0 1\n1 2\n0 2\n") == make_complete(3));
    CHECK_THROWS_AS(detect_format("   "), ParseError);
}
