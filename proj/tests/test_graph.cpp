#include <doctest.h>

#include "qtough/graph.hpp"
#include "qtough/random_graphs.hpp"

using namespace qtough;

namespace {

// all-subsets reference for the branch-and-bound solver
int independence_number_naive(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((mask >> v) & 1)
                if (g.neighbors(v) & mask) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("complete graph constructor") {
    CHECK(make_complete(1).order() == 1);
    CHECK(make_complete(1).edge_count() == 0);
    CHECK(make_complete(4).edge_count() == 6);
    CHECK(make_complete(10).edge_count() == 45);
    CHECK(make_complete(0).order() == 0);
}

TEST_CASE("cycle constructor") {
    CHECK(make_cycle(3) == make_complete(3));
    const Graph c6 = make_cycle(6);
    CHECK(c6.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("empty graph constructor") {
    CHECK(make_empty(0).order() == 0);
    CHECK(components_count(make_empty(3)) == 3);
    CHECK(independence_number(make_empty(5)) == 5);
}

TEST_CASE("disjoint union") {
    const Graph g = disjoint_union(make_complete(3), make_complete(2));
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(components_count(g) == 2);

    const Graph same = disjoint_union(make_cycle(4), make_empty(0));
    CHECK(same == make_cycle(4));

    const Graph three = disjoint_union(make_complete(8), copies(2, make_complete(1)));
    CHECK(components_count(three) == 3);
    CHECK(three.edge_count() == 28);
}

TEST_CASE("copies") {
    CHECK(copies(3, make_complete(1)).order() == 3);
    CHECK(copies(3, make_complete(1)).edge_count() == 0);
    CHECK(copies(0, make_complete(5)).order() == 0);
    const Graph two_k3 = copies(2, make_complete(3));
    CHECK(two_k3.order() == 6);
    CHECK(two_k3.edge_count() == 6);
    CHECK(components_count(two_k3) == 2);
}

TEST_CASE("join") {
    // K_1 v (K_8 u K_1): 10 vertices, 28 + 0 + 1*9 = 37 edges
    const Graph g = join(make_complete(1), disjoint_union(make_complete(8), make_complete(1)));
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 37);
    CHECK(is_connected(g));

    CHECK(join(make_complete(3), make_complete(4)) == make_complete(7));

    const Graph p3 = join(make_complete(1), make_empty(2));
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(0) == 2);
}

TEST_CASE("join edge identity on random pairs") {
    std::mt19937_64 rng = stream_rng(11, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n1 = static_cast<int>(bounded(rng, 7));
        const int n2 = static_cast<int>(bounded(rng, 7));
        const Graph g1 = gnp(n1, unit_real(rng), rng);
        const Graph g2 = gnp(n2, unit_real(rng), rng);
        const Graph j = join(g1, g2);
        CHECK(j.edge_count() == g1.edge_count() + g2.edge_count() + n1 * n2);
        if (n1 >= 1 && n2 >= 1) CHECK(is_connected(j));
        const Graph u = disjoint_union(g1, g2);
        CHECK(components_count(u) == components_count(g1) + components_count(g2));
    }
}

TEST_CASE("remove vertices") {
    const Graph c6 = make_cycle(6);
    CHECK(remove_vertices(c6, 0) == c6);

    const Graph split = remove_vertices(c6, set_from_members({0, 3}));
    CHECK(split.order() == 4);
    CHECK(components_count(split) == 2);

    // dropping the join vertex of K_1 v (K_8 u K_1) leaves K_8 u K_1
    const Graph g = join(make_complete(1), disjoint_union(make_complete(8), make_complete(1)));
    const Graph rest = remove_vertices(g, 1);
    CHECK(components_count(rest) == 2);
    CHECK(rest == disjoint_union(make_complete(8), make_complete(1)));

    CHECK_THROWS_AS(remove_vertices(make_complete(3), std::uint64_t{1} << 5),
                    std::invalid_argument);
}

TEST_CASE("component counting") {
    CHECK(components_count(make_complete(7)) == 1);
    CHECK(components_count(copies(5, make_complete(1))) == 5);
    CHECK(components_count(make_empty(0)) == 0);
    const Graph g = disjoint_union(disjoint_union(make_complete(8), make_complete(1)),
                                   make_complete(1));
    CHECK(components_count(g) == 3);
}

TEST_CASE("isolated vertices") {
    CHECK(isolated_count(make_complete(5)) == 0);
    CHECK(isolated_count(make_empty(4)) == 4);
    CHECK(isolated_count(disjoint_union(make_complete(3), make_empty(2))) == 2);
}

TEST_CASE("independence number") {
    CHECK(independence_number(make_complete(7)) == 1);
    CHECK(independence_number(make_cycle(5)) == 2);
    CHECK(independence_number(make_cycle(6)) == 3);

    // K_{bl-1} v (K_{n-(b+1)l+2} u (l-1)K_1) for b=1, l=2, n=11
    const Graph extremal =
        join(make_complete(1), disjoint_union(make_complete(9), make_empty(1)));
    CHECK(independence_number(extremal) == 2);
}

TEST_CASE("independence number agrees with naive enumeration") {
    std::mt19937_64 rng = stream_rng(12, 0);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = static_cast<int>(bounded(rng, 11));
        const Graph g = gnp(n, unit_real(rng), rng);
        CHECK(independence_number(g) == independence_number_naive(g));
    }
}

TEST_CASE("independence splits over union, maxes over join") {
    std::mt19937_64 rng = stream_rng(13, 0);
    for (int trial = 0; trial < 60; ++trial) {
        const int n1 = 1 + static_cast<int>(bounded(rng, 6));
        const int n2 = 1 + static_cast<int>(bounded(rng, 6));
        const Graph g1 = gnp(n1, unit_real(rng), rng);
        const Graph g2 = gnp(n2, unit_real(rng), rng);
        CHECK(independence_number(disjoint_union(g1, g2)) ==
              independence_number(g1) + independence_number(g2));
        CHECK(independence_number(join(g1, g2)) ==
              std::max(independence_number(g1), independence_number(g2)));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(make_complete(1)));
    CHECK_FALSE(is_connected(make_empty(2)));
    CHECK_FALSE(is_connected(make_empty(0)));
    CHECK(is_connected(join(make_empty(3), make_empty(2))));
}

TEST_CASE("graph guards") {
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("edge subgraph relation") {
    const Graph c6 = make_cycle(6);
    CHECK(is_edge_subgraph(c6, make_complete(6)));
    CHECK_FALSE(is_edge_subgraph(make_complete(6), c6));
    CHECK_FALSE(is_edge_subgraph(make_complete(5), make_complete(6)));
}
