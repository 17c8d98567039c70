#include <doctest.h>

#include <cmath>

#include "qtough/extremal.hpp"
#include "qtough/graph.hpp"
#include "qtough/random_graphs.hpp"
#include "qtough/spectral.hpp"

using namespace qtough;

TEST_CASE("adjacency and signless Laplacian entries") {
    const Matrix a2 = adjacency_matrix(make_complete(2));
    CHECK(a2(0, 0) == 0.0);
    CHECK(a2(0, 1) == 1.0);
    CHECK(adjacency_matrix(make_empty(2)).cwiseAbs().maxCoeff() == 0.0);

    const Matrix a3 = adjacency_matrix(make_cycle(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a3(i, j) == (i == j ? 0.0 : 1.0));

    const Matrix q2 = signless_laplacian(make_complete(2));
    CHECK(q2(0, 0) == 1.0);
    CHECK(q2(0, 1) == 1.0);
    CHECK(signless_laplacian(make_complete(1))(0, 0) == 0.0);

    const Matrix q4 = signless_laplacian(make_cycle(4));
    for (int i = 0; i < 4; ++i) CHECK(q4(i, i) == 2.0);
}

TEST_CASE("row sums of the signless Laplacian are twice the degrees") {
    std::mt19937_64 rng = stream_rng(31, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(bounded(rng, 12));
        const Graph g = gnp(n, unit_real(rng), rng);
        const Matrix q = signless_laplacian(g);
        for (int v = 0; v < n; ++v)
            CHECK(q.row(v).sum() == doctest::Approx(2.0 * g.degree(v)));
    }
}

TEST_CASE("q-index of regular families") {
    CHECK(q_index(make_complete(5)) == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(q_index(make_complete(10)) == doctest::Approx(18.0).epsilon(1e-10));
    for (int n = 3; n <= 12; ++n)
        CHECK(q_index(make_cycle(n)) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("star q-index matches its two-class quotient") {
    // K_1 v 4K_1: quotient [[4,4],[1,1]] has Perron root 5
    const Graph star = split_join_family(FamilyParts{1, 0, 4});
    const double q = q_index(star);
    CHECK(q == doctest::Approx(5.0).epsilon(1e-10));

    const QuotientMatrix qm = quotient_matrix(signless_laplacian(star),
                                              Partition::contiguous({1, 4}));
    CHECK(qm.entries(0, 0) == doctest::Approx(4.0));
    CHECK(qm.entries(0, 1) == doctest::Approx(4.0));
    CHECK(qm.entries(1, 0) == doctest::Approx(1.0));
    CHECK(qm.entries(1, 1) == doctest::Approx(1.0));
    CHECK(perron_root(qm) == doctest::Approx(q).epsilon(1e-8));
}

TEST_CASE("dense solver agrees with the three-class quotient root") {
    // K_1 v (K_8 u K_1)
    const Graph g = split_join_family(FamilyParts{1, 8, 1});
    const QuotientMatrix qm =
        quotient_matrix(signless_laplacian(g), Partition::contiguous({1, 8, 1}));
    CHECK(std::abs(perron_root(qm) - q_index(g)) <= 1e-8);
}

TEST_CASE("adjacency spectral radius") {
    CHECK(adjacency_spectral_radius(make_complete(6)) == doctest::Approx(5.0));
    CHECK(adjacency_spectral_radius(make_cycle(9)) == doctest::Approx(2.0));
    // K_{1,4}: sqrt(4)
    const Graph star = split_join_family(FamilyParts{1, 0, 4});
    CHECK(adjacency_spectral_radius(star) == doctest::Approx(2.0));
}

TEST_CASE("eigensolver residual contract") {
    std::mt19937_64 rng = stream_rng(32, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(bounded(rng, 16));
        const Graph g = gnp(n, unit_real(rng), rng);
        const Matrix q = signless_laplacian(g);
        const EigenPair pair = largest_eigenpair(q);
        const double norm = std::max(1.0, q.cwiseAbs().rowwise().sum().maxCoeff());
        CHECK((q * pair.vector - pair.value * pair.vector).cwiseAbs().maxCoeff() <=
              kDefaultEigenTol * norm);
        CHECK(pair.vector.norm() == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(largest_eigenvalue(Matrix::Zero(0, 0)), std::invalid_argument);
}

TEST_CASE("quotient of singleton partition reproduces the matrix") {
    const Graph g = make_cycle(5);
    const Matrix q = signless_laplacian(g);
    const QuotientMatrix qm = quotient_matrix(q, Partition::singletons(5));
    CHECK((qm.entries - q).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("one-class quotient of a complete graph") {
    const QuotientMatrix qm =
        quotient_matrix(signless_laplacian(make_complete(7)), Partition::contiguous({7}));
    CHECK(qm.order() == 1);
    CHECK(qm.entries(0, 0) == doctest::Approx(12.0));
    CHECK(perron_root(qm) == doctest::Approx(12.0));
}

TEST_CASE("equitable partition checks") {
    const Graph g = split_join_family(FamilyParts{1, 8, 1});
    const Matrix q = signless_laplacian(g);
    CHECK(is_equitable(q, Partition::contiguous({1, 8, 1})));
    CHECK(is_equitable(q, Partition::singletons(10)));

    // P_3 split {ends},{middle} is equitable, an unbalanced P_4 split is not
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(is_equitable(signless_laplacian(p3),
                       Partition(3, {{0, 2}, {1}})));
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK_FALSE(is_equitable(signless_laplacian(p4), Partition(4, {{0, 1, 2}, {3}})));
}

TEST_CASE("perron root input validation") {
    QuotientMatrix negative;
    negative.entries = Matrix(1, 1);
    negative.entries << -1.0;
    negative.class_sizes = {1};
    CHECK_THROWS_AS(perron_root(negative), std::invalid_argument);

    QuotientMatrix reducible;
    reducible.entries = Matrix(2, 2);
    reducible.entries << 1.0, 1.0, 0.0, 1.0;
    reducible.class_sizes = {1, 1};
    CHECK_THROWS_AS(perron_root(reducible), std::invalid_argument);

    QuotientMatrix scalar;
    scalar.entries = Matrix(1, 1);
    scalar.entries << 3.5;
    scalar.class_sizes = {1};
    CHECK(perron_root(scalar) == doctest::Approx(3.5));
}

TEST_CASE("perron root handles subdominant eigenvalues above the min row sum") {
    // row sums 22, 14, 4; the middle eigenvalue sits far above 4
    QuotientMatrix qm;
    qm.entries = Matrix(3, 3);
    qm.entries << 12.0, 6.0, 4.0,
                  2.0, 12.0, 0.0,
                  2.0, 0.0, 2.0;
    qm.class_sizes = {2, 6, 4};
    const double root = perron_root(qm);
    // f(x) = (x-2)((x-12)^2 - 12) - 8(x-12) vanishes at the Perron root
    const double f = (root - 2.0) * ((root - 12.0) * (root - 12.0) - 12.0) -
                     8.0 * (root - 12.0);
    CHECK(std::abs(f) <= 1e-6);
    CHECK(root > 15.0);
    CHECK(root < 16.0);
}

TEST_CASE("das-feng-yu bound") {
    CHECK(das_feng_yu_bound(make_complete(6)) == doctest::Approx(10.0));
    CHECK(das_feng_yu_bound(make_cycle(5)) == doctest::Approx(5.5));
    CHECK(das_feng_yu_bound(make_empty(5)) == doctest::Approx(3.0));
    CHECK(q_index(make_cycle(5)) <= das_feng_yu_bound(make_cycle(5)));
    CHECK_THROWS_AS(das_feng_yu_bound(make_complete(1)), std::invalid_argument);
}

TEST_CASE("q-index strictly grows under edge addition") {
    std::mt19937_64 rng = stream_rng(33, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(bounded(rng, 10));
        const Graph g = random_connected_gnp(n, 0.4 + 0.4 * unit_real(rng), rng);
        int u = -1, v = -1;
        for (int a = 0; a < n && u < 0; ++a)
            for (int b = a + 1; b < n && u < 0; ++b)
                if (!g.has_edge(a, b)) {
                    u = a;
                    v = b;
                }
        if (u < 0) continue;  // complete already
        Graph larger = g;
        larger.add_edge(u, v);
        CHECK(q_index(larger) - q_index(g) > 1e-9);
    }
}
