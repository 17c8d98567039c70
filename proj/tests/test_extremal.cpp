#include <doctest.h>

#include <cmath>

#include "qtough/extremal.hpp"
#include "qtough/graph.hpp"
#include "qtough/spectral.hpp"

using namespace qtough;

TEST_CASE("integer helpers") {
    CHECK(ceil_div(1, 2) == 1);
    CHECK(ceil_div(4, 2) == 2);
    CHECK(ceil_div(12, 2) == 6);
    CHECK(floor_div(1, 2) == 0);
    CHECK(floor_div(4, 2) == 2);
    CHECK(ceil_div(0, 3) == 0);
}

TEST_CASE("order thresholds") {
    CHECK(n_min_thm11(1, 2) == 11);
    CHECK(n_min_thm11(1, 3) == 21);
    CHECK(n_min_thm11(2, 2) == 29);
    CHECK(n_min_thm12(2, 2) == 12);
    CHECK(n_min_thm12(2, 5) == 24);
    CHECK(n_min_thm12(3, 4) == 18);
    CHECK_THROWS_AS(n_min_thm11(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(n_min_thm12(1, 2), std::invalid_argument);
}

TEST_CASE("first extremal family") {
    const FamilyParts parts = thm11_parts(1, 2, 11);
    CHECK(parts.join == 1);
    CHECK(parts.clique == 9);
    CHECK(parts.isolated == 1);
    const Graph g = thm11_extremal(1, 2, 11);
    CHECK(g.order() == 11);
    CHECK(g.edge_count() == 36 + 10);
    CHECK(is_connected(g));

    const Graph big = thm11_extremal(2, 2, 29);
    CHECK(big.order() == 29);
    CHECK(independence_number(big) == 2);

    CHECK(thm11_predicted_tl(1, 2) == ExtendedRational(1, 2));
    CHECK(thm11_predicted_tl(2, 2) == ExtendedRational(3, 2));
    CHECK_THROWS_AS(thm11_extremal(1, 2, 2), std::invalid_argument);
}

TEST_CASE("second extremal family") {
    const FamilyParts parts = thm12_parts(2, 3, 12);
    CHECK(parts.join == 1);
    CHECK(parts.clique == 9);
    CHECK(parts.isolated == 2);
    CHECK(parts.connected());

    // join part floor(1/2) = 0: legal but disconnected, flagged
    const FamilyParts degenerate = thm12_parts(2, 2, 12);
    CHECK(degenerate.join == 0);
    CHECK(degenerate.clique == 11);
    CHECK(degenerate.isolated == 1);
    CHECK_FALSE(degenerate.connected());
    CHECK_FALSE(is_connected(thm12_extremal(2, 2, 12)));

    CHECK(thm12_predicted_tl(2, 3) == ExtendedRational(1, 3));
    CHECK(thm12_predicted_tl(2, 2) == ExtendedRational(0));
    CHECK(thm12_predicted_tl(2, 5) == ExtendedRational(2, 5));
}

TEST_CASE("omega-cut family") {
    // collapses to the extremal family at omega = l
    CHECK(proof_g2_case1(1, 2, 11) == thm11_extremal(1, 2, 11));
    CHECK(proof_g2_case1(2, 3, 20) == thm11_extremal(2, 3, 20));

    const Graph g = proof_g2_case1(1, 3, 12);
    CHECK(g.order() == 12);
    const FamilyParts parts = proof_g2_case1_parts(1, 3, 12);
    CHECK(parts.join == 2);
    CHECK(parts.clique == 8);
    CHECK(parts.isolated == 2);

    // removing the join clique leaves exactly omega components
    const VertexSet join_clique = (std::uint64_t{1} << parts.join) - 1;
    CHECK(components_count(remove_vertices(g, join_clique)) == 3);

    CHECK_THROWS_AS(proof_g2_case1(1, 7, 10), std::invalid_argument);
}

TEST_CASE("split family for the dense case") {
    const FamilyParts p1 = proof_g3_case2_parts(1, 10);
    CHECK(p1.join == 4);
    CHECK(p1.isolated == 6);

    const FamilyParts p2 = proof_g3_case2_parts(2, 12);
    CHECK(p2.join == 7);
    CHECK(p2.isolated == 5);

    // 2e(G3) = (n-k)(n+k-1)
    for (int b : {1, 2, 3})
        for (int n = b + 2; n <= 20; ++n) {
            const FamilyParts parts = proof_g3_case2_parts(b, n);
            const Graph g = split_join_family(parts);
            const int k = parts.isolated;
            CHECK(2 * g.edge_count() == (n - k) * (n + k - 1));
        }
}

TEST_CASE("small-cut family") {
    const Graph g = proof_thm12_g2(1, 2, 11);
    CHECK(g.order() == 11);
    const FamilyParts parts = proof_thm12_g2_parts(1, 2, 11);
    CHECK(parts.join == 1);
    CHECK(parts.clique == 9);
    CHECK(parts.isolated == 1);
    // isolated-side vertices end with degree s
    for (int v = parts.join + parts.clique; v < g.order(); ++v)
        CHECK(g.degree(v) == parts.join);

    // omega = bs + 1 gives the dense-side case-1 graph K_s v (K_{n-bs-s} u bsK_1)
    const FamilyParts case1 = proof_thm12_g2_parts(2, 2 * 2 + 1, 12);
    CHECK(case1.join == 2);
    CHECK(case1.clique == 12 - 4 - 2);
    CHECK(case1.isolated == 4);
}

TEST_CASE("ceil families of the second theorem") {
    const FamilyParts g3 = proof_thm12_g3_parts(2, 2, 12);
    CHECK(g3.join == 1);
    CHECK(g3.clique == 9);
    CHECK(g3.isolated == 2);

    // b | (l-1): the ceil family is the extremal family itself
    CHECK(proof_thm12_g3(2, 3, 12) == thm12_extremal(2, 3, 12));
    CHECK(proof_thm12_g3(3, 4, 18) == thm12_extremal(3, 4, 18));

    const FamilyParts g3p = proof_thm12_g3prime_parts(2, 2, 12);
    CHECK(g3p.join == 0);
    CHECK(g3p.clique == 11);
    CHECK(g3p.isolated == 1);
    CHECK_FALSE(g3p.connected());

    CHECK_THROWS_AS(proof_thm12_g3prime(2, 3, 12), std::invalid_argument);
}

TEST_CASE("reduced ceil family is a spanning subgraph of the extremal family") {
    for (const auto& [b, l] : {std::pair{2, 2}, {2, 4}, {3, 3}, {3, 5}}) {
        if ((l - 1) % b == 0) continue;
        const int n = n_min_thm12(b, l);
        const bool proper = b * ceil_div(l - 1, b) > l;  // otherwise the two coincide
        for (int shift = 0; shift <= 4; ++shift) {
            const Graph inner = proof_thm12_g3prime(b, l, n + shift);
            const Graph outer = thm12_extremal(b, l, n + shift);
            CHECK(is_edge_subgraph(inner, outer));
            if (proper)
                CHECK(inner.edge_count() < outer.edge_count());
            else
                CHECK(inner == outer);
        }
    }
}

TEST_CASE("transcribed quotient matrices match computed quotients exactly") {
    for (const auto& [n, s, b] : {std::tuple{12, 2, 2}, {12, 1, 2}, {20, 3, 2}, {18, 2, 3}}) {
        const Graph g2 = proof_thm12_g2(s, b * s + 1, n);
        const Partition partition = Partition::contiguous({s, n - b * s - s, b * s});
        const Matrix q = signless_laplacian(g2);
        REQUIRE(is_equitable(q, partition));
        const QuotientMatrix computed = quotient_matrix(q, partition);
        const QuotientMatrix transcribed = quotient_B1(n, s, b);
        CHECK((computed.entries - transcribed.entries).cwiseAbs().maxCoeff() == 0.0);
        CHECK(computed.class_sizes == transcribed.class_sizes);
        // the quotient root reproduces the dense Q-index
        CHECK(std::abs(perron_root(transcribed) - q_index(g2)) <= 1e-7);
    }
}

TEST_CASE("B2 specializes B1 at s = ceil((l-1)/b)") {
    const QuotientMatrix b2 = quotient_B2(12, 2, 2);
    const QuotientMatrix b1 = quotient_B1(12, 1, 2);
    CHECK((b2.entries - b1.entries).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(perron_root(b2) - q_index(proof_thm12_g3(2, 2, 12))) <= 1e-7);
}

TEST_CASE("B2prime matches the reduced family quotient") {
    // needs all three classes nonempty: h >= 2, so b = 2, l = 4
    const int b = 2, l = 4, n = 20;
    const FamilyParts parts = proof_thm12_g3prime_parts(b, l, n);
    REQUIRE(parts.join >= 1);
    const Graph g = split_join_family(parts);
    const Partition partition = family_partition(parts);
    const Matrix q = signless_laplacian(g);
    REQUIRE(is_equitable(q, partition));
    const QuotientMatrix computed = quotient_matrix(q, partition);
    const QuotientMatrix transcribed = quotient_B2prime(n, b, l);
    CHECK((computed.entries - transcribed.entries).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(perron_root(transcribed) - q_index(g)) <= 1e-7);

    CHECK_THROWS_AS(quotient_B2prime(12, 2, 2), std::invalid_argument);  // empty class
}

TEST_CASE("characteristic polynomials match determinant evaluation") {
    for (const auto& [n, s, b] : {std::tuple{12, 2, 2}, {12, 1, 2}, {24, 4, 2}, {18, 2, 3}}) {
        const QuotientMatrix qm = quotient_B1(n, s, b);
        const CubicPolynomial f = charpoly_fB1(n, s, b);
        for (double x : {0.0, 1.0, 1.0 * n, 2.0 * n, 3.0 * n}) {
            const double det = (x * Matrix::Identity(3, 3) - qm.entries).determinant();
            CHECK(std::abs(f(x) - det) <=
                  1e-9 * std::max(1.0, std::abs(x * x * x)));
        }
        // the Perron root is a root of the transcription
        const double root = perron_root(qm);
        CHECK(std::abs(f(root)) <= 1e-6 * static_cast<double>(n) * n * n);
    }
}

TEST_CASE("fB1 at s = ceil equals fB2") {
    const CubicPolynomial f1 = charpoly_fB1(14, 2, 3);  // ceil((l-1)/b)=2 for l=5,b=3
    const CubicPolynomial f2 = charpoly_fB2(14, 3, 5);
    CHECK(f1.c2 == f2.c2);
    CHECK(f1.c1 == f2.c1);
    CHECK(f1.c0 == f2.c0);
}

TEST_CASE("frozen cubic coefficients") {
    // hand expansion of det(xI - B1) at (n,s,b) = (12,2,2): x^3 - 26x^2 + 172x - 168
    const CubicPolynomial f = charpoly_fB1(12, 2, 2);
    CHECK(f.c2 == -26.0);
    CHECK(f.c1 == 172.0);
    CHECK(f.c0 == -168.0);
    // and the reduced family at (b,l,n) = (2,2,12): x^3 - 30x^2 + 200x
    const CubicPolynomial fp = charpoly_fB2prime(12, 2, 2);
    CHECK(fp.c2 == -30.0);
    CHECK(fp.c1 == 200.0);
    CHECK(fp.c0 == 0.0);
}

TEST_CASE("cut-family quadratic bounds the Q-index") {
    for (const auto& [b, l] : {std::pair{1, 2}, {2, 2}}) {
        const int n = n_min_thm11(b, l);
        for (int omega = l + 1; (b + 1) * omega <= n + 1; ++omega) {
            const Graph g2 = proof_g2_case1(b, omega, n);
            // phi(omega) = 2e(G2) + (n-1)(n-2)
            CHECK(phi_cut(omega, n, b) ==
                  doctest::Approx(2.0 * g2.edge_count() + (n - 1.0) * (n - 2.0)));
            CHECK(q_index(g2) <= phi_cut(omega, n, b) / (n - 1.0) + 1e-8);
            CHECK(phi_cut(omega, n, b) <= phi_cut(l + 1, n, b) + 1e-9);
        }
    }
}

TEST_CASE("cut-family gap identity") {
    // (b,l,n) = (1,2,11): both sides vanish; (1,2,12): gap = 7/4
    CHECK(phi_cut(3, 11, 1) - phi_cut(6.0, 11, 1) == doctest::Approx(0.0));
    CHECK(phi_cut_gap_factored(11, 1, 2) == doctest::Approx(0.0));
    CHECK(phi_cut(3, 12, 1) - phi_cut(6.5, 12, 1) == doctest::Approx(1.75));
    CHECK(phi_cut_gap_factored(12, 1, 2) == doctest::Approx(1.75));
}

TEST_CASE("charpoly gap factor identity at sample points") {
    const int b = 2, l = 2, n = 12, s = 2;
    const int h = ceil_div(l - 1, b);
    const CubicPolynomial f1 = charpoly_fB1(n, s, b);
    const CubicPolynomial f2 = charpoly_fB2(n, b, l);
    for (double x : {0.0, 5.0, 12.0, 20.0, 36.0}) {
        CHECK(f1(x) - f2(x) ==
              doctest::Approx((s - h) * phi_gap(x, n, b, s, l)).epsilon(1e-12));
    }
    // s = ceil((l-1)/b): the factor vanishes identically
    const CubicPolynomial g1 = charpoly_fB1(n, h, b);
    for (double x : {0.0, 7.0, 24.0}) CHECK(g1(x) - f2(x) == 0.0);
}

TEST_CASE("extremal family clears the complete-subgraph threshold") {
    for (const auto& [b, l] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
        const int n = n_min_thm11(b, l);
        CHECK(q_index(thm11_extremal(b, l, n)) > 2.0 * n - 2.0 * l + 1e-9);
    }
}

TEST_CASE("every family has the claimed order and an equitable block partition") {
    std::vector<std::pair<FamilyParts, int>> cases;
    for (const auto& [b, l, n] : {std::tuple{1, 2, 11}, {1, 3, 21}, {2, 2, 29}})
        cases.emplace_back(thm11_parts(b, l, n), n);
    for (const auto& [b, l, n] : {std::tuple{2, 3, 12}, {3, 4, 18}, {2, 5, 24}})
        cases.emplace_back(thm12_parts(b, l, n), n);
    cases.emplace_back(proof_g2_case1_parts(2, 4, 20), 20);
    cases.emplace_back(proof_g3_case2_parts(2, 14), 14);
    cases.emplace_back(proof_thm12_g2_parts(3, 7, 18), 18);
    cases.emplace_back(proof_thm12_g3_parts(2, 4, 20), 20);
    cases.emplace_back(proof_thm12_g3prime_parts(2, 4, 20), 20);
    for (const auto& [parts, n] : cases) {
        CHECK(parts.order() == n);
        const Graph g = split_join_family(parts);
        CHECK(g.order() == n);
        CHECK(is_equitable(signless_laplacian(g), family_partition(parts)));
    }
}

TEST_CASE("direct family matrix agrees with the graph route") {
    for (const auto& parts :
         {FamilyParts{1, 9, 1}, {2, 17, 2}, {3, 25, 1}, {4, 0, 6}, {1, 0, 4}, {0, 11, 1}}) {
        const Matrix direct = family_signless_laplacian(parts);
        const Matrix via_graph = signless_laplacian(split_join_family(parts));
        CHECK((direct - via_graph).cwiseAbs().maxCoeff() == 0.0);
        CHECK(family_q_index(parts) ==
              doctest::Approx(q_index(split_join_family(parts))).epsilon(1e-12));
    }
    // beyond the 64-vertex combinatorial cap the dense route still runs
    CHECK(family_q_index(FamilyParts{0, 100, 0}) == doctest::Approx(198.0).epsilon(1e-10));
}

TEST_CASE("clique union join") {
    const Graph g = clique_union_join(2, {3, 2, 2});
    CHECK(g.order() == 9);
    CHECK(is_connected(g));
    CHECK(g.edge_count() == 1 + 3 + 1 + 1 + 2 * 7);
    CHECK_THROWS_AS(clique_union_join(1, {2, 0}), std::invalid_argument);
}
