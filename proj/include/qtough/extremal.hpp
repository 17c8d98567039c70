#pragma once

#include <vector>

#include "qtough/graph.hpp"
#include "qtough/rational.hpp"
#include "qtough/spectral.hpp"

namespace qtough {

// Exact ceiling/floor of a/b for positive b.
int ceil_div(int a, int b);
int floor_div(int a, int b);

/// Part sizes of a join K_join v (K_clique u isolated*K_1); every graph
/// family in this module is an instance of this shape.
struct FamilyParts {
    int join = 0;
    int clique = 0;
    int isolated = 0;

    int order() const { return join + clique + isolated; }
    bool connected() const;
};

/// K_join v (K_clique u isolated*K_1), laid out join block first, clique
/// block second, isolated vertices last.
Graph split_join_family(const FamilyParts& parts);

/// Q-matrix of the family assembled straight from the part sizes; unlike the
/// bitmask graph this has no 64-vertex cap, which the larger grid orders need.
Matrix family_signless_laplacian(const FamilyParts& parts);
double family_q_index(const FamilyParts& parts, double tol = kDefaultEigenTol);

/// The nonempty blocks of the canonical layout, in order.
Partition family_partition(const FamilyParts& parts);

// Order thresholds of the two toughness theorems.
int n_min_thm11(int b, int l);  // b >= 1, l >= 2
int n_min_thm12(int b, int l);  // b >= 2, l >= 2

// Extremal families attaining the spectral thresholds.
FamilyParts thm11_parts(int b, int l, int n);
Graph thm11_extremal(int b, int l, int n);

/// Join part floor((l-1)/b) may be zero, in which case the graph is
/// disconnected; the parts record carries the flag.
FamilyParts thm12_parts(int b, int l, int n);
Graph thm12_extremal(int b, int l, int n);

/// Predicted exact l-toughness of the extremal families: (bl-1)/l for the
/// first family, floor((l-1)/b)/l for the second.
ExtendedRational thm11_predicted_tl(int b, int l);
ExtendedRational thm12_predicted_tl(int b, int l);

// Intermediate graphs of the threshold arguments.
Graph proof_g2_case1(int b, int omega, int n);        // K_{bw-1} v (K_{n-(b+1)w+2} u (w-1)K_1)
FamilyParts proof_g2_case1_parts(int b, int omega, int n);
Graph proof_g3_case2(int b, int n);                   // K_{n-k} v kK_1, k = ceil((n+2)/(b+1))
FamilyParts proof_g3_case2_parts(int b, int n);
Graph proof_thm12_g2(int s, int omega, int n);        // K_s v (K_{n-s-w+1} u (w-1)K_1)
FamilyParts proof_thm12_g2_parts(int s, int omega, int n);
Graph proof_thm12_g3(int b, int l, int n);
FamilyParts proof_thm12_g3_parts(int b, int l, int n);
Graph proof_thm12_g3prime(int b, int l, int n);       // only defined when b does not divide l-1
FamilyParts proof_thm12_g3prime_parts(int b, int l, int n);

/// K_s v (K_{p1} u K_{p2} u ... u K_{pt}); parts must be positive.
Graph clique_union_join(int s, const std::vector<int>& parts);

// 3x3 quotient matrices of the signless Laplacians of the three-part
// families, written out exactly.
QuotientMatrix quotient_B1(int n, int s, int b);
QuotientMatrix quotient_B2(int n, int b, int l);
QuotientMatrix quotient_B2prime(int n, int b, int l);

struct CubicPolynomial {
    double c3 = 1.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double operator()(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
};

// Characteristic polynomials of the quotient matrices above (monic cubics).
CubicPolynomial charpoly_fB1(int n, int s, int b);
CubicPolynomial charpoly_fB2(int n, int b, int l);
CubicPolynomial charpoly_fB2prime(int n, int b, int l);

/// Quadratic in omega equal to 2e(G2) + (n-1)(n-2) for the omega-cut family
/// G2 = proof_g2_case1(b, omega, n); dividing by n-1 gives the edge-count
/// bound on q(G2).
double phi_cut(double omega, int n, int b);

/// Factored closed form of phi_cut(l+1) - phi_cut((n+1)/(b+1)).
double phi_cut_gap_factored(int n, int b, int l);

/// Quadratic factor with f_B1(x) - f_B2(x) = (s - ceil((l-1)/b)) * phi_gap(x).
double phi_gap(double x, int n, int b, int s, int l);

}  // namespace qtough
