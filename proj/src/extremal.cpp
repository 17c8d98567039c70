#include "qtough/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qtough {

int ceil_div(int a, int b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

int floor_div(int a, int b) {
    if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    return a >= 0 ? a / b : -ceil_div(-a, b);
}

bool FamilyParts::connected() const {
    if (order() == 0) return false;
    if (join >= 1) return true;
    const int union_parts = (clique >= 1 ? 1 : 0) + isolated;
    return union_parts <= 1;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

FamilyParts checked_parts(int join, int clique, int isolated, const std::string& family) {
    require(join >= 0, family + ": join clique size " + std::to_string(join) + " is negative");
    require(clique >= 0, family + ": clique size " + std::to_string(clique) + " is negative");
    require(isolated >= 0,
            family + ": isolated count " + std::to_string(isolated) + " is negative");
    return FamilyParts{join, clique, isolated};
}

}  // namespace

Graph split_join_family(const FamilyParts& parts) {
    const Graph inner =
        disjoint_union(make_complete(parts.clique), make_empty(parts.isolated));
    return join(make_complete(parts.join), inner);
}

Partition family_partition(const FamilyParts& parts) {
    return Partition::contiguous({parts.join, parts.clique, parts.isolated});
}

Matrix family_signless_laplacian(const FamilyParts& parts) {
    const int n = parts.order();
    if (n < 1) throw std::invalid_argument("family matrix: empty family");
    if (n > 512) throw std::invalid_argument("family matrix: order exceeds the dense cap 512");
    Matrix q = Matrix::Zero(n, n);
    auto in_join = [&](int v) { return v < parts.join; };
    auto in_clique = [&](int v) { return v >= parts.join && v < parts.join + parts.clique; };
    auto adjacent = [&](int u, int v) {
        return in_join(u) || in_join(v) || (in_clique(u) && in_clique(v));
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adjacent(u, v)) {
                q(u, v) = 1.0;
                q(v, u) = 1.0;
                q(u, u) += 1.0;
                q(v, v) += 1.0;
            }
    return q;
}

double family_q_index(const FamilyParts& parts, double tol) {
    return largest_eigenvalue(family_signless_laplacian(parts), tol);
}

int n_min_thm11(int b, int l) {
    require(b >= 1 && l >= 2, "n_min: requires b >= 1 and l >= 2");
    // both candidate thresholds are halves of integers
    const long long twice_first =
        (5LL * b * b + 8LL * b + 6) * l - 2LL * b * b - 4LL * b - 10;
    const long long twice_second = (2LL * b + 1) * l * l + (2LL * b - 3) * l + 2;
    const long long twice = std::max(twice_first, twice_second);
    return static_cast<int>((twice + 1) / 2);
}

int n_min_thm12(int b, int l) {
    require(b >= 2 && l >= 2, "n_min: requires b >= 2 and l >= 2");
    return 6 * b * ceil_div(l - 1, b);
}

FamilyParts thm11_parts(int b, int l, int n) {
    require(b >= 1 && l >= 2, "thm11 family: requires b >= 1 and l >= 2");
    FamilyParts parts = checked_parts(b * l - 1, n - (b + 1) * l + 2, l - 1, "thm11 family");
    require(parts.clique >= 1, "thm11 family: n - (b+1)l + 2 must be at least 1");
    return parts;
}

Graph thm11_extremal(int b, int l, int n) { return split_join_family(thm11_parts(b, l, n)); }

FamilyParts thm12_parts(int b, int l, int n) {
    require(b >= 1 && l >= 2, "thm12 family: requires b >= 1 and l >= 2");
    const int j = floor_div(l - 1, b);
    FamilyParts parts = checked_parts(j, n - j - l + 1, l - 1, "thm12 family");
    require(parts.clique >= 1, "thm12 family: n - floor((l-1)/b) - l + 1 must be at least 1");
    return parts;
}

Graph thm12_extremal(int b, int l, int n) { return split_join_family(thm12_parts(b, l, n)); }

ExtendedRational thm11_predicted_tl(int b, int l) { return ExtendedRational(b * l - 1, l); }

ExtendedRational thm12_predicted_tl(int b, int l) {
    return ExtendedRational(floor_div(l - 1, b), l);
}

FamilyParts proof_g2_case1_parts(int b, int omega, int n) {
    require(b >= 1 && omega >= 1, "g2 family: requires b >= 1 and omega >= 1");
    FamilyParts parts =
        checked_parts(b * omega - 1, n - (b + 1) * omega + 2, omega - 1, "g2 family");
    require(parts.clique >= 1, "g2 family: n must be at least (b+1)omega - 1");
    return parts;
}

Graph proof_g2_case1(int b, int omega, int n) {
    return split_join_family(proof_g2_case1_parts(b, omega, n));
}

FamilyParts proof_g3_case2_parts(int b, int n) {
    require(b >= 1, "g3 family: requires b >= 1");
    require(n >= b + 1, "g3 family: requires n >= b + 1");
    const int k = ceil_div(n + 2, b + 1);
    return checked_parts(n - k, 0, k, "g3 family");
}

Graph proof_g3_case2(int b, int n) { return split_join_family(proof_g3_case2_parts(b, n)); }

FamilyParts proof_thm12_g2_parts(int s, int omega, int n) {
    require(s >= 0 && omega >= 1, "g2 family: requires s >= 0 and omega >= 1");
    FamilyParts parts = checked_parts(s, n - s - omega + 1, omega - 1, "g2 family");
    require(parts.clique >= 1, "g2 family: n - s - omega + 1 must be at least 1");
    return parts;
}

Graph proof_thm12_g2(int s, int omega, int n) {
    return split_join_family(proof_thm12_g2_parts(s, omega, n));
}

FamilyParts proof_thm12_g3_parts(int b, int l, int n) {
    require(b >= 1 && l >= 2, "g3 family: requires b >= 1 and l >= 2");
    const int h = ceil_div(l - 1, b);
    FamilyParts parts = checked_parts(h, n - b * h - h, b * h, "g3 family");
    require(parts.clique >= 1, "g3 family: n - (b+1)ceil((l-1)/b) must be at least 1");
    return parts;
}

Graph proof_thm12_g3(int b, int l, int n) {
    return split_join_family(proof_thm12_g3_parts(b, l, n));
}

FamilyParts proof_thm12_g3prime_parts(int b, int l, int n) {
    require(b >= 1 && l >= 2, "g3' family: requires b >= 1 and l >= 2");
    require((l - 1) % b != 0, "g3' family: undefined when b divides l - 1");
    const int h = ceil_div(l - 1, b);
    FamilyParts parts = checked_parts(h - 1, n - b * h - h + 2, b * h - 1, "g3' family");
    require(parts.clique >= 1, "g3' family: clique part must be at least 1");
    return parts;
}

Graph proof_thm12_g3prime(int b, int l, int n) {
    return split_join_family(proof_thm12_g3prime_parts(b, l, n));
}

Graph clique_union_join(int s, const std::vector<int>& parts) {
    require(s >= 0, "clique_union_join: negative join size");
    Graph inner(0);
    for (int p : parts) {
        require(p >= 1, "clique_union_join: parts must be positive");
        inner = disjoint_union(inner, make_complete(p));
    }
    return join(make_complete(s), inner);
}

namespace {

QuotientMatrix three_part_quotient(int join, int clique, int isolated) {
    require(join >= 1 && clique >= 1 && isolated >= 1,
            "quotient: all three classes must be nonempty");
    const double n = join + clique + isolated;
    const double j = join;
    const double c = clique;
    const double i = isolated;
    QuotientMatrix qm;
    qm.entries = Matrix(3, 3);
    qm.entries << n + j - 2.0, c, i,
                  j, j + 2.0 * c - 2.0, 0.0,
                  j, 0.0, j;
    qm.class_sizes = {join, clique, isolated};
    return qm;
}

}  // namespace

QuotientMatrix quotient_B1(int n, int s, int b) {
    require(b >= 1, "quotient B1: requires b >= 1");
    return three_part_quotient(s, n - b * s - s, b * s);
}

QuotientMatrix quotient_B2(int n, int b, int l) {
    require(l >= 2, "quotient B2: requires l >= 2");
    return quotient_B1(n, ceil_div(l - 1, b), b);
}

QuotientMatrix quotient_B2prime(int n, int b, int l) {
    const FamilyParts parts = proof_thm12_g3prime_parts(b, l, n);
    return three_part_quotient(parts.join, parts.clique, parts.isolated);
}

CubicPolynomial charpoly_fB1(int n, int s, int b) {
    const double nn = n;
    const double ss = s;
    const double bb = b;
    CubicPolynomial f;
    f.c3 = 1.0;
    f.c2 = -3.0 * nn + 2.0 * bb * ss - ss + 4.0;
    f.c1 = 2.0 * nn * nn - 2.0 * bb * ss * nn + 3.0 * ss * nn - 6.0 * nn - 4.0 * bb * ss * ss +
           4.0 * bb * ss - 4.0 * ss + 4.0;
    f.c0 = -2.0 * ss * nn * nn + 4.0 * bb * ss * ss * nn + 6.0 * ss * nn -
           2.0 * bb * bb * ss * ss * ss - 6.0 * bb * ss * ss - 4.0 * ss;
    return f;
}

CubicPolynomial charpoly_fB2(int n, int b, int l) {
    return charpoly_fB1(n, ceil_div(l - 1, b), b);
}

CubicPolynomial charpoly_fB2prime(int n, int b, int l) {
    require(b >= 1 && l >= 2, "charpoly fB2': requires b >= 1 and l >= 2");
    require((l - 1) % b != 0, "charpoly fB2': undefined when b divides l - 1");
    const double nn = n;
    const double bb = b;
    const double hh = ceil_div(l - 1, b);
    CubicPolynomial f;
    f.c3 = 1.0;
    f.c2 = -3.0 * nn + 2.0 * bb * hh - hh + 3.0;
    f.c1 = 2.0 * nn * nn - 2.0 * bb * hh * nn + 3.0 * hh * nn - 7.0 * nn - 4.0 * bb * hh * hh +
           8.0 * bb * hh;
    f.c0 = -2.0 * hh * nn * nn + 2.0 * nn * nn + 4.0 * bb * hh * hh * nn - 4.0 * bb * hh * nn +
           2.0 * hh * nn - 2.0 * nn - 2.0 * bb * bb * hh * hh * hh + 2.0 * bb * bb * hh * hh -
           2.0 * bb * hh * hh + 2.0 * bb * hh;
    return f;
}

double phi_cut(double omega, int n, int b) {
    const double nn = n;
    const double bb = b;
    return (2.0 * bb + 1.0) * omega * omega - (2.0 * nn + 2.0 * bb + 3.0) * omega +
           2.0 * nn * nn - 2.0 * nn + 4.0;
}

double phi_cut_gap_factored(int n, int b, int l) {
    const double nn = n;
    const double bb = b;
    const double ll = l;
    return (nn - (bb + 1.0) * ll - bb) * (nn - (bb + 1.0) * (2.0 * bb + 1.0) * ll + 1.0) /
           ((bb + 1.0) * (bb + 1.0));
}

double phi_gap(double x, int n, int b, int s, int l) {
    const double nn = n;
    const double bb = b;
    const double ss = s;
    const double hh = ceil_div(l - 1, b);
    const double lin = 2.0 * bb * nn - 3.0 * nn + 4.0 * bb * ss + 4.0 * bb * hh - 4.0 * bb + 4.0;
    const double constant = -2.0 * nn * nn + 4.0 * bb * ss * nn + 4.0 * bb * nn * hh + 6.0 * nn -
                            2.0 * bb * bb * ss * ss - 2.0 * bb * bb * ss * hh -
                            2.0 * bb * bb * hh * hh - 6.0 * bb * ss - 6.0 * bb * hh - 4.0;
    return (2.0 * bb - 1.0) * x * x - lin * x + constant;
}

}  // namespace qtough
