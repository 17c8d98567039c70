#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtough/extremal.hpp"
#include "qtough/graph.hpp"
#include "qtough/random_graphs.hpp"
#include "qtough/report.hpp"
#include "qtough/spectral.hpp"

namespace qtough {

enum class TheoremId { Thm11, Thm12 };

TheoremId parse_theorem(const std::string& name);
std::string theorem_name(TheoremId id);

std::vector<double> linspace(double lo, double hi, int count);

/// Deterministic relabeling by (degree, neighborhood) color refinement;
/// two graphs with equal canonical forms are isomorphic, near-misses may
/// stay distinguishable and then surface for manual inspection.
Graph canonical_relabel(const Graph& g);

// --- single checks ------------------------------------------------------

/// Equitable-partition quotient: largest eigenvalues agree and every
/// quotient eigenvalue is an eigenvalue of the full matrix.
VerificationReport check_lemma21(const Graph& g, const Partition& p, double tol = 1e-7);

/// Subgraph monotonicity of the Q-index, equality only for h == g.
VerificationReport check_lemma22(const Graph& g, const Graph& h, double tol = 1e-8);

/// Balanced-clique comparison: q(K_s v (K_{n1} u ... u K_{nt})) is strictly
/// below q(K_s v (K_{n-s-p(t-1)} u (t-1)K_p)).
VerificationReport check_lemma23(int s, int p, const std::vector<int>& parts,
                                 double tol = 1e-9);

/// Edge-count bound q(G) <= 2e/(n-1) + n - 2.
VerificationReport check_lemma24(const Graph& g, double tol = 1e-8);

/// f_B1(x) - f_B2(x) = (s - ceil((l-1)/b)) * phi_gap(x) over the x grid.
VerificationReport check_quotient_poly_identity(int b, int l, int n, int s,
                                                const std::vector<double>& xs,
                                                double tol = 1e-9);

/// Transcribed characteristic polynomial against det(xI - B) at 5 points;
/// which is one of "fB1", "fB2", "fB2prime" (s is ignored except for fB1).
VerificationReport check_charpoly_vs_det(const std::string& which, int b, int l, int n,
                                         int s, double tol = 1e-9);

/// phi_cut(l+1) - phi_cut((n+1)/(b+1)) against its factored closed form.
VerificationReport check_phi_cut_gap_identity(int b, int l, int n, double tol = 1e-9);

/// f_B2 - f_B2' strictly positive on xs (subset of [2n - 2b ceil((l-1)/b), inf)),
/// plus the dense-solver consequence q(G3) < q(G3').
VerificationReport check_quotient_poly_gap(int b, int l, int n,
                                           const std::vector<double>& xs);

/// phi_gap evaluated at the ray foot 2n - 2b ceil((l-1)/b) - 2 is positive
/// for s >= ceil((l-1)/b) + 1; the report also records which of the two
/// candidate order hypotheses actually holds for the tuple.
VerificationReport check_phi_gap_corner(int b, int l, int n, int s);

/// The bound chain for the first theorem. Case 1 (omega <= (n+1)/(b+1)):
/// q(G2) <= phi/(n-1) <= phi(l+1)/(n-1) <= 2n-2l < q(extremal). Case 2
/// (n <= (b+1)omega - 2): q(K_{n-omega} v omega K_1) <= q(G3) < 2n-2l.
/// Needs omega >= l+1 and n >= n_min_thm11.
VerificationReport check_threshold_chain(int b, int l, int n, int omega);

/// q(G2(s)) <= q(G3) with equality exactly at s = ceil((l-1)/b).
VerificationReport check_quotient_dominance(int b, int l, int n, int s);

/// Extremal-family sharpness: exact l-toughness equals the predicted value,
/// falls strictly below the theorem bound, the witness is the join clique,
/// and (when connected) q(extremal) > 2n - 2l.
VerificationReport sharpness_report(TheoremId id, int b, int l, int n);

/// Single-graph theorem check: if q(g) clears the extremal threshold and g
/// is not the extremal graph, the exact l-toughness must reach the bound.
/// Below-threshold graphs report status "hypothesis-not-met".
VerificationReport verify_theorem_on_graph(TheoremId id, const Graph& g, int b, int l,
                                           double tol = 1e-8);

/// Seeded sampling run; deterministic given (seed, parameters). Every
/// counterexample is re-derived with the naive toughness oracle before it
/// is allowed into the report.
VerificationReport monte_carlo_search(TheoremId id, int b, int l, int n,
                                      const SampleModel& model, int samples,
                                      std::uint64_t seed);

/// All labeled graphs on n_lo..n_hi vertices missing at most
/// missing_budget edges from K_n (negative budget = no restriction).
/// Violations below the order threshold are exploration data, not failures.
VerificationReport exhaustive_search(TheoremId id, int b, int l, int n_lo, int n_hi,
                                     int missing_budget);

// --- suites -------------------------------------------------------------

struct SuiteOptions {
    int trials = 0;  // 0 = per-suite default
    std::uint64_t seed = 42;
    double tol = 1e-8;
    std::optional<std::string> theorem;
    std::optional<int> b;
    std::optional<int> l;
    std::optional<int> n;
    int samples = 1000;
    std::optional<SampleModel> model;
    int n_lo = 5;
    int n_hi = 6;
    int edge_budget = -1;
    int grid_span = 20;
    int x_points = 25;
};

std::vector<std::string> suite_names();

/// Runs one named suite; reports come back in canonical order.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace qtough
