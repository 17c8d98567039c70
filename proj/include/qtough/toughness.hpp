#pragma once

#include <optional>

#include "qtough/graph.hpp"
#include "qtough/rational.hpp"

namespace qtough {

inline constexpr int kToughnessBudget = 26;
inline constexpr int kNaiveToughnessBudget = 20;

struct ToughnessResult {
    ExtendedRational value;
    std::optional<VertexSet> witness;  // minimizing set, finite case only
    int witness_components = 0;
};

/// Exact l-toughness: min |S|/c(G-S) over proper subsets S (including the
/// empty set) with c(G-S) >= l, as a reduced rational; +infinity when no
/// qualifying S exists (equivalently when l > independence number).
/// Subset enumeration is pruned by size; needs l >= 2 and n <= 26.
ToughnessResult l_toughness(const Graph& g, int l);

/// Classic toughness t(G) = t_2(G); +infinity exactly for complete graphs.
ToughnessResult toughness(const Graph& g);

/// Exact comparison t_l(G) >= t, no floating point involved.
bool is_tl_tough(const Graph& g, const ExtendedRational& t, int l);

/// Same contract as l_toughness but by unpruned iteration over all 2^n - 1
/// proper subsets; reference oracle, needs n <= 20.
ToughnessResult l_toughness_naive(const Graph& g, int l);

}  // namespace qtough
