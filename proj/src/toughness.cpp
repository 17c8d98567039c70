#include "qtough/toughness.hpp"

#include <algorithm>

namespace qtough {

namespace {

struct BestSet {
    bool found = false;
    std::int64_t size = 0;
    std::int64_t comps = 1;
    VertexSet mask = 0;

    // Candidate ratios are size/comps with comps > 0. Ties on the exact
    // ratio break toward the smallest bitmask so that the pruned and the
    // naive enumerators agree bit for bit.
    void offer(std::int64_t s, std::int64_t c, VertexSet m) {
        if (!found) {
            found = true;
            size = s;
            comps = c;
            mask = m;
            return;
        }
        const __int128 lhs = static_cast<__int128>(s) * comps;
        const __int128 rhs = static_cast<__int128>(size) * c;
        if (lhs < rhs || (lhs == rhs && m < mask)) {
            size = s;
            comps = c;
            mask = m;
        }
    }

    // ratio strictly below s/c for every candidate of that lower bound
    bool beats_bound(std::int64_t s, std::int64_t c) const {
        if (!found) return false;
        return static_cast<__int128>(s) * comps > static_cast<__int128>(size) * c;
    }
};

ToughnessResult finish(const BestSet& best) {
    if (!best.found)
        return ToughnessResult{ExtendedRational::infinity(), std::nullopt, 0};
    return ToughnessResult{ExtendedRational(best.size, best.comps), best.mask,
                           static_cast<int>(best.comps)};
}

void check_l(int l) {
    if (l < 2) throw std::invalid_argument("l_toughness: l must be at least 2");
}

}  // namespace

ToughnessResult l_toughness(const Graph& g, int l) {
    check_l(l);
    const int n = g.order();
    if (n > kToughnessBudget)
        throw std::invalid_argument("l_toughness: graph exceeds the 26-vertex budget");
    const VertexSet all = g.vertex_mask();
    const int alpha = independence_number(g);
    if (alpha < l) return finish(BestSet{});  // no S with c(G-S) >= l exists

    BestSet best;
    for (int s = 0; s <= n - 1; ++s) {
        // c(G-S) <= min(alpha, n-s), so s/min(alpha, n-s) lower-bounds every
        // ratio at this size; the bound is nondecreasing in s.
        const std::int64_t cap = std::min<std::int64_t>(alpha, n - s);
        if (best.beats_bound(s, cap)) break;
        if (s == 0) {
            const int c = components_within(g, all);
            if (c >= l) best.offer(0, c, 0);
            continue;
        }
        // Gosper's hack: all size-s subsets in increasing mask order
        // (n <= 26, so the masks stay far below the 64-bit ceiling).
        const VertexSet limit = std::uint64_t{1} << n;
        for (VertexSet mask = (std::uint64_t{1} << s) - 1; mask < limit;) {
            const int c = components_within(g, all & ~mask);
            if (c >= l) best.offer(s, c, mask);
            const VertexSet low = mask & (~mask + 1);
            const VertexSet ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    return finish(best);
}

ToughnessResult toughness(const Graph& g) { return l_toughness(g, 2); }

bool is_tl_tough(const Graph& g, const ExtendedRational& t, int l) {
    return l_toughness(g, l).value >= t;
}

ToughnessResult l_toughness_naive(const Graph& g, int l) {
    check_l(l);
    const int n = g.order();
    if (n > kNaiveToughnessBudget)
        throw std::invalid_argument("l_toughness_naive: graph exceeds the 20-vertex budget");
    const VertexSet all = g.vertex_mask();
    BestSet best;
    for (VertexSet mask = 0; mask < all; ++mask) {  // proper subsets only
        const int c = components_within(g, all & ~mask);
        if (c >= l) best.offer(std::popcount(mask), c, mask);
    }
    return finish(best);
}

}  // namespace qtough
