#include "qtough/graph.hpp"

#include <algorithm>

namespace qtough {

std::vector<int> set_members(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

VertexSet set_from_members(const std::vector<int>& members) {
    VertexSet s = 0;
    for (int v : members) {
        if (v < 0 || v >= kMaxVertices)
            throw std::invalid_argument("vertex set: index out of range");
        s |= std::uint64_t{1} << v;
    }
    return s;
}

Graph make_empty(int n) { return Graph(n); }

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    Graph g(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v : set_members(g1.neighbors(u)))
            if (v > u) g.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v : set_members(g2.neighbors(u)))
            if (v > u) g.add_edge(n1 + u, n1 + v);
    return g;
}

Graph copies(int t, const Graph& g) {
    if (t < 0) throw std::invalid_argument("copies: negative count");
    Graph out(0);
    for (int i = 0; i < t; ++i) out = disjoint_union(out, g);
    return out;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
    return g;
}

Graph remove_vertices(const Graph& g, VertexSet s) {
    if (s & ~g.vertex_mask())
        throw std::invalid_argument("remove_vertices: set contains out-of-range vertices");
    const VertexSet keep = g.vertex_mask() & ~s;
    std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v : set_members(keep)) new_index[static_cast<std::size_t>(v)] = next++;
    Graph out(next);
    for (int u : set_members(keep))
        for (int v : set_members(g.neighbors(u) & keep))
            if (v > u) out.add_edge(new_index[static_cast<std::size_t>(u)],
                                    new_index[static_cast<std::size_t>(v)]);
    return out;
}

int components_within(const Graph& g, VertexSet alive) {
    if (alive & ~g.vertex_mask())
        throw std::invalid_argument("components_within: set contains out-of-range vertices");
    int count = 0;
    while (alive) {
        VertexSet comp = alive & (~alive + 1);
        VertexSet frontier = comp;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const VertexSet fresh = g.neighbors(v) & alive & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        alive &= ~comp;
        ++count;
    }
    return count;
}

int components_count(const Graph& g) { return components_within(g, g.vertex_mask()); }

int isolated_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v) == 0) ++count;
    return count;
}

namespace {

void independence_search(const Graph& g, VertexSet alive, int current, int& best) {
    if (current + std::popcount(alive) <= best) return;
    if (alive == 0) {
        best = std::max(best, current);
        return;
    }
    // pick a max-degree vertex of the remaining induced subgraph
    int pick = -1;
    int pick_deg = -1;
    for (VertexSet rest = alive; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int d = std::popcount(g.neighbors(v) & alive);
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    }
    const VertexSet bit = std::uint64_t{1} << pick;
    if (pick_deg == 0) {
        // everything left is independent
        best = std::max(best, current + std::popcount(alive));
        return;
    }
    independence_search(g, alive & ~(g.neighbors(pick) | bit), current + 1, best);
    independence_search(g, alive & ~bit, current, best);
}

}  // namespace

int independence_number(const Graph& g) {
    if (g.order() > kMaxVertices)
        throw std::invalid_argument("independence_number: graph exceeds enumeration limit");
    int best = 0;
    independence_search(g, g.vertex_mask(), 0, best);
    return best;
}

bool is_connected(const Graph& g) { return g.order() >= 1 && components_count(g) == 1; }

bool is_edge_subgraph(const Graph& h, const Graph& g) {
    if (h.order() != g.order()) return false;
    for (int v = 0; v < h.order(); ++v)
        if (h.neighbors(v) & ~g.neighbors(v)) return false;
    return true;
}

}  // namespace qtough
