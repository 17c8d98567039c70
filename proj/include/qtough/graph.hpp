#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtough {

// Bitmask representation caps the library at 64 vertices; every exact
// enumeration in the project stays well below that.
inline constexpr int kMaxVertices = 64;

/// Subset of {0,...,n-1}, bit i = vertex i.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> set_members(VertexSet s);
VertexSet set_from_members(const std::vector<int>& members);

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bitset rows.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n)), 0) {}

    int order() const { return n_; }

    /// Mask with one bit per vertex.
    VertexSet vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int edge_count() const {
        int twice = 0;
        for (auto row : adj_) twice += std::popcount(row);
        return twice / 2;
    }

    /// Label-sensitive equality: same order and same adjacency rows.
    bool operator==(const Graph&) const = default;

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        if (n > kMaxVertices)
            throw std::invalid_argument("graph: vertex count exceeds the 64-vertex limit");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex index out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Constructors.
Graph make_empty(int n);
Graph make_complete(int n);
Graph make_cycle(int n);  // rejects n < 3
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph copies(int t, const Graph& g);
Graph join(const Graph& g1, const Graph& g2);

/// Induced subgraph on V(g) \ s; survivors keep relative order, reindexed contiguously.
Graph remove_vertices(const Graph& g, VertexSet s);

// Invariants.
int components_count(const Graph& g);

/// Component count of the subgraph induced on `alive` (no reindexing needed).
int components_within(const Graph& g, VertexSet alive);

int isolated_count(const Graph& g);

/// Exact independence number by branch and bound (branch on a max-degree
/// vertex, bound by remaining vertex count).
int independence_number(const Graph& g);

bool is_connected(const Graph& g);

/// True iff h and g share the vertex set and every edge of h is an edge of g.
bool is_edge_subgraph(const Graph& h, const Graph& g);

}  // namespace qtough
