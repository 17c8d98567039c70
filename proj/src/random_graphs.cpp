#include "qtough/random_graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtough {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounded: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SampleModel SampleModel::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    SampleModel model;
    if (name == "near-complete") {
        model.kind = Kind::NearComplete;
        model.edges = arg.empty() ? 6 : std::stoi(arg);
        if (model.edges < 0) throw std::invalid_argument("sample model: negative edge count");
    } else if (name == "extremal-plus") {
        model.kind = Kind::ExtremalPlus;
        model.edges = arg.empty() ? 5 : std::stoi(arg);
        if (model.edges < 0) throw std::invalid_argument("sample model: negative edge count");
    } else if (name == "gnp") {
        model.kind = Kind::Gnp;
        model.p = arg.empty() ? 0.5 : std::stod(arg);
        if (model.p < 0.0 || model.p > 1.0)
            throw std::invalid_argument("sample model: p must lie in [0,1]");
    } else {
        throw std::invalid_argument("sample model: unknown kind \"" + name + "\"");
    }
    return model;
}

std::string SampleModel::str() const {
    switch (kind) {
        case Kind::NearComplete:
            return "near-complete:" + std::to_string(edges);
        case Kind::ExtremalPlus:
            return "extremal-plus:" + std::to_string(edges);
        case Kind::Gnp:
            return "gnp:" + std::to_string(p);
    }
    return "?";
}

Graph gnp(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_real(rng) < p) g.add_edge(u, v);
    return g;
}

namespace {

// first k entries of a Fisher-Yates shuffle over 0..count-1
std::vector<int> sample_indices(int count, int k, std::mt19937_64& rng) {
    std::vector<int> idx(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) idx[static_cast<std::size_t>(i)] = i;
    k = std::min(k, count);
    for (int i = 0; i < k; ++i) {
        const int j =
            i + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(count - i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(static_cast<std::size_t>(k));
    return idx;
}

}  // namespace

Graph near_complete(int n, int max_removed, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int k = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_removed) + 1));
    std::vector<int> removed = sample_indices(static_cast<int>(pairs.size()), k, rng);
    std::vector<bool> gone(pairs.size(), false);
    for (int i : removed) gone[static_cast<std::size_t>(i)] = true;
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!gone[i]) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

Graph graph_plus_random_edges(const Graph& base, int max_added, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < base.order(); ++u)
        for (int v = u + 1; v < base.order(); ++v)
            if (!base.has_edge(u, v)) missing.emplace_back(u, v);
    const int k = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_added) + 1));
    Graph g = base;
    for (int i : sample_indices(static_cast<int>(missing.size()), k, rng)) {
        const auto [u, v] = missing[static_cast<std::size_t>(i)];
        g.add_edge(u, v);
    }
    return g;
}

Graph sample_graph(const SampleModel& model, int n, const Graph& extremal,
                   std::mt19937_64& rng) {
    switch (model.kind) {
        case SampleModel::Kind::NearComplete:
            return near_complete(n, model.edges, rng);
        case SampleModel::Kind::ExtremalPlus:
            if (extremal.order() != n)
                throw std::invalid_argument("sample_graph: extremal base has the wrong order");
            return graph_plus_random_edges(extremal, model.edges, rng);
        case SampleModel::Kind::Gnp:
            return gnp(n, model.p, rng);
    }
    throw std::logic_error("sample_graph: unreachable");
}

Graph random_connected_gnp(int n, double p, std::mt19937_64& rng, int max_tries) {
    for (int i = 0; i < max_tries; ++i) {
        Graph g = gnp(n, p, rng);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_gnp: no connected sample found");
}

}  // namespace qtough
