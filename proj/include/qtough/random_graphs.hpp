#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qtough/graph.hpp"

namespace qtough {

std::uint64_t splitmix64(std::uint64_t x);

/// Independent deterministic RNG stream for (seed, index); lets sample loops
/// run in any order or in parallel without changing results.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, n); rejection-sampled so the draw sequence depends
/// only on our own code, not the standard library's distributions.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n);

/// Uniform double in [0, 1).
double unit_real(std::mt19937_64& rng);

struct SampleModel {
    enum class Kind { NearComplete, ExtremalPlus, Gnp };

    Kind kind = Kind::NearComplete;
    int edges = 0;    // max edges removed (near-complete) or added (extremal-plus)
    double p = 0.5;   // Gnp only

    /// "near-complete:8", "extremal-plus:5" or "gnp:0.5".
    static SampleModel parse(const std::string& text);
    std::string str() const;
};

Graph gnp(int n, double p, std::mt19937_64& rng);

/// K_n minus k random edges, k uniform in 0..max_removed.
Graph near_complete(int n, int max_removed, std::mt19937_64& rng);

/// base plus k random non-edges turned into edges, k uniform in 0..max_added
/// (capped by the number of available non-edges).
Graph graph_plus_random_edges(const Graph& base, int max_added, std::mt19937_64& rng);

/// Draw one graph according to the model; `extremal` is the base graph for
/// the extremal-plus model and ignored otherwise.
Graph sample_graph(const SampleModel& model, int n, const Graph& extremal,
                   std::mt19937_64& rng);

/// G(n, p) conditioned on connectivity by resampling (throws after max_tries).
Graph random_connected_gnp(int n, double p, std::mt19937_64& rng, int max_tries = 10000);

}  // namespace qtough
