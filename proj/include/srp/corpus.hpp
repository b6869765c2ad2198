#pragma once

#include "srp/filtration.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace srp {

struct CorpusConfig {
    std::size_t max_vertices = 6;
    std::size_t max_edges = 6;
    /// Weights are drawn from {0, ..., levels-1}, so a filtration has at most `levels` critical values.
    std::size_t levels = 4;
};

/// Random hypergraph without isolated vertices and monotone integer weights.
WeightedHypergraph random_weighted_hypergraph(std::mt19937_64& rng, const CorpusConfig& config = {});

/// `count` weighted hypergraphs from one seeded stream.
std::vector<WeightedHypergraph> random_corpus(std::uint64_t seed, std::size_t count, const CorpusConfig& config = {});

/// Same hypergraph, each weight moved by at most one level, then raised where an edge fell below its vertices.
WeightedHypergraph perturb_weights(std::mt19937_64& rng, const WeightedHypergraph& w, const CorpusConfig& config = {});

}  // namespace srp
