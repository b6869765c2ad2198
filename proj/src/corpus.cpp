#include "srp/corpus.hpp"

#include "srp/witness.hpp"

#include <algorithm>

namespace srp {

namespace {

void raise_edges(WeightedHypergraph& w) {
    const auto& h = w.graph;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto& we = w.weight.at(Element::edge(h.edges()[e]));
        for (auto v : h.incidence(e)) we = std::max(we, w.weight.at(Element::vertex(h.vertices()[v])));
    }
}

}  // namespace

WeightedHypergraph random_weighted_hypergraph(std::mt19937_64& rng, const CorpusConfig& config) {
    if (config.levels == 0) throw Error("corpus config: levels must be positive");
    WeightedHypergraph w;
    w.graph = random_hypergraph(rng, config.max_vertices, config.max_edges);
    std::uniform_int_distribution<int> level(0, static_cast<int>(config.levels) - 1);
    for (const auto& v : w.graph.vertices()) w.weight.emplace(Element::vertex(v), level(rng));
    for (const auto& e : w.graph.edges()) w.weight.emplace(Element::edge(e), level(rng));
    raise_edges(w);
    return w;
}

std::vector<WeightedHypergraph> random_corpus(std::uint64_t seed, std::size_t count, const CorpusConfig& config) {
    std::mt19937_64 rng(seed);
    std::vector<WeightedHypergraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_weighted_hypergraph(rng, config));
    return out;
}

WeightedHypergraph perturb_weights(std::mt19937_64& rng, const WeightedHypergraph& w, const CorpusConfig& config) {
    std::uniform_int_distribution<int> delta(-1, 1);
    WeightedHypergraph out = w;
    const double top = static_cast<double>(config.levels) - 1.0;
    for (auto& [_, x] : out.weight) x = std::clamp(x + delta(rng), 0.0, top);
    raise_edges(out);
    return out;
}

}  // namespace srp
