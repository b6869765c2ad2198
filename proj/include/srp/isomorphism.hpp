#pragma once

#include "srp/hypergraph.hpp"

#include <cstddef>
#include <functional>

namespace srp {

/// Default |V|+|E| cap for exhaustive isomorphism search.
inline constexpr std::size_t kDefaultSizeCap = 12;

/// kDefaultSizeCap unless the SRP_SIZE_CAP environment variable holds a positive integer.
std::size_t default_size_cap();

/// Bijection between two hypergraphs given by index maps.
struct IsomorphismMap {
    std::vector<std::uint32_t> vertex_map;
    std::vector<std::uint32_t> edge_map;
};

/// Pair filter used to prune the search: may x (in the source) map to y (in the target)?
using AdmissiblePair = std::function<bool(const Element& source, const Element& target)>;

/// Visits every isomorphism from `a` to `b` (incidence preserved in both directions).
/// `visit` returns false to stop early. Returns false if stopped early.
/// Throws SizeCapError when a.carrier_size() exceeds `cap`.
bool for_each_isomorphism(const Hypergraph& a, const Hypergraph& b,
                          const std::function<bool(const IsomorphismMap&)>& visit,
                          const AdmissiblePair& admissible = {}, std::size_t cap = default_size_cap());

/// All isomorphisms from `a` to `b`, in the search's canonical order.
std::vector<HypergraphMorphism> isomorphisms(const HypergraphPtr& a, const HypergraphPtr& b,
                                             std::size_t cap = default_size_cap());

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, std::size_t cap = default_size_cap());

}  // namespace srp
