#pragma once

#include "srp/feature.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

namespace srp {

/// A chain X -> X' -> X'' and a set A with A ∈ 𝓕(X), ι'ι(A) ∈ 𝓕(X''), ι(A) ∉ 𝓕(X').
struct Witness {
    ElementSet a;
    HypergraphMorphism iota;
    HypergraphMorphism iota_prime;
};

/// Failed clauses, empty when `w` is a genuine non-convexity witness (in class `required`, if given).
std::vector<std::string> verify_witness(const Feature& f, const Witness& w,
                                        std::optional<MonoClass> required = std::nullopt);

struct SearchConfig {
    std::size_t max_vertices = 6;
    std::size_t max_edges = 6;
    /// Sub-object pairs examined by the exhaustive phase before giving up.
    std::uint64_t budget = 2'000'000;
    /// Random chains tried after the exhaustive phase.
    std::uint64_t random_trials = 20'000;
    std::uint64_t seed = 0;
};

/// Throws Error on a config that cannot drive a search.
void validate(const SearchConfig& config);

struct SearchReport {
    std::optional<Witness> witness;
    /// "exhaustive", "random", or empty when nothing was found.
    std::string phase;
    std::uint64_t examined = 0;
    /// True when the exhaustive phase covered every canonical chain within the size bounds.
    bool exhaustive_complete = false;
    SearchConfig config;
};

/// Searches for a non-convexity witness whose morphisms are inclusions of class `cls` or stronger.
/// Exhaustive in canonical order first, then seeded random. Finding nothing is not a proof of convexity.
SearchReport convexity_witness_search(const Feature& f, MonoClass cls, const SearchConfig& config = {});

enum class Direction : std::uint8_t { Right, Left };

/// Right: A ∈ 𝓕(X) but ι(A) ∉ 𝓕(X'). Left: ι(A) ∈ 𝓕(X') but A ∉ 𝓕(X).
struct ContinuedCounterexample {
    ElementSet a;
    HypergraphMorphism iota;
};

struct ContinuedReport {
    std::optional<ContinuedCounterexample> counterexample;
    std::uint64_t examined = 0;
    bool exhaustive_complete = false;
};

ContinuedReport continued_check(const Feature& f, Direction direction, MonoClass cls,
                                const SearchConfig& config = {});

/// Hypergraphs on vertices v0.. and edges e0.. with no isolated vertex, edges as a non-decreasing
/// sequence of vertex bitmasks, by ascending |V|+|E|. `visit` returns false to stop.
/// Returns false if stopped early.
bool for_each_canonical_hypergraph(std::size_t max_vertices, std::size_t max_edges,
                                   const std::function<bool(const Hypergraph&)>& visit);

/// Sub-hypergraphs S of `h` whose inclusion S -> h lies in class `cls`.
///   SizePreserving: any edge subset, with exactly the vertices those edges cover.
///   MembershipReflecting: any vertex subset V', any edges meeting it, each cut down to V'.
///   General: as above with every edge cut to an arbitrary nonempty subset.
bool for_each_subobject(const Hypergraph& h, MonoClass cls, const std::function<bool(const Hypergraph&)>& visit);

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);
Hypergraph random_subobject(std::mt19937_64& rng, const Hypergraph& h, MonoClass cls);

}  // namespace srp
