#include "fixtures.hpp"
#include "oracles.hpp"

#include "srp/witness.hpp"

#include <doctest.h>

#include <random>

using namespace srp;

namespace {

/// Same hypergraph with vertex and edge ids replaced by a random relabeling.
Hypergraph relabel(const Hypergraph& h, std::mt19937_64& rng, IdMap& edge_names) {
    std::vector<std::string> vs;
    std::vector<std::string> es;
    for (std::size_t i = 0; i < h.vertex_count(); ++i) vs.push_back("w" + std::to_string(i));
    for (std::size_t i = 0; i < h.edge_count(); ++i) es.push_back("f" + std::to_string(i));
    std::shuffle(vs.begin(), vs.end(), rng);
    std::shuffle(es.begin(), es.end(), rng);
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        std::vector<std::string> members;
        for (auto v : h.incidence(e)) members.push_back(vs[v]);
        edges.emplace_back(es[e], members);
        edge_names[h.edges()[e]] = es[e];
    }
    return Hypergraph::make(vs, edges);
}

}  // namespace

TEST_SUITE("features") {

TEST_CASE("hub") {
    const auto f = fixtures::fxhub_filtration();
    CHECK(hub_holds(edge_set("e0"), f.object(1)));
    CHECK_FALSE(hub_holds(edge_set("e0"), f.object(2)));
    CHECK(hub_holds(edge_set("e0"), f.object(3)));
    CHECK_FALSE(hub_holds(edge_set("e0"), Hypergraph::make({"a"}, {{"e0", {"a"}}})));
    CHECK_FALSE(hub_holds({Element::edge("e0"), Element::edge("e1")}, f.object(1)));
    CHECK_FALSE(hub_holds(edge_set("zz"), f.object(1)));
}

TEST_CASE("exclusivity") {
    const auto h = fixtures::fx1();
    CHECK(exclusivity_holds(edge_set("e1"), h));
    CHECK_FALSE(exclusivity_holds(edge_set("e2"), h));
    CHECK(exclusivity_holds(edge_set("e"), Hypergraph::make({"a"}, {{"e", {"a"}}})));
    CHECK_FALSE(exclusivity_holds({Element::vertex("a")}, h));
}

TEST_CASE("max-originality values are exact") {
    CHECK(max_originality_value(Hypergraph::make({"a"}, {{"e", {"a"}}}), "e") == Rational(1));
    const auto h = Hypergraph::make({"a", "b", "c", "d"}, {{"e", {"a", "b", "c"}}, {"f", {"c", "d"}}});
    CHECK(max_originality_value(h, "e") == Rational(2, 3));
    CHECK(max_originality_holds(edge_set("e"), h));
    CHECK(max_originality_value(fixtures::fx1(), "e3") == Rational(0));
    CHECK_FALSE(max_originality_holds(edge_set("f"), h));
    CHECK_THROWS_AS(max_originality_value(h, "nope"), Error);
}

TEST_CASE("feature predicates agree with the oracle on random hypergraphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = random_hypergraph(rng, 6, 6);
        const auto g = oracle::from_library(h);
        for (const auto& name : builtin_feature_names()) {
            const auto f = feature_by_name(name);
            for (const auto& e : h.edges()) CHECK(f.holds(edge_set(e), h) == oracle::by_name(name)(g, e));
        }
    }
}

TEST_CASE("features are invariant under relabeling") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = random_hypergraph(rng, 6, 6);
        IdMap names;
        const auto r = relabel(h, rng, names);
        for (const auto& name : builtin_feature_names()) {
            const auto f = feature_by_name(name);
            for (const auto& e : h.edges()) CHECK(f.holds(edge_set(e), h) == f.holds(edge_set(names[e]), r));
        }
    }
}

TEST_CASE("enumerate lists singleton sets in edge order") {
    const auto f = fixtures::fxhub_filtration();
    CHECK(hub_feature().enumerate(f.object(1)) == std::vector<ElementSet>{edge_set("e0")});
    CHECK(hub_feature().enumerate(f.object(2)).empty());
    CHECK(exclusivity_feature().enumerate(fixtures::fx1()) == std::vector<ElementSet>{edge_set("e1")});
    CHECK_THROWS_AS(feature_by_name("nonsense"), Error);
}

TEST_CASE("maximal and minimal versions") {
    const auto all = all_edge_subsets_feature();
    const auto h = fixtures::fx1();
    const ElementSet full{Element::edge("e1"), Element::edge("e2"), Element::edge("e3")};
    CHECK(maximal_version(all).enumerate(h) == std::vector<ElementSet>{full});
    CHECK(minimal_version(all).enumerate(h) == std::vector<ElementSet>{ElementSet{}});

    const auto hub = hub_feature();
    const auto top = fixtures::fxhub_filtration().final_object();
    CHECK(maximal_version(hub).enumerate(top) == hub.enumerate(top));
    CHECK(minimal_version(hub).enumerate(top) == hub.enumerate(top));
    CHECK(maximal_version(hub).name() == "M(hub)");
}

TEST_CASE("witness verification") {
    const auto f = fixtures::fxhub_filtration();
    const Witness good{edge_set("e0"), f.transition(1, 2), f.transition(2, 3)};
    CHECK(verify_witness(hub_feature(), good).empty());
    CHECK(verify_witness(hub_feature(), good, MonoClass::SizePreserving).empty());
    CHECK_FALSE(verify_witness(exclusivity_feature(), good).empty());
    const Witness flat{edge_set("e0"), f.transition(1, 1), f.transition(1, 1)};
    CHECK_FALSE(verify_witness(hub_feature(), flat).empty());
}

TEST_CASE("witness search finds the hub non-convexity") {
    SearchConfig cfg;
    cfg.budget = 200'000;
    const auto r = convexity_witness_search(hub_feature(), MonoClass::SizePreserving, cfg);
    REQUIRE(r.witness.has_value());
    CHECK(r.phase == "exhaustive");
    CHECK(verify_witness(hub_feature(), *r.witness, MonoClass::SizePreserving).empty());
}

TEST_CASE("witness search finds exclusivity and max-originality non-convexity under membership reflection") {
    for (const auto& name : {"exclusivity", "max-originality"}) {
        CAPTURE(name);
        SearchConfig cfg;
        cfg.budget = 200'000;
        const auto f = feature_by_name(name);
        const auto r = convexity_witness_search(f, MonoClass::MembershipReflecting, cfg);
        REQUIRE(r.witness.has_value());
        CHECK(verify_witness(f, *r.witness, MonoClass::MembershipReflecting).empty());
    }
}

TEST_CASE("witness search on convex features finds nothing in a small space") {
    SearchConfig cfg;
    cfg.max_vertices = 4;
    cfg.max_edges = 3;
    cfg.random_trials = 500;
    for (const auto& name : {"exclusivity", "max-originality"}) {
        CAPTURE(name);
        const auto r = convexity_witness_search(feature_by_name(name), MonoClass::SizePreserving, cfg);
        CHECK_FALSE(r.witness.has_value());
        CHECK(r.exhaustive_complete);
    }
}

TEST_CASE("search config validation") {
    SearchConfig cfg;
    cfg.max_vertices = 0;
    CHECK_THROWS_AS(validate(cfg), Error);
    cfg = {};
    cfg.max_edges = 64;
    CHECK_THROWS_AS(validate(cfg), Error);
    CHECK_NOTHROW(validate(SearchConfig{}));
}

TEST_CASE("budget bounds the exhaustive phase") {
    SearchConfig cfg;
    cfg.budget = 50;
    cfg.random_trials = 0;
    const auto r = convexity_witness_search(exclusivity_feature(), MonoClass::SizePreserving, cfg);
    CHECK(r.examined <= 50);
    CHECK_FALSE(r.exhaustive_complete);
}

TEST_CASE("continued checks") {
    SearchConfig cfg;
    cfg.max_vertices = 4;
    cfg.max_edges = 3;
    cfg.random_trials = 200;
    cfg.budget = 20'000;
    CHECK_FALSE(continued_check(any_subset_feature(), Direction::Right, MonoClass::General, cfg).counterexample);
    CHECK_FALSE(continued_check(any_subset_feature(), Direction::Left, MonoClass::General, cfg).counterexample);
    cfg.max_edges = 4;  // a hub that loses its status needs four edges
    const auto right = continued_check(hub_feature(), Direction::Right, MonoClass::SizePreserving, cfg);
    REQUIRE(right.counterexample.has_value());
    CHECK(hub_holds(right.counterexample->a, right.counterexample->iota.source()));
    CHECK_FALSE(hub_holds(right.counterexample->iota.apply(right.counterexample->a), right.counterexample->iota.target()));
    const auto left = continued_check(exclusivity_feature(), Direction::Left, MonoClass::SizePreserving, cfg);
    CHECK_FALSE(left.counterexample.has_value());
}

TEST_CASE("canonical enumeration has no isolated vertices") {
    std::size_t seen = 0;
    for_each_canonical_hypergraph(3, 2, [&](const Hypergraph& h) {
        auto deg = h.vertex_degrees();
        CHECK(std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d > 0; }));
        ++seen;
        return true;
    });
    CHECK(seen > 0);
}

TEST_CASE("sub-objects lie in the requested class") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const auto h = share(random_hypergraph(rng, 4, 3));
        for (auto cls : {MonoClass::General, MonoClass::MembershipReflecting, MonoClass::SizePreserving}) {
            for_each_subobject(*h, cls, [&](const Hypergraph& s) {
                CHECK(satisfies(HypergraphMorphism::inclusion(share(s), h).mono_class(), cls));
                return true;
            });
            const auto r = random_subobject(rng, *h, cls);
            CHECK(satisfies(HypergraphMorphism::inclusion(share(r), h).mono_class(), cls));
        }
    }
}

}  // TEST_SUITE
