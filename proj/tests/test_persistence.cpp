#include "fixtures.hpp"
#include "oracles.hpp"

#include "srp/corpus.hpp"

#include <doctest.h>

#include <random>

using namespace srp;

namespace {

std::vector<ElementSet> elements_of(const std::vector<TrackedSet>& sets) {
    std::vector<ElementSet> out;
    for (const auto& s : sets) out.push_back(s.elements);
    return out;
}

PersistenceDiagram make_diagram(std::vector<DiagramPoint> pts) {
    PersistenceDiagram d;
    d.points = std::move(pts);
    std::sort(d.points.begin(), d.points.end());
    return d;
}

PersistenceDiagram random_diagram(std::mt19937_64& rng, std::size_t max_points) {
    std::uniform_int_distribution<int> count(0, static_cast<int>(max_points));
    std::uniform_int_distribution<int> coord(0, 6);
    std::bernoulli_distribution essential(0.2);
    std::vector<DiagramPoint> pts;
    for (int k = count(rng); k > 0; --k) {
        const double b = coord(rng);
        const double d = essential(rng) ? kInf : b + 1 + coord(rng);
        pts.push_back({b, d, 1});
    }
    return make_diagram(pts);
}

}  // namespace

TEST_SUITE("persistence") {

TEST_CASE("steady and ranging sets on the hub fixture") {
    const auto f = fixtures::fxhub_filtration();
    const auto hub = hub_feature();
    const auto s = steady_set(hub, f, 0, 0.5);
    REQUIRE(s.size() == 1);
    CHECK(s[0].elements == edge_set("e0"));
    CHECK(s[0].base_level == 0);
    CHECK(steady_set(hub, f, 0, 1).empty());
    CHECK(elements_of(ranging_set(hub, f, 1, 1)) == std::vector<ElementSet>{edge_set("e0")});
    CHECK(ranging_set(hub, f, 1, 1)[0].base_level == 1);
    CHECK_THROWS_AS(steady_set(hub, f, 2, 1), Error);
    CHECK_THROWS_AS(ranging_set(hub, f, 2, 1), Error);
}

TEST_CASE("persistence function values on the hub fixture") {
    const auto f = fixtures::fxhub_filtration();
    const auto steady = persistence_function(hub_feature(), f, Mode::Steady);
    CHECK(steady.at(0, 0.5) == 1);
    CHECK(steady.at(0, 1.5) == 0);
    CHECK(steady.at(2, 10) == 1);
    CHECK(steady.at(2, kInf) == 1);
    CHECK(steady.at(-5, 0) == 0);
    const auto ranging = persistence_function(hub_feature(), f, Mode::Ranging);
    CHECK(ranging.at(1, 1.5) == 1);
    CHECK(ranging.at(0, kInf) == 1);
    CHECK_THROWS_AS(steady.at(1, 0), Error);
    CHECK(check_axioms(steady) == std::nullopt);
    CHECK(check_axioms(ranging) == std::nullopt);
}

TEST_CASE("persistence values match the brute-force counts") {
    std::mt19937_64 rng(1);
    for (const auto& w : random_corpus(17, 40)) {
        const auto f = sublevel_filtration(w, MonoClass::SizePreserving);
        const auto lv = oracle::from_weights(w);
        for (const auto& name : builtin_feature_names())
            for (auto mode : {Mode::Steady, Mode::Ranging}) {
                const auto p = persistence_function(feature_by_name(name), f, mode);
                const auto& s = p.samples;
                for (std::size_t k = 0; k < s.size(); ++k)
                    for (std::size_t l = k; l <= s.size(); ++l) {
                        const double v = l == s.size() ? kInf : s[l];
                        CHECK(p.grid(k, l) == oracle::count(lv, oracle::by_name(name), mode, s[k], v));
                    }
            }
    }
}

TEST_CASE("hub fixture diagrams") {
    const auto f = fixtures::fxhub_filtration();
    const auto s = diagram(persistence_function(hub_feature(), f, Mode::Steady));
    const auto r = diagram(persistence_function(hub_feature(), f, Mode::Ranging));
    CHECK(s.points == std::vector<DiagramPoint>{{0, 1, 1}, {2, kInf, 1}});
    CHECK(r.points == std::vector<DiagramPoint>{{0, kInf, 1}});
    const auto lv = oracle::from_weights(fixtures::fxhub());
    CHECK(oracle::as_map(s) == oracle::diagram(lv, oracle::hub, Mode::Steady));
    CHECK(oracle::as_map(r) == oracle::diagram(lv, oracle::hub, Mode::Ranging));
}

TEST_CASE("diagrams match the neighbourhood-form oracle") {
    for (const auto& w : random_corpus(23, 60)) {
        const auto f = sublevel_filtration(w, MonoClass::SizePreserving);
        const auto lv = oracle::from_weights(w);
        for (const auto& name : builtin_feature_names())
            for (auto mode : {Mode::Steady, Mode::Ranging}) {
                const auto d = diagram(persistence_function(feature_by_name(name), f, mode));
                CHECK(oracle::as_map(d) == oracle::diagram(lv, oracle::by_name(name), mode));
            }
    }
}

TEST_CASE("births at minus infinity on filtrations with a nonempty first object") {
    const auto h = share(fixtures::fx1());
    const auto p = persistence_function(exclusivity_feature(), TameFiltration::constant(h), Mode::Steady);
    const auto d = diagram(p);
    CHECK(d.points == std::vector<DiagramPoint>{{-kInf, kInf, 1}});
    CHECK(representation_identity_check(p, d));
}

TEST_CASE("representation identity") {
    const auto f = fixtures::fxhub_filtration();
    for (auto mode : {Mode::Steady, Mode::Ranging}) {
        auto p = persistence_function(hub_feature(), f, mode);
        const auto d = diagram(p);
        CHECK(representation_identity_check(p, d));
        p.table.at(1, 1) += 1;
        CHECK_FALSE(representation_identity_check(p, d));
        const auto fail = representation_identity_failure(p, d);
        REQUIRE(fail.has_value());
        CHECK(fail->value != fail->quadrant_sum);
    }
}

TEST_CASE("axiom checker catches a corrupted grid") {
    auto p = persistence_function(hub_feature(), fixtures::fxhub_filtration(), Mode::Steady);
    p.table.at(0, 3) = 5;
    CHECK(check_axioms(p).has_value());
}

TEST_CASE("reference and parallel kernels agree") {
    for (const auto& w : random_corpus(31, 80)) {
        const auto f = sublevel_filtration(w, MonoClass::SizePreserving);
        for (const auto& name : builtin_feature_names())
            for (auto mode : {Mode::Steady, Mode::Ranging}) {
                const auto feat = feature_by_name(name);
                CHECK(count_table_reference(feat, f, mode) == count_table_parallel(feat, f, mode));
            }
    }
}

TEST_CASE("steady counts never exceed ranging counts") {
    for (const auto& w : random_corpus(41, 40)) {
        const auto f = sublevel_filtration(w, MonoClass::SizePreserving);
        for (const auto& name : builtin_feature_names()) {
            const auto s = persistence_function(feature_by_name(name), f, Mode::Steady);
            const auto r = persistence_function(feature_by_name(name), f, Mode::Ranging);
            for (std::size_t i = 0; i < s.table.intervals(); ++i)
                for (std::size_t j = i; j < s.table.intervals(); ++j) CHECK(s.table.at(i, j) <= r.table.at(i, j));
        }
    }
}

TEST_CASE("bottleneck examples") {
    const auto a = make_diagram({{0, 2, 1}});
    const auto b = make_diagram({{0, 3, 1}});
    CHECK(bottleneck(a, a) == 0);
    CHECK(bottleneck(a, b) == 1);
    CHECK(bottleneck(make_diagram({{0, kInf, 1}}), PersistenceDiagram{}) == kInf);
    CHECK(bottleneck(make_diagram({{0, kInf, 1}}), make_diagram({{2, kInf, 1}})) == 2);
    CHECK(bottleneck(make_diagram({{-kInf, 3, 1}}), make_diagram({{0, kInf, 1}})) == kInf);
    CHECK(bottleneck(make_diagram({{0, 4, 2}}), make_diagram({{0, 4, 1}})) == 2);
    long matchings = 0;
    CHECK(oracle::bottleneck(a, b, &matchings) == 1);
    CHECK(matchings == 2);
}

TEST_CASE("bottleneck matches the all-matchings oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const auto a = random_diagram(rng, 5);
        const auto b = random_diagram(rng, 5);
        CHECK(bottleneck(a, b) == oracle::bottleneck(a, b));
        CHECK(bottleneck(a, b) == bottleneck(b, a));
    }
}

TEST_CASE("epsilon compatibility") {
    const auto f = fixtures::fxhub_filtration();
    const auto p = persistence_function(hub_feature(), f, Mode::Steady);
    CHECK(epsilon_compatible(p, p, 0).compatible);
    CHECK(epsilon_compatible(p, p, 1).compatible);
    const auto empty = persistence_function(hub_feature(), TameFiltration::constant(share(Hypergraph{})), Mode::Steady);
    const auto r = epsilon_compatible(p, empty, 0.25, "F", "E");
    CHECK_FALSE(r.compatible);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->lhs_name == "F");
    CHECK(r.violation->shifted > r.violation->unshifted);
    CHECK_THROWS_AS(epsilon_compatible(p, p, -1), Error);
}

TEST_CASE("mode names") {
    CHECK(parse_mode("steady") == Mode::Steady);
    CHECK(to_string(Mode::Ranging) == "ranging");
    CHECK_THROWS_AS(parse_mode("both"), Error);
}

}  // TEST_SUITE
