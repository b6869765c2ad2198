#include "fixtures.hpp"
#include "oracles.hpp"

#include "srp/corpus.hpp"
#include "srp/ingest.hpp"
#include "srp/json_io.hpp"
#include "srp/svg.hpp"

#include <doctest.h>

#include <filesystem>

using namespace srp;

TEST_SUITE("ingest") {

TEST_CASE("parse a play") {
    const auto p = parse_play("# title: Test\n\n0,B;A;A\n# note\n1,C\n2,A;C;\n");
    CHECK(p.title == "Test");
    REQUIRE(p.scenes.size() == 3);
    CHECK(p.scenes[0] == std::vector<std::string>{"A", "B"});
    CHECK(p.scenes[2] == std::vector<std::string>{"A", "C"});
}

TEST_CASE("play parse errors name the line") {
    CHECK_THROWS_WITH_AS(parse_play("0,A\n0,B\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_play("0,A\n2,B\n"), doctest::Contains("non-contiguous"), Error);
    CHECK_THROWS_WITH_AS(parse_play("0,\n"), doctest::Contains("empty scene"), Error);
    CHECK_THROWS_WITH_AS(parse_play("zero,A\n"), doctest::Contains("line 1"), Error);
    CHECK_THROWS_AS(parse_play("# nothing\n"), Error);
    CHECK_THROWS_AS(read_play("/nonexistent/play.csv"), Error);
}

TEST_CASE("scene ids are zero padded") {
    CHECK(scene_id(0, 5) == "scene00");
    CHECK(scene_id(7, 26) == "scene07");
    CHECK(scene_id(7, 150) == "scene007");
}

TEST_CASE("scene filtration") {
    const auto play = read_play(SRP_DATA_DIR "/sample_play.csv");
    CHECK(play.title == "A Short Play");
    const auto f = scene_filtration(play);
    CHECK(f.critical_values() == std::vector<double>{0, 1, 2, 3});
    CHECK(f.category_class() == MonoClass::SizePreserving);
    // Each scene keeps its cast once it appears.
    for (std::size_t i = 1; i < f.objects().size(); ++i)
        for (const auto& e : f.object(i).edges())
            CHECK(f.object(i).incidence_ids(e) == f.final_object().incidence_ids(e));
    const auto w = scene_hypergraph(play);
    CHECK(filtering_function(f) == FilteringFunction(w.weight.begin(), w.weight.end()));
    CHECK(w.weight.at(Element::vertex("Dave")) == 3);
}

TEST_CASE("character filtration grows edges and is membership reflecting") {
    const auto play = parse_play("0,A;B\n1,B\n");
    const auto f = character_filtration(play);
    CHECK(f.category_class() == MonoClass::MembershipReflecting);
    REQUIRE(f.steps().size() == 2);
    CHECK(f.steps()[1].mono_class() == MonoClass::MembershipReflecting);
    CHECK(f.final_object().incidence_ids("B") == std::vector<std::string>{"scene00", "scene01"});

    const auto sample = read_play(SRP_DATA_DIR "/sample_play.csv");
    CHECK(are_isomorphic(character_filtration(sample).final_object(), dual(scene_filtration(sample).final_object())));
}

}  // TEST_SUITE

TEST_SUITE("json") {

TEST_CASE("hypergraph and weighted round trips") {
    const auto h = fixtures::fx1();
    CHECK(hypergraph_from_json(to_json(h)) == h);
    const auto w = fixtures::fxhub();
    const auto back = weighted_from_json(to_json(w));
    CHECK(back.graph == w.graph);
    CHECK(back.weight == w.weight);
    CHECK_THROWS_WITH_AS(hypergraph_from_json(Json::parse(R"({"vertices": 3})")), doctest::Contains("invalid"), Error);
}

TEST_CASE("filtration round trips") {
    const auto f = fixtures::fxhub_filtration();
    const auto g = filtration_from_json(to_json(f));
    CHECK(g.critical_values() == f.critical_values());
    CHECK(filtering_function(g) == filtering_function(f));
    const auto c = character_filtration(parse_play("0,A;B\n1,B\n2,C;A\n"));
    CHECK(to_json(filtration_from_json(to_json(c))) == to_json(c));

    const auto file = filtration_from_json(read_json(SRP_DATA_DIR "/fxhub.json"));
    CHECK(file.critical_values() == std::vector<double>{0, 1, 2});
    CHECK_THROWS_AS(read_json("/nonexistent.json"), Error);
}

TEST_CASE("an overclaimed morphism class is rejected") {
    const auto c = character_filtration(parse_play("0,A;B\n1,B\n"));
    auto j = to_json(c);
    j["steps"][1]["class"] = "=";
    CHECK_THROWS_WITH_AS(filtration_from_json(j), doctest::Contains("declared class"), Error);
}

TEST_CASE("diagram and witness round trips") {
    PersistenceDiagram d;
    d.mode = Mode::Ranging;
    d.points = {{-kInf, 1, 1}, {0, 2, 3}, {1, kInf, 1}};
    const auto back = diagram_from_json(to_json(d));
    CHECK(back == d);
    CHECK(back.mode == Mode::Ranging);

    const auto f = fixtures::fxhub_filtration();
    const Witness w{edge_set("e0"), f.transition(1, 2), f.transition(2, 3)};
    const auto wb = witness_from_json(to_json(w));
    CHECK(wb.a == w.a);
    CHECK(wb.iota.vertex_map() == w.iota.vertex_map());
    CHECK(verify_witness(hub_feature(), wb).empty());
}

TEST_CASE("svg output is well formed") {
    const auto d = diagram(persistence_function(hub_feature(), fixtures::fxhub_filtration(), Mode::Steady));
    const auto svg = diagram_to_svg(d, "hub <steady>");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("hub &lt;steady&gt;") != std::string::npos);
}

}  // TEST_SUITE
