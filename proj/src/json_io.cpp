#include "srp/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace srp {

namespace {

Json level_to_json(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

double level_from_json(const Json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return -kInf;
        throw Error("invalid level '" + s + "'");
    }
    return j.get<double>();
}

template <class F>
auto guarded(const char* what, F&& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid ") + what + " JSON: " + e.what());
    }
}

IdMap id_map_from_json(const Json& j) {
    IdMap out;
    for (const auto& [k, v] : j.items()) out.emplace(k, v.get<std::string>());
    return out;
}

}  // namespace

Json to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (const auto& e : h.edges()) edges.push_back({{"id", e}, {"vertices", h.incidence_ids(e)}});
    return {{"vertices", h.vertices()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
    return guarded("hypergraph", [&] {
        HypergraphSpec spec;
        spec.vertices = j.at("vertices").get<std::vector<std::string>>();
        for (const auto& e : j.at("edges"))
            spec.edges.emplace_back(e.at("id").get<std::string>(), e.at("vertices").get<std::vector<std::string>>());
        return Hypergraph::from_spec(spec);
    });
}

Json to_json(const HypergraphMorphism& m) {
    return {{"vertex_map", m.vertex_map()}, {"edge_map", m.edge_map()}, {"class", to_symbol(m.mono_class())}};
}

HypergraphMorphism morphism_from_json(const Json& j, HypergraphPtr source, HypergraphPtr target) {
    return guarded("morphism", [&] {
        auto m = HypergraphMorphism::make(std::move(source), std::move(target), id_map_from_json(j.at("vertex_map")),
                                          id_map_from_json(j.at("edge_map")));
        if (j.contains("class")) {
            const auto claimed = parse_mono_class(j.at("class").get<std::string>());
            if (!satisfies(m.mono_class(), claimed))
                throw Error("morphism declared class " + to_symbol(claimed) + " but only satisfies " +
                            to_symbol(m.mono_class()));
        }
        return m;
    });
}

Json to_json(const TameFiltration& f) {
    Json objects = Json::array();
    for (const auto& o : f.objects()) objects.push_back(to_json(*o));
    Json steps = Json::array();
    for (const auto& s : f.steps()) steps.push_back(to_json(s));
    return {{"class", to_symbol(f.category_class())},
            {"critical_values", f.critical_values()},
            {"objects", objects},
            {"steps", steps}};
}

Json to_json(const WeightedHypergraph& w) {
    Json j = to_json(w.graph);
    Json weights = Json::object();
    for (const auto& [x, v] : w.weight) weights[x.id] = v;
    j["weights"] = weights;
    return j;
}

WeightedHypergraph weighted_from_json(const Json& j) {
    return guarded("weighted hypergraph", [&] {
        WeightedHypergraph w;
        w.graph = hypergraph_from_json(j);
        for (const auto& [id, v] : j.at("weights").items()) {
            const bool is_v = w.graph.has_vertex(id);
            const bool is_e = w.graph.has_edge(id);
            if (is_v && is_e) throw Error("weight key '" + id + "' names both a vertex and an edge");
            if (!is_v && !is_e) throw Error("weight given for unknown element '" + id + "'");
            w.weight.emplace(is_v ? Element::vertex(id) : Element::edge(id), v.get<double>());
        }
        return w;
    });
}

TameFiltration filtration_from_json(const Json& j) {
    return guarded("filtration", [&] {
        const auto cls = j.contains("class") ? parse_mono_class(j.at("class").get<std::string>())
                                             : MonoClass::SizePreserving;
        if (j.contains("weights")) return sublevel_filtration(weighted_from_json(j), cls);
        auto levels = j.at("critical_values").get<std::vector<double>>();
        std::vector<HypergraphPtr> objects;
        for (const auto& o : j.at("objects")) objects.push_back(share(hypergraph_from_json(o)));
        const auto& steps_json = j.at("steps");
        if (steps_json.size() + 1 != objects.size())
            throw Error("filtration: expected " + std::to_string(objects.size() == 0 ? 0 : objects.size() - 1) +
                        " steps, got " + std::to_string(steps_json.size()));
        std::vector<HypergraphMorphism> steps;
        for (std::size_t i = 0; i < steps_json.size(); ++i)
            steps.push_back(morphism_from_json(steps_json[i], objects[i], objects[i + 1]));
        return TameFiltration(std::move(levels), std::move(objects), std::move(steps), cls);
    });
}

Json to_json(const PersistenceDiagram& d) {
    Json points = Json::array();
    for (const auto& p : d.points)
        points.push_back({{"birth", level_to_json(p.birth)}, {"death", level_to_json(p.death)}, {"mult", p.mult}});
    return {{"mode", to_string(d.mode)}, {"points", points}};
}

PersistenceDiagram diagram_from_json(const Json& j) {
    return guarded("diagram", [&] {
        PersistenceDiagram d;
        d.mode = parse_mode(j.at("mode").get<std::string>());
        for (const auto& p : j.at("points")) {
            DiagramPoint pt{level_from_json(p.at("birth")), level_from_json(p.at("death")),
                            p.at("mult").get<std::int64_t>()};
            if (!(pt.birth < pt.death)) throw Error("diagram point with birth >= death");
            if (pt.mult <= 0) throw Error("diagram point with non-positive multiplicity");
            d.points.push_back(pt);
        }
        std::sort(d.points.begin(), d.points.end());
        return d;
    });
}

Json to_json(const ElementSet& s) {
    Json vertices = Json::array();
    Json edges = Json::array();
    for (const auto& x : s) (x.is_vertex() ? vertices : edges).push_back(x.id);
    return {{"vertices", vertices}, {"edges", edges}};
}

ElementSet element_set_from_json(const Json& j) {
    return guarded("element set", [&] {
        ElementSet s;
        if (j.contains("vertices"))
            for (const auto& v : j.at("vertices")) s.insert(Element::vertex(v.get<std::string>()));
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) s.insert(Element::edge(e.get<std::string>()));
        return s;
    });
}

Json to_json(const Witness& w) {
    return {{"A", to_json(w.a)},
            {"X", to_json(w.iota.source())},
            {"X1", to_json(w.iota.target())},
            {"X2", to_json(w.iota_prime.target())},
            {"iota", to_json(w.iota)},
            {"iota_prime", to_json(w.iota_prime)}};
}

Witness witness_from_json(const Json& j) {
    return guarded("witness", [&] {
        auto x = share(hypergraph_from_json(j.at("X")));
        auto x1 = share(hypergraph_from_json(j.at("X1")));
        auto x2 = share(hypergraph_from_json(j.at("X2")));
        return Witness{element_set_from_json(j.at("A")), morphism_from_json(j.at("iota"), x, x1),
                       morphism_from_json(j.at("iota_prime"), x1, x2)};
    });
}

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("cannot parse " + path.string() + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed for " + path.string());
}

}  // namespace srp
