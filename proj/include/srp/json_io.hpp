#pragma once

#include "srp/filtration.hpp"
#include "srp/persistence.hpp"
#include "srp/witness.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace srp {

using Json = nlohmann::json;

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

/// {"vertex_map", "edge_map", "class"}; the class is always the derived one.
Json to_json(const HypergraphMorphism& m);
/// The class is re-derived; a "class" field claiming more than the maps satisfy is an error.
HypergraphMorphism morphism_from_json(const Json& j, HypergraphPtr source, HypergraphPtr target);

Json to_json(const TameFiltration& f);
/// Accepts an explicit filtration {"class","critical_values","objects","steps"} or a weighted
/// hypergraph {"vertices","edges","weights"[,"class"]}, whose sublevel filtration is returned.
TameFiltration filtration_from_json(const Json& j);

Json to_json(const WeightedHypergraph& w);
WeightedHypergraph weighted_from_json(const Json& j);

Json to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const ElementSet& s);
ElementSet element_set_from_json(const Json& j);

/// Reads and parses a JSON file; throws Error with the path on failure.
Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace srp
