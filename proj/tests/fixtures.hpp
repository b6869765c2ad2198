#pragma once

#include "srp/filtration.hpp"

namespace fixtures {

/// a, b, c with e1 = {a,b}, e2 = {b,c}, e3 = {c}.
inline srp::Hypergraph fx1() {
    return srp::Hypergraph::make({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"c"}}});
}

/// Six vertices; e0 is a hub at level 0, loses it when e3 arrives at 1, regains it at 2.
inline srp::WeightedHypergraph fxhub() {
    srp::WeightedHypergraph w;
    w.graph = srp::Hypergraph::make({"a", "b", "c", "d", "e", "f"}, {{"e0", {"a", "b"}},
                                                                      {"e1", {"a", "c"}},
                                                                      {"e2", {"b", "d"}},
                                                                      {"e3", {"c", "d"}},
                                                                      {"e4", {"a", "e"}},
                                                                      {"e5", {"b", "f"}}});
    using srp::Element;
    for (const char* v : {"a", "b", "c", "d"}) w.weight[Element::vertex(v)] = 0;
    for (const char* v : {"e", "f"}) w.weight[Element::vertex(v)] = 2;
    for (const char* e : {"e0", "e1", "e2"}) w.weight[Element::edge(e)] = 0;
    w.weight[Element::edge("e3")] = 1;
    for (const char* e : {"e4", "e5"}) w.weight[Element::edge(e)] = 2;
    return w;
}

inline srp::TameFiltration fxhub_filtration() {
    return srp::sublevel_filtration(fxhub(), srp::MonoClass::SizePreserving);
}

}  // namespace fixtures
