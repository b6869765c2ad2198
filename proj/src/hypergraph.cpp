#include "srp/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace srp {

SizeCapError::SizeCapError(std::size_t size, std::size_t cap)
    : Error("instance too large: size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
      size_(size),
      cap_(cap) {}

std::string to_string(const Element& x) { return (x.is_vertex() ? "v:" : "e:") + x.id; }

std::string to_string(const ElementSet& set) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : set) {
        if (!first) out += ",";
        first = false;
        out += x.id;
    }
    return out + "}";
}

std::vector<std::string> validate_hypergraph(const HypergraphSpec& spec) {
    std::vector<std::string> violations;
    std::set<std::string> vertices;
    for (const auto& v : spec.vertices) {
        if (!vertices.insert(v).second) violations.push_back("duplicate vertex " + v);
    }
    std::set<std::string> edge_ids;
    for (const auto& [id, members] : spec.edges) {
        if (!edge_ids.insert(id).second) violations.push_back("duplicate edge " + id);
        if (members.empty()) violations.push_back("empty hyperedge " + id);
        for (const auto& v : members) {
            if (!vertices.contains(v)) violations.push_back("unknown vertex " + v + " in hyperedge " + id);
        }
    }
    return violations;
}

Hypergraph Hypergraph::from_spec(const HypergraphSpec& spec) {
    if (auto violations = validate_hypergraph(spec); !violations.empty()) {
        std::string msg = "invalid hypergraph:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw Error(msg);
    }
    Hypergraph h;
    h.vertices_ = spec.vertices;
    std::sort(h.vertices_.begin(), h.vertices_.end());

    std::vector<std::size_t> order(spec.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return spec.edges[a].first < spec.edges[b].first; });
    h.edges_.reserve(order.size());
    h.incidence_.reserve(order.size());
    for (auto i : order) {
        const auto& [id, members] = spec.edges[i];
        h.edges_.push_back(id);
        std::vector<std::uint32_t> inc;
        for (const auto& v : members) inc.push_back(static_cast<std::uint32_t>(*h.vertex_index(v)));
        std::sort(inc.begin(), inc.end());
        inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
        h.incidence_.push_back(std::move(inc));
    }
    return h;
}

Hypergraph Hypergraph::make(std::vector<std::string> vertices,
                            std::vector<std::pair<std::string, std::vector<std::string>>> edges) {
    return from_spec(HypergraphSpec{std::move(vertices), std::move(edges)});
}

namespace {

std::optional<std::size_t> find_sorted(const std::vector<std::string>& ids, const std::string& id) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

std::optional<std::size_t> Hypergraph::vertex_index(const std::string& id) const { return find_sorted(vertices_, id); }

std::optional<std::size_t> Hypergraph::edge_index(const std::string& id) const { return find_sorted(edges_, id); }

bool Hypergraph::contains(const Element& x) const { return x.is_vertex() ? has_vertex(x.id) : has_edge(x.id); }

std::vector<std::string> Hypergraph::incidence_ids(const std::string& edge_id) const {
    auto e = edge_index(edge_id);
    if (!e) throw Error("unknown edge " + edge_id);
    std::vector<std::string> out;
    for (auto v : incidence_[*e]) out.push_back(vertices_[v]);
    return out;
}

bool Hypergraph::is_member(std::size_t vertex, std::size_t edge) const {
    const auto& inc = incidence_[edge];
    return std::binary_search(inc.begin(), inc.end(), static_cast<std::uint32_t>(vertex));
}

std::vector<std::size_t> Hypergraph::vertex_degrees() const {
    std::vector<std::size_t> deg(vertices_.size(), 0);
    for (const auto& inc : incidence_)
        for (auto v : inc) ++deg[v];
    return deg;
}

std::vector<Element> Hypergraph::carrier() const {
    std::vector<Element> out;
    out.reserve(carrier_size());
    for (const auto& v : vertices_) out.push_back(Element::vertex(v));
    for (const auto& e : edges_) out.push_back(Element::edge(e));
    return out;
}

HypergraphSpec Hypergraph::to_spec() const {
    HypergraphSpec spec;
    spec.vertices = vertices_;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        std::vector<std::string> members;
        for (auto v : incidence_[e]) members.push_back(vertices_[v]);
        spec.edges.emplace_back(edges_[e], std::move(members));
    }
    return spec;
}

std::vector<std::size_t> neighbor_indices(const Hypergraph& h, std::size_t edge) {
    std::vector<std::size_t> out;
    const auto inc = h.incidence(edge);
    for (std::size_t other = 0; other < h.edge_count(); ++other) {
        if (other == edge) continue;
        const auto o = h.incidence(other);
        // Both incidence lists are sorted.
        auto a = inc.begin();
        auto b = o.begin();
        while (a != inc.end() && b != o.end()) {
            if (*a == *b) {
                out.push_back(other);
                break;
            }
            if (*a < *b) ++a;
            else ++b;
        }
    }
    return out;
}

std::vector<std::string> neighbors(const Hypergraph& h, const std::string& edge_id) {
    auto e = h.edge_index(edge_id);
    if (!e) throw Error("unknown edge " + edge_id);
    std::vector<std::string> out;
    for (auto n : neighbor_indices(h, *e)) out.push_back(h.edges()[n]);
    return out;
}

Hypergraph dual(const Hypergraph& h) {
    HypergraphSpec spec;
    spec.vertices = h.edges();
    std::vector<std::vector<std::string>> members(h.vertex_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        for (auto v : h.incidence(e)) members[v].push_back(h.edges()[e]);
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        if (members[v].empty()) throw Error("vertex " + h.vertices()[v] + " has empty dual edge");
        spec.edges.emplace_back(h.vertices()[v], std::move(members[v]));
    }
    return Hypergraph::from_spec(spec);
}

std::string to_symbol(MonoClass c) {
    switch (c) {
        case MonoClass::General: return "any";
        case MonoClass::MembershipReflecting: return "<=";
        case MonoClass::SizePreserving: return "=";
    }
    return "any";
}

std::string to_name(MonoClass c) {
    switch (c) {
        case MonoClass::General: return "General";
        case MonoClass::MembershipReflecting: return "MembershipReflecting";
        case MonoClass::SizePreserving: return "SizePreserving";
    }
    return "General";
}

MonoClass parse_mono_class(const std::string& s) {
    if (s == "any" || s == "general") return MonoClass::General;
    if (s == "<=" || s == "le") return MonoClass::MembershipReflecting;
    if (s == "=" || s == "eq") return MonoClass::SizePreserving;
    throw Error("unknown morphism class '" + s + "' (expected =, <= or any)");
}

namespace {

// Shared by the string- and index-level entry points.
Classification classify_indices(const std::vector<std::uint32_t>& vmap, const std::vector<std::uint32_t>& emap,
                                const Hypergraph& source, const Hypergraph& target) {
    std::vector<bool> hit_v(target.vertex_count(), false);
    for (std::size_t v = 0; v < vmap.size(); ++v) {
        if (vmap[v] >= target.vertex_count())
            return InvalidMorphism{"vertex " + source.vertices()[v] + " maps outside the target vertices"};
        if (hit_v[vmap[v]]) return InvalidMorphism{"not injective on vertices"};
        hit_v[vmap[v]] = true;
    }
    std::vector<bool> hit_e(target.edge_count(), false);
    for (std::size_t e = 0; e < emap.size(); ++e) {
        if (emap[e] >= target.edge_count())
            return InvalidMorphism{"edge " + source.edges()[e] + " maps outside the target edges"};
        if (hit_e[emap[e]]) return InvalidMorphism{"not injective on edges"};
        hit_e[emap[e]] = true;
    }
    for (std::size_t e = 0; e < source.edge_count(); ++e) {
        for (auto v : source.incidence(e)) {
            if (!target.is_member(vmap[v], emap[e]))
                return InvalidMorphism{"incidence not preserved: " + source.vertices()[v] + " in " + source.edges()[e]};
        }
    }
    bool size_preserving = true;
    for (std::size_t e = 0; e < source.edge_count() && size_preserving; ++e)
        size_preserving = source.incidence(e).size() == target.incidence(emap[e]).size();
    if (size_preserving) return MonoClass::SizePreserving;

    // f(u) ∈ f(e) ⟹ u ∈ e. Images of non-members are the only candidates.
    std::vector<std::int64_t> preimage(target.vertex_count(), -1);
    for (std::size_t v = 0; v < vmap.size(); ++v) preimage[vmap[v]] = static_cast<std::int64_t>(v);
    for (std::size_t e = 0; e < source.edge_count(); ++e) {
        for (auto tv : target.incidence(emap[e])) {
            if (preimage[tv] >= 0 && !source.is_member(static_cast<std::size_t>(preimage[tv]), e))
                return MonoClass::General;
        }
    }
    return MonoClass::MembershipReflecting;
}

}  // namespace

Classification classify_morphism(const IdMap& vertex_map, const IdMap& edge_map, const Hypergraph& source,
                                 const Hypergraph& target) {
    std::vector<std::uint32_t> vmap(source.vertex_count());
    std::vector<std::uint32_t> emap(source.edge_count());
    for (std::size_t v = 0; v < source.vertex_count(); ++v) {
        auto it = vertex_map.find(source.vertices()[v]);
        if (it == vertex_map.end()) return InvalidMorphism{"vertex map is not total: missing " + source.vertices()[v]};
        auto t = target.vertex_index(it->second);
        if (!t) return InvalidMorphism{"vertex " + it->first + " maps to unknown vertex " + it->second};
        vmap[v] = static_cast<std::uint32_t>(*t);
    }
    for (std::size_t e = 0; e < source.edge_count(); ++e) {
        auto it = edge_map.find(source.edges()[e]);
        if (it == edge_map.end()) return InvalidMorphism{"edge map is not total: missing " + source.edges()[e]};
        auto t = target.edge_index(it->second);
        if (!t) return InvalidMorphism{"edge " + it->first + " maps to unknown edge " + it->second};
        emap[e] = static_cast<std::uint32_t>(*t);
    }
    for (const auto& [k, _] : vertex_map)
        if (!source.has_vertex(k)) return InvalidMorphism{"vertex map has unknown source vertex " + k};
    for (const auto& [k, _] : edge_map)
        if (!source.has_edge(k)) return InvalidMorphism{"edge map has unknown source edge " + k};
    return classify_indices(vmap, emap, source, target);
}

HypergraphMorphism HypergraphMorphism::from_indices(HypergraphPtr source, HypergraphPtr target,
                                                    std::vector<std::uint32_t> vertex_map,
                                                    std::vector<std::uint32_t> edge_map) {
    if (vertex_map.size() != source->vertex_count() || edge_map.size() != source->edge_count())
        throw Error("invalid morphism: maps are not total");
    auto c = classify_indices(vertex_map, edge_map, *source, *target);
    if (auto* bad = std::get_if<InvalidMorphism>(&c)) throw Error("invalid morphism: " + bad->reason);
    HypergraphMorphism m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.vertex_map_ = std::move(vertex_map);
    m.edge_map_ = std::move(edge_map);
    m.class_ = std::get<MonoClass>(c);
    return m;
}

HypergraphMorphism HypergraphMorphism::make(HypergraphPtr source, HypergraphPtr target, const IdMap& vertex_map,
                                            const IdMap& edge_map) {
    auto c = classify_morphism(vertex_map, edge_map, *source, *target);
    if (auto* bad = std::get_if<InvalidMorphism>(&c)) throw Error("invalid morphism: " + bad->reason);
    std::vector<std::uint32_t> vmap(source->vertex_count());
    std::vector<std::uint32_t> emap(source->edge_count());
    for (std::size_t v = 0; v < vmap.size(); ++v)
        vmap[v] = static_cast<std::uint32_t>(*target->vertex_index(vertex_map.at(source->vertices()[v])));
    for (std::size_t e = 0; e < emap.size(); ++e)
        emap[e] = static_cast<std::uint32_t>(*target->edge_index(edge_map.at(source->edges()[e])));
    HypergraphMorphism m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.vertex_map_ = std::move(vmap);
    m.edge_map_ = std::move(emap);
    m.class_ = std::get<MonoClass>(c);
    return m;
}

HypergraphMorphism HypergraphMorphism::inclusion(HypergraphPtr source, HypergraphPtr target) {
    std::vector<std::uint32_t> vmap(source->vertex_count());
    std::vector<std::uint32_t> emap(source->edge_count());
    for (std::size_t v = 0; v < vmap.size(); ++v) {
        auto t = target->vertex_index(source->vertices()[v]);
        if (!t) throw Error("inclusion: vertex " + source->vertices()[v] + " missing from target");
        vmap[v] = static_cast<std::uint32_t>(*t);
    }
    for (std::size_t e = 0; e < emap.size(); ++e) {
        auto t = target->edge_index(source->edges()[e]);
        if (!t) throw Error("inclusion: edge " + source->edges()[e] + " missing from target");
        emap[e] = static_cast<std::uint32_t>(*t);
    }
    return from_indices(std::move(source), std::move(target), std::move(vmap), std::move(emap));
}

HypergraphMorphism HypergraphMorphism::identity(HypergraphPtr h) { return inclusion(h, h); }

Element HypergraphMorphism::apply(const Element& x) const {
    if (x.is_vertex()) {
        auto v = source_->vertex_index(x.id);
        if (!v) throw Error("element " + to_string(x) + " is not in the morphism source");
        return Element::vertex(target_->vertices()[vertex_map_[*v]]);
    }
    auto e = source_->edge_index(x.id);
    if (!e) throw Error("element " + to_string(x) + " is not in the morphism source");
    return Element::edge(target_->edges()[edge_map_[*e]]);
}

ElementSet HypergraphMorphism::apply(const ElementSet& set) const {
    ElementSet out;
    for (const auto& x : set) out.insert(apply(x));
    return out;
}

IdMap HypergraphMorphism::vertex_map() const {
    IdMap out;
    for (std::size_t v = 0; v < vertex_map_.size(); ++v)
        out.emplace(source_->vertices()[v], target_->vertices()[vertex_map_[v]]);
    return out;
}

IdMap HypergraphMorphism::edge_map() const {
    IdMap out;
    for (std::size_t e = 0; e < edge_map_.size(); ++e) out.emplace(source_->edges()[e], target_->edges()[edge_map_[e]]);
    return out;
}

bool HypergraphMorphism::operator==(const HypergraphMorphism& other) const {
    return *source_ == *other.source_ && *target_ == *other.target_ && vertex_map_ == other.vertex_map_ &&
           edge_map_ == other.edge_map_;
}

HypergraphMorphism compose(const HypergraphMorphism& g, const HypergraphMorphism& f) {
    if (!(f.target() == g.source())) throw Error("compose: target of the first morphism is not the source of the second");
    std::vector<std::uint32_t> vmap(f.source().vertex_count());
    std::vector<std::uint32_t> emap(f.source().edge_count());
    for (std::size_t v = 0; v < vmap.size(); ++v) vmap[v] = g.map_vertex(f.map_vertex(v));
    for (std::size_t e = 0; e < emap.size(); ++e) emap[e] = g.map_edge(f.map_edge(e));
    return HypergraphMorphism::from_indices(f.source_ptr(), g.target_ptr(), std::move(vmap), std::move(emap));
}

HypergraphMorphism inverse(const HypergraphMorphism& f) {
    const auto& s = f.source();
    const auto& t = f.target();
    if (s.vertex_count() != t.vertex_count() || s.edge_count() != t.edge_count())
        throw Error("inverse: morphism is not bijective");
    std::vector<std::uint32_t> vmap(t.vertex_count());
    std::vector<std::uint32_t> emap(t.edge_count());
    for (std::size_t v = 0; v < s.vertex_count(); ++v) vmap[f.map_vertex(v)] = static_cast<std::uint32_t>(v);
    for (std::size_t e = 0; e < s.edge_count(); ++e) emap[f.map_edge(e)] = static_cast<std::uint32_t>(e);
    return HypergraphMorphism::from_indices(f.target_ptr(), f.source_ptr(), std::move(vmap), std::move(emap));
}

}  // namespace srp
