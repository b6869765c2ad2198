#include "srp/feature.hpp"

#include <algorithm>

namespace srp {

Feature::Feature(std::string name, Predicate holds, SupportShape shape, MonoClass class_requirement)
    : name_(std::move(name)), holds_(std::move(holds)), shape_(shape), class_requirement_(class_requirement) {}

namespace {

std::vector<ElementSet> subsets_of(const std::vector<Element>& pool) {
    if (pool.size() > kSubsetEnumerationCap)
        throw Error("subset enumeration over " + std::to_string(pool.size()) + " elements exceeds cap " +
                    std::to_string(kSubsetEnumerationCap));
    std::vector<ElementSet> out;
    const std::uint64_t n = std::uint64_t{1} << pool.size();
    out.reserve(n);
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        ElementSet s;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1U) s.insert(pool[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> single_edge(const ElementSet& a, const Hypergraph& h) {
    if (a.size() != 1) return std::nullopt;
    const auto& x = *a.begin();
    if (!x.is_edge()) return std::nullopt;
    return h.edge_index(x.id);
}

}  // namespace

std::vector<ElementSet> Feature::enumerate(const Hypergraph& h) const {
    std::vector<ElementSet> candidates;
    switch (shape_) {
        case SupportShape::SingletonEdge:
            for (const auto& e : h.edges()) candidates.push_back(edge_set(e));
            break;
        case SupportShape::EdgeSubsets: {
            std::vector<Element> pool;
            for (const auto& e : h.edges()) pool.push_back(Element::edge(e));
            candidates = subsets_of(pool);
            break;
        }
        case SupportShape::CarrierSubsets:
            candidates = subsets_of(h.carrier());
            break;
    }
    std::vector<ElementSet> out;
    for (auto& a : candidates)
        if (holds_(a, h)) out.push_back(std::move(a));
    return out;
}

bool hub_holds(const ElementSet& a, const Hypergraph& h) {
    auto e = single_edge(a, h);
    if (!e) return false;
    const auto nbrs = neighbor_indices(h, *e);
    if (nbrs.empty()) return false;
    return std::all_of(nbrs.begin(), nbrs.end(),
                       [&](std::size_t f) { return nbrs.size() > neighbor_indices(h, f).size(); });
}

bool exclusivity_holds(const ElementSet& a, const Hypergraph& h) {
    auto e = single_edge(a, h);
    if (!e) return false;
    const auto degree = h.vertex_degrees();
    const auto inc = h.incidence(*e);
    return std::any_of(inc.begin(), inc.end(), [&](std::uint32_t v) { return degree[v] == 1; });
}

Rational max_originality_value(const Hypergraph& h, std::size_t edge) {
    const auto inc = h.incidence(edge);
    long long best = 0;
    for (auto f : neighbor_indices(h, edge)) {
        const auto other = h.incidence(f);
        std::vector<std::uint32_t> common;
        std::set_intersection(inc.begin(), inc.end(), other.begin(), other.end(), std::back_inserter(common));
        best = std::max(best, static_cast<long long>(common.size()));
    }
    return Rational(1) - Rational(best, static_cast<long long>(inc.size()));
}

Rational max_originality_value(const Hypergraph& h, const std::string& edge_id) {
    auto e = h.edge_index(edge_id);
    if (!e) throw Error("unknown edge " + edge_id);
    return max_originality_value(h, *e);
}

bool max_originality_holds(const ElementSet& a, const Hypergraph& h) {
    auto e = single_edge(a, h);
    return e && max_originality_value(h, *e) > Rational(1, 2);
}

Feature hub_feature() { return {"hub", hub_holds, SupportShape::SingletonEdge}; }

Feature exclusivity_feature() {
    return {"exclusivity", exclusivity_holds, SupportShape::SingletonEdge, MonoClass::SizePreserving};
}

Feature max_originality_feature() {
    return {"max-originality", max_originality_holds, SupportShape::SingletonEdge, MonoClass::SizePreserving};
}

Feature any_subset_feature() {
    return {"any-subset",
            [](const ElementSet& a, const Hypergraph& h) {
                return std::all_of(a.begin(), a.end(), [&](const Element& x) { return h.contains(x); });
            },
            SupportShape::CarrierSubsets};
}

Feature all_edge_subsets_feature() {
    return {"all-edge-subsets",
            [](const ElementSet& a, const Hypergraph& h) {
                return std::all_of(a.begin(), a.end(),
                                   [&](const Element& x) { return x.is_edge() && h.has_edge(x.id); });
            },
            SupportShape::EdgeSubsets};
}

std::vector<std::string> builtin_feature_names() { return {"hub", "exclusivity", "max-originality"}; }

Feature feature_by_name(const std::string& name) {
    if (name == "hub") return hub_feature();
    if (name == "exclusivity") return exclusivity_feature();
    if (name == "max-originality") return max_originality_feature();
    throw Error("unknown feature '" + name + "' (expected hub, exclusivity or max-originality)");
}

namespace {

bool strict_subset(const ElementSet& a, const ElementSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Feature maximal_version(const Feature& f) {
    return {"M(" + f.name() + ")",
            [f](const ElementSet& a, const Hypergraph& h) {
                if (!f.holds(a, h)) return false;
                auto all = f.enumerate(h);
                return std::none_of(all.begin(), all.end(), [&](const ElementSet& b) { return strict_subset(a, b); });
            },
            f.shape(), f.class_requirement()};
}

Feature minimal_version(const Feature& f) {
    return {"m(" + f.name() + ")",
            [f](const ElementSet& a, const Hypergraph& h) {
                if (!f.holds(a, h)) return false;
                auto all = f.enumerate(h);
                return std::none_of(all.begin(), all.end(), [&](const ElementSet& b) { return strict_subset(b, a); });
            },
            f.shape(), f.class_requirement()};
}

}  // namespace srp
