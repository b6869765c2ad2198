#include "srp/filtration.hpp"

#include <algorithm>
#include <cmath>

namespace srp {

std::vector<std::string> validate_weights(const WeightedHypergraph& w) {
    std::vector<std::string> out;
    const auto& h = w.graph;
    for (const auto& x : h.carrier()) {
        auto it = w.weight.find(x);
        if (it == w.weight.end()) out.push_back("missing weight for " + to_string(x));
        else if (!std::isfinite(it->second)) out.push_back("non-finite weight for " + to_string(x));
    }
    for (const auto& [x, _] : w.weight)
        if (!h.contains(x)) out.push_back("weight given for unknown element " + to_string(x));
    if (!out.empty()) return out;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        double we = w.weight.at(Element::edge(h.edges()[e]));
        for (auto v : h.incidence(e)) {
            double wv = w.weight.at(Element::vertex(h.vertices()[v]));
            if (wv > we)
                out.push_back("vertex " + h.vertices()[v] + " has weight above edge " + h.edges()[e] + " containing it");
        }
    }
    return out;
}

TameFiltration::TameFiltration(std::vector<double> critical_values, std::vector<HypergraphPtr> objects,
                               std::vector<HypergraphMorphism> steps, MonoClass category_class)
    : critical_values_(std::move(critical_values)),
      objects_(std::move(objects)),
      steps_(std::move(steps)),
      category_class_(category_class) {
    for (double a : critical_values_)
        if (!std::isfinite(a)) throw Error("filtration: critical values must be finite");
    for (std::size_t i = 1; i < critical_values_.size(); ++i)
        if (!(critical_values_[i - 1] < critical_values_[i]))
            throw Error("filtration: critical values must be strictly increasing");
    if (objects_.size() != critical_values_.size() + 1)
        throw Error("filtration: expected " + std::to_string(critical_values_.size() + 1) + " objects, got " +
                    std::to_string(objects_.size()));
    if (steps_.size() != critical_values_.size())
        throw Error("filtration: expected " + std::to_string(critical_values_.size()) + " steps, got " +
                    std::to_string(steps_.size()));
    for (const auto& o : objects_)
        if (!o) throw Error("filtration: null object");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const auto& s = steps_[i];
        if (!(s.source() == *objects_[i]) || !(s.target() == *objects_[i + 1]))
            throw Error("filtration: step " + std::to_string(i) + " does not connect objects " + std::to_string(i) +
                        " and " + std::to_string(i + 1));
        if (!satisfies(s.mono_class(), category_class_))
            throw Error("filtration: step at " + std::to_string(critical_values_[i]) + " is not in requested class " +
                        to_symbol(category_class_) + " (it is " + to_symbol(s.mono_class()) + ")");
    }
}

TameFiltration TameFiltration::constant(HypergraphPtr h, MonoClass category_class) {
    return TameFiltration({}, {std::move(h)}, {}, category_class);
}

std::size_t TameFiltration::index_of(double u) const {
    return static_cast<std::size_t>(std::upper_bound(critical_values_.begin(), critical_values_.end(), u) -
                                    critical_values_.begin());
}

ElementSet TameFiltration::push(const ElementSet& set, std::size_t from, std::size_t to) const {
    if (from > to) throw Error("push: target interval precedes source interval");
    if (to >= objects_.size()) throw Error("push: interval index out of range");
    ElementSet cur = set;
    for (std::size_t i = from; i < to; ++i) cur = steps_[i].apply(cur);
    return cur;
}

HypergraphMorphism TameFiltration::transition(std::size_t from, std::size_t to) const {
    if (from > to || to >= objects_.size()) throw Error("transition: bad interval indices");
    auto m = HypergraphMorphism::identity(objects_[from]);
    for (std::size_t i = from; i < to; ++i) m = compose(steps_[i], m);
    return m;
}

std::vector<double> TameFiltration::sample_points() const {
    const auto& a = critical_values_;
    if (a.empty()) return {0.0};
    std::vector<double> s;
    s.reserve(a.size() + 1);
    s.push_back(a.front() - 1.0);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) s.push_back(a[i] + (a[i + 1] - a[i]) / 2.0);
    s.push_back(a.back() + 1.0);
    return s;
}

Hypergraph sublevel(const WeightedHypergraph& w, double u) {
    const auto& h = w.graph;
    HypergraphSpec spec;
    for (const auto& v : h.vertices())
        if (w.weight.at(Element::vertex(v)) <= u) spec.vertices.push_back(v);
    for (const auto& e : h.edges())
        if (w.weight.at(Element::edge(e)) <= u) spec.edges.emplace_back(e, h.incidence_ids(e));
    return Hypergraph::from_spec(spec);
}

TameFiltration sublevel_filtration(const WeightedHypergraph& w, MonoClass category_class) {
    if (auto v = validate_weights(w); !v.empty()) {
        std::string msg = "invalid weighted hypergraph:";
        for (const auto& s : v) msg += " " + s + ";";
        throw Error(msg);
    }
    std::vector<double> levels;
    for (const auto& [_, x] : w.weight) levels.push_back(x);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<HypergraphPtr> objects{share(Hypergraph{})};
    std::vector<HypergraphMorphism> steps;
    for (double a : levels) {
        objects.push_back(share(sublevel(w, a)));
        steps.push_back(HypergraphMorphism::inclusion(objects[objects.size() - 2], objects.back()));
    }
    return TameFiltration(std::move(levels), std::move(objects), std::move(steps), category_class);
}

Evaluation evaluate(const TameFiltration& f, double u) {
    auto i = f.index_of(u);
    return {f.object(i), i};
}

TrackedSet push_forward(const TameFiltration& f, const TrackedSet& set, double v) {
    if (v < set.base_level) throw Error("push_forward: target level precedes base level");
    auto from = f.index_of(set.base_level);
    for (const auto& x : set.elements)
        if (!f.object(from).contains(x)) throw Error("push_forward: " + to_string(x) + " is not in the base object");
    return {v, f.push(set.elements, from, f.index_of(v))};
}

FilteringFunction filtering_function(const TameFiltration& f) {
    FilteringFunction out;
    const auto n = f.critical_count();
    for (std::size_t i = 0; i <= n; ++i) {
        double level = i == 0 ? -kInf : f.critical_values()[i - 1];
        const auto carrier = f.object(i).carrier();
        ElementSet all(carrier.begin(), carrier.end());
        for (const auto& x : f.push(all, i, n)) out.emplace(x, level);  // keeps the first level
    }
    return out;
}

double level_distance(double a, double b) {
    if (a == b) return 0.0;
    return std::fabs(a - b);
}

InterleavingDistance interleaving_distance_exact(const TameFiltration& f, const TameFiltration& g, std::size_t cap) {
    InterleavingDistance result;
    result.exact = satisfies(f.category_class(), MonoClass::MembershipReflecting) &&
                   satisfies(g.category_class(), MonoClass::MembershipReflecting);
    const auto& a = f.final_object();
    const auto& b = g.final_object();
    if (a.carrier_size() > cap) throw SizeCapError(a.carrier_size(), cap);
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return result;

    const auto ff = filtering_function(f);
    const auto fg = filtering_function(g);

    std::vector<double> candidates{0.0};
    for (const auto& [x, vx] : ff)
        for (const auto& [y, vy] : fg)
            if (x.kind == y.kind) candidates.push_back(level_distance(vx, vy));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto feasible = [&](double eps) {
        bool found = false;
        for_each_isomorphism(
            a, b,
            [&](const IsomorphismMap&) {
                found = true;
                return false;
            },
            [&](const Element& x, const Element& y) { return level_distance(ff.at(x), fg.at(y)) <= eps; }, cap);
        return found;
    };

    if (!feasible(candidates.back())) return result;  // not isomorphic
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        auto mid = lo + (hi - lo) / 2;
        if (feasible(candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    result.value = candidates[lo];
    return result;
}

}  // namespace srp
