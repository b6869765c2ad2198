#include "srp/interleaving.hpp"

#include <algorithm>

namespace srp {

MorphismFamily::MorphismFamily(std::vector<double> breakpoints, std::vector<HypergraphMorphism> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (pieces_.size() != breakpoints_.size() + 1)
        throw Error("morphism family: expected one more piece than breakpoints");
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()))
        throw Error("morphism family: breakpoints must be sorted");
}

const HypergraphMorphism& MorphismFamily::at(double w) const {
    auto k = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), w) - breakpoints_.begin();
    return pieces_[static_cast<std::size_t>(k)];
}

namespace {

std::vector<double> representative_levels(const TameFiltration& f, const TameFiltration& g, const Interleaving& i) {
    std::vector<double> marks;
    for (const auto* list : {&f.critical_values(), &g.critical_values(), &i.phi.breakpoints(), &i.psi.breakpoints()})
        for (double a : *list)
            for (double k : {-2.0, -1.0, 0.0, 1.0, 2.0}) marks.push_back(a + k * i.eps);
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    if (marks.empty()) return {0.0};
    std::vector<double> reps{marks.front() - 1.0};
    for (std::size_t k = 0; k < marks.size(); ++k) {
        reps.push_back(marks[k]);
        if (k + 1 < marks.size()) reps.push_back((marks[k] + marks[k + 1]) / 2.0);
    }
    reps.push_back(marks.back() + 1.0);
    return reps;
}

std::string at_level(double w) { return " at w=" + std::to_string(w); }

}  // namespace

std::optional<std::string> verify_interleaving(const TameFiltration& f, const TameFiltration& g,
                                               const Interleaving& i) {
    const double eps = i.eps;
    const auto reps = representative_levels(f, g, i);

    for (double w : reps) {
        const auto& phi = i.phi.at(w);
        const auto& psi = i.psi.at(w);
        if (!(phi.source() == f.object(f.index_of(w))) || !(phi.target() == g.object(g.index_of(w + eps))))
            return "phi does not map F_w to G_{w+eps}" + at_level(w);
        if (!(psi.source() == g.object(g.index_of(w))) || !(psi.target() == f.object(f.index_of(w + eps))))
            return "psi does not map G_w to F_{w+eps}" + at_level(w);
    }
    for (double w : reps) {
        const auto fw = f.transition(f.index_of(w), f.index_of(w + 2 * eps));
        if (!(compose(i.psi.at(w + eps), i.phi.at(w)) == fw)) return "psi phi differs from F_w^{w+2eps}" + at_level(w);
        const auto gw = g.transition(g.index_of(w), g.index_of(w + 2 * eps));
        if (!(compose(i.phi.at(w + eps), i.psi.at(w)) == gw)) return "phi psi differs from G_w^{w+2eps}" + at_level(w);
    }
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a; b < reps.size(); ++b) {
            const double u = reps[a];
            const double v = reps[b];
            const auto lhs_phi = compose(g.transition(g.index_of(u + eps), g.index_of(v + eps)), i.phi.at(u));
            const auto rhs_phi = compose(i.phi.at(v), f.transition(f.index_of(u), f.index_of(v)));
            if (!(lhs_phi == rhs_phi))
                return "phi is not natural between u=" + std::to_string(u) + " and v=" + std::to_string(v);
            const auto lhs_psi = compose(f.transition(f.index_of(u + eps), f.index_of(v + eps)), i.psi.at(u));
            const auto rhs_psi = compose(i.psi.at(v), g.transition(g.index_of(u), g.index_of(v)));
            if (!(lhs_psi == rhs_psi))
                return "psi is not natural between u=" + std::to_string(u) + " and v=" + std::to_string(v);
        }
    return std::nullopt;
}

namespace {

struct Chain {
    HypergraphPtr x, x1, x2;
    HypergraphMorphism iota, iota_prime;
    MonoClass cls;
};

Chain unpack(const Witness& w) {
    if (w.a.empty()) throw Error("empty witness: the tracked set A must be nonempty");
    if (!(w.iota.target() == w.iota_prime.source()))
        throw Error("witness chain does not compose: target of iota is not the source of iota'");
    // Re-anchor iota' on iota's target pointer so every object in the pair is shared.
    auto iota_prime = HypergraphMorphism::from_indices(w.iota.target_ptr(), w.iota_prime.target_ptr(),
                                                       w.iota_prime.vertex_indices(), w.iota_prime.edge_indices());
    return {w.iota.source_ptr(), w.iota.target_ptr(), w.iota_prime.target_ptr(), w.iota, iota_prime,
            weakest(w.iota.mono_class(), w.iota_prime.mono_class())};
}

HypergraphMorphism id(const HypergraphPtr& h) { return HypergraphMorphism::identity(h); }

}  // namespace

CounterexamplePair build_steady_counterexample(const Witness& w) {
    auto c = unpack(w);
    TameFiltration f({3.0, 5.0}, {c.x, c.x1, c.x2}, {c.iota, c.iota_prime}, c.cls);
    TameFiltration g({4.0}, {c.x, c.x2}, {compose(c.iota_prime, c.iota)}, c.cls);
    Interleaving il{1.0, MorphismFamily({3.0, 5.0}, {id(c.x), c.iota_prime, id(c.x2)}),
                    MorphismFamily({2.0, 4.0}, {id(c.x), c.iota, id(c.x2)})};
    return {std::move(f), std::move(g), std::move(il), Mode::Steady, 1.0, 5.0, 1.0};
}

CounterexamplePair build_ranging_counterexample(const Witness& w) {
    auto c = unpack(w);
    auto empty = share(Hypergraph{});
    auto from_empty = [&](const HypergraphPtr& h) { return HypergraphMorphism::inclusion(empty, h); };
    TameFiltration f({1.0, 3.0, 5.0}, {empty, c.x, c.x1, c.x2}, {from_empty(c.x), c.iota, c.iota_prime}, c.cls);
    TameFiltration g({2.0, 6.0}, {empty, c.x1, c.x2}, {from_empty(c.x1), c.iota_prime}, c.cls);
    Interleaving il{1.0, MorphismFamily({1.0, 3.0, 5.0}, {id(empty), c.iota, id(c.x1), id(c.x2)}),
                    MorphismFamily({0.0, 2.0, 4.0, 6.0},
                                   {id(empty), from_empty(c.x), id(c.x1), c.iota_prime, id(c.x2)})};
    return {std::move(f), std::move(g), std::move(il), Mode::Ranging, 4.0, 6.0, 1.0};
}

ProbeCounts probe_counts(const Feature& feat, const CounterexamplePair& pair) {
    const double u = pair.probe_u;
    const double v = pair.probe_v;
    const double e = pair.eps;
    auto label = [](const char* set, const char* flt, double a, double b) {
        auto num = [](double x) {
            auto s = std::to_string(x);
            s.erase(s.find_last_not_of('0') + 1);
            if (s.back() == '.') s.pop_back();
            return s;
        };
        return std::string("|") + set + "_" + flt + "(" + num(a) + "<=" + num(b) + ")|";
    };
    if (pair.mode == Mode::Steady)
        return {static_cast<std::int64_t>(steady_set(feat, pair.f, u, v).size()),
                static_cast<std::int64_t>(steady_set(feat, pair.g, u - e, v + e).size()), label("S", "F", u, v),
                label("S", "G", u - e, v + e)};
    return {static_cast<std::int64_t>(ranging_set(feat, pair.g, u, v).size()),
            static_cast<std::int64_t>(ranging_set(feat, pair.f, u - e, v + e).size()), label("R", "G", u, v),
            label("R", "F", u - e, v + e)};
}

}  // namespace srp
