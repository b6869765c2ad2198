#include "srp/witness.hpp"

#include <algorithm>

namespace srp {

namespace {

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i); }
std::string edge_name(std::size_t i) { return "e" + std::to_string(i); }

Hypergraph from_masks(std::size_t n, const std::vector<std::uint32_t>& masks) {
    HypergraphSpec spec;
    for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back(vertex_name(v));
    for (std::size_t e = 0; e < masks.size(); ++e) {
        std::vector<std::string> inc;
        for (std::size_t v = 0; v < n; ++v)
            if (masks[e] >> v & 1U) inc.push_back(vertex_name(v));
        spec.edges.emplace_back(edge_name(e), std::move(inc));
    }
    return Hypergraph::from_spec(spec);
}

bool subset_of_carrier(const ElementSet& a, const Hypergraph& h) {
    return std::all_of(a.begin(), a.end(), [&](const Element& x) { return h.contains(x); });
}

// Budget-limited walk shared by both searches.
struct Walk {
    std::uint64_t examined = 0;
    std::uint64_t limit = 0;
    bool out_of_budget = false;

    bool tick() {
        if (examined == limit) out_of_budget = true;
        else ++examined;
        return !out_of_budget;
    }
};

}  // namespace

std::vector<std::string> verify_witness(const Feature& f, const Witness& w, std::optional<MonoClass> required) {
    std::vector<std::string> failed;
    if (!(w.iota.target() == w.iota_prime.source())) {
        failed.emplace_back("chain is not composable: target of iota differs from source of iota'");
        return failed;
    }
    const auto& x = w.iota.source();
    const auto& x1 = w.iota.target();
    const auto& x2 = w.iota_prime.target();
    if (!subset_of_carrier(w.a, x)) {
        failed.push_back("A = " + to_string(w.a) + " is not a subset of X");
        return failed;
    }
    const auto a1 = w.iota.apply(w.a);
    const auto a2 = w.iota_prime.apply(a1);
    if (!f.holds(w.a, x)) failed.push_back("holds(A, X) is false for " + f.name());
    if (!f.holds(a2, x2)) failed.push_back("holds(iota' iota A, X'') is false for " + f.name());
    if (f.holds(a1, x1)) failed.push_back("holds(iota A, X') is true for " + f.name());
    if (required) {
        if (!satisfies(w.iota.mono_class(), *required))
            failed.push_back("iota is " + to_symbol(w.iota.mono_class()) + ", weaker than " + to_symbol(*required));
        if (!satisfies(w.iota_prime.mono_class(), *required))
            failed.push_back("iota' is " + to_symbol(w.iota_prime.mono_class()) + ", weaker than " +
                             to_symbol(*required));
    }
    return failed;
}

void validate(const SearchConfig& c) {
    if (c.max_vertices == 0 || c.max_edges == 0) throw Error("search config: size bounds must be positive");
    if (c.max_vertices > 8) throw Error("search config: at most 8 vertices are supported");
    if (c.max_edges > 10) throw Error("search config: at most 10 edges are supported");
}

bool for_each_canonical_hypergraph(std::size_t max_vertices, std::size_t max_edges,
                                   const std::function<bool(const Hypergraph&)>& visit) {
    std::vector<std::uint32_t> masks;
    std::function<bool(std::size_t, std::size_t, std::uint32_t, std::uint32_t)> grow =
        [&](std::size_t n, std::size_t m, std::uint32_t from, std::uint32_t covered) -> bool {
        const std::uint32_t full = (1U << n) - 1;
        if (masks.size() == m) return covered != full || visit(from_masks(n, masks));
        for (std::uint32_t mask = from; mask <= full; ++mask) {
            masks.push_back(mask);
            bool go = grow(n, m, mask, covered | mask);
            masks.pop_back();
            if (!go) return false;
        }
        return true;
    };
    for (std::size_t total = 2; total <= max_vertices + max_edges; ++total)
        for (std::size_t n = 1; n <= max_vertices && n < total; ++n) {
            const std::size_t m = total - n;
            if (m > max_edges) continue;
            if (!grow(n, m, 1, 0)) return false;
        }
    return true;
}

bool for_each_subobject(const Hypergraph& h, MonoClass cls, const std::function<bool(const Hypergraph&)>& visit) {
    const std::size_t n = h.vertex_count();
    const std::size_t m = h.edge_count();
    if (cls == MonoClass::SizePreserving) {
        for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << m); ++emask) {
            HypergraphSpec spec;
            std::vector<bool> used(n, false);
            for (std::size_t e = 0; e < m; ++e)
                if (emask >> e & 1U)
                    for (auto v : h.incidence(e)) used[v] = true;
            for (std::size_t v = 0; v < n; ++v)
                if (used[v]) spec.vertices.push_back(h.vertices()[v]);
            for (std::size_t e = 0; e < m; ++e)
                if (emask >> e & 1U) spec.edges.emplace_back(h.edges()[e], h.incidence_ids(h.edges()[e]));
            if (!visit(Hypergraph::from_spec(spec))) return false;
        }
        return true;
    }

    for (std::uint64_t vmask = 0; vmask < (std::uint64_t{1} << n); ++vmask) {
        // Per edge: the vertices it keeps in V'.
        std::vector<std::vector<std::uint32_t>> cut(m);
        for (std::size_t e = 0; e < m; ++e)
            for (auto v : h.incidence(e))
                if (vmask >> v & 1U) cut[e].push_back(v);
        HypergraphSpec spec;
        for (std::size_t v = 0; v < n; ++v)
            if (vmask >> v & 1U) spec.vertices.push_back(h.vertices()[v]);

        std::function<bool(std::size_t)> choose = [&](std::size_t e) -> bool {
            if (e == m) return visit(Hypergraph::from_spec(spec));
            if (!choose(e + 1)) return false;  // edge dropped
            const auto& avail = cut[e];
            if (avail.empty()) return true;
            const std::uint64_t all = (std::uint64_t{1} << avail.size()) - 1;
            const std::uint64_t first = cls == MonoClass::General ? 1 : all;
            for (std::uint64_t sub = first; sub <= all; ++sub) {
                std::vector<std::string> inc;
                for (std::size_t k = 0; k < avail.size(); ++k)
                    if (sub >> k & 1U) inc.push_back(h.vertices()[avail[k]]);
                spec.edges.emplace_back(h.edges()[e], std::move(inc));
                bool go = choose(e + 1);
                spec.edges.pop_back();
                if (!go) return false;
            }
            return true;
        };
        if (!choose(0)) return false;
    }
    return true;
}

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
    std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
    std::uniform_int_distribution<std::size_t> ne(1, max_edges);
    const std::size_t n = nv(rng);
    const std::size_t m = ne(rng);
    std::uniform_int_distribution<std::uint32_t> mask(1, (1U << n) - 1);
    std::vector<std::uint32_t> masks(m);
    for (auto& x : masks) x = mask(rng);
    std::uint32_t covered = 0;
    for (auto x : masks) covered |= x;
    // Drop isolated vertices by compressing the covered bits.
    std::vector<std::size_t> remap(n, 0);
    std::size_t kept = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (covered >> v & 1U) remap[v] = kept++;
    for (auto& x : masks) {
        std::uint32_t y = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (x >> v & 1U) y |= 1U << remap[v];
        x = y;
    }
    return from_masks(kept, masks);
}

Hypergraph random_subobject(std::mt19937_64& rng, const Hypergraph& h, MonoClass cls) {
    std::bernoulli_distribution coin(0.5);
    const std::size_t n = h.vertex_count();
    const std::size_t m = h.edge_count();
    HypergraphSpec spec;
    if (cls == MonoClass::SizePreserving) {
        std::vector<bool> used(n, false);
        for (std::size_t e = 0; e < m; ++e) {
            if (!coin(rng)) continue;
            spec.edges.emplace_back(h.edges()[e], h.incidence_ids(h.edges()[e]));
            for (auto v : h.incidence(e)) used[v] = true;
        }
        for (std::size_t v = 0; v < n; ++v)
            if (used[v]) spec.vertices.push_back(h.vertices()[v]);
        return Hypergraph::from_spec(spec);
    }
    std::vector<bool> keep(n);
    for (std::size_t v = 0; v < n; ++v) {
        keep[v] = coin(rng);
        if (keep[v]) spec.vertices.push_back(h.vertices()[v]);
    }
    for (std::size_t e = 0; e < m; ++e) {
        std::vector<std::string> inc;
        for (auto v : h.incidence(e))
            if (keep[v] && (cls != MonoClass::General || coin(rng))) inc.push_back(h.vertices()[v]);
        if (!inc.empty() && coin(rng)) spec.edges.emplace_back(h.edges()[e], std::move(inc));
    }
    return Hypergraph::from_spec(spec);
}

namespace {

// Checks one chain X ⊆ X' ⊆ X'' against candidates already filtered at X' and X''.
std::optional<ElementSet> match_chain(const Feature& f, const Hypergraph& x, const std::vector<ElementSet>& cands) {
    for (const auto& a : cands)
        if (subset_of_carrier(a, x) && f.holds(a, x)) return a;
    return std::nullopt;
}

std::vector<ElementSet> failing_at(const Feature& f, const Hypergraph& x1, const std::vector<ElementSet>& sets) {
    std::vector<ElementSet> out;
    for (const auto& a : sets)
        if (subset_of_carrier(a, x1) && !f.holds(a, x1)) out.push_back(a);
    return out;
}

Witness make_witness(ElementSet a, const Hypergraph& x, const Hypergraph& x1, const Hypergraph& x2) {
    auto px = share(x);
    auto px1 = share(x1);
    auto px2 = share(x2);
    return {std::move(a), HypergraphMorphism::inclusion(px, px1), HypergraphMorphism::inclusion(px1, px2)};
}

}  // namespace

SearchReport convexity_witness_search(const Feature& f, MonoClass cls, const SearchConfig& config) {
    validate(config);
    SearchReport report;
    report.config = config;
    Walk walk{0, config.budget, false};

    bool completed = for_each_canonical_hypergraph(config.max_vertices, config.max_edges, [&](const Hypergraph& x2) {
        const auto top = f.enumerate(x2);
        if (top.empty()) return walk.tick();
        return for_each_subobject(x2, cls, [&](const Hypergraph& x1) {
            if (!walk.tick()) return false;
            const auto cands = failing_at(f, x1, top);
            if (cands.empty()) return true;
            return for_each_subobject(x1, cls, [&](const Hypergraph& x) {
                if (!walk.tick()) return false;
                if (auto a = match_chain(f, x, cands)) {
                    report.witness = make_witness(std::move(*a), x, x1, x2);
                    report.phase = "exhaustive";
                    return false;
                }
                return true;
            });
        });
    });
    report.exhaustive_complete = completed && !walk.out_of_budget;
    report.examined = walk.examined;
    if (report.witness) return report;

    std::mt19937_64 rng(config.seed);
    for (std::uint64_t t = 0; t < config.random_trials; ++t) {
        ++report.examined;
        auto x2 = random_hypergraph(rng, config.max_vertices, config.max_edges);
        auto x1 = random_subobject(rng, x2, cls);
        auto x = random_subobject(rng, x1, cls);
        const auto cands = failing_at(f, x1, f.enumerate(x2));
        if (auto a = match_chain(f, x, cands)) {
            report.witness = make_witness(std::move(*a), x, x1, x2);
            report.phase = "random";
            return report;
        }
    }
    return report;
}

ContinuedReport continued_check(const Feature& f, Direction direction, MonoClass cls, const SearchConfig& config) {
    validate(config);
    ContinuedReport report;
    Walk walk{0, config.budget, false};

    auto test = [&](const Hypergraph& x, const Hypergraph& x1) -> std::optional<ElementSet> {
        if (direction == Direction::Right) {
            for (const auto& a : f.enumerate(x))
                if (!f.holds(a, x1)) return a;
        } else {
            for (const auto& a : f.enumerate(x1))
                if (subset_of_carrier(a, x) && !f.holds(a, x)) return a;
        }
        return std::nullopt;
    };
    auto record = [&](ElementSet a, const Hypergraph& x, const Hypergraph& x1) {
        report.counterexample = ContinuedCounterexample{std::move(a),
                                                        HypergraphMorphism::inclusion(share(x), share(x1))};
    };

    bool completed = for_each_canonical_hypergraph(config.max_vertices, config.max_edges, [&](const Hypergraph& x1) {
        return for_each_subobject(x1, cls, [&](const Hypergraph& x) {
            if (!walk.tick()) return false;
            if (auto a = test(x, x1)) {
                record(std::move(*a), x, x1);
                return false;
            }
            return true;
        });
    });
    report.exhaustive_complete = completed && !walk.out_of_budget;
    report.examined = walk.examined;
    if (report.counterexample) return report;

    std::mt19937_64 rng(config.seed);
    for (std::uint64_t t = 0; t < config.random_trials; ++t) {
        ++report.examined;
        auto x1 = random_hypergraph(rng, config.max_vertices, config.max_edges);
        auto x = random_subobject(rng, x1, cls);
        if (auto a = test(x, x1)) {
            record(std::move(*a), x, x1);
            return report;
        }
    }
    return report;
}

}  // namespace srp
