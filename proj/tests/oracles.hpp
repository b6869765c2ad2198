#pragma once

// Brute-force reference implementations used only by the tests. They work on plain
// string maps and re-derive everything from definitions, sharing no logic with the library.

#include "srp/filtration.hpp"
#include "srp/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline constexpr double inf = std::numeric_limits<double>::infinity();

struct Graph {
    std::set<std::string> vertices;
    std::map<std::string, std::set<std::string>> edges;
};

inline Graph from_library(const srp::Hypergraph& h) {
    Graph g;
    g.vertices.insert(h.vertices().begin(), h.vertices().end());
    for (const auto& e : h.edges()) {
        auto ids = h.incidence_ids(e);
        g.edges[e] = {ids.begin(), ids.end()};
    }
    return g;
}

inline std::set<std::string> neighbors(const Graph& g, const std::string& e) {
    std::set<std::string> out;
    for (const auto& [f, vs] : g.edges) {
        if (f == e) continue;
        for (const auto& v : vs)
            if (g.edges.at(e).contains(v)) {
                out.insert(f);
                break;
            }
    }
    return out;
}

inline bool hub(const Graph& g, const std::string& e) {
    if (!g.edges.contains(e)) return false;
    const auto n = neighbors(g, e);
    if (n.empty()) return false;
    for (const auto& f : n)
        if (neighbors(g, f).size() >= n.size()) return false;
    return true;
}

inline bool exclusive(const Graph& g, const std::string& e) {
    if (!g.edges.contains(e)) return false;
    for (const auto& v : g.edges.at(e)) {
        bool elsewhere = false;
        for (const auto& [f, vs] : g.edges)
            if (f != e && vs.contains(v)) elsewhere = true;
        if (!elsewhere) return true;
    }
    return false;
}

/// O(e) > 1/2  <=>  2 * max overlap < |e|, in integers.
inline bool max_original(const Graph& g, const std::string& e) {
    if (!g.edges.contains(e)) return false;
    std::size_t best = 0;
    for (const auto& f : neighbors(g, e)) {
        std::size_t common = 0;
        for (const auto& v : g.edges.at(f)) common += g.edges.at(e).count(v);
        best = std::max(best, common);
    }
    return 2 * best < g.edges.at(e).size();
}

using Pred = std::function<bool(const Graph&, const std::string&)>;

inline Pred by_name(const std::string& name) {
    if (name == "hub") return hub;
    if (name == "exclusivity") return exclusive;
    return max_original;
}

/// A filtration whose steps keep ids (inclusions): critical values plus one graph per interval.
struct Levels {
    std::vector<double> critical;
    std::vector<Graph> objects;
};

inline Levels from_weights(const srp::WeightedHypergraph& w) {
    Levels l;
    std::set<double> values;
    for (const auto& [_, x] : w.weight) values.insert(x);
    l.critical.assign(values.begin(), values.end());
    l.objects.emplace_back();
    for (double a : l.critical) {
        Graph g;
        for (const auto& v : w.graph.vertices())
            if (w.weight.at(srp::Element::vertex(v)) <= a) g.vertices.insert(v);
        for (const auto& e : w.graph.edges())
            if (w.weight.at(srp::Element::edge(e)) <= a) {
                auto ids = w.graph.incidence_ids(e);
                g.edges[e] = {ids.begin(), ids.end()};
            }
        l.objects.push_back(std::move(g));
    }
    return l;
}

/// Only valid when every step maps ids to themselves; callers assert that separately.
inline Levels from_filtration(const srp::TameFiltration& f) {
    Levels l;
    l.critical = f.critical_values();
    for (const auto& o : f.objects()) l.objects.push_back(from_library(*o));
    return l;
}

inline const Graph& at(const Levels& l, double u) {
    std::size_t i = 0;
    while (i < l.critical.size() && l.critical[i] <= u) ++i;
    return l.objects[i];
}

inline double below_all(const Levels& l) { return l.critical.empty() ? -1.0 : l.critical.front() - 1.0; }
inline double above_all(const Levels& l) { return l.critical.empty() ? 1.0 : l.critical.back() + 1.0; }

/// lo, hi and every critical value between them.
inline std::vector<double> representative(const Levels& l, double lo, double hi) {
    std::vector<double> out{lo, hi};
    for (double a : l.critical)
        if (lo <= a && a <= hi) out.push_back(a);
    return out;
}

inline bool alive(const Levels& l, const Pred& p, const std::string& e, double w) {
    const auto& g = at(l, w);
    return g.edges.contains(e) && p(g, e);
}

/// Number of singleton-edge steady sets at (u, v); v may be +inf.
inline long steady(const Levels& l, const Pred& p, double u, double v) {
    const double hi = std::isinf(v) ? std::max(u, above_all(l)) : v;
    long count = 0;
    for (const auto& [e, _] : at(l, u).edges) {
        bool ok = true;
        for (double w : representative(l, u, hi)) ok = ok && alive(l, p, e, w);
        count += ok;
    }
    return count;
}

/// Number of singleton-edge ranging sets at (u, v); v may be +inf.
inline long ranging(const Levels& l, const Pred& p, double u, double v) {
    const double top = std::isinf(v) ? std::max(u, above_all(l)) : std::max(v, above_all(l));
    long count = 0;
    for (const auto& [e, _] : at(l, u).edges) {
        auto xs = representative(l, std::min(u, below_all(l)), u);
        auto ys = representative(l, std::isinf(v) ? top : v, top);
        bool born = std::any_of(xs.begin(), xs.end(), [&](double x) { return x <= u && alive(l, p, e, x); });
        bool later = std::any_of(ys.begin(), ys.end(), [&](double y) { return alive(l, p, e, y); });
        count += born && later;
    }
    return count;
}

inline long count(const Levels& l, const Pred& p, srp::Mode m, double u, double v) {
    return m == srp::Mode::Steady ? steady(l, p, u, v) : ranging(l, p, u, v);
}

/// Cornerpoints from the neighbourhood form of the multiplicity, with δ well inside every gap.
inline std::map<std::pair<double, double>, long> diagram(const Levels& l, const Pred& p, srp::Mode m) {
    double gap = 1.0;
    for (std::size_t i = 1; i < l.critical.size(); ++i) gap = std::min(gap, l.critical[i] - l.critical[i - 1]);
    const double d = gap / 4.0;
    const double low = below_all(l);
    auto pc = [&](double u, double v) { return count(l, p, m, u, v); };

    std::vector<double> births{-inf};
    births.insert(births.end(), l.critical.begin(), l.critical.end());
    std::vector<double> deaths(l.critical.begin(), l.critical.end());
    deaths.push_back(inf);

    std::map<std::pair<double, double>, long> out;
    for (double b : births)
        for (double e : deaths) {
            if (!(b < e)) continue;
            const double up = std::isinf(b) ? low : b + d;
            auto lower = [&](double v) { return std::isinf(b) ? 0L : pc(b - d, v); };
            long mu = 0;
            if (std::isinf(e)) {
                mu = pc(up, inf) - lower(inf);
            } else {
                mu = pc(up, e - d) - lower(e - d) - pc(up, e + d) + lower(e + d);
            }
            if (mu != 0) out[{b, e}] = mu;
        }
    return out;
}

inline std::map<std::pair<double, double>, long> as_map(const srp::PersistenceDiagram& d) {
    std::map<std::pair<double, double>, long> out;
    for (const auto& pt : d.points) out[{pt.birth, pt.death}] += pt.mult;
    return out;
}

// --- bottleneck -------------------------------------------------------------

struct Pt {
    double b, d;
};

inline std::vector<Pt> expand(const srp::PersistenceDiagram& dg) {
    std::vector<Pt> out;
    for (const auto& p : dg.points)
        for (long k = 0; k < p.mult; ++k) out.push_back({p.birth, p.death});
    return out;
}

inline double gap(double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return x == y ? 0.0 : inf;
    return std::fabs(x - y);
}

inline double to_diagonal(const Pt& p) {
    if (std::isinf(p.b) || std::isinf(p.d)) return inf;
    return (p.d - p.b) / 2.0;
}

/// Minimum over every partial injective matching; unmatched points go to the diagonal.
inline double bottleneck(const srp::PersistenceDiagram& da, const srp::PersistenceDiagram& db,
                         long* matchings = nullptr) {
    const auto a = expand(da);
    const auto b = expand(db);
    std::vector<bool> used(b.size(), false);
    double best = inf;
    long seen = 0;
    std::function<void(std::size_t, double)> go = [&](std::size_t i, double worst) {
        if (i == a.size()) {
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!used[j]) worst = std::max(worst, to_diagonal(b[j]));
            ++seen;
            best = std::min(best, worst);
            return;
        }
        go(i + 1, std::max(worst, to_diagonal(a[i])));
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            go(i + 1, std::max({worst, gap(a[i].b, b[j].b), gap(a[i].d, b[j].d)}));
            used[j] = false;
        }
    };
    go(0, 0.0);
    if (matchings) *matchings = seen;
    return best;
}

// --- hypergraph morphisms ----------------------------------------------------

/// Every pair of bijections (vertices, edges) that preserves incidence in both directions.
inline long count_isomorphisms(const Graph& g, const Graph& h) {
    if (g.vertices.size() != h.vertices.size() || g.edges.size() != h.edges.size()) return 0;
    std::vector<std::string> gv(g.vertices.begin(), g.vertices.end());
    std::vector<std::string> hv(h.vertices.begin(), h.vertices.end());
    std::vector<std::string> ge;
    std::vector<std::string> he;
    for (const auto& [e, _] : g.edges) ge.push_back(e);
    for (const auto& [e, _] : h.edges) he.push_back(e);
    long total = 0;
    std::vector<std::size_t> vp(gv.size());
    std::iota(vp.begin(), vp.end(), 0);
    do {
        std::map<std::string, std::string> vm;
        for (std::size_t i = 0; i < gv.size(); ++i) vm[gv[i]] = hv[vp[i]];
        std::vector<std::size_t> ep(ge.size());
        std::iota(ep.begin(), ep.end(), 0);
        do {
            bool ok = true;
            for (std::size_t i = 0; i < ge.size() && ok; ++i) {
                std::set<std::string> image;
                for (const auto& v : g.edges.at(ge[i])) image.insert(vm[v]);
                ok = image == h.edges.at(he[ep[i]]);
            }
            total += ok;
        } while (std::next_permutation(ep.begin(), ep.end()));
    } while (std::next_permutation(vp.begin(), vp.end()));
    return total;
}

enum class Verdict { Invalid, General, MembershipReflecting, SizePreserving };

/// Scans the defining conditions directly.
inline Verdict classify(const std::map<std::string, std::string>& vm, const std::map<std::string, std::string>& em,
                        const Graph& src, const Graph& tgt) {
    std::set<std::string> vimg;
    std::set<std::string> eimg;
    for (const auto& [_, y] : vm) vimg.insert(y);
    for (const auto& [_, y] : em) eimg.insert(y);
    if (vimg.size() != vm.size() || eimg.size() != em.size()) return Verdict::Invalid;
    for (const auto& [e, vs] : src.edges)
        for (const auto& v : vs)
            if (!tgt.edges.at(em.at(e)).contains(vm.at(v))) return Verdict::Invalid;
    for (const auto& [e, vs] : src.edges)
        for (const auto& u : src.vertices)
            if (tgt.edges.at(em.at(e)).contains(vm.at(u)) && !vs.contains(u)) return Verdict::General;
    for (const auto& [e, vs] : src.edges)
        if (vs.size() != tgt.edges.at(em.at(e)).size()) return Verdict::MembershipReflecting;
    return Verdict::SizePreserving;
}

}  // namespace oracle
