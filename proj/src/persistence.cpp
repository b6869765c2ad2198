#include "srp/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace srp {

std::string to_string(Mode m) { return m == Mode::Steady ? "steady" : "ranging"; }

Mode parse_mode(const std::string& s) {
    if (s == "steady") return Mode::Steady;
    if (s == "ranging") return Mode::Ranging;
    throw Error("unknown mode '" + s + "' (expected steady or ranging)");
}

namespace {

void require_ordered(double u, double v) {
    if (std::isnan(u) || std::isnan(v)) throw Error("persistence query with NaN level");
    if (u > v) throw Error("persistence query needs u <= v, got u=" + std::to_string(u) + " v=" + std::to_string(v));
}

bool alive_somewhere(const Feature& f, const TameFiltration& flt, const ElementSet& a, std::size_t from,
                     std::size_t first) {
    ElementSet cur = flt.push(a, from, first);
    for (std::size_t p = first;; ++p) {
        if (f.holds(cur, flt.object(p))) return true;
        if (p == flt.critical_count()) return false;
        cur = flt.steps()[p].apply(cur);
    }
}

}  // namespace

std::vector<TrackedSet> steady_set(const Feature& f, const TameFiltration& flt, double u, double v) {
    require_ordered(u, v);
    const auto i = flt.index_of(u);
    const auto j = flt.index_of(v);
    std::vector<TrackedSet> out;
    for (auto& a : f.enumerate(flt.object(i))) {
        bool steady = true;
        ElementSet cur = a;
        for (std::size_t m = i + 1; m <= j && steady; ++m) {
            cur = flt.steps()[m - 1].apply(cur);
            steady = f.holds(cur, flt.object(m));
        }
        if (steady) out.push_back({u, std::move(a)});
    }
    return out;
}

std::vector<TrackedSet> ranging_set(const Feature& f, const TameFiltration& flt, double u, double v) {
    require_ordered(u, v);
    const auto i = flt.index_of(u);
    const auto j = flt.index_of(v);
    std::set<ElementSet> found;
    for (std::size_t x = 0; x <= i; ++x)
        for (const auto& origin : f.enumerate(flt.object(x))) {
            auto a = flt.push(origin, x, i);
            if (!found.contains(a) && alive_somewhere(f, flt, a, i, j)) found.insert(std::move(a));
        }
    std::vector<TrackedSet> out;
    for (const auto& a : found) out.push_back({u, a});
    return out;
}

CountTable count_table_reference(const Feature& f, const TameFiltration& flt, Mode mode) {
    const auto s = flt.sample_points();
    CountTable t(s.size());
    for (std::size_t k = 0; k < s.size(); ++k)
        for (std::size_t l = k; l < s.size(); ++l)
            t.at(k, l) = static_cast<std::int64_t>(mode == Mode::Steady ? steady_set(f, flt, s[k], s[l]).size()
                                                                         : ranging_set(f, flt, s[k], s[l]).size());
    return t;
}

CountTable count_table_parallel(const Feature& f, const TameFiltration& flt, Mode mode) {
    const std::size_t levels = flt.critical_count() + 1;
    const auto last = static_cast<std::ptrdiff_t>(levels) - 1;

    std::vector<std::vector<ElementSet>> fsets(levels);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i <= last; ++i) fsets[i] = f.enumerate(flt.object(static_cast<std::size_t>(i)));

    // Tracked sets at each level: 𝓕-sets born there, plus (for ranging) images of earlier ones.
    struct Task {
        std::size_t level;
        ElementSet set;
        bool born_here;
    };
    std::vector<Task> tasks;
    std::set<ElementSet> carried;
    for (std::size_t i = 0; i < levels; ++i) {
        std::set<ElementSet> here;
        if (mode == Mode::Ranging && i > 0)
            for (const auto& a : carried) here.insert(flt.steps()[i - 1].apply(a));
        std::set<ElementSet> own(fsets[i].begin(), fsets[i].end());
        for (const auto& a : fsets[i]) here.insert(a);
        for (const auto& a : here) tasks.push_back({i, a, own.contains(a)});
        carried = std::move(here);
    }

    // alive[t][p - level]: is the image of the tracked set an 𝓕-set at level p?
    std::vector<std::vector<char>> alive(tasks.size());
    const auto ntasks = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < ntasks; ++t) {
        const auto& task = tasks[t];
        auto& row = alive[t];
        row.assign(levels - task.level, 0);
        ElementSet cur = task.set;
        for (std::size_t p = task.level; p < levels; ++p) {
            if (p > task.level) cur = flt.steps()[p - 1].apply(cur);
            row[p - task.level] = task.born_here && p == task.level ? 1 : f.holds(cur, flt.object(p));
        }
    }

    CountTable table(levels);
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const auto i = tasks[t].level;
        const auto& row = alive[t];
        if (mode == Mode::Steady) {
            for (std::size_t j = i; j < levels && row[j - i]; ++j) ++table.at(i, j);
        } else {
            std::size_t reach = row.size();
            while (reach > 0 && !row[reach - 1]) --reach;
            for (std::size_t j = i; j < i + reach; ++j) ++table.at(i, j);
        }
    }
    return table;
}

std::int64_t PersistenceFunction::at(double u, double v) const {
    require_ordered(u, v);
    auto index = [&](double x) {
        return static_cast<std::size_t>(std::upper_bound(critical_values.begin(), critical_values.end(), x) -
                                        critical_values.begin());
    };
    return table.at(index(u), index(v));
}

std::int64_t PersistenceFunction::grid(std::size_t k, std::size_t l) const {
    const std::size_t n = samples.size();
    if (l == n) l = n - 1;
    if (k > l) throw Error("grid query below the diagonal");
    return table.at(k, l);
}

PersistenceFunction persistence_function(const Feature& f, const TameFiltration& flt, Mode mode, Kernel kernel) {
    PersistenceFunction p;
    p.mode = mode;
    p.critical_values = flt.critical_values();
    p.samples = flt.sample_points();
    p.table = kernel == Kernel::Reference ? count_table_reference(f, flt, mode) : count_table_parallel(f, flt, mode);
    if (auto bad = check_axioms(p))
        throw InternalError("persistence function violates axiom " + bad->axiom + " at sample indices (" +
                            std::to_string(bad->u1) + "," + std::to_string(bad->u2) + "," + std::to_string(bad->v1) +
                            "," + std::to_string(bad->v2) + ")");
    return p;
}

std::optional<AxiomViolation> check_axioms(const PersistenceFunction& p) {
    const std::size_t top = p.samples.size();  // index of +inf
    for (std::size_t u1 = 0; u1 < top; ++u1)
        for (std::size_t u2 = u1; u2 < top; ++u2)
            for (std::size_t v1 = u2; v1 <= top; ++v1)
                for (std::size_t v2 = v1; v2 <= top; ++v2) {
                    const auto a = p.grid(u1, v1);
                    const auto b = p.grid(u2, v1);
                    const auto c = p.grid(u2, v2);
                    const auto d = p.grid(u1, v2);
                    if (a < 0) return AxiomViolation{"non-negativity", u1, u2, v1, v2};
                    if (a > b) return AxiomViolation{"monotone in u", u1, u2, v1, v2};
                    if (c > b) return AxiomViolation{"monotone in v", u1, u2, v1, v2};
                    if (b - a < c - d) return AxiomViolation{"superadditivity", u1, u2, v1, v2};
                }
    return std::nullopt;
}

std::int64_t PersistenceDiagram::total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& pt : points) total += pt.mult;
    return total;
}

PersistenceDiagram diagram(const PersistenceFunction& p) {
    PersistenceDiagram d;
    d.mode = p.mode;
    const auto& a = p.critical_values;
    const std::size_t n = a.size();
    const auto& c = p.table;
    auto birth = [&](std::size_t i) { return i == 0 ? -kInf : a[i - 1]; };
    auto keep = [&](double b, double e, std::int64_t mu) {
        if (mu < 0)
            throw InternalError("negative multiplicity at (" + std::to_string(b) + "," + std::to_string(e) + ")");
        if (mu > 0) d.points.push_back({b, e, mu});
    };
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            std::int64_t mu = c.at(i, j - 1) - c.at(i, j);
            if (i > 0) mu += c.at(i - 1, j) - c.at(i - 1, j - 1);
            keep(birth(i), a[j - 1], mu);
        }
        keep(birth(i), kInf, c.at(i, n) - (i > 0 ? c.at(i - 1, n) : 0));
    }
    std::sort(d.points.begin(), d.points.end());
    return d;
}

std::optional<RepresentationFailure> representation_identity_failure(const PersistenceFunction& p,
                                                                     const PersistenceDiagram& d) {
    const std::size_t top = p.samples.size();
    for (std::size_t k = 0; k < top; ++k)
        for (std::size_t l = k; l <= top; ++l) {
            const double ubar = p.samples[k];
            std::int64_t sum = 0;
            for (const auto& pt : d.points) {
                const bool after = l == top ? std::isinf(pt.death) : pt.death > p.samples[l];
                if (pt.birth < ubar && after) sum += pt.mult;
            }
            const auto value = p.grid(k, l);
            if (value != sum) return RepresentationFailure{k, l, value, sum};
        }
    return std::nullopt;
}

bool representation_identity_check(const PersistenceFunction& p, const PersistenceDiagram& d) {
    return !representation_identity_failure(p, d).has_value();
}

namespace {

struct Expanded {
    double birth, death;
};

std::vector<Expanded> expand(const PersistenceDiagram& d) {
    std::vector<Expanded> out;
    for (const auto& pt : d.points)
        for (std::int64_t k = 0; k < pt.mult; ++k) out.push_back({pt.birth, pt.death});
    return out;
}

double coordinate_gap(double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return x == y ? 0.0 : kInf;
    return std::fabs(x - y);
}

double point_cost(const Expanded& p, const Expanded& q) {
    return std::max(coordinate_gap(p.birth, q.birth), coordinate_gap(p.death, q.death));
}

double diagonal_cost(const Expanded& p) {
    if (std::isinf(p.birth) || std::isinf(p.death)) return kInf;
    return (p.death - p.birth) / 2.0;
}

// Kuhn's augmenting paths on a dense boolean adjacency matrix.
bool has_perfect_matching(const std::vector<std::vector<char>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::ptrdiff_t> match_right(n, -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t l) {
        for (std::size_t r = 0; r < n; ++r) {
            if (!adj[l][r] || seen[r]) continue;
            seen[r] = 1;
            if (match_right[r] < 0 || augment(static_cast<std::size_t>(match_right[r]))) {
                match_right[r] = static_cast<std::ptrdiff_t>(l);
                return true;
            }
        }
        return false;
    };
    for (std::size_t l = 0; l < n; ++l) {
        seen.assign(n, 0);
        if (!augment(l)) return false;
    }
    return true;
}

}  // namespace

double bottleneck(const PersistenceDiagram& da, const PersistenceDiagram& db) {
    const auto a = expand(da);
    const auto b = expand(db);
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t n = na + nb;
    if (n == 0) return 0.0;

    // Rows: points of a, then diagonal slots for b. Columns: points of b, then diagonal slots for a.
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) cost[i][j] = point_cost(a[i], b[j]);
        cost[i][nb + i] = diagonal_cost(a[i]);
    }
    for (std::size_t j = 0; j < nb; ++j) {
        cost[na + j][j] = diagonal_cost(b[j]);
        for (std::size_t i = 0; i < na; ++i) cost[na + j][nb + i] = 0.0;
    }

    std::vector<double> candidates;
    for (const auto& row : cost)
        for (double c : row)
            if (std::isfinite(c)) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto feasible = [&](double eps) {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) adj[i][j] = cost[i][j] <= eps;
        return has_perfect_matching(adj);
    };
    if (candidates.empty() || !feasible(candidates.back())) return kInf;
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        const auto mid = lo + (hi - lo) / 2;
        if (feasible(candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    return candidates[lo];
}

CompatibilityResult epsilon_compatible(const PersistenceFunction& p, const PersistenceFunction& q, double eps,
                                       const std::string& p_name, const std::string& q_name) {
    if (!(eps >= 0.0) || std::isinf(eps)) throw Error("epsilon must be a finite non-negative number");
    std::vector<double> levels;
    for (const auto* cv : {&p.critical_values, &q.critical_values})
        for (double a : *cv)
            for (double x : {a - eps, a, a + eps}) levels.push_back(x);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    levels.insert(levels.begin(), levels.empty() ? 0.0 : levels.front() - 1.0);
    levels.push_back(kInf);

    CompatibilityResult result;
    auto probe = [&](const PersistenceFunction& lhs, const PersistenceFunction& rhs, const std::string& name) {
        for (std::size_t k = 0; k + 1 < levels.size(); ++k)
            for (std::size_t l = k; l < levels.size(); ++l) {
                const double u = levels[k];
                const double v = levels[l];
                const auto shifted = lhs.at(u - eps, v + eps);
                const auto base = rhs.at(u, v);
                if (shifted > base) {
                    result.compatible = false;
                    result.violation = CompatibilityViolation{name, u, v, shifted, base};
                    return false;
                }
            }
        return true;
    };
    if (probe(p, q, p_name)) probe(q, p, q_name);
    return result;
}

}  // namespace srp
