#include "srp/isomorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace srp {

std::size_t default_size_cap() {
    if (const char* env = std::getenv("SRP_SIZE_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultSizeCap;
}

namespace {

using IndexSet = std::vector<std::uint32_t>;

class IsoSearch {
public:
    IsoSearch(const Hypergraph& a, const Hypergraph& b, const std::function<bool(const IsomorphismMap&)>& visit,
              const AdmissiblePair& admissible)
        : a_(a), b_(b), visit_(visit), admissible_(admissible) {
        const auto nv = a.vertex_count();
        map_.vertex_map.assign(nv, 0);
        map_.edge_map.assign(a.edge_count(), 0);
        used_v_.assign(nv, false);
        used_e_.assign(b.edge_count(), false);

        sig_a_ = signatures(a);
        sig_b_ = signatures(b);
        completes_.assign(nv, {});
        for (std::size_t e = 0; e < a.edge_count(); ++e) {
            auto inc = a.incidence(e);
            completes_[inc.back()].push_back(e);
        }
        for (std::size_t e = 0; e < b.edge_count(); ++e) {
            auto inc = b.incidence(e);
            ++remaining_[IndexSet(inc.begin(), inc.end())];
        }
        image_.assign(a.edge_count(), {});

        vertex_ok_.assign(nv, std::vector<bool>(b.vertex_count(), false));
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t w = 0; w < b.vertex_count(); ++w)
                vertex_ok_[v][w] = sig_a_[v] == sig_b_[w] &&
                                   (!admissible_ || admissible_(Element::vertex(a.vertices()[v]),
                                                                Element::vertex(b.vertices()[w])));
    }

    bool run() {
        if (a_.vertex_count() != b_.vertex_count() || a_.edge_count() != b_.edge_count()) return true;
        return assign_vertex(0);
    }

private:
    static std::vector<std::vector<std::size_t>> signatures(const Hypergraph& h) {
        std::vector<std::vector<std::size_t>> sig(h.vertex_count());
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            for (auto v : h.incidence(e)) sig[v].push_back(h.incidence(e).size());
        for (auto& s : sig) std::sort(s.begin(), s.end());
        return sig;
    }

    bool assign_vertex(std::size_t v) {
        if (v == a_.vertex_count()) return assign_edge(0);
        for (std::size_t w = 0; w < b_.vertex_count(); ++w) {
            if (used_v_[w] || !vertex_ok_[v][w]) continue;
            map_.vertex_map[v] = static_cast<std::uint32_t>(w);
            used_v_[w] = true;
            std::size_t closed = 0;
            bool consistent = true;
            for (auto e : completes_[v]) {
                IndexSet img;
                for (auto u : a_.incidence(e)) img.push_back(map_.vertex_map[u]);
                std::sort(img.begin(), img.end());
                auto it = remaining_.find(img);
                if (it == remaining_.end() || it->second == 0) {
                    consistent = false;
                    break;
                }
                --it->second;
                image_[e] = std::move(img);
                ++closed;
            }
            bool keep_going = true;
            if (consistent) keep_going = assign_vertex(v + 1);
            for (std::size_t k = 0; k < closed; ++k) ++remaining_[image_[completes_[v][k]]];
            used_v_[w] = false;
            if (!keep_going) return false;
        }
        return true;
    }

    bool assign_edge(std::size_t e) {
        if (e == a_.edge_count()) return visit_(map_);
        const auto& img = image_[e];
        for (std::size_t f = 0; f < b_.edge_count(); ++f) {
            if (used_e_[f]) continue;
            auto inc = b_.incidence(f);
            if (!std::equal(inc.begin(), inc.end(), img.begin(), img.end())) continue;
            if (admissible_ && !admissible_(Element::edge(a_.edges()[e]), Element::edge(b_.edges()[f]))) continue;
            used_e_[f] = true;
            map_.edge_map[e] = static_cast<std::uint32_t>(f);
            bool keep_going = assign_edge(e + 1);
            used_e_[f] = false;
            if (!keep_going) return false;
        }
        return true;
    }

    const Hypergraph& a_;
    const Hypergraph& b_;
    const std::function<bool(const IsomorphismMap&)>& visit_;
    const AdmissiblePair& admissible_;

    IsomorphismMap map_;
    std::vector<bool> used_v_;
    std::vector<bool> used_e_;
    std::vector<std::vector<std::size_t>> sig_a_;
    std::vector<std::vector<std::size_t>> sig_b_;
    std::vector<std::vector<bool>> vertex_ok_;
    // Edges whose highest vertex index is v: their image is known once v is assigned.
    std::vector<std::vector<std::size_t>> completes_;
    std::map<IndexSet, std::size_t> remaining_;
    std::vector<IndexSet> image_;
};

}  // namespace

bool for_each_isomorphism(const Hypergraph& a, const Hypergraph& b,
                          const std::function<bool(const IsomorphismMap&)>& visit, const AdmissiblePair& admissible,
                          std::size_t cap) {
    if (a.carrier_size() > cap) throw SizeCapError(a.carrier_size(), cap);
    IsoSearch search(a, b, visit, admissible);
    return search.run();
}

std::vector<HypergraphMorphism> isomorphisms(const HypergraphPtr& a, const HypergraphPtr& b, std::size_t cap) {
    std::vector<HypergraphMorphism> out;
    for_each_isomorphism(
        *a, *b,
        [&](const IsomorphismMap& m) {
            out.push_back(HypergraphMorphism::from_indices(a, b, m.vertex_map, m.edge_map));
            return true;
        },
        {}, cap);
    return out;
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, std::size_t cap) {
    bool found = false;
    for_each_isomorphism(
        a, b,
        [&](const IsomorphismMap&) {
            found = true;
            return false;
        },
        {}, cap);
    return found;
}

}  // namespace srp
