#pragma once

#include "srp/hypergraph.hpp"
#include "srp/isomorphism.hpp"

#include <limits>
#include <map>
#include <vector>

namespace srp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A hypergraph with a real weight on every vertex and edge, monotone along incidence.
struct WeightedHypergraph {
    Hypergraph graph;
    std::map<Element, double> weight;
};

/// Violations of the weight invariants (missing/unknown weights, vertex heavier than an edge containing it).
std::vector<std::string> validate_weights(const WeightedHypergraph& w);

/// Finite description of a tame filtration.
///
/// With critical values a_1 < ... < a_n, object i lives on [a_i, a_{i+1})
/// (object 0 on (-inf, a_1), object n on [a_n, +inf)); step i-1 is the
/// monomorphism object i-1 -> object i.
class TameFiltration {
public:
    /// Throws Error on any structural violation, including a step weaker than `category_class`.
    TameFiltration(std::vector<double> critical_values, std::vector<HypergraphPtr> objects,
                   std::vector<HypergraphMorphism> steps, MonoClass category_class);

    /// Constant filtration on `h` with no critical values.
    static TameFiltration constant(HypergraphPtr h, MonoClass category_class = MonoClass::SizePreserving);

    std::size_t critical_count() const noexcept { return critical_values_.size(); }
    const std::vector<double>& critical_values() const noexcept { return critical_values_; }
    const std::vector<HypergraphPtr>& objects() const noexcept { return objects_; }
    const std::vector<HypergraphMorphism>& steps() const noexcept { return steps_; }
    MonoClass category_class() const noexcept { return category_class_; }

    const Hypergraph& object(std::size_t index) const { return *objects_.at(index); }
    const Hypergraph& final_object() const { return *objects_.back(); }

    /// Interval index of level u: the number of critical values <= u.
    std::size_t index_of(double u) const;

    /// Maps a set of elements of object `from` to object `to` (from <= to).
    ElementSet push(const ElementSet& set, std::size_t from, std::size_t to) const;

    /// Composite step morphism object `from` -> object `to`.
    HypergraphMorphism transition(std::size_t from, std::size_t to) const;

    /// Sample levels: a_1 - 1, midpoints between consecutive critical values, a_n + 1.
    /// Sample k lies in the interior of interval k. With no critical values the single sample is 0.
    std::vector<double> sample_points() const;

private:
    std::vector<double> critical_values_;
    std::vector<HypergraphPtr> objects_;
    std::vector<HypergraphMorphism> steps_;
    MonoClass category_class_;
};

/// Sublevel filtration of a weighted hypergraph; steps are inclusions.
/// Throws Error on invalid weights or when a step is weaker than `category_class`.
TameFiltration sublevel_filtration(const WeightedHypergraph& w, MonoClass category_class);

/// The sub-hypergraph of elements with weight <= u.
Hypergraph sublevel(const WeightedHypergraph& w, double u);

struct Evaluation {
    const Hypergraph& object;
    std::size_t index;
};

Evaluation evaluate(const TameFiltration& f, double u);

/// A set of carrier elements of the filtration at a given level.
struct TrackedSet {
    double base_level = 0.0;
    ElementSet elements;

    bool operator==(const TrackedSet&) const = default;
};

/// Image of `set` at level v. Throws Error when v < set.base_level or the set
/// is not contained in the object at its base level.
TrackedSet push_forward(const TameFiltration& f, const TrackedSet& set, double v);

/// For each element of the final object, the first level at which it is in the
/// image of the composite steps; -inf for elements already present in object 0.
using FilteringFunction = std::map<Element, double>;

FilteringFunction filtering_function(const TameFiltration& f);

struct InterleavingDistance {
    double value = kInf;
    /// False when either filtration is only known to be in the General class:
    /// the value is then reported as an upper bound only.
    bool exact = true;
};

/// min over isomorphisms phi of the final objects of max |f_F(x) - f_G(phi(x))|, +inf when the
/// final objects are not isomorphic. Throws SizeCapError past the isomorphism cap.
InterleavingDistance interleaving_distance_exact(const TameFiltration& f, const TameFiltration& g,
                                                 std::size_t cap = default_size_cap());

/// |a - b| with the convention that equal infinities are at distance 0.
double level_distance(double a, double b);

}  // namespace srp
