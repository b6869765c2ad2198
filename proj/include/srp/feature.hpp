#pragma once

#include "srp/hypergraph.hpp"

#include <boost/rational.hpp>

#include <functional>
#include <string>
#include <vector>

namespace srp {

/// Which element sets a feature can hold on; drives enumeration cost.
enum class SupportShape : std::uint8_t {
    SingletonEdge,   // A = {e}
    EdgeSubsets,     // any subset of E (exponential)
    CarrierSubsets,  // any subset of V ⊔ E (exponential)
};

/// Largest carrier for which the exponential shapes will enumerate.
inline constexpr std::size_t kSubsetEnumerationCap = 16;

using Predicate = std::function<bool(const ElementSet&, const Hypergraph&)>;

/// Isomorphism-invariant set of pairs (A, H).
class Feature {
public:
    Feature(std::string name, Predicate holds, SupportShape shape,
            MonoClass class_requirement = MonoClass::General);

    const std::string& name() const noexcept { return name_; }
    SupportShape shape() const noexcept { return shape_; }
    MonoClass class_requirement() const noexcept { return class_requirement_; }

    bool holds(const ElementSet& a, const Hypergraph& h) const { return holds_(a, h); }

    /// All A in the support shape with holds(A, h), in canonical order.
    /// Throws Error when an exponential shape exceeds kSubsetEnumerationCap.
    std::vector<ElementSet> enumerate(const Hypergraph& h) const;

private:
    std::string name_;
    Predicate holds_;
    SupportShape shape_;
    MonoClass class_requirement_;
};

using Rational = boost::rational<long long>;

bool hub_holds(const ElementSet& a, const Hypergraph& h);
bool exclusivity_holds(const ElementSet& a, const Hypergraph& h);
bool max_originality_holds(const ElementSet& a, const Hypergraph& h);

/// 1 - max_{e' in N(e)} |e ∩ e'| / |e|, and 1 when N(e) is empty.
Rational max_originality_value(const Hypergraph& h, std::size_t edge);
/// Throws Error for an unknown edge id.
Rational max_originality_value(const Hypergraph& h, const std::string& edge_id);

Feature hub_feature();
Feature exclusivity_feature();
Feature max_originality_feature();
/// Every subset of the carrier (trivially continued in both directions).
Feature any_subset_feature();
/// Every subset of the edge set, including the empty one.
Feature all_edge_subsets_feature();

/// "hub", "exclusivity", "max-originality". Throws Error otherwise.
Feature feature_by_name(const std::string& name);
std::vector<std::string> builtin_feature_names();

/// Keeps 𝓕-sets with no strict 𝓕-superset in the same hypergraph.
Feature maximal_version(const Feature& f);
/// Keeps 𝓕-sets with no strict 𝓕-subset in the same hypergraph.
Feature minimal_version(const Feature& f);

/// The singleton {e} for an edge id.
inline ElementSet edge_set(const std::string& id) { return {Element::edge(id)}; }

}  // namespace srp
