#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace srp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive search would exceed its configured instance size.
class SizeCapError : public Error {
public:
    SizeCapError(std::size_t size, std::size_t cap);
    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

/// Raised when an internal consistency check fails (an implementation bug, never bad input).
class InternalError : public Error {
public:
    using Error::Error;
};

enum class ElementKind : std::uint8_t { Vertex, Edge };

/// A carrier element of V ⊔ E. The kind tag keeps the two id namespaces apart.
struct Element {
    ElementKind kind = ElementKind::Vertex;
    std::string id;

    static Element vertex(std::string id) { return {ElementKind::Vertex, std::move(id)}; }
    static Element edge(std::string id) { return {ElementKind::Edge, std::move(id)}; }

    bool is_vertex() const noexcept { return kind == ElementKind::Vertex; }
    bool is_edge() const noexcept { return kind == ElementKind::Edge; }

    auto operator<=>(const Element&) const = default;
    bool operator==(const Element&) const = default;
};

using ElementSet = std::set<Element>;

std::string to_string(const Element& x);
std::string to_string(const ElementSet& set);

/// Raw, unvalidated hypergraph description (as read from input).
struct HypergraphSpec {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
};

/// Returns one message per violated invariant; empty means well formed.
std::vector<std::string> validate_hypergraph(const HypergraphSpec& spec);

/// Finite hypergraph (V, E, h) with h(e) nonempty for every edge.
///
/// Vertex and edge ids are kept in lexicographic order; the index of an id is
/// its rank in that order. Instances are immutable.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Throws Error listing every violation when `spec` is malformed.
    static Hypergraph from_spec(const HypergraphSpec& spec);

    /// Convenience for literals: {{"e1", {"a", "b"}}, ...}; vertices are the given list.
    static Hypergraph make(std::vector<std::string> vertices,
                           std::vector<std::pair<std::string, std::vector<std::string>>> edges);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t carrier_size() const noexcept { return vertices_.size() + edges_.size(); }
    bool empty() const noexcept { return vertices_.empty() && edges_.empty(); }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<std::string>& edges() const noexcept { return edges_; }

    std::optional<std::size_t> vertex_index(const std::string& id) const;
    std::optional<std::size_t> edge_index(const std::string& id) const;
    bool has_vertex(const std::string& id) const { return vertex_index(id).has_value(); }
    bool has_edge(const std::string& id) const { return edge_index(id).has_value(); }
    bool contains(const Element& x) const;

    /// Sorted vertex indices of edge `edge`.
    std::span<const std::uint32_t> incidence(std::size_t edge) const { return incidence_[edge]; }
    std::vector<std::string> incidence_ids(const std::string& edge_id) const;
    bool is_member(std::size_t vertex, std::size_t edge) const;

    /// Number of edges containing each vertex.
    std::vector<std::size_t> vertex_degrees() const;

    /// All carrier elements, vertices first, each group in id order.
    std::vector<Element> carrier() const;

    HypergraphSpec to_spec() const;

    bool operator==(const Hypergraph&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<std::string> edges_;
    std::vector<std::vector<std::uint32_t>> incidence_;
};

using HypergraphPtr = std::shared_ptr<const Hypergraph>;

inline HypergraphPtr share(Hypergraph h) { return std::make_shared<const Hypergraph>(std::move(h)); }

/// N(e): the other edges sharing at least one vertex with `edge`, as sorted edge indices.
std::vector<std::size_t> neighbor_indices(const Hypergraph& h, std::size_t edge);

/// N(e) by id. Throws Error for an unknown edge id.
std::vector<std::string> neighbors(const Hypergraph& h, const std::string& edge_id);

/// Transposed incidence: vertices become edges and edges become vertices.
/// Throws Error when some vertex lies in no edge.
Hypergraph dual(const Hypergraph& h);

/// Morphism classes, weakest first. SizePreserving ⊂ MembershipReflecting ⊂ General.
enum class MonoClass : std::uint8_t { General = 0, MembershipReflecting = 1, SizePreserving = 2 };

/// True when every morphism of class `actual` also belongs to class `required`.
constexpr bool satisfies(MonoClass actual, MonoClass required) noexcept {
    return static_cast<int>(actual) >= static_cast<int>(required);
}

constexpr MonoClass weakest(MonoClass a, MonoClass b) noexcept { return satisfies(a, b) ? b : a; }

/// "any", "<=", "=".
std::string to_symbol(MonoClass c);
/// Accepts "any"/"general", "<="/"le", "="/"eq". Throws Error otherwise.
MonoClass parse_mono_class(const std::string& s);
std::string to_name(MonoClass c);

struct InvalidMorphism {
    std::string reason;
};

using Classification = std::variant<MonoClass, InvalidMorphism>;

using IdMap = std::map<std::string, std::string>;

/// Strongest class satisfied by the maps, or the first violated clause.
Classification classify_morphism(const IdMap& vertex_map, const IdMap& edge_map,
                                 const Hypergraph& source, const Hypergraph& target);

/// Injective hypergraph morphism. The class is always derived from the maps.
class HypergraphMorphism {
public:
    /// Throws Error when the maps do not form a monomorphism.
    static HypergraphMorphism make(HypergraphPtr source, HypergraphPtr target, const IdMap& vertex_map,
                                   const IdMap& edge_map);

    /// Index-level constructor used by internal builders; validates like `make`.
    static HypergraphMorphism from_indices(HypergraphPtr source, HypergraphPtr target,
                                           std::vector<std::uint32_t> vertex_map,
                                           std::vector<std::uint32_t> edge_map);

    /// Maps each element of `source` to the element of `target` with the same id.
    static HypergraphMorphism inclusion(HypergraphPtr source, HypergraphPtr target);

    static HypergraphMorphism identity(HypergraphPtr h);

    const Hypergraph& source() const noexcept { return *source_; }
    const Hypergraph& target() const noexcept { return *target_; }
    const HypergraphPtr& source_ptr() const noexcept { return source_; }
    const HypergraphPtr& target_ptr() const noexcept { return target_; }
    MonoClass mono_class() const noexcept { return class_; }

    std::uint32_t map_vertex(std::size_t v) const { return vertex_map_[v]; }
    std::uint32_t map_edge(std::size_t e) const { return edge_map_[e]; }
    const std::vector<std::uint32_t>& vertex_indices() const noexcept { return vertex_map_; }
    const std::vector<std::uint32_t>& edge_indices() const noexcept { return edge_map_; }

    /// Throws Error when `x` is not an element of the source.
    Element apply(const Element& x) const;
    ElementSet apply(const ElementSet& set) const;

    IdMap vertex_map() const;
    IdMap edge_map() const;

    /// Equal maps between equal objects.
    bool operator==(const HypergraphMorphism& other) const;

private:
    HypergraphMorphism() = default;

    HypergraphPtr source_;
    HypergraphPtr target_;
    std::vector<std::uint32_t> vertex_map_;
    std::vector<std::uint32_t> edge_map_;
    MonoClass class_ = MonoClass::General;
};

/// g ∘ f. Throws Error when target(f) differs from source(g).
HypergraphMorphism compose(const HypergraphMorphism& g, const HypergraphMorphism& f);

/// Inverse of a bijective morphism; throws Error when the inverse is not a morphism.
HypergraphMorphism inverse(const HypergraphMorphism& f);

}  // namespace srp
