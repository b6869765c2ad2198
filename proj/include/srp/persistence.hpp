#pragma once

#include "srp/feature.hpp"
#include "srp/filtration.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace srp {

enum class Mode : std::uint8_t { Steady, Ranging };

std::string to_string(Mode m);
/// "steady" or "ranging". Throws Error otherwise.
Mode parse_mode(const std::string& s);

/// S(u≤v): 𝓕-sets of F_u whose image is an 𝓕-set at every level of [u, v]. Throws Error when u > v.
std::vector<TrackedSet> steady_set(const Feature& f, const TameFiltration& flt, double u, double v);

/// R(u≤v): images at u of 𝓕-sets from some level x ≤ u that are 𝓕-sets again at some level y ≥ v.
/// Throws Error when u > v.
std::vector<TrackedSet> ranging_set(const Feature& f, const TameFiltration& flt, double u, double v);

/// Upper-triangular table of counts indexed by interval: cell (i, j), i ≤ j ≤ n, is the count for
/// any u in interval i and v in interval j. Column n doubles as v = +inf.
class CountTable {
public:
    CountTable() = default;
    explicit CountTable(std::size_t intervals) : n_(intervals), cells_(intervals * intervals, 0) {}

    std::size_t intervals() const noexcept { return n_; }
    std::int64_t& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

    bool operator==(const CountTable&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> cells_;
};

/// Direct evaluation: one steady_set / ranging_set call per cell.
CountTable count_table_reference(const Feature& f, const TameFiltration& flt, Mode mode);

/// Same table from per-level traces of tracked sets, filled with OpenMP.
CountTable count_table_parallel(const Feature& f, const TameFiltration& flt, Mode mode);

/// p(u≤v) over the filtration's sample grid plus the +inf column.
struct PersistenceFunction {
    Mode mode = Mode::Steady;
    std::vector<double> critical_values;
    /// s_0 < a_1 < s_1 < ... < a_n < s_n
    std::vector<double> samples;
    CountTable table;

    /// Value at arbitrary reals u ≤ v (v may be +inf). Throws Error when u > v.
    std::int64_t at(double u, double v) const;
    /// Value at sample indices; l == samples.size() stands for +inf.
    std::int64_t grid(std::size_t k, std::size_t l) const;
};

enum class Kernel : std::uint8_t { Reference, Parallel };

/// Computes the grid and verifies the axioms; throws InternalError on a violation.
PersistenceFunction persistence_function(const Feature& f, const TameFiltration& flt, Mode mode,
                                         Kernel kernel = Kernel::Parallel);

struct AxiomViolation {
    std::string axiom;
    std::size_t u1, u2, v1, v2;  // sample indices, samples.size() = +inf
};

/// First violated persistence-function axiom on the grid, if any.
std::optional<AxiomViolation> check_axioms(const PersistenceFunction& p);

struct DiagramPoint {
    double birth;  // may be -inf
    double death;  // may be +inf
    std::int64_t mult;

    auto operator<=>(const DiagramPoint&) const = default;
};

struct PersistenceDiagram {
    Mode mode = Mode::Steady;
    /// Sorted by (birth, death); multiplicities positive, birth < death.
    std::vector<DiagramPoint> points;

    bool operator==(const PersistenceDiagram& other) const { return points == other.points; }
    std::int64_t total_multiplicity() const;
};

PersistenceDiagram diagram(const PersistenceFunction& p);

struct RepresentationFailure {
    std::size_t k, l;  // sample indices, l == samples.size() = +inf
    std::int64_t value;
    std::int64_t quadrant_sum;
};

/// First grid cell where p differs from the quadrant sum of `d`, or nullopt when the identity holds.
std::optional<RepresentationFailure> representation_identity_failure(const PersistenceFunction& p,
                                                                     const PersistenceDiagram& d);
bool representation_identity_check(const PersistenceFunction& p, const PersistenceDiagram& d);

/// Exact bottleneck distance with the L∞ ground metric; +inf when no finite matching exists.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

struct CompatibilityViolation {
    /// "p(u-eps<=v+eps) <= q(u<=v)" was checked with p = `lhs_name`.
    std::string lhs_name;
    double u, v;
    std::int64_t shifted;    // p(u-eps <= v+eps)
    std::int64_t unshifted;  // q(u <= v)
};

struct CompatibilityResult {
    bool compatible = true;
    std::optional<CompatibilityViolation> violation;
};

/// Checks p(u−ε≤v+ε) ≤ q(u≤v) and the symmetric inequality at one point per cell of the merged
/// step grid, so the finite check decides all real u ≤ v. Names only label the report.
CompatibilityResult epsilon_compatible(const PersistenceFunction& p, const PersistenceFunction& q, double eps,
                                       const std::string& p_name = "F", const std::string& q_name = "G");

}  // namespace srp
