#pragma once

#include "srp/filtration.hpp"
#include "srp/persistence.hpp"
#include "srp/witness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srp {

/// Piecewise-constant family w ↦ m_w. Piece 0 covers (-inf, b_0), piece k covers [b_{k-1}, b_k),
/// the last piece covers [b_last, +inf).
class MorphismFamily {
public:
    MorphismFamily(std::vector<double> breakpoints, std::vector<HypergraphMorphism> pieces);

    const HypergraphMorphism& at(double w) const;
    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

private:
    std::vector<double> breakpoints_;
    std::vector<HypergraphMorphism> pieces_;
};

/// φ_w : F_w → G_{w+ε} and ψ_w : G_w → F_{w+ε}.
struct Interleaving {
    double eps = 0.0;
    MorphismFamily phi;
    MorphismFamily psi;
};

/// First failed condition, checked at one level per cell of the combined breakpoint grid:
/// objects match, ψ_{w+ε}φ_w = F_w^{w+2ε}, φ_{w+ε}ψ_w = G_w^{w+2ε}, and naturality of φ and ψ.
std::optional<std::string> verify_interleaving(const TameFiltration& f, const TameFiltration& g,
                                               const Interleaving& i);

/// Output of a counterexample builder: a 1-interleaved pair and the level pair to probe.
struct CounterexamplePair {
    TameFiltration f;
    TameFiltration g;
    Interleaving interleaving;
    Mode mode;
    double probe_u;
    double probe_v;
    double eps = 1.0;
};

/// F = X, X', X'' with breakpoints 3, 5; G = X, X'' with breakpoint 4.
/// Throws Error on an empty A or a chain that does not compose.
CounterexamplePair build_steady_counterexample(const Witness& w);

/// F = ∅, X, X', X'' with breakpoints 1, 3, 5; G = ∅, X', X'' with breakpoints 2, 6.
CounterexamplePair build_ranging_counterexample(const Witness& w);

struct ProbeCounts {
    /// Steady: |S_F(u≤v)| and |S_G(u−ε≤v+ε)|. Ranging: |R_G(u≤v)| and |R_F(u−ε≤v+ε)|.
    std::int64_t smaller;
    std::int64_t larger;
    std::string smaller_label;
    std::string larger_label;
};

/// Counts at the probe, in the direction the construction is meant to break.
ProbeCounts probe_counts(const Feature& f, const CounterexamplePair& pair);

}  // namespace srp
