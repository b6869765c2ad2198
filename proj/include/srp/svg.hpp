#pragma once

#include "srp/persistence.hpp"

#include <string>

namespace srp {

/// Scatter plot of a diagram: axes, diagonal, one dot per cornerpoint with its multiplicity above it.
/// Points at infinity sit on a dashed line labelled ∞ (or −∞ for births).
std::string diagram_to_svg(const PersistenceDiagram& d, const std::string& title);

}  // namespace srp
