#pragma once

#include "srp/filtration.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace srp {

/// A play as an ordered list of scenes, each a nonempty set of character names.
struct PlayRecord {
    std::string title;
    /// Sorted, duplicate-free character names per scene, in chronological order.
    std::vector<std::vector<std::string>> scenes;
};

/// Parses `index,charA;charB;...` rows with indices contiguous from 0.
/// Blank lines and `#` comments are skipped; `# title: X` sets the title.
/// Throws Error naming the line on malformed rows, empty scenes, or bad indices.
PlayRecord parse_play(std::string_view text);

/// Reads and parses a play file; throws Error on I/O failure.
PlayRecord read_play(const std::filesystem::path& path);

/// Edge id of scene `index`: "scene" followed by the index zero-padded to a common width (at least 2).
std::string scene_id(std::size_t index, std::size_t scene_count);

/// Characters as vertices, scenes as edges; scene i weighs i, a character weighs its first scene.
WeightedHypergraph scene_hypergraph(const PlayRecord& play);

/// Sublevel filtration of the scene hypergraph, class SizePreserving.
TameFiltration scene_filtration(const PlayRecord& play);

/// Level-wise dual of the scene filtration (scenes as vertices, characters as edges),
/// class MembershipReflecting.
TameFiltration character_filtration(const PlayRecord& play);

}  // namespace srp
