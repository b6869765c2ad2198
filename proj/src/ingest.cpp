#include "srp/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace srp {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw Error("play input line " + std::to_string(line) + ": " + what);
}

}  // namespace

PlayRecord parse_play(std::string_view text) {
    PlayRecord play;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            if (body.rfind("title:", 0) == 0) play.title = std::string(trim(body.substr(6)));
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) fail(line_no, "malformed row (expected index,characters)");
        const auto index_text = trim(line.substr(0, comma));
        const auto rest = line.substr(comma + 1);
        if (rest.find(',') != std::string_view::npos) fail(line_no, "malformed row (more than one comma)");

        std::size_t index = 0;
        auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
        if (index_text.empty() || ec != std::errc{} || ptr != index_text.data() + index_text.size())
            fail(line_no, "malformed scene index '" + std::string(index_text) + "'");
        if (index < play.scenes.size()) fail(line_no, "duplicate scene index " + std::to_string(index));
        if (index > play.scenes.size())
            fail(line_no, "non-contiguous scene indices (expected " + std::to_string(play.scenes.size()) + ", got " +
                              std::to_string(index) + ")");

        std::vector<std::string> cast;
        std::size_t p = 0;
        while (p <= rest.size()) {
            auto q = rest.find(';', p);
            if (q == std::string_view::npos) q = rest.size();
            auto name = trim(rest.substr(p, q - p));
            if (!name.empty()) cast.emplace_back(name);
            p = q + 1;
        }
        if (cast.empty()) fail(line_no, "empty scene " + std::to_string(index));
        std::sort(cast.begin(), cast.end());
        cast.erase(std::unique(cast.begin(), cast.end()), cast.end());
        play.scenes.push_back(std::move(cast));
    }
    if (play.scenes.empty()) throw Error("play input has no scenes");
    return play;
}

PlayRecord read_play(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_play(buf.str());
}

std::string scene_id(std::size_t index, std::size_t scene_count) {
    std::size_t width = std::max<std::size_t>(2, std::to_string(scene_count == 0 ? 0 : scene_count - 1).size());
    auto digits = std::to_string(index);
    return "scene" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

WeightedHypergraph scene_hypergraph(const PlayRecord& play) {
    HypergraphSpec spec;
    std::map<std::string, double> first;
    const auto total = play.scenes.size();
    for (std::size_t i = 0; i < total; ++i) {
        spec.edges.emplace_back(scene_id(i, total), play.scenes[i]);
        for (const auto& c : play.scenes[i]) first.emplace(c, static_cast<double>(i));
    }
    WeightedHypergraph w;
    for (const auto& [c, _] : first) spec.vertices.push_back(c);
    w.graph = Hypergraph::from_spec(spec);
    for (const auto& [c, t] : first) w.weight.emplace(Element::vertex(c), t);
    for (std::size_t i = 0; i < total; ++i) w.weight.emplace(Element::edge(scene_id(i, total)), static_cast<double>(i));
    return w;
}

TameFiltration scene_filtration(const PlayRecord& play) {
    return sublevel_filtration(scene_hypergraph(play), MonoClass::SizePreserving);
}

TameFiltration character_filtration(const PlayRecord& play) {
    const auto w = scene_hypergraph(play);
    std::vector<double> levels;
    std::vector<HypergraphPtr> objects{share(Hypergraph{})};
    std::vector<HypergraphMorphism> steps;
    for (std::size_t t = 0; t < play.scenes.size(); ++t) {
        levels.push_back(static_cast<double>(t));
        objects.push_back(share(dual(sublevel(w, static_cast<double>(t)))));
        steps.push_back(HypergraphMorphism::inclusion(objects[objects.size() - 2], objects.back()));
    }
    return TameFiltration(std::move(levels), std::move(objects), std::move(steps), MonoClass::MembershipReflecting);
}

}  // namespace srp
