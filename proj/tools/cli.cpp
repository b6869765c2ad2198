#include "cli.hpp"

#include "srp/corpus.hpp"
#include "srp/feature.hpp"
#include "srp/ingest.hpp"
#include "srp/interleaving.hpp"
#include "srp/json_io.hpp"
#include "srp/persistence.hpp"
#include "srp/svg.hpp"
#include "srp/witness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace srp::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
    std::string feature;
    std::string mode = "both";
    std::string cls = "=";
    std::string in;
    std::string out;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    double eps = 1.0;
    std::string hypergraph = "scene";
    std::string probe;
    std::string witness;
    std::string diagram;
    std::size_t random = 0;
    std::uint64_t budget = SearchConfig{}.budget;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::string fmt(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

std::string fmt_symbol(double x) {
    if (std::isinf(x)) return x > 0 ? "∞" : "-∞";
    return fmt(x);
}

std::vector<Mode> modes_of(const std::string& m) {
    if (m == "both") return {Mode::Steady, Mode::Ranging};
    try {
        return {parse_mode(m)};
    } catch (const Error&) {
        throw UsageError("--mode must be steady, ranging or both");
    }
}

TameFiltration load_filtration(const RunConfig& c) {
    if (c.in.empty()) throw UsageError("--in is required");
    const fs::path path(c.in);
    if (!fs::exists(path)) throw UsageError("input not found: " + c.in);
    if (path.extension() == ".csv") {
        const auto play = read_play(path);
        if (c.hypergraph == "scene") return scene_filtration(play);
        if (c.hypergraph == "character") return character_filtration(play);
        throw UsageError("--hypergraph must be scene or character");
    }
    return filtration_from_json(read_json(path));
}

Feature require_feature(const RunConfig& c) {
    if (c.feature.empty()) throw UsageError("--feature is required");
    try {
        return feature_by_name(c.feature);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::string point_list(const std::vector<DiagramPoint>& pts) {
    std::string s = "{";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) s += ",";
        s += "(" + fmt_symbol(pts[k].birth) + "," + fmt_symbol(pts[k].death) + ")";
        if (pts[k].mult != 1) s += "x" + std::to_string(pts[k].mult);
    }
    return s + "}";
}

void print_table(std::ostream& out, const PersistenceDiagram& d, const std::string& feature) {
    out << to_string(d.mode) << " diagram of " << feature << ": " << d.points.size() << " cornerpoint(s)\n";
    out << "  " << std::left << std::setw(10) << "birth" << std::setw(10) << "death" << "mult\n";
    for (const auto& p : d.points)
        out << "  " << std::setw(10) << fmt(p.birth) << std::setw(10) << fmt(p.death) << p.mult << "\n";
    out << std::right;
}

fs::path output_for(const RunConfig& c, Mode m, bool several) {
    fs::path p(c.out);
    if (!several) return p;
    auto stem = p.stem().string();
    auto ext = p.extension().string();
    if (ext.empty()) ext = "." + c.format;
    return p.parent_path() / (stem + "." + to_string(m) + ext);
}

PersistenceDiagram compute(const Feature& f, const TameFiltration& flt, Mode m) {
    return diagram(persistence_function(f, flt, m));
}

int cmd_diagram(const RunConfig& c, std::ostream& out) {
    const auto f = require_feature(c);
    const auto modes = modes_of(c.mode);
    if (c.format != "json" && c.format != "svg") throw UsageError("--format must be json or svg");
    const auto flt = load_filtration(c);
    for (auto m : modes) {
        const auto d = compute(f, flt, m);
        print_table(out, d, f.name());
        if (!c.out.empty()) {
            const auto path = output_for(c, m, modes.size() > 1);
            write_text(path, c.format == "svg" ? diagram_to_svg(d, to_string(m) + " persistence of " + f.name())
                                               : dump(to_json(d)));
            out << "wrote " << path.string() << "\n";
        }
    }
    return kOk;
}

std::pair<double, double> parse_probe(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--probe expects u,v");
    try {
        std::size_t used = 0;
        const auto us = s.substr(0, comma);
        const auto vs = s.substr(comma + 1);
        double u = std::stod(us, &used);
        if (used != us.size()) throw UsageError("--probe expects u,v");
        double v = vs == "inf" ? kInf : std::stod(vs, &used);
        if (vs != "inf" && used != vs.size()) throw UsageError("--probe expects u,v");
        if (u > v) throw UsageError("--probe needs u <= v, got " + us + " > " + vs);
        return {u, v};
    } catch (const std::invalid_argument&) {
        throw UsageError("--probe expects numbers u,v");
    } catch (const std::out_of_range&) {
        throw UsageError("--probe value out of range");
    }
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
    const auto f = require_feature(c);
    std::optional<std::pair<double, double>> probe;
    if (!c.probe.empty()) probe = parse_probe(c.probe);
    const auto flt = load_filtration(c);
    const auto ps = persistence_function(f, flt, Mode::Steady);
    const auto pr = persistence_function(f, flt, Mode::Ranging);
    const auto ds = diagram(ps);
    const auto dr = diagram(pr);
    if (ds == dr) {
        out << "EQUAL\n";
    } else {
        out << "DIFFER: steady " << point_list(ds.points) << " vs ranging " << point_list(dr.points) << "\n";
        std::vector<DiagramPoint> only_s;
        std::vector<DiagramPoint> only_r;
        std::map<std::pair<double, double>, std::int64_t> net;
        for (const auto& p : ds.points) net[{p.birth, p.death}] += p.mult;
        for (const auto& p : dr.points) net[{p.birth, p.death}] -= p.mult;
        for (const auto& [bd, m] : net) {
            if (m > 0) only_s.push_back({bd.first, bd.second, m});
            if (m < 0) only_r.push_back({bd.first, bd.second, -m});
        }
        out << "only in steady: " << point_list(only_s) << "; only in ranging: " << point_list(only_r) << "\n";
    }
    if (probe)
        out << "probe (" << fmt(probe->first) << "," << fmt(probe->second) << "): steady "
            << ps.at(probe->first, probe->second) << ", ranging " << pr.at(probe->first, probe->second) << "\n";
    return kOk;
}

MonoClass require_class(const RunConfig& c) {
    try {
        return parse_mono_class(c.cls);
    } catch (const Error&) {
        throw UsageError("--class must be =, <= or any");
    }
}

int cmd_counterexample(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto f = require_feature(c);
    const auto cls = require_class(c);
    if (!(c.eps >= 0.0)) throw UsageError("--eps must be non-negative");

    std::optional<Witness> witness;
    Json report;
    report["feature"] = f.name();
    report["class"] = to_symbol(cls);
    if (!c.witness.empty()) {
        if (!fs::exists(c.witness)) throw UsageError("witness not found: " + c.witness);
        auto w = witness_from_json(read_json(c.witness));
        const auto failed = verify_witness(f, w, cls);
        if (!failed.empty()) {
            err << "witness rejected:\n";
            for (const auto& s : failed) err << "  " << s << "\n";
            return kCheckFailed;
        }
        out << "supplied witness verified for " << f.name() << " in class " << to_symbol(cls) << "\n";
        witness = std::move(w);
    } else {
        if (!c.seed) throw UsageError("--seed is required for the witness search");
        SearchConfig sc;
        sc.seed = *c.seed;
        sc.budget = c.budget;
        const auto r = convexity_witness_search(f, cls, sc);
        if (!r.witness) {
            out << "no witness within budget: " << r.examined << " candidate chains examined, exhaustive phase "
                << (r.exhaustive_complete ? "complete" : "cut off by budget") << " (max " << sc.max_vertices
                << " vertices, " << sc.max_edges << " edges, budget " << sc.budget << ", " << sc.random_trials
                << " random trials, seed " << sc.seed << "); this is not a proof of convexity\n";
            report["witness"] = nullptr;
            report["examined"] = r.examined;
            report["budget"] = sc.budget;
            if (!c.out.empty()) write_text(c.out, dump(report));
            return kOk;
        }
        out << "witness found in " << r.phase << " phase after " << r.examined << " candidate chains: A = "
            << to_string(r.witness->a) << "\n";
        witness = r.witness;
    }
    report["witness"] = to_json(*witness);

    int code = kOk;
    for (const auto& pair : {build_steady_counterexample(*witness), build_ranging_counterexample(*witness)}) {
        const auto name = to_string(pair.mode);
        Json entry;
        entry["F"] = to_json(pair.f);
        entry["G"] = to_json(pair.g);
        if (auto bad = verify_interleaving(pair.f, pair.g, pair.interleaving)) {
            out << name << ": 1-interleaving FAILED: " << *bad << "\n";
            entry["interleaved"] = false;
            code = kCheckFailed;
        } else {
            out << name << ": F and G are 1-interleaved (all diagram shapes commute)\n";
            entry["interleaved"] = true;
        }
        const auto pf = persistence_function(f, pair.f, pair.mode);
        const auto pg = persistence_function(f, pair.g, pair.mode);
        const auto compat = epsilon_compatible(pf, pg, c.eps);
        entry["compatible"] = compat.compatible;
        if (compat.violation) {
            const auto& v = *compat.violation;
            out << name << ": not " << fmt(c.eps) << "-compatible; first violation " << v.lhs_name << "("
                << fmt(v.u - c.eps) << "<=" << fmt(v.v + c.eps) << ")=" << v.shifted << " > "
                << (v.lhs_name == "F" ? "G" : "F") << "(" << fmt(v.u) << "<=" << fmt(v.v) << ")=" << v.unshifted
                << "\n";
        } else {
            out << name << ": " << fmt(c.eps) << "-compatible\n";
        }
        const auto counts = probe_counts(f, pair);
        out << name << ": probe (" << fmt(pair.probe_u) << "," << fmt(pair.probe_v) << "): " << counts.smaller_label
            << " = " << counts.smaller << (counts.smaller < counts.larger ? " < " : " >= ") << counts.larger_label
            << " = " << counts.larger << "\n";
        entry["probe"] = {{"u", pair.probe_u},
                          {"v", pair.probe_v},
                          {counts.smaller_label, counts.smaller},
                          {counts.larger_label, counts.larger}};
        report[name] = entry;
    }
    if (!c.out.empty()) write_text(c.out, dump(report));
    return code;
}

struct CheckOutcome {
    bool ok = true;
    std::vector<std::string> failures;
};

void check_one(const Feature& f, const TameFiltration& flt, const std::string& label, CheckOutcome& o) {
    auto fail = [&](const std::string& s) {
        o.ok = false;
        o.failures.push_back(label + " " + f.name() + ": " + s);
    };
    std::optional<PersistenceFunction> ps;
    std::optional<PersistenceFunction> pr;
    for (auto m : {Mode::Steady, Mode::Ranging}) {
        PersistenceFunction p;
        try {
            p = persistence_function(f, flt, m);
        } catch (const InternalError& e) {
            fail(to_string(m) + " axioms: " + e.what());
            continue;
        }
        if (count_table_reference(f, flt, m) != p.table) fail(to_string(m) + " parallel kernel differs from reference");
        const auto d = diagram(p);
        if (auto bad = representation_identity_failure(p, d))
            fail(to_string(m) + " representation identity fails at sample (" + std::to_string(bad->k) + "," +
                 std::to_string(bad->l) + ")");
        (m == Mode::Steady ? ps : pr) = std::move(p);
    }
    if (ps && pr) {
        const auto s = flt.sample_points();
        for (std::size_t k = 0; k < s.size(); ++k)
            for (std::size_t l = k; l < s.size(); ++l) {
                const auto steady = steady_set(f, flt, s[k], s[l]);
                const auto ranging = ranging_set(f, flt, s[k], s[l]);
                std::set<ElementSet> r;
                for (const auto& t : ranging) r.insert(t.elements);
                for (const auto& t : steady)
                    if (!r.contains(t.elements)) {
                        fail("steady set not contained in ranging set at (" + fmt(s[k]) + "," + fmt(s[l]) + ")");
                        return;
                    }
            }
    }
}

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<Feature> features;
    if (c.feature.empty())
        for (const auto& n : builtin_feature_names()) features.push_back(feature_by_name(n));
    else
        features.push_back(require_feature(c));

    CheckOutcome o;
    std::size_t instances = 0;
    if (c.random > 0) {
        if (!c.seed) throw UsageError("--seed is required with --random");
        const auto corpus = random_corpus(*c.seed, c.random);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto flt = sublevel_filtration(corpus[i], MonoClass::SizePreserving);
            for (const auto& f : features) check_one(f, flt, "instance " + std::to_string(i), o);
            ++instances;
        }
    }
    if (!c.in.empty()) {
        const auto flt = load_filtration(c);
        for (const auto& f : features) check_one(f, flt, c.in, o);
        ++instances;
        if (!c.diagram.empty()) {
            if (features.size() != 1) throw UsageError("--diagram needs a single --feature");
            if (!fs::exists(c.diagram)) throw UsageError("diagram not found: " + c.diagram);
            const auto d = diagram_from_json(read_json(c.diagram));
            const auto p = persistence_function(features.front(), flt, d.mode);
            if (auto bad = representation_identity_failure(p, d)) {
                o.ok = false;
                o.failures.push_back("supplied diagram " + c.diagram + ": representation identity fails at sample (" +
                                     std::to_string(bad->k) + "," + std::to_string(bad->l) + "): p = " +
                                     std::to_string(bad->value) + ", quadrant sum = " +
                                     std::to_string(bad->quadrant_sum));
            }
        }
    }
    if (instances == 0) throw UsageError("check needs --in or --random N");

    for (const auto& s : o.failures) err << "FAIL " << s << "\n";
    out << (o.ok ? "all checks passed" : "checks FAILED") << " (" << instances << " filtration(s), "
        << features.size() << " feature(s): axioms, representation identity, steady within ranging, kernel agreement)\n";
    return o.ok ? kOk : kCheckFailed;
}

int cmd_ingest(const RunConfig& c, std::ostream& out) {
    if (c.in.empty()) throw UsageError("--in is required");
    if (!fs::exists(c.in)) throw UsageError("input not found: " + c.in);
    const auto play = read_play(c.in);
    TameFiltration flt = c.hypergraph == "scene"       ? scene_filtration(play)
                         : c.hypergraph == "character" ? character_filtration(play)
                                                       : throw UsageError("--hypergraph must be scene or character");
    const auto& top = flt.final_object();
    out << (play.title.empty() ? std::string("untitled play") : play.title) << ": " << play.scenes.size()
        << " scenes, " << (c.hypergraph == "scene" ? top.vertex_count() : top.edge_count()) << " characters; "
        << c.hypergraph << " filtration with " << flt.critical_count() << " critical values, class "
        << to_symbol(flt.category_class()) << "\n";
    if (c.out.empty()) out << dump(to_json(flt));
    else write_text(c.out, dump(to_json(flt)));
    return kOk;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--in", c.in, "Input filtration JSON or play CSV");
    sub->add_option("--out", c.out, "Output path");
    sub->add_option("--hypergraph", c.hypergraph, "For play CSV input: scene or character")
        ->check(CLI::IsMember({"scene", "character"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steady and ranging persistence for features on hypergraph filtrations", "srp"};
    app.require_subcommand(1);
    RunConfig c;

    auto* diagram_cmd = app.add_subcommand("diagram", "Compute persistence diagrams");
    auto* compare_cmd = app.add_subcommand("compare", "Compare steady and ranging diagrams");
    auto* counter_cmd = app.add_subcommand("counterexample", "Search a non-convexity witness and build the pairs");
    auto* check_cmd = app.add_subcommand("check", "Axiom, representation and inclusion checks");
    auto* ingest_cmd = app.add_subcommand("ingest", "Build a filtration from a play CSV");

    for (auto* sub : {diagram_cmd, compare_cmd, counter_cmd, check_cmd, ingest_cmd}) add_common(sub, c);
    for (auto* sub : {diagram_cmd, compare_cmd, counter_cmd, check_cmd})
        sub->add_option("--feature", c.feature, "hub, exclusivity or max-originality");
    diagram_cmd->add_option("--mode", c.mode, "steady, ranging or both");
    diagram_cmd->add_option("--format", c.format, "json or svg");
    compare_cmd->add_option("--probe", c.probe, "Also report both values at u,v");
    counter_cmd->add_option("--class", c.cls, "Morphism class: =, <= or any");
    counter_cmd->add_option("--eps", c.eps, "Compatibility epsilon");
    counter_cmd->add_option("--witness", c.witness, "Witness JSON to use instead of searching");
    counter_cmd->add_option("--budget", c.budget, "Exhaustive search budget");
    for (auto* sub : {counter_cmd, check_cmd}) sub->add_option("--seed", c.seed, "Random seed");
    check_cmd->add_option("--diagram", c.diagram, "Diagram JSON to check against the computed function");
    check_cmd->add_option("--random", c.random, "Also check N random size-preserving filtrations");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (diagram_cmd->parsed()) return cmd_diagram(c, out);
        if (compare_cmd->parsed()) return cmd_compare(c, out);
        if (counter_cmd->parsed()) return cmd_counterexample(c, out, err);
        if (check_cmd->parsed()) return cmd_check(c, out, err);
        if (ingest_cmd->parsed()) return cmd_ingest(c, out);
    } catch (const InternalError& e) {
        err << "srp: internal error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const Error& e) {
        err << "srp: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace srp::cli
