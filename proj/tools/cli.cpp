#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "krtl/bounds.hpp"
#include "krtl/braid.hpp"
#include "krtl/census.hpp"
#include "krtl/diagonals.hpp"
#include "krtl/homfly.hpp"
#include "krtl/shifts.hpp"
#include "krtl/stable.hpp"
#include "krtl/web.hpp"

namespace krtl::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

BraidFile load(const std::string& path, std::ostream& err) {
    BraidFile file = parse_braid_file(read_file(path));
    for (const std::string& w : file.warnings) err << "warning: " << w << '\n';
    return file;
}

ColoredBraid load_braid(const std::string& path, std::ostream& err) {
    BraidFile file = load(path, err);
    return file.braid;
}

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated list of nonnegative integers, got '" + text + "'");
        }
    }
    return out;
}

Json bound_json(const Bound& b) {
    if (b.is_infinite()) return "inf";
    return *b.value;
}

Json decomposition_json(const DiagonalDecomposition& dec) {
    Json j;
    j["length"] = dec.length;
    j["y"] = dec.y;
    j["z"] = dec.z;
    j["used"] = dec.used_count;
    j["diagonals"] = dec.diagonals;
    j["skipped"] = std::vector<std::size_t>(dec.skipped.begin(), dec.skipped.end());
    Json zones = Json::object();
    for (const auto& [zone, count] : zone_census(dec)) zones[std::to_string(zone)] = count;
    j["zones"] = zones;
    return j;
}

Normalization normalization_of(const std::string& name) {
    return name == "balanced" ? Normalization::Balanced : Normalization::Unbalanced;
}

std::vector<Crossing> parse_crossings(const std::string& text) {
    // "i:j,i:j,..."
    std::vector<Crossing> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const std::size_t colon = item.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument(item);
            out.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
        } catch (const std::exception&) {
            throw UsageError("crossings are written i:j,i:j,... ; got '" + text + "'");
        }
    }
    return out;
}

void emit_shift(const GradingShift& shift, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << Json{{"shift", shift.to_string()}, {"t", shift.t}, {"q", shift.q}, {"a", shift.a}}.dump(2) << '\n';
    } else {
        out << shift.to_string() << '\n';
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colored Khovanov-Rozansky bookkeeping for positive braids"};
    app.require_subcommand(1);

    unsigned jobs = 1;
    std::string cap_text;
    // Each subcommand keeps its own format so the defaults do not collide.
    std::map<const CLI::App*, std::string> formats;
    auto add_format = [&](CLI::App* sub, const std::string& fallback) {
        formats[sub] = fallback;
        sub->add_option("--format", formats[sub], "Output format (json, tsv or text)")
            ->check(CLI::IsMember({"json", "tsv", "text"}));
    };

    std::string path;
    auto* diagonals = app.add_subcommand("diagonals", "Greedy diagonal decomposition of a braid");
    diagonals->add_option("braid", path, "Braid file")->required();
    add_format(diagonals, "json");

    bool patterns = false;
    auto* census = app.add_subcommand("census", "Object count and Poincare polynomial of the expanded complex");
    census->add_option("braid", path, "Braid file")->required();
    census->add_flag("--patterns", patterns, "Also list resolutions of non-diagonal crossings by zone pattern");
    census->add_option("--cap", cap_text, "Resolution cap (default 2^20 or $KRTL_CAP)");
    add_format(census, "text");

    std::string method = "dp";
    auto* bound = app.add_subcommand("bound", "Homological-order lower bounds for one partial braid");
    bound->add_option("braid", path, "Braid file")->required();
    bound->add_option("--method", method, "cone_bound algorithm")->check(CLI::IsMember({"dp", "enumerate"}));
    add_format(bound, "json");

    std::string lengths_text;
    auto* cauchy = app.add_subcommand("cauchy", "Bounds along partial braids of an infinite spec");
    cauchy->add_option("spec", path, "Spec file (with tail=)")->required();
    cauchy->add_option("--lengths", lengths_text, "Comma-separated partial braid lengths")->required();
    add_format(cauchy, "json");

    auto* shift = app.add_subcommand("shift", "Grading shift of a local move");
    shift->require_subcommand(1);
    shift->fallthrough();
    add_format(shift, "text");
    int si = 0, sj = 0, sk = 0, sl = 0;
    bool t2 = false;
    auto* fork_slide = shift->add_subcommand("fork-slide", "Fork slide (T1, or T2 with --t2)");
    fork_slide->add_option("i", si)->required();
    fork_slide->add_option("j", sj)->required();
    fork_slide->add_option("k", sk)->required();
    fork_slide->add_flag("--t2", t2, "T2-type slide (identity shift)");
    std::string variant;
    auto* fork_twist = shift->add_subcommand("fork-twist", "Fork twist");
    fork_twist->add_option("i", si)->required();
    fork_twist->add_option("j", sj)->required();
    fork_twist->add_option("variant", variant)->required()->check(CLI::IsMember({"T3", "T4"}));
    auto* ladder_slide = shift->add_subcommand("ladder-slide", "Ladder slide");
    ladder_slide->add_option("i", si)->required();
    ladder_slide->add_option("j", sj)->required();
    ladder_slide->add_option("k", sk)->required();
    ladder_slide->add_option("l", sl)->required();
    auto* ladder_twist = shift->add_subcommand("ladder-twist", "Ladder twist (closed formula)");
    ladder_twist->add_option("i", si)->required();
    ladder_twist->add_option("j", sj)->required();
    ladder_twist->add_option("k", sk)->required();
    auto* ladder_proof = shift->add_subcommand("ladder-twist-proof", "Ladder twist as four fork moves");
    ladder_proof->add_option("i", si)->required();
    ladder_proof->add_option("j", sj)->required();
    ladder_proof->add_option("k", sk)->required();
    std::string move;
    std::string level_text = "inf";
    auto* reidemeister = shift->add_subcommand("reidemeister", "Reidemeister move shift");
    reidemeister->add_option("move", move)->required()->check(CLI::IsMember({"R1pos", "R1neg", "R2"}));
    reidemeister->add_option("i", si)->required();
    reidemeister->add_option("N", level_text, "Level (integer or inf)");
    auto* crossing = shift->add_subcommand("crossing-min", "Minimum color of a crossing");
    crossing->add_option("i", si)->required();
    crossing->add_option("j", sj)->required();
    std::string before_text, after_text;
    auto* isotopy = shift->add_subcommand("isotopy", "Homological shift alpha of an isotopy");
    isotopy->add_option("--before", before_text, "Crossings before, i:j,...")->required();
    isotopy->add_option("--after", after_text, "Crossings after, i:j,...")->required();

    std::string web_text;
    std::string norm_name = "unbalanced";
    auto* eval_web = app.add_subcommand("eval-web", "Evaluate a closed annular ladder web");
    eval_web->add_option("web", web_text, "Web text or a file holding it")->required();
    eval_web->add_option("--normalization", norm_name)->check(CLI::IsMember({"unbalanced", "balanced"}));
    add_format(eval_web, "text");

    bool jones = false;
    std::string bracket_norm = "balanced";
    auto* bracket = app.add_subcommand("bracket", "sl2 bracket of a braid closure (m=1, N=2)");
    bracket->add_option("braid", path, "Braid file")->required();
    bracket->add_option("--normalization", bracket_norm)->check(CLI::IsMember({"unbalanced", "balanced"}));
    bracket->add_flag("--jones", jones, "Print the t = -1 specialization instead");
    bracket->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(bracket, "text");

    auto* homfly = app.add_subcommand("homfly", "HOMFLY-PT polynomial of a braid closure");
    homfly->add_option("braid", path, "Braid file")->required();
    add_format(homfly, "text");

    int sn = 1;
    long long sy = 0;
    long long qmin = -8;
    auto* stable = app.add_subcommand("stable", "Truncated stable algebra table");
    stable->add_option("--n", sn)->required()->check(CLI::PositiveNumber);
    stable->add_option("--y", sy)->required()->check(CLI::NonNegativeNumber);
    stable->add_option("--qmin", qmin)->required();
    add_format(stable, "tsv");

    auto* report = app.add_subcommand("report", "Low-degree identification of HHH with the stable algebra");
    report->add_option("braid", path, "Braid file")->required();
    report->add_option("--qmin", qmin, "Lowest q-degree in the table");
    add_format(report, "text");

    std::string k_text;
    int horizon = 40;
    auto* stability = app.add_subcommand("stability", "Stabilization of torus-link HOMFLY-PT polynomials");
    stability->add_option("--n", sn)->required()->check(CLI::PositiveNumber);
    stability->add_option("--k", k_text, "Comma-separated twist counts")->required();
    stability->add_option("--horizon", horizon, "q-degrees compared")->check(CLI::PositiveNumber);
    add_format(stability, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    std::string format = "text";
    for (const auto& [sub, chosen] : formats) {
        if (sub->parsed()) format = chosen;
    }

    try {
        if (*diagonals) {
            const ColoredBraid braid = load_braid(path, err);
            const DiagonalDecomposition dec = find_diagonals(braid);
            const Json j = decomposition_json(dec);
            if (format == "json") {
                out << j.dump(2) << '\n';
            } else {
                out << "y=" << dec.y << " z=" << dec.z << " used=" << dec.used_count << '\n';
                for (const auto& d : dec.diagonals) {
                    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << d[i];
                    out << '\n';
                }
            }
        } else if (*census) {
            const ColoredBraid braid = load_braid(path, err);
            braid.validate();
            Json j;
            j["objects"] = census_object_count(braid).str();
            j["poincare"] = census_poincare(braid).to_string();
            if (patterns) {
                Integer cap = default_resolution_cap();
                if (!cap_text.empty()) {
                    try {
                        cap = Integer(cap_text);
                    } catch (const std::exception&) {
                        throw UsageError("--cap must be a positive integer");
                    }
                    if (cap <= 0) throw UsageError("--cap must be a positive integer");
                }
                const DiagonalDecomposition dec = find_diagonals(braid);
                Json rows = Json::array();
                for (const auto& [pattern, count] : resolve_nondiagonals(braid, dec, cap)) {
                    rows.push_back({{"nonempty", pattern}, {"count", count.str()}});
                }
                j["patterns"] = rows;
            }
            if (format == "json") {
                out << j.dump(2) << '\n';
            } else {
                out << "objects: " << j["objects"].get<std::string>() << '\n';
                out << "poincare: " << j["poincare"].get<std::string>() << '\n';
                if (patterns) {
                    for (const auto& row : j["patterns"]) out << "pattern " << row["nonempty"].dump() << ": " << row["count"].get<std::string>() << '\n';
                }
            }
        } else if (*bound) {
            const ColoredBraid braid = load_braid(path, err);
            braid.validate();
            const DiagonalDecomposition dec = find_diagonals(braid);
            Json j;
            j["length"] = braid.word.size();
            j["y"] = dec.y;
            j["z"] = dec.z;
            if (method == "enumerate" && braid.m != 1) {
                const auto cands = candidate_zones(braid, dec);
                j["bound_F"] = dec.z == 0 ? Json(0) : bound_json(cone_bound_enumerate(braid.n, dec.used_count, cands));
            } else {
                j["bound_F"] = bound_json(bound_F(braid, dec).bound);
            }
            j["bound_g"] = braid.word.empty() ? Json("inf") : bound_json(bound_g(braid, dec).bound);
            j["no_full_twist_target"] = bound_F(braid, dec).no_full_twist_target;
            if (format == "json") {
                out << j.dump(2) << '\n';
            } else {
                for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
            }
        } else if (*cauchy) {
            BraidFile file = load(path, err);
            if (!file.spec) throw Error("cauchy needs a spec file with a tail= line");
            const CauchyReport rep = cauchy_report(*file.spec, parse_list(lengths_text));
            Json rows = Json::array();
            for (const BoundReport& r : rep.rows) {
                rows.push_back({{"length", r.length}, {"y", r.y}, {"z", r.z}, {"bound_F", bound_json(r.bound_F)},
                                {"bound_g", bound_json(r.bound_g)}, {"no_full_twist_target", r.no_full_twist_target}});
            }
            Json j{{"rows", rows}, {"y_nondecreasing", rep.y_nondecreasing}, {"y_grows", rep.y_grows}};
            if (format == "json") {
                out << j.dump(2) << '\n';
            } else {
                for (const auto& row : rows) out << row.dump() << '\n';
            }
        } else if (*shift) {
            if (*fork_slide) {
                emit_shift(fork_slide_shift(si, sj, sk, t2 ? ForkSlide::T2 : ForkSlide::T1), format, out);
            } else if (*fork_twist) {
                emit_shift(fork_twist_shift(si, sj, variant == "T3" ? ForkTwist::T3 : ForkTwist::T4), format, out);
            } else if (*ladder_slide) {
                emit_shift(ladder_slide_shift(si, sj, sk, sl), format, out);
            } else if (*ladder_twist) {
                emit_shift(ladder_twist_shift(si, sj, sk), format, out);
            } else if (*ladder_proof) {
                emit_shift(ladder_twist_proof_composition(si, sj, sk), format, out);
            } else if (*reidemeister) {
                Level level;
                if (level_text != "inf") {
                    try {
                        level = std::stoi(level_text);
                    } catch (const std::exception&) {
                        throw UsageError("N must be an integer or inf");
                    }
                }
                const ReidemeisterMove mv = move == "R2"      ? ReidemeisterMove::R2
                                            : move == "R1pos" ? ReidemeisterMove::R1pos
                                                              : ReidemeisterMove::R1neg;
                emit_shift(reidemeister_shift(mv, si, level), format, out);
            } else if (*crossing) {
                const int v = crossing_min(si, sj);
                if (format == "json") {
                    out << Json{{"min", v}}.dump(2) << '\n';
                } else {
                    out << v << '\n';
                }
            } else if (*isotopy) {
                const long long alpha = isotopy_alpha(parse_crossings(before_text), parse_crossings(after_text));
                if (format == "json") {
                    out << Json{{"alpha", alpha}}.dump(2) << '\n';
                } else {
                    out << alpha << '\n';
                }
            }
        } else if (*eval_web) {
            std::string text = web_text;
            if (text.find('=') == std::string::npos) text = read_file(web_text);
            const ParsedWeb parsed = parse_annular_web(text);
            const LaurentPoly value = eval_closed_web(parsed.web, parsed.N, normalization_of(norm_name));
            if (format == "json") {
                out << Json{{"web", format_annular_web(parsed.web, parsed.N)}, {"value", value.to_string()}}.dump(2) << '\n';
            } else {
                out << value.to_string() << '\n';
            }
        } else if (*bracket) {
            const ColoredBraid braid = load_braid(path, err);
            LaurentPoly value = sl2_bracket(braid, normalization_of(bracket_norm), jobs);
            if (jones) value = value.specialize('t', -1);
            if (format == "json") {
                out << Json{{"bracket", value.to_string()}}.dump(2) << '\n';
            } else {
                out << value.to_string() << '\n';
            }
        } else if (*homfly) {
            const ColoredBraid braid = load_braid(path, err);
            const AzPoly value = homfly_polynomial(braid);
            if (format == "json") {
                out << Json{{"homfly", value.to_string()}}.dump(2) << '\n';
            } else {
                out << value.to_string() << '\n';
            }
        } else if (*stable) {
            const TrigradedTable table = an_truncated_dims(sn, sy, qmin);
            if (format == "json") {
                Json rows = Json::array();
                for (const auto& [deg, dim] : table.dims) {
                    rows.push_back({{"t", deg.t}, {"q", deg.q}, {"a", deg.a}, {"dim", dim.str()}});
                }
                out << Json{{"n", sn}, {"y", sy}, {"qmin", qmin}, {"rows", rows}}.dump(2) << '\n';
            } else {
                out << table.to_tsv();
            }
        } else if (*report) {
            const ColoredBraid braid = load_braid(path, err);
            const LinkEstimateReport rep = link_estimate_report(braid, qmin);
            if (format == "json") {
                Json rows = Json::array();
                for (const auto& [deg, dim] : rep.table.dims) {
                    rows.push_back({{"t", deg.t}, {"q", deg.q}, {"a", deg.a}, {"dim", dim.str()}});
                }
                out << Json{{"y", rep.y}, {"statement", rep.statement}, {"rows", rows}}.dump(2) << '\n';
            } else {
                out << rep.statement << '\n' << rep.table.to_tsv();
            }
        } else if (*stability) {
            std::vector<int> ks;
            for (std::size_t k : parse_list(k_text)) ks.push_back(static_cast<int>(k));
            const StabilityReport rep = stability_check(sn, ks, horizon);
            if (format == "json") {
                Json polys = Json::array();
                for (const AzPoly& p : rep.polynomials) polys.push_back(p.to_string());
                out << Json{{"n", rep.n}, {"k", rep.ks}, {"horizon", rep.horizon}, {"homfly", polys},
                            {"agreement", rep.agreement}, {"nondecreasing", rep.nondecreasing}}
                           .dump(2)
                    << '\n';
            } else {
                for (std::size_t i = 0; i < rep.ks.size(); ++i) {
                    out << "k=" << rep.ks[i] << ": " << rep.polynomials[i].to_string() << '\n';
                }
                for (std::size_t i = 0; i < rep.agreement.size(); ++i) {
                    out << "agree(" << rep.ks[i] << "," << rep.ks[i + 1] << ") = " << rep.agreement[i] << '\n';
                }
                out << (rep.nondecreasing ? "nondecreasing" : "NOT nondecreasing") << '\n';
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace krtl::cli
