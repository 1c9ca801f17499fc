#include "pipedream/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pipedream/diagram.hpp"
#include "pipedream/errors.hpp"
#include "pipedream/grothendieck.hpp"
#include "pipedream/maximal.hpp"
#include "pipedream/pipedream.hpp"
#include "pipedream/render.hpp"
#include "pipedream/verify.hpp"

namespace pipedream {

namespace {

std::string join_compositions(const std::vector<WeakComposition>& list, bool as_monomials) {
    std::string s;
    for (std::size_t k = 0; k < list.size(); ++k) {
        if (k) s += ' ';
        s += as_monomials ? format_monomial_exponent(list[k]) : list[k].to_string();
    }
    return s;
}

int cmd_stats(const Permutation& w, bool json, std::ostream& out) {
    if (json) {
        out << stats_json(w).dump() << '\n';
        return exit_ok;
    }
    out << "one_line: " << w.to_string() << '\n'
        << "invcode: " << invcode(w).to_string() << '\n'
        << "rajcode: " << rajcode(w).to_string() << '\n'
        << "rajcode_inv: " << rajcode_inv(w).to_string() << '\n'
        << "movecode: " << movecode(w).to_string() << '\n'
        << "reg: " << reg(w) << '\n'
        << "ir: " << join_compositions(ir_sequence(w), true) << '\n';
    return exit_ok;
}

int cmd_maximal(const Permutation& w, bool trace, bool json, std::ostream& out) {
    const int n = w.size();
    std::ostringstream storyboard;
    if (trace && !json) {
        storyboard << "start:\n" << render_pipedream(bottom_pipedream(w));
    }
    const MaximalResult result = max_pipedream(w, [&](const StepView& s) {
        if (!trace || json) return;
        storyboard << format_step({s.bar, s.column, s.result.moves}) << '\n';
        if (!s.result.moves.empty()) {
            storyboard << "before:\n"
                       << render_pipedream(Pipedream(n, s.before)) << "after:\n"
                       << render_pipedream(Pipedream(n, s.result.diagram));
        }
    });
    const Diagram& hat = result.pipedream.crosses();
    if (json) {
        nlohmann::json record = stats_json(w);
        record["row_weight"] = to_json(row_weight(hat));
        record["col_weight"] = to_json(col_weight(hat));
        if (trace) record["trace"] = to_json(result.trace);
        out << record.dump() << '\n';
        return exit_ok;
    }
    out << storyboard.str();
    out << "permutation: " << w.to_string() << '\n'
        << "max_pipedream: " << to_string(hat) << '\n'
        << render_pipedream(result.pipedream) << "row_weight: " << row_weight(hat).to_string() << '\n'
        << "col_weight: " << col_weight(hat).to_string() << '\n'
        << "k_weights: " << join_compositions(k_move_weights(result.trace), false) << '\n';
    return exit_ok;
}

int cmd_enumerate(const Permutation& w, bool count, bool json, bool force, std::ostream& out) {
    const std::set<Pipedream> pds = enumerate_pd(w, force);
    if (count) {
        out << pds.size() << '\n';
    } else if (json) {
        nlohmann::json list = nlohmann::json::array();
        for (const Pipedream& p : pds) list.push_back(to_json(p.crosses()));
        out << list.dump() << '\n';
    } else {
        for (const Pipedream& p : pds) out << to_string(p.crosses()) << '\n';
    }
    return exit_ok;
}

int cmd_poly(const Permutation& w, bool single, bool top, int degree, bool json, bool force,
             std::ostream& out) {
    Polynomial p = single ? grothendieck_single(w, force) : grothendieck_double(w, force);
    if (top) p = top_degree(p);
    if (degree >= 0) p = degree_component(p, degree);
    out << (json ? to_json(p).dump() : to_string(p)) << '\n';
    return exit_ok;
}

int cmd_ir(const Permutation& w, bool json, std::ostream& out) {
    const std::vector<WeakComposition> ir = ir_sequence(w);
    if (json) {
        nlohmann::json list = nlohmann::json::array();
        for (const WeakComposition& m : ir) list.push_back(to_json(m));
        out << list.dump() << '\n';
    } else {
        for (const WeakComposition& m : ir) out << format_monomial_exponent(m) << '\n';
    }
    return exit_ok;
}

struct RenderChoice {
    bool rothe = false;
    bool snow = false;
    bool left_snow = false;
    bool bottom = false;
    bool maximal = false;
    bool ascii = false;
};

int cmd_render(const Permutation& w, RenderChoice choice, std::ostream& out) {
    const Glyphs glyphs = choice.ascii ? Glyphs::ascii() : Glyphs{};
    std::vector<std::pair<std::string, std::string>> blocks;
    if (choice.rothe) blocks.emplace_back("rothe", render_rothe(w, glyphs));
    if (choice.snow) blocks.emplace_back("snow", render_snow(w, glyphs));
    if (choice.left_snow) blocks.emplace_back("left-snow", render_left_snow(w, glyphs));
    if (choice.bottom) blocks.emplace_back("bottom", render_pipedream(bottom_pipedream(w)));
    if (choice.maximal) blocks.emplace_back("maximal", render_pipedream(max_pipedream(w).pipedream));
    if (blocks.empty()) blocks.emplace_back("rothe", render_rothe(w, glyphs));
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks.size() > 1) out << (k ? "\n" : "") << blocks[k].first << ":\n";
        out << blocks[k].second;
    }
    return exit_ok;
}

int cmd_verify(int n, const std::vector<std::string>& claims, bool json, bool timing, std::ostream& out,
               std::ostream& err) {
    const VerificationReport report = verify(n, claims, &err);
    if (json) {
        out << to_json(report, timing).dump() << '\n';
    } else {
        out << "verify n=" << n << '\n';
        for (const CheckResult& r : report.checks) {
            out << r.claim << std::string(r.claim.size() < 12 ? 12 - r.claim.size() : 1, ' ')
                << "population=" << r.population << ' ' << (r.passed() ? "PASS" : "FAIL");
            if (timing) out << " (" << r.elapsed.count() << " ms)";
            if (!r.passed()) {
                out << " failures=" << r.failures.size() << ':';
                for (const Permutation& w : r.failures) out << ' ' << w.to_compact_string();
            }
            out << '\n';
        }
        std::size_t failed = 0;
        for (const CheckResult& r : report.checks) failed += r.passed() ? 0 : 1;
        if (failed == 0) {
            out << "all " << report.checks.size() << " checks passed\n";
        } else {
            out << failed << " of " << report.checks.size() << " checks failed\n";
        }
    }
    return report.passed() ? exit_ok : exit_counterexample;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximal pipedreams, permutation statistics and Grothendieck polynomials", "pipedream"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string perm_text;
    bool json = false;

    auto* stats = app.add_subcommand("stats", "invcode, rajcode, rajcode of the inverse, movecode, reg, IR");
    stats->add_option("perm", perm_text, "Permutation, e.g. 4617352 or 4,6,1,7,3,5,2")->required();
    stats->add_flag("--json", json, "Emit JSON");

    bool trace = false;
    auto* maximal = app.add_subcommand("maximal", "Construct the maximal pipedream by ladder moves");
    maximal->add_option("perm", perm_text, "Permutation")->required();
    maximal->add_flag("--trace", trace, "Print every L step with before/after diagrams");
    maximal->add_flag("--json", json, "Emit JSON");

    bool count = false;
    bool force = false;
    auto* enumerate = app.add_subcommand("enumerate", "List the pipedreams of a permutation");
    enumerate->add_option("perm", perm_text, "Permutation")->required();
    enumerate->add_flag("--count", count, "Print only the number of pipedreams");
    enumerate->add_flag("--json", json, "Emit JSON");
    enumerate->add_flag("--force", force, "Ignore the size guard");

    bool single = false;
    bool dbl = false;
    bool top = false;
    int degree = -1;
    auto* poly = app.add_subcommand("poly", "Expand a Grothendieck polynomial");
    poly->add_option("perm", perm_text, "Permutation")->required();
    auto* single_flag = poly->add_flag("--single", single, "Single Grothendieck polynomial");
    poly->add_flag("--double", dbl, "Double Grothendieck polynomial (default)")->excludes(single_flag);
    poly->add_flag("--top", top, "Top degree component only");
    poly->add_option("--degree", degree, "Degree component d")->check(CLI::NonNegativeNumber);
    poly->add_flag("--json", json, "Emit JSON");
    poly->add_flag("--force", force, "Ignore the size guard");

    auto* ir = app.add_subcommand("ir", "The IR monomial sequence");
    ir->add_option("perm", perm_text, "Permutation")->required();
    ir->add_flag("--json", json, "Emit JSON");

    RenderChoice choice;
    auto* render = app.add_subcommand("render", "ASCII diagrams");
    render->add_option("perm", perm_text, "Permutation")->required();
    render->add_flag("--rothe", choice.rothe, "Rothe diagram with dark clouds (default)");
    render->add_flag("--snow", choice.snow, "Snow diagram");
    render->add_flag("--left-snow", choice.left_snow, "Left snow diagram");
    render->add_flag("--bottom", choice.bottom, "Bottom pipedream");
    render->add_flag("--maximal", choice.maximal, "Maximal pipedream");
    render->add_flag("--ascii", choice.ascii, "Plain ASCII glyphs");

    int n = 0;
    std::vector<std::string> claims;
    bool timing = false;
    bool list = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check the theorems exhaustively on S_n");
    verify_cmd->add_option("--n", n, "Size of the symmetric group")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--claims", claims, "Comma-separated claim ids (default: all)")->delimiter(',');
    verify_cmd->add_flag("--json", json, "Emit JSON");
    verify_cmd->add_flag("--timing", timing, "Include elapsed times in the report");
    verify_cmd->add_flag("--list", list, "List claim ids and their default size limits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*verify_cmd) {
            if (list) {
                for (const std::string& id : claim_ids()) out << id << ' ' << claim_default_limit(id) << '\n';
                return exit_ok;
            }
            if (n < 1) {
                err << "verify: --n is required\n";
                return exit_usage;
            }
            return cmd_verify(n, claims, json, timing, out, err);
        }

        const Permutation w = parse_permutation(perm_text);
        if (*stats) return cmd_stats(w, json, out);
        if (*maximal) return cmd_maximal(w, trace, json, out);
        if (*enumerate) return cmd_enumerate(w, count, json, force, out);
        if (*poly) return cmd_poly(w, single, top, degree, json, force, out);
        if (*ir) return cmd_ir(w, json, out);
        if (*render) return cmd_render(w, choice, out);
    } catch (const pipedream::ParseError& e) {
        err << "bad permutation: " << e.what() << '\n';
        return exit_usage;
    } catch (const GuardExceeded& e) {
        err << e.what() << '\n';
        return exit_guard;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"pipedream"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pipedream
