#include "pipedream/render.hpp"

#include <limits>

#include "pipedream/diagram.hpp"

namespace pipedream {

std::string render_grid(const Diagram& cells, int rows, int cols, const Glyphs& glyphs,
                        const Diagram& dark_cells, const Diagram& snow_cells) {
    std::string out;
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            if (c > 1) out += ' ';
            if (dark_cells.contains(r, c)) {
                out += glyphs.dark;
            } else if (snow_cells.contains(r, c)) {
                out += glyphs.snow;
            } else if (cells.contains(r, c)) {
                out += glyphs.cell;
            } else {
                out += glyphs.empty;
            }
        }
        out += '\n';
    }
    return out;
}

namespace {

Diagram difference(const Diagram& a, const Diagram& b) {
    Diagram out;
    for (Cell c : a) {
        if (!b.contains(c)) out.insert(c);
    }
    return out;
}

}  // namespace

std::string render_rothe(const Permutation& w, const Glyphs& glyphs) {
    const Diagram d = rothe(w);
    return render_grid(d, w.size(), w.size(), glyphs, dark(d));
}

std::string render_snow(const Permutation& w, const Glyphs& glyphs) {
    const Diagram d = rothe(w);
    const Diagram snow = snow_diagram(w);
    return render_grid(snow, w.size(), w.size(), glyphs, dark(d), difference(snow, d));
}

std::string render_left_snow(const Permutation& w, const Glyphs& glyphs) {
    const Diagram d = rothe(w);
    const Diagram snow = left_snow_diagram(w);
    return render_grid(snow, w.size(), w.size(), glyphs, dark(d), difference(snow, d));
}

std::string render_pipedream(const Pipedream& p) {
    std::string out;
    const int n = p.size();
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n - i; ++j) {
            if (j > 1) out += ' ';
            out += p.crosses().contains(i, j) ? '+' : '.';
        }
        out += '\n';
    }
    return out;
}

std::string render_crosses(const Diagram& d, int rows, int cols) {
    return render_grid(d, rows, cols, Glyphs{"+", ".", "+", "+"});
}

std::string format_step(const AlgorithmStep& step) {
    std::string s = "bar=" + std::to_string(step.bar) + " col=" + std::to_string(step.column) + " moves=[";
    for (std::size_t k = 0; k < step.moves.size(); ++k) {
        const Move& m = step.moves[k];
        if (k) s += ',';
        s += "(" + std::to_string(m.source_row) + "→" + std::to_string(m.dest_row) + "," + to_string(m.kind) + ")";
    }
    return s + "]";
}

std::string format_monomial_exponent(const WeakComposition& exponent) { return "x^" + exponent.to_string(); }

nlohmann::json to_json(const WeakComposition& c) { return c.entries(); }

nlohmann::json to_json(const Permutation& w) { return w.one_line(); }

nlohmann::json to_json(const Diagram& d) {
    nlohmann::json cells = nlohmann::json::array();
    for (Cell c : d) cells.push_back({c.row, c.col});
    return cells;
}

nlohmann::json to_json(const AlgorithmStep& step) {
    nlohmann::json moves = nlohmann::json::array();
    for (const Move& m : step.moves) {
        moves.push_back({{"from_row", m.source_row}, {"to_row", m.dest_row}, {"kind", to_string(m.kind)}});
    }
    return {{"bar", step.bar}, {"col", step.column}, {"moves", moves}};
}

nlohmann::json to_json(const AlgorithmTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const AlgorithmStep& s : trace.steps) steps.push_back(to_json(s));
    nlohmann::json events = nlohmann::json::array();
    for (const KEvent& e : trace.k_events) {
        events.push_back({{"step", e.step_index}, {"row_weight", to_json(e.row_weight)}});
    }
    return {{"steps", steps}, {"k_events", events}, {"last_iteration_counts", to_json(trace.per_column_counts)}};
}

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json coeff;
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
            coeff = c.convert_to<std::int64_t>();
        } else {
            coeff = c.str();
        }
        terms.push_back({to_json(m.xexp), to_json(m.yexp), coeff});
    }
    return terms;
}

nlohmann::json to_json(const VerificationReport& report, bool with_timing) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& r : report.checks) {
        nlohmann::json failures = nlohmann::json::array();
        for (const Permutation& w : r.failures) failures.push_back(to_json(w));
        nlohmann::json entry{{"claim", r.claim},
                             {"population", r.population},
                             {"passed", r.passed()},
                             {"failures", failures}};
        if (with_timing) entry["elapsed_ms"] = r.elapsed.count();
        checks.push_back(std::move(entry));
    }
    return {{"n", report.n}, {"passed", report.passed()}, {"checks", checks}};
}

nlohmann::json stats_json(const Permutation& w) {
    const MaximalResult hat = max_pipedream(w);
    nlohmann::json ir = nlohmann::json::array();
    for (const WeakComposition& m : ir_sequence(w)) ir.push_back(to_json(m));
    nlohmann::json k_weights = nlohmann::json::array();
    for (const WeakComposition& a : k_move_weights(hat.trace)) k_weights.push_back(to_json(a));
    return {
        {"one_line", to_json(w)},
        {"invcode", to_json(invcode(w))},
        {"rajcode", to_json(rajcode(w))},
        {"rajcode_inv", to_json(rajcode_inv(w))},
        {"movecode", to_json(movecode(w))},
        {"reg", reg(w)},
        {"ir", ir},
        {"max_pipedream", to_json(hat.pipedream.crosses())},
        {"k_weights", k_weights},
    };
}

}  // namespace pipedream
