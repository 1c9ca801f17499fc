#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pipedream/composition.hpp"
#include "pipedream/diagram.hpp"
#include "pipedream/maximal.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/pipedream.hpp"
#include "pipedream/polynomial.hpp"
#include "pipedream/verify.hpp"

namespace pipedream {

struct Glyphs {
    std::string cell = "□";
    std::string empty = "·";
    std::string dark = "●";
    std::string snow = "*";

    static Glyphs ascii() { return {"#", ".", "@", "*"}; }
};

/// One text line per row 1..rows, glyphs separated by spaces. `dark_cells`
/// and `snow_cells` pick out cells drawn with the dark/snow glyph.
std::string render_grid(const Diagram& cells, int rows, int cols, const Glyphs& glyphs,
                        const Diagram& dark_cells = {}, const Diagram& snow_cells = {});

std::string render_rothe(const Permutation& w, const Glyphs& glyphs = {});
std::string render_snow(const Permutation& w, const Glyphs& glyphs = {});
std::string render_left_snow(const Permutation& w, const Glyphs& glyphs = {});

/// Staircase drawing: '+' for a cross, '.' for an elbow; row i has n-i tiles
/// (the closing elbow of each row is left implicit).
std::string render_pipedream(const Pipedream& p);
/// Same glyphs for a diagram that may leave the staircase; rows x cols box.
std::string render_crosses(const Diagram& d, int rows, int cols);

/// "bar=1 col=2 moves=[(2→1,R),(3→2,K)]"
std::string format_step(const AlgorithmStep& step);
/// "x^(3,4,0,3,1,1)"
std::string format_monomial_exponent(const WeakComposition& exponent);

nlohmann::json to_json(const WeakComposition& c);
nlohmann::json to_json(const Permutation& w);
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const AlgorithmStep& step);
nlohmann::json to_json(const AlgorithmTrace& trace);
/// [[xexp, yexp, coeff], ...]; coefficients outside int64 become strings.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const VerificationReport& report, bool with_timing = false);

/// The statistics record of w: one_line, invcode, rajcode, rajcode_inv,
/// movecode, reg, ir, max_pipedream, k_weights.
nlohmann::json stats_json(const Permutation& w);

}  // namespace pipedream
