#include "support.hpp"

#include <optional>
#include <stdexcept>

#include "pipedream/maximal.hpp"

using namespace pipedream;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

// Brute force: climbs from invcode to rajcode one unit at a time, always on
// the last coordinate that can still grow.
std::vector<WeakComposition> ir_by_search(const WeakComposition& from, const WeakComposition& to) {
    std::vector<WeakComposition> out{from};
    WeakComposition m = from;
    const std::size_t len = std::max(from.length(), to.length());
    while (m != to) {
        std::size_t p = len;
        while (m[p] >= to[p]) --p;
        m.increment(p);
        out.push_back(m);
    }
    return out;
}

}  // namespace

TEST_CASE("maximal pipedream of 14523") {
    const MaximalResult r = max_pipedream(P("14523"));
    CHECK(r.pipedream.crosses() == Diagram{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
    CHECK(row_weight(r.pipedream.crosses()) == WeakComposition{2, 2, 2});
    CHECK(col_weight(r.pipedream.crosses()) == WeakComposition{2, 2, 2});

    REQUIRE(r.trace.steps.size() == 6);
    CHECK(r.trace.steps[0].bar == 3);
    CHECK(r.trace.steps[0].column == 1);
    CHECK(r.trace.steps[3].moves.empty());
    const AlgorithmStep& s = r.trace.steps[4];
    CHECK(s.bar == 1);
    CHECK(s.column == 2);
    CHECK(s.moves == std::vector<Move>{{2, 1, MoveKind::regular}, {3, 2, MoveKind::k_ladder}});
    CHECK(r.trace.steps[5].moves == std::vector<Move>{{2, 1, MoveKind::k_ladder}});

    const auto weights = k_move_weights(r.trace);
    CHECK(weights == std::vector<WeakComposition>{{1, 2, 2}, {2, 2, 2}});
}

TEST_CASE("maximal pipedream of the worked example") {
    const Permutation w = P("4617352");
    const Diagram p = max_pipedream(w).pipedream.crosses();
    CHECK(row_weight(p) == WeakComposition{4, 4, 2, 3, 1, 1});
    CHECK(col_weight(p) == WeakComposition{4, 5, 3, 1, 2});
    CHECK(permutation_of(Pipedream(7, p)) == w);
}

TEST_CASE("trivial sizes") {
    for (int n = 1; n <= 2; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            const MaximalResult r = max_pipedream(w);
            CHECK(r.trace.steps.empty());
            CHECK(r.trace.k_events.empty());
            CHECK(r.pipedream == bottom_pipedream(w));
        }
    }
    CHECK(max_pipedream(Permutation::identity(6)).pipedream.crosses().empty());
}

TEST_CASE("trace structure, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            const MaximalResult r = max_pipedream(w);
            REQUIRE(r.trace.steps.size() == static_cast<std::size_t>(n < 2 ? 0 : (n - 1) * (n - 2) / 2));
            std::size_t k_moves = 0;
            for (const AlgorithmStep& step : r.trace.steps) {
                for (std::size_t m = 0; m + 1 < step.moves.size(); ++m) {
                    REQUIRE(step.moves[m].kind == MoveKind::regular);
                }
                if (!step.moves.empty()) {
                    REQUIRE(step.moves.back().kind == MoveKind::k_ladder);
                    ++k_moves;
                }
            }
            REQUIRE(r.trace.k_events.size() == k_moves);
            REQUIRE(static_cast<int>(k_moves) == reg(w));
            REQUIRE(permutation_of(r.pipedream) == w);
        }
    }
}

TEST_CASE("the last iteration starts from the shifted maximal pipedream of the tail, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            auto [a, u] = decompose(w);
            std::optional<Diagram> before;
            max_pipedream(w, [&](const StepView& view) {
                if (view.bar == 1 && !before) before = view.before;
            });
            Diagram expected = shift_down(max_pipedream(u).pipedream.crosses(), 1);
            for (int c = 1; c <= a; ++c) expected.insert({1, c});
            if (n == 2) {
                CHECK_FALSE(before.has_value());
                continue;
            }
            REQUIRE(before.has_value());
            REQUIRE(*before == expected);
        }
    }
}

TEST_CASE("last iteration column counts") {
    CHECK(last_iteration_column_counts(P("4617352")) == WeakComposition{0, 0, 0, 2, 0});
    CHECK(last_iteration_column_counts(P("14523")) == movecode(P("3412")));
    CHECK(last_iteration_column_counts(P("21")).is_zero());
    CHECK_THROWS_AS(last_iteration_column_counts(Permutation::identity(1)), std::invalid_argument);
}

TEST_CASE("IR sequences") {
    CHECK(ir_sequence(P("516342")) ==
          std::vector<WeakComposition>{{4, 0, 3, 1, 1}, {4, 1, 3, 1, 1}, {4, 2, 3, 1, 1}});
    CHECK(ir_sequence(P("4617352")) == std::vector<WeakComposition>{{3, 4, 0, 3, 1, 1},
                                                                    {3, 4, 1, 3, 1, 1},
                                                                    {3, 4, 2, 3, 1, 1},
                                                                    {4, 4, 2, 3, 1, 1}});
    CHECK(ir_sequence(Permutation::identity(3)) == std::vector<WeakComposition>{{}});

    for (int n = 1; n <= 7; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            const auto ir = ir_sequence(w);
            REQUIRE(ir == ir_by_search(invcode(w), rajcode(w)));
            REQUIRE(ir_recursive(w) == ir);
            REQUIRE(ir.size() == static_cast<std::size_t>(reg(w)) + 1);
        }
    }
}

TEST_CASE("K-move weights follow the IR sequence, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            const auto weights = k_move_weights(max_pipedream(w).trace);
            const auto ir = ir_sequence(w);
            REQUIRE(weights.size() + 1 == ir.size());
            for (std::size_t k = 0; k < weights.size(); ++k) REQUIRE(weights[k] == ir[k + 1]);
        }
    }
}
