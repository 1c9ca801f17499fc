#include "support.hpp"

#include <cstdint>
#include <cstdlib>

#include "pipedream/errors.hpp"
#include "pipedream/oracle.hpp"

using namespace pipedream;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("pipe tracing on small pictures") {
    CHECK(trace_pipes(Pipedream(1, {})) == Permutation::identity(1));
    CHECK(trace_pipes(Pipedream(4, {})) == Permutation::identity(4));
    CHECK(trace_pipes(Pipedream(2, {{1, 1}})) == P("21"));
    CHECK(trace_pipes(Pipedream(3, {{1, 1}, {1, 2}, {2, 1}})) == P("321"));
    CHECK(trace_pipes(Pipedream(3, {{1, 2}, {2, 1}})) == P("132"));
}

TEST_CASE("pipe tracing agrees with the Demazure reading, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const std::vector<Cell> cells = staircase_cells(n);
        for (std::uint32_t mask = 0; mask < (1U << cells.size()); ++mask) {
            Diagram d;
            for (std::size_t b = 0; b < cells.size(); ++b) {
                if (mask >> b & 1U) d.insert(cells[b]);
            }
            const Pipedream p(n, d);
            REQUIRE(trace_pipes(p) == permutation_of(p));
        }
    }
}

TEST_CASE("subset oracle") {
    CHECK(subset_oracle(P("132")).size() == 3);
    CHECK(subset_oracle(P("321")).size() == 1);
    CHECK(subset_oracle(Permutation::identity(3)) == std::set<Pipedream>{Pipedream(3, {})});
    std::size_t total = 0;
    for (const Permutation& w : all_permutations(4)) {
        REQUIRE(subset_oracle(w) == enumerate_pd(w));
        total += subset_oracle(w).size();
    }
    CHECK(total == 64);

    unsetenv("PIPEDREAM_MAX_N");
    CHECK_THROWS_AS(subset_oracle(Permutation::identity(6)), GuardExceeded);
    setenv("PIPEDREAM_MAX_N", "6", 1);
    CHECK(subset_oracle(Permutation::identity(6)).size() == 1);
    unsetenv("PIPEDREAM_MAX_N");
}

TEST_CASE("ladder closure equals the subset oracle on S5") {
    for (const Permutation& w : all_permutations(5)) REQUIRE(enumerate_pd(w) == subset_oracle(w));
}
