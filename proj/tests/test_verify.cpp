#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pipedream/errors.hpp"
#include "pipedream/render.hpp"
#include "pipedream/verify.hpp"

using namespace pipedream;

TEST_CASE("claim registry") {
    const auto& ids = claim_ids();
    CHECK(ids.size() == 18);
    CHECK(ids.front() == "thm1.1");
    CHECK(is_claim_id("uniqueness"));
    CHECK(is_claim_id("ir-degree"));
    CHECK_FALSE(is_claim_id("thm9.9"));
    CHECK(claim_default_limit("thm1.1") == 5);
    CHECK(claim_default_limit("uniqueness") == 6);
    CHECK(claim_default_limit("thm1.2") == 7);
    CHECK_THROWS_AS(run_claim("nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(claim_default_limit("nope"), std::invalid_argument);
    std::vector<std::string> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("guards") {
    unsetenv("PIPEDREAM_MAX_N");
    CHECK_THROWS_AS(run_claim("thm1.1", 6), GuardExceeded);
    CHECK_THROWS_AS(verify(6, {}), GuardExceeded);
    CHECK_THROWS_AS(verify(8, {"thm1.2"}), GuardExceeded);
    setenv("PIPEDREAM_MAX_N", "3", 1);
    CHECK(guard_limit(7) == 3);
    CHECK_THROWS_AS(run_claim("thm1.2", 4), GuardExceeded);
    unsetenv("PIPEDREAM_MAX_N");
    CHECK(guard_limit(7) == 7);
}

TEST_CASE("every claim holds for small n") {
    for (int n = 1; n <= 4; ++n) {
        const VerificationReport report = verify(n, {});
        CHECK(report.n == n);
        CHECK(report.checks.size() == claim_ids().size());
        for (const CheckResult& c : report.checks) {
            INFO(c.claim, " n=", n);
            CHECK(c.passed());
            CHECK(c.population == static_cast<std::size_t>(n == 4 ? 24 : n == 3 ? 6 : n));
        }
        CHECK(report.passed());
    }
}

TEST_CASE("selected claims and progress output") {
    std::ostringstream progress;
    const VerificationReport report = verify(5, {"thm1.2", "prop4.4"}, &progress);
    REQUIRE(report.checks.size() == 2);
    CHECK(report.checks[0].claim == "thm1.2");
    CHECK(report.checks[0].population == 120);
    CHECK(report.passed());
    CHECK(progress.str().find("thm1.2") != std::string::npos);
}

TEST_CASE("report JSON") {
    const VerificationReport report = verify(3, {"thm1.4"});
    const nlohmann::json j = to_json(report, false);
    CHECK(j["n"] == 3);
    CHECK(j["passed"] == true);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["claim"] == "thm1.4");
    CHECK(j["checks"][0]["population"] == 6);
    CHECK(j["checks"][0]["failures"].empty());
    CHECK_FALSE(j["checks"][0].contains("elapsed_ms"));
    CHECK(to_json(report, true)["checks"][0].contains("elapsed_ms"));
}
