#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pipedream/permutation.hpp"

namespace pipedream {

struct CheckResult {
    std::string claim;
    std::size_t population = 0;
    std::vector<Permutation> failures;  // sorted by one-line notation
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failures.empty(); }
};

struct VerificationReport {
    int n = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Stable claim ids in run order.
const std::vector<std::string>& claim_ids();
bool is_claim_id(std::string_view id);

/// Largest n a claim accepts by default (PIPEDREAM_MAX_N overrides).
int claim_default_limit(std::string_view id);

/// Runs one claim over all of S_n. Throws std::invalid_argument for an unknown
/// id and GuardExceeded when n is over the claim's limit.
CheckResult run_claim(std::string_view id, int n);

/// Runs each claim in turn; progress lines go to `progress` when given.
/// An empty claim list means every claim.
VerificationReport verify(int n, const std::vector<std::string>& claims,
                          std::ostream* progress = nullptr);

}  // namespace pipedream
