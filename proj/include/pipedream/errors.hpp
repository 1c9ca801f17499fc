#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pipedream {

/// Malformed permutation text. `position` is the 1-based index of the
/// offending entry (0 when the input as a whole is at fault).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A computation was refused because n exceeds its size guard.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(const std::string& what, int n, int limit)
        : std::runtime_error(what), n_(n), limit_(limit) {}

    int n() const noexcept { return n_; }
    int limit() const noexcept { return limit_; }

private:
    int n_;
    int limit_;
};

/// Guard limit for a computation whose built-in limit is `default_limit`.
/// The PIPEDREAM_MAX_N environment variable overrides every guard.
int guard_limit(int default_limit);

/// Throws GuardExceeded when n > guard_limit(default_limit).
void check_guard(const char* what, int n, int default_limit);

}  // namespace pipedream
