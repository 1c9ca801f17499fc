#include "pipedream/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace pipedream {

int guard_limit(int default_limit) {
    const char* env = std::getenv("PIPEDREAM_MAX_N");
    if (env == nullptr || *env == '\0') return default_limit;
    int value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) return default_limit;
    return value;
}

void check_guard(const char* what, int n, int default_limit) {
    int limit = guard_limit(default_limit);
    if (n > limit) {
        throw GuardExceeded(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds the limit " + std::to_string(limit) +
                                " (set PIPEDREAM_MAX_N to override)",
                            n, limit);
    }
}

}  // namespace pipedream
