#include "pipedream/oracle.hpp"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "pipedream/errors.hpp"

namespace pipedream {

Permutation trace_pipes(const Pipedream& p) {
    const int n = p.size();
    // top[j]: pipe entering the top edge of column j in the current row.
    std::vector<int> top(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) top[static_cast<std::size_t>(j)] = j;

    std::set<std::pair<int, int>> crossed;
    std::vector<int> exits(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int width = n + 1 - i;
        std::vector<int> below(static_cast<std::size_t>(width) + 1, 0);
        int from_right = 0;  // the rightmost tile has nothing entering from the right
        for (int j = width; j >= 1; --j) {
            const int down = top[static_cast<std::size_t>(j)];
            bool cross = j < width && p.crosses().contains(i, j);
            if (cross) {
                auto pair = std::minmax(down, from_right);
                cross = crossed.insert(pair).second;  // a repeat crossing is an elbow
            }
            if (cross) {
                below[static_cast<std::size_t>(j)] = down;
                // from_right keeps travelling left
            } else {
                below[static_cast<std::size_t>(j)] = from_right;
                from_right = down;
            }
        }
        exits[static_cast<std::size_t>(i - 1)] = from_right;
        top = std::move(below);
    }
    return Permutation(std::move(exits));
}

std::set<Pipedream> subset_oracle(const Permutation& w) {
    check_guard("subset_oracle", w.size(), 5);
    const int n = w.size();
    const std::vector<Cell> cells = staircase_cells(n);
    std::set<Pipedream> out;
    const std::uint64_t count = std::uint64_t{1} << cells.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Diagram d;
        for (std::size_t b = 0; b < cells.size(); ++b) {
            if (mask >> b & 1U) d.insert(cells[b]);
        }
        Pipedream p(n, std::move(d));
        if (trace_pipes(p) == w) out.insert(std::move(p));
    }
    return out;
}

}  // namespace pipedream
