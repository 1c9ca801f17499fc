#include "pipedream/pipedream.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "pipedream/errors.hpp"

namespace pipedream {

bool in_staircase(int n, Cell cell) {
    return cell.row >= 1 && cell.col >= 1 && cell.row <= n - 1 && cell.col <= n - cell.row;
}

std::vector<Cell> staircase_cells(int n) {
    std::vector<Cell> cells;
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n - i; ++j) cells.push_back({i, j});
    }
    return cells;
}

Pipedream::Pipedream(int n, Diagram crosses) : n_(n), crosses_(std::move(crosses)) {
    if (n < 1) throw std::invalid_argument("pipedream size must be at least 1");
    for (Cell c : crosses_) {
        if (!in_staircase(n, c)) {
            throw std::invalid_argument("cross (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                        ") lies outside the size-" + std::to_string(n) + " staircase");
        }
    }
}

Permutation permutation_of(const Pipedream& p) {
    std::vector<int> pi(static_cast<std::size_t>(p.size()));
    for (std::size_t k = 0; k < pi.size(); ++k) pi[k] = static_cast<int>(k) + 1;
    for (int i = 1; i <= p.size() - 1; ++i) {
        const std::vector<int> cols = p.crosses().row(i);
        for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
            // s_k with k = i + j - 1 acts on positions k, k+1 (0-based k-1, k).
            const std::size_t k = static_cast<std::size_t>(i + *it - 2);
            if (pi[k] < pi[k + 1]) std::swap(pi[k], pi[k + 1]);
        }
    }
    return Permutation(std::move(pi));
}

Pipedream bottom_pipedream(const Permutation& w) {
    return Pipedream(w.size(), left_justify(rothe(w)));
}

std::optional<LadderSite> find_ladder_site(const Diagram& d, int r, int c, int bar) {
    if (r < bar || !d.contains(r, c) || d.contains(r, c + 1)) return std::nullopt;
    for (int i = r - 1; i >= bar; --i) {
        const bool left = d.contains(i, c);
        const bool right = d.contains(i, c + 1);
        if (left && right) continue;
        if (!left && !right) return LadderSite{r, c, i, bar};
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<LadderSite> ladder_sites(const Diagram& d, int bar) {
    std::vector<LadderSite> sites;
    for (Cell cell : d) {
        if (auto site = find_ladder_site(d, cell.row, cell.col, bar)) sites.push_back(*site);
    }
    return sites;
}

std::vector<LadderSite> ladder_sites(const Pipedream& p, int bar) { return ladder_sites(p.crosses(), bar); }

bool is_valid_site(const Diagram& d, const LadderSite& site) {
    auto found = find_ladder_site(d, site.r, site.c, site.bar);
    return found && *found == site;
}

Diagram apply_ladder(const Diagram& d, const LadderSite& site, MoveKind kind) {
    if (!is_valid_site(d, site)) {
        throw std::invalid_argument("no ladder move at (" + std::to_string(site.r) + "," +
                                    std::to_string(site.c) + ") to row " + std::to_string(site.r_prime));
    }
    Diagram out = d;
    if (kind == MoveKind::regular) out.erase({site.r, site.c});
    out.insert({site.r_prime, site.c + 1});
    return out;
}

Pipedream apply_ladder(const Pipedream& p, const LadderSite& site, MoveKind kind) {
    return Pipedream(p.size(), apply_ladder(p.crosses(), site, kind));
}

LResult apply_L(const Diagram& d, int i, int c) {
    if (i < 1 || c < 1) throw std::invalid_argument("L operator needs i, c >= 1");
    LResult result{d, {}};
    Diagram& cur = result.diagram;
    // Destinations sit strictly above their sources, so the scan never meets
    // a cell it created and the last row cannot grow.
    const int last_row = cur.max_row();
    for (int r = i; r <= last_row; ++r) {
        if (auto site = find_ladder_site(cur, r, c, i)) {
            cur.erase({r, c});
            cur.insert({site->r_prime, c + 1});
            result.moves.push_back({r, site->r_prime, MoveKind::regular});
        }
    }
    if (!result.moves.empty()) {
        result.moves.back().kind = MoveKind::k_ladder;
        cur.insert({result.moves.back().source_row, c});
    }
    return result;
}

LResult apply_L(const Pipedream& p, int i, int c) { return apply_L(p.crosses(), i, c); }

std::set<Pipedream> enumerate_pd(const Permutation& w, bool unguarded) {
    if (!unguarded) check_guard("enumerate_pd", w.size(), 7);
    const int n = w.size();
    std::unordered_set<Diagram> seen;
    std::deque<Diagram> frontier;
    Diagram start = bottom_pipedream(w).crosses();
    seen.insert(start);
    frontier.push_back(std::move(start));
    while (!frontier.empty()) {
        Diagram d = std::move(frontier.front());
        frontier.pop_front();
        for (const LadderSite& site : ladder_sites(d, 1)) {
            for (MoveKind kind : {MoveKind::regular, MoveKind::k_ladder}) {
                Diagram next = apply_ladder(d, site, kind);
                if (seen.insert(next).second) frontier.push_back(std::move(next));
            }
        }
    }
    std::set<Pipedream> out;
    for (const Diagram& d : seen) out.emplace(n, d);
    return out;
}

std::vector<Cell> initial_segment(const Diagram& d, int i, int c) {
    std::vector<Cell> run;
    for (int r = i; d.contains(r, c); ++r) run.push_back({r, c});
    return run;
}

bool acts_initially(const Diagram& d, int i, int c) { return apply_L(d, i + 1, c).moves.empty(); }

bool is_paired(const Diagram& d, int i, int c) {
    auto doubled = [&](int r) { return d.contains(r, c) && d.contains(r, c + 1); };
    for (Cell cell : d) {
        if (cell.row < i) continue;
        if (cell.col == c && !d.contains(cell.row, c + 1)) {
            // An unmatched cross must see a lone (r, c+1) above it.
            int r = cell.row - 1;
            while (r >= i && doubled(r)) --r;
            if (r < i || d.contains(r, c) || !d.contains(r, c + 1)) return false;
        } else if (cell.col == c + 1 && !d.contains(cell.row, c)) {
            int r = cell.row + 1;
            while (doubled(r)) ++r;
            if (!d.contains(r, c) || d.contains(r, c + 1)) return false;
        }
    }
    return true;
}

std::string to_string(MoveKind kind) { return kind == MoveKind::regular ? "R" : "K"; }

}  // namespace pipedream
