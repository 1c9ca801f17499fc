#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pipedream/diagram.hpp"
#include "pipedream/permutation.hpp"

namespace pipedream {

// A pipedream of size n identified with its set of crosses, which must lie in
// the staircase {(i, j) : 1 <= i <= n-1, 1 <= j <= n-i}.
class Pipedream {
public:
    /// Throws std::invalid_argument if a cross falls outside the staircase.
    Pipedream(int n, Diagram crosses);

    int size() const { return n_; }
    const Diagram& crosses() const { return crosses_; }

    friend bool operator==(const Pipedream&, const Pipedream&) = default;
    friend bool operator<(const Pipedream& a, const Pipedream& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.crosses_ < b.crosses_;
    }

private:
    int n_;
    Diagram crosses_;
};

bool in_staircase(int n, Cell cell);
/// All cells of the size-n staircase, row-major.
std::vector<Cell> staircase_cells(int n);

/// Demazure product of the reading word: rows top to bottom, right to left
/// within a row, cell (i, j) contributing s_{i+j-1}.
Permutation permutation_of(const Pipedream& p);

/// left_justify(rothe(w)) as a pipedream of size n.
Pipedream bottom_pipedream(const Permutation& w);

enum class MoveKind { regular, k_ladder };

// Ladder move of the cross (r, c) to (r_prime, c+1), with a bar above row
// `bar`: rows above the bar are invisible.
struct LadderSite {
    int r;
    int c;
    int r_prime;
    int bar;

    friend bool operator==(const LadderSite&, const LadderSite&) = default;
};

/// The ladder site at the cross (r, c), if any.
std::optional<LadderSite> find_ladder_site(const Diagram& d, int r, int c, int bar);
std::vector<LadderSite> ladder_sites(const Diagram& d, int bar);
std::vector<LadderSite> ladder_sites(const Pipedream& p, int bar);

bool is_valid_site(const Diagram& d, const LadderSite& site);

/// Regular: (r, c) -> (r', c+1). K: adds (r', c+1) and keeps (r, c).
/// Throws std::invalid_argument when the site is not valid for d.
Diagram apply_ladder(const Diagram& d, const LadderSite& site, MoveKind kind);
Pipedream apply_ladder(const Pipedream& p, const LadderSite& site, MoveKind kind);

struct Move {
    int source_row;
    int dest_row;
    MoveKind kind;

    friend bool operator==(const Move&, const Move&) = default;
};

struct LResult {
    Diagram diagram;
    std::vector<Move> moves;  // in scan order; only the last can be a K move
};

/// L_{i,c}: with a bar above row i, scan column c top to bottom doing every
/// possible regular ladder move, then turn the last move into a K move.
LResult apply_L(const Diagram& d, int i, int c);
LResult apply_L(const Pipedream& p, int i, int c);

/// Breadth-first closure of the bottom pipedream under both kinds of ladder
/// move (bar 1). Guarded by n <= 7 (PIPEDREAM_MAX_N overrides) unless
/// `unguarded` is set.
std::set<Pipedream> enumerate_pd(const Permutation& w, bool unguarded = false);

/// Rows r >= i of column c such that (r', c) is in d for all i <= r' <= r.
std::vector<Cell> initial_segment(const Diagram& d, int i, int c);

/// L_{i,c} acts initially on d iff d is fixed by L_{i+1,c}.
bool acts_initially(const Diagram& d, int i, int c);

/// (i, c)-pairing of columns c and c+1.
bool is_paired(const Diagram& d, int i, int c);

std::string to_string(MoveKind kind);  // "R" or "K"

}  // namespace pipedream
