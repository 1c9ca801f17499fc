#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pipedream/composition.hpp"

namespace pipedream {

// A permutation of [n] in one-line notation, n >= 1.
class Permutation {
public:
    /// Throws std::invalid_argument unless one_line is a bijection on [n].
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(one_line_.size()); }

    /// w(i), 1-based.
    int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& one_line() const { return one_line_; }

    bool is_identity() const;

    /// Comma-separated one-line notation, e.g. "4,6,1,7,3,5,2".
    std::string to_string() const;
    /// Digit-string form for n <= 9, comma form otherwise.
    std::string to_compact_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.one_line_ <=> b.one_line_;
    }

private:
    std::vector<int> one_line_;
};

/// Accepts "4617352" (n <= 9) or "4,6,1,7,3,5,2". Throws ParseError.
Permutation parse_permutation(std::string_view text);

Permutation inverse(const Permutation& w);

/// Composition of maps: (v * w)(i) = v(w(i)).
Permutation operator*(const Permutation& v, const Permutation& w);

/// Number of inversions.
int length(const Permutation& w);

/// Lehmer code: entry i counts j > i with w(j) < w(i).
WeakComposition invcode(const Permutation& w);

/// Inverse of invcode on S_n. Throws std::invalid_argument when some
/// alpha_i > n - i.
Permutation from_invcode(const WeakComposition& alpha, int n);

struct Decomposition {
    int a;
    Permutation u;
};

/// w = (a, u) with a = invcode(w)_1 and invcode(u) the tail of invcode(w).
/// Requires n >= 2.
Decomposition decompose(const Permutation& w);

/// Inverse of decompose. Requires 0 <= a <= size(u).
Permutation compose(int a, const Permutation& u);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace pipedream
