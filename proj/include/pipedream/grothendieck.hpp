#pragma once

#include <vector>

#include "pipedream/permutation.hpp"
#include "pipedream/polynomial.hpp"

namespace pipedream {

/// x_i + y_j - x_i y_j
Polynomial cross_factor(int i, int j);

// Expansions over PD(w). Refused for n > 7 (GuardExceeded) unless `unguarded`
// is set or PIPEDREAM_MAX_N raises the limit.
Polynomial grothendieck_double(const Permutation& w, bool unguarded = false);
Polynomial grothendieck_single(const Permutation& w, bool unguarded = false);

/// Leading monomial (standard order) of each degree component of the single
/// Grothendieck polynomial, from |invcode(w)| up to |rajcode(w)|.
std::vector<Monomial> per_degree_leading(const Permutation& w, bool unguarded = false);

}  // namespace pipedream
