#pragma once

#include <set>

#include "pipedream/permutation.hpp"
#include "pipedream/pipedream.hpp"

namespace pipedream {

/// Traces pipes through the tiled staircase. Pipe j enters the top of column
/// j; w(i) is the pipe leaving through the left end of row i. The first
/// crossing of two pipes is kept and every later one is read as an elbow.
/// Shares no code with permutation_of.
Permutation trace_pipes(const Pipedream& p);

/// Every subset S of the size-n staircase with trace_pipes(S) = w.
/// Guarded by n <= 5.
std::set<Pipedream> subset_oracle(const Permutation& w);

}  // namespace pipedream
