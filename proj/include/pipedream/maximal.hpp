#pragma once

#include <functional>
#include <vector>

#include "pipedream/composition.hpp"
#include "pipedream/diagram.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/pipedream.hpp"

namespace pipedream {

struct AlgorithmStep {
    int bar;
    int column;
    std::vector<Move> moves;
};

struct KEvent {
    std::size_t step_index;          // index into AlgorithmTrace::steps
    WeakComposition row_weight;      // right after the K-ladder move
};

struct AlgorithmTrace {
    std::vector<AlgorithmStep> steps;
    std::vector<KEvent> k_events;
    /// Cells moved per column during the iteration with the bar above row 1.
    WeakComposition per_column_counts;
};

struct MaximalResult {
    Pipedream pipedream;
    AlgorithmTrace trace;
};

/// Passed to the observer before and after each L_{i,c}.
struct StepView {
    int bar;
    int column;
    const Diagram& before;
    const LResult& result;
};

using StepObserver = std::function<void(const StepView&)>;

/// Starting from the bottom pipedream apply L_{i,c} for i = n-2, ..., 1 and,
/// for each i, c = n-1-i, ..., 1.
MaximalResult max_pipedream(const Permutation& w, const StepObserver& observer = {});

/// Per-column move counts of the last iteration (bar above row 1).
/// Requires n >= 2.
WeakComposition last_iteration_column_counts(const Permutation& v);

/// Row weights recorded right after each K-ladder move.
std::vector<WeakComposition> k_move_weights(const AlgorithmTrace& trace);

/// x-exponents m_0 = invcode(w), ..., m_reg(w) = rajcode(w); each step bumps
/// the largest feasible variable.
std::vector<WeakComposition> ir_sequence(const Permutation& w);
std::vector<WeakComposition> ir_recursive(const Permutation& w);

}  // namespace pipedream
