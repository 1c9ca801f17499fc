#include "pipedream/maximal.hpp"

#include <stdexcept>

namespace pipedream {

MaximalResult max_pipedream(const Permutation& w, const StepObserver& observer) {
    const int n = w.size();
    Diagram current = bottom_pipedream(w).crosses();
    AlgorithmTrace trace;
    for (int i = n - 2; i >= 1; --i) {
        for (int c = n - 1 - i; c >= 1; --c) {
            LResult result = apply_L(current, i, c);
            if (observer) observer(StepView{i, c, current, result});
            trace.steps.push_back({i, c, result.moves});
            if (!result.moves.empty()) {
                trace.k_events.push_back({trace.steps.size() - 1, row_weight(result.diagram)});
                if (i == 1) {
                    trace.per_column_counts.set(static_cast<std::size_t>(c),
                                                static_cast<int>(result.moves.size()));
                }
            }
            current = std::move(result.diagram);
        }
    }
    return {Pipedream(n, std::move(current)), std::move(trace)};
}

WeakComposition last_iteration_column_counts(const Permutation& v) {
    if (v.size() < 2) throw std::invalid_argument("last_iteration_column_counts requires n >= 2");
    return max_pipedream(v).trace.per_column_counts;
}

std::vector<WeakComposition> k_move_weights(const AlgorithmTrace& trace) {
    std::vector<WeakComposition> out;
    out.reserve(trace.k_events.size());
    for (const KEvent& e : trace.k_events) out.push_back(e.row_weight);
    return out;
}

std::vector<WeakComposition> ir_sequence(const Permutation& w) {
    const WeakComposition target = rajcode(w);
    WeakComposition m = invcode(w);
    std::vector<WeakComposition> out{m};
    const int steps = reg(w);
    for (int s = 0; s < steps; ++s) {
        std::size_t p = target.length();
        while (p >= 1 && m[p] >= target[p]) --p;
        if (p == 0) throw std::logic_error("IR sequence stalled before reaching rajcode");
        m.increment(p);
        out.push_back(m);
    }
    return out;
}

std::vector<WeakComposition> ir_recursive(const Permutation& w) {
    if (w.size() == 1) return {WeakComposition{}};
    auto [a, u] = decompose(w);
    const std::vector<WeakComposition> inner = ir_recursive(u);
    const int reg_u = static_cast<int>(inner.size()) - 1;
    const int reg_w = reg_u + d_count(u, a);
    std::vector<WeakComposition> out;
    out.reserve(static_cast<std::size_t>(reg_w) + 1);
    for (int j = 0; j <= reg_w; ++j) {
        if (j <= reg_u) {
            out.push_back(inner[static_cast<std::size_t>(j)].prepended(a));
        } else {
            out.push_back(inner.back().prepended(a + j - reg_u));
        }
    }
    return out;
}

}  // namespace pipedream
