#include "pipedream/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "pipedream/diagram.hpp"
#include "pipedream/errors.hpp"
#include "pipedream/grothendieck.hpp"
#include "pipedream/maximal.hpp"
#include "pipedream/oracle.hpp"
#include "pipedream/pipedream.hpp"

namespace pipedream {

namespace {

using Check = std::function<bool(const Permutation&)>;

struct Claim {
    const char* id;
    int default_limit;
    // Builds the per-permutation predicate for S_n (lets a claim fix
    // per-run state such as random term orders).
    std::function<Check(int n)> make;
};

Check fixed(bool (*f)(const Permutation&)) { return Check(f); }

// Replays the main algorithm and runs `step_ok` on every L application.
bool every_step(const Permutation& w, const std::function<bool(const StepView&)>& step_ok) {
    bool ok = true;
    max_pipedream(w, [&](const StepView& view) {
        if (ok && !step_ok(view)) ok = false;
    });
    return ok;
}

std::vector<int> moved_rows(const LResult& r) {
    std::vector<int> rows;
    for (const Move& m : r.moves) rows.push_back(m.source_row);
    return rows;
}

bool check_thm12(const Permutation& w) {
    const Diagram p = max_pipedream(w).pipedream.crosses();
    return row_weight(p) == rajcode(w) && col_weight(p) == rajcode(inverse(w)) &&
           col_weight(p) == rajcode_inv(w);
}

bool check_thm14(const Permutation& w) {
    const MaximalResult result = max_pipedream(w);
    const std::vector<WeakComposition> weights = k_move_weights(result.trace);
    const std::vector<WeakComposition> ir = ir_sequence(w);
    if (static_cast<int>(weights.size()) != reg(w) || ir.size() != weights.size() + 1) return false;
    return std::equal(weights.begin(), weights.end(), ir.begin() + 1);
}

bool check_prop32(const Permutation& w) {
    if (rajcode_recursive(w) != rajcode(w) || rajcode_inv_recursive(w) != rajcode_inv(w)) return false;
    if (rothe_recursive(w) != rothe(w) || dark_recursive(w) != dark(rothe(w))) return false;
    if (w.size() >= 2) {
        auto [a, u] = decompose(w);
        if (reg(w) - reg(u) != d_count(u, a)) return false;
    }
    return true;
}

bool check_prop34(const Permutation& w) {
    if (ir_recursive(w) != ir_sequence(w)) return false;
    if (w.size() >= 2) {
        auto [a, u] = decompose(w);
        if (reg(w) != reg(u) + d_count(u, a)) return false;
    }
    return true;
}

bool check_prop43(const Permutation& w) {
    const WeakComposition raj_inv = rajcode(inverse(w));
    const WeakComposition mc = movecode(w);
    for (int c = 1; c <= w.size(); ++c) {
        const auto k = static_cast<std::size_t>(c);
        const int d = d_count(w, c);
        if (raj_inv[k + 1] - std::max(mc[k + 1] - 1, 0) != d) return false;
        if (raj_inv[k] - mc[k] != d) return false;
    }
    return true;
}

bool check_prop44(const Permutation& v) {
    if (v.size() < 2) return true;
    const WeakComposition counts = last_iteration_column_counts(v);
    auto [a, w] = decompose(v);
    const WeakComposition mc = movecode(w);
    for (int c = 1; c <= v.size(); ++c) {
        const auto k = static_cast<std::size_t>(c);
        if (counts[k] != (c > a ? mc[k] : 0)) return false;
    }
    return true;
}

bool check_cor46(const Permutation& w) {
    return every_step(w, [](const StepView& s) {
        if (s.result.moves.empty()) return s.result.diagram == s.before;
        return row_weight(s.result.diagram) ==
               row_weight(s.before) + unit_vector(static_cast<std::size_t>(s.bar));
    });
}

bool check_cor521(const Permutation& w) {
    return every_step(w, [](const StepView& s) { return acts_initially(s.before, s.bar, s.column); });
}

bool check_lem51(const Permutation& w) { return movecode_recursive(w) == movecode(w); }

bool check_lem56(const Permutation& w) {
    return every_step(w, [](const StepView& s) {
        if (!acts_initially(s.before, s.bar, s.column) || s.result.moves.empty()) return true;
        int previous = s.bar;
        for (const Move& m : s.result.moves) {
            if (m.dest_row != previous) return false;
            previous = m.source_row;
        }
        return row_weight(s.result.diagram) ==
               row_weight(s.before) + unit_vector(static_cast<std::size_t>(s.bar));
    });
}

bool check_lem58(const Permutation& w) {
    return every_step(w, [](const StepView& s) {
        if (!acts_initially(s.before, s.bar, s.column)) return true;
        const std::vector<Cell> segment = initial_segment(s.result.diagram, s.bar, s.column + 1);
        for (const Move& m : s.result.moves) {
            if (std::find(segment.begin(), segment.end(), Cell{m.dest_row, s.column + 1}) == segment.end()) {
                return false;
            }
        }
        return true;
    });
}

bool check_lem59(const Permutation& w) {
    return every_step(w, [](const StepView& s) {
        const Diagram& d = s.before;
        const int i = s.bar;
        const int c = s.column;
        const std::vector<int> moved = moved_rows(s.result);
        const std::vector<Cell> segment = initial_segment(d, i + 1, c);
        auto in_segment = [&](int r) {
            return std::find(segment.begin(), segment.end(), Cell{r, c}) != segment.end();
        };
        // Converse: moving only segment cells means it acts initially.
        if (!d.contains(i, c) && std::all_of(moved.begin(), moved.end(), in_segment) &&
            !acts_initially(d, i, c)) {
            return false;
        }
        if (!acts_initially(d, i, c)) return true;
        if (d.contains(i, c)) return moved.empty();
        std::vector<int> predicted;
        for (Cell cell : segment) {
            if (!d.contains(cell.row, c + 1)) predicted.push_back(cell.row);
        }
        return predicted == moved;
    });
}

bool check_claim1(const Permutation& w) {
    const int n = w.size();
    Diagram d = shift_down(max_pipedream(w).pipedream.crosses(), 2);
    for (int c = n - 1; c >= 1; --c) {
        const LResult lower = apply_L(d, 2, c);
        const LResult upper = apply_L(lower.diagram, 1, c + 1);
        if (lower.moves.size() != upper.moves.size()) return false;
        for (const Move& m : lower.moves) {
            const auto matches = std::count_if(upper.moves.begin(), upper.moves.end(), [&](const Move& u) {
                return m.dest_row <= u.source_row && u.source_row < m.source_row;
            });
            if (matches != 1) return false;
        }
        if (!is_paired(upper.diagram, 2, c)) return false;
        d = upper.diagram;
    }
    return true;
}

bool check_claim2(const Permutation& w) {
    const int n = w.size();
    Diagram d = shift_down(max_pipedream(w).pipedream.crosses(), 1);
    for (int c = n - 1; c >= 1; --c) {
        if (!acts_initially(d, 1, c)) return false;
        d = apply_L(d, 1, c).diagram;
    }
    return true;
}

bool check_oracle_pd(const Permutation& w) {
    if (permutation_of(bottom_pipedream(w)) != w) return false;
    const std::set<Pipedream> closure = enumerate_pd(w);
    for (const Pipedream& p : closure) {
        if (permutation_of(p) != w || trace_pipes(p) != w) return false;
    }
    return closure == subset_oracle(w);
}

bool check_uniqueness(const Permutation& w) {
    const WeakComposition rows = rajcode(w);
    const WeakComposition cols = rajcode(inverse(w));
    const Pipedream hat = max_pipedream(w).pipedream;
    int hits = 0;
    bool hat_found = false;
    for (const Pipedream& p : enumerate_pd(w)) {
        if (row_weight(p.crosses()) == rows && col_weight(p.crosses()) == cols) {
            ++hits;
            hat_found = hat_found || p == hat;
        }
    }
    return hits == 1 && hat_found;
}

Check make_thm11(int n) {
    // Three extra admissible orders per run, fixed by n for reproducibility.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
    std::vector<TermOrder> orders{TermOrder::standard()};
    for (int k = 0; k < 3; ++k) orders.push_back(TermOrder::random_admissible(std::max(n, 1), rng));
    return [orders](const Permutation& w) {
        const Polynomial top = top_degree(grothendieck_double(w));
        const Monomial expected{rajcode(w), rajcode(inverse(w))};
        for (const TermOrder& order : orders) {
            auto [m, c] = leading_term(top, order);
            if (!(m == expected) || abs(c) != 1) return false;
        }
        return true;
    };
}

bool check_ir_degree(const Permutation& w) {
    const Polynomial g = grothendieck_single(w);
    if (g.min_degree() != invcode(w).total() || g.max_degree() != rajcode(w).total()) return false;
    const std::vector<Monomial> leading = per_degree_leading(w);
    const std::vector<WeakComposition> ir = ir_sequence(w);
    if (leading.size() != ir.size()) return false;
    for (std::size_t k = 0; k < ir.size(); ++k) {
        if (!(leading[k] == Monomial{ir[k], {}})) return false;
    }
    return true;
}

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims{
        {"thm1.1", 5, make_thm11},
        {"thm1.2", 7, [](int) { return fixed(check_thm12); }},
        {"thm1.4", 7, [](int) { return fixed(check_thm14); }},
        {"prop3.2", 7, [](int) { return fixed(check_prop32); }},
        {"prop3.4", 7, [](int) { return fixed(check_prop34); }},
        {"prop4.3", 7, [](int) { return fixed(check_prop43); }},
        {"prop4.4", 7, [](int) { return fixed(check_prop44); }},
        {"cor4.6", 7, [](int) { return fixed(check_cor46); }},
        {"cor5.21", 7, [](int) { return fixed(check_cor521); }},
        {"lem5.1", 7, [](int) { return fixed(check_lem51); }},
        {"lem5.6", 7, [](int) { return fixed(check_lem56); }},
        {"lem5.8", 7, [](int) { return fixed(check_lem58); }},
        {"lem5.9", 7, [](int) { return fixed(check_lem59); }},
        {"claim1", 7, [](int) { return fixed(check_claim1); }},
        {"claim2", 7, [](int) { return fixed(check_claim2); }},
        {"oracle-pd", 5, [](int) { return fixed(check_oracle_pd); }},
        {"uniqueness", 6, [](int) { return fixed(check_uniqueness); }},
        {"ir-degree", 5, [](int) { return fixed(check_ir_degree); }},
    };
    return claims;
}

const Claim& find_claim(std::string_view id) {
    for (const Claim& c : registry()) {
        if (id == c.id) return c;
    }
    throw std::invalid_argument("unknown claim id '" + std::string(id) + "'");
}

// Evaluates `check` on every permutation; returns the indices that fail.
// An exception thrown by a check counts as a failure.
std::vector<std::size_t> failing_indices(const std::vector<Permutation>& population, const Check& check) {
    std::vector<char> failed(population.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < population.size(); k = next++) {
            bool ok = false;
            try {
                ok = check(population[k]);
            } catch (const std::exception&) {
                ok = false;
            }
            failed[k] = ok ? 0 : 1;
        }
    };
    const unsigned threads = std::max(1U, std::min(std::thread::hardware_concurrency(), 16U));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < failed.size(); ++k) {
        if (failed[k]) out.push_back(k);
    }
    return out;
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const Claim& c : registry()) out.emplace_back(c.id);
        return out;
    }();
    return ids;
}

bool is_claim_id(std::string_view id) {
    const auto& ids = claim_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

int claim_default_limit(std::string_view id) { return find_claim(id).default_limit; }

CheckResult run_claim(std::string_view id, int n) {
    const Claim& claim = find_claim(id);
    if (n < 1) throw std::invalid_argument("verify needs n >= 1");
    check_guard(claim.id, n, claim.default_limit);

    const auto start = std::chrono::steady_clock::now();
    const std::vector<Permutation> population = all_permutations(n);
    CheckResult result;
    result.claim = claim.id;
    result.population = population.size();
    for (std::size_t k : failing_indices(population, claim.make(n))) result.failures.push_back(population[k]);
    // all_permutations is lexicographic already; keep the contract explicit.
    std::sort(result.failures.begin(), result.failures.end());
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

VerificationReport verify(int n, const std::vector<std::string>& claims, std::ostream* progress) {
    const std::vector<std::string>& selected = claims.empty() ? claim_ids() : claims;
    // Validate everything before running anything.
    for (const std::string& id : selected) check_guard(find_claim(id).id, n, find_claim(id).default_limit);

    VerificationReport report;
    report.n = n;
    for (const std::string& id : selected) {
        if (progress) *progress << "verifying " << id << " on S_" << n << " ..." << std::flush;
        report.checks.push_back(run_claim(id, n));
        if (progress) {
            const CheckResult& r = report.checks.back();
            *progress << (r.passed() ? " ok" : " FAILED") << " (" << r.elapsed.count() << " ms)\n";
        }
    }
    return report;
}

}  // namespace pipedream
