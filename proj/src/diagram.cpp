#include "pipedream/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pipedream {

Diagram::Diagram(std::initializer_list<Cell> cells) {
    for (Cell c : cells) insert(c);
}

Diagram::Diagram(const std::vector<Cell>& cells) {
    for (Cell c : cells) insert(c);
}

bool Diagram::insert(Cell cell) {
    if (cell.row < 1 || cell.col < 1) {
        throw std::invalid_argument("diagram cells are 1-indexed, got (" + std::to_string(cell.row) +
                                    "," + std::to_string(cell.col) + ")");
    }
    return cells_.insert(cell).second;
}

std::vector<int> Diagram::row(int r) const {
    std::vector<int> cols;
    for (auto it = cells_.lower_bound(Cell{r, 0}); it != cells_.end() && it->row == r; ++it) {
        cols.push_back(it->col);
    }
    return cols;
}

std::vector<int> Diagram::column(int c) const {
    std::vector<int> rows;
    for (Cell cell : cells_) {
        if (cell.col == c) rows.push_back(cell.row);
    }
    return rows;
}

int Diagram::max_row() const { return cells_.empty() ? 0 : cells_.rbegin()->row; }

int Diagram::max_col() const {
    int m = 0;
    for (Cell c : cells_) m = std::max(m, c.col);
    return m;
}

std::string to_string(const Diagram& d) {
    std::string s = "{";
    bool first = true;
    for (Cell c : d) {
        if (!first) s += ',';
        first = false;
        s += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    }
    return s + "}";
}

WeakComposition row_weight(const Diagram& d) {
    WeakComposition wt;
    for (Cell c : d) wt.increment(static_cast<std::size_t>(c.row));
    return wt;
}

WeakComposition col_weight(const Diagram& d) {
    WeakComposition wt;
    for (Cell c : d) wt.increment(static_cast<std::size_t>(c.col));
    return wt;
}

Diagram left_justify(const Diagram& d) {
    Diagram out;
    const WeakComposition wt = row_weight(d);
    for (std::size_t r = 1; r <= wt.length(); ++r) {
        for (int c = 1; c <= wt[r]; ++c) out.insert({static_cast<int>(r), c});
    }
    return out;
}

Diagram conjugate(const Diagram& d) {
    Diagram out;
    for (Cell c : d) out.insert({c.col, c.row});
    return out;
}

Diagram shift_down(const Diagram& d, int k) {
    if (k < 0) throw std::invalid_argument("shift_down by a negative amount");
    Diagram out;
    for (Cell c : d) out.insert({c.row + k, c.col});
    return out;
}

Diagram set_union(const Diagram& a, const Diagram& b) {
    Diagram out = a;
    for (Cell c : b) out.insert(c);
    return out;
}

Diagram dark(const Diagram& d) {
    Diagram out;
    std::vector<bool> column_taken(static_cast<std::size_t>(d.max_col()) + 1, false);
    for (int r = d.max_row(); r >= 1; --r) {
        const std::vector<int> cols = d.row(r);
        for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
            if (!column_taken[static_cast<std::size_t>(*it)]) {
                column_taken[static_cast<std::size_t>(*it)] = true;
                out.insert({r, *it});
                break;
            }
        }
    }
    return out;
}

Diagram rothe(const Permutation& w) {
    Diagram out;
    const int n = w.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) > w(j)) out.insert({i, w(j)});
        }
    }
    return out;
}

Diagram snow_diagram(const Permutation& w) {
    Diagram out = rothe(w);
    for (Cell cloud : dark(out)) {
        for (int r = 1; r < cloud.row; ++r) out.insert({r, cloud.col});
    }
    return out;
}

Diagram left_snow_diagram(const Permutation& w) {
    Diagram out = rothe(w);
    for (Cell cloud : dark(out)) {
        for (int c = 1; c < cloud.col; ++c) out.insert({cloud.row, c});
    }
    return out;
}

WeakComposition rajcode(const Permutation& w) { return row_weight(snow_diagram(w)); }

WeakComposition rajcode_inv(const Permutation& w) { return col_weight(left_snow_diagram(w)); }

WeakComposition movecode(const Permutation& w) {
    const Diagram d = rothe(w);
    std::map<int, int> cloud_col_in_row;
    for (Cell cloud : dark(d)) cloud_col_in_row[cloud.row] = cloud.col;
    WeakComposition out;
    for (Cell c : d) {
        auto it = cloud_col_in_row.find(c.row);
        if (it == cloud_col_in_row.end() || it->second <= c.col) {
            out.increment(static_cast<std::size_t>(c.col));
        }
    }
    return out;
}

int d_count(const Permutation& w, int c) {
    int count = 0;
    for (Cell cloud : dark(rothe(w))) {
        if (cloud.col > c) ++count;
    }
    return count;
}

int reg(const Permutation& w) { return rajcode(w).total() - invcode(w).total(); }

WeakComposition rajcode_recursive(const Permutation& w) {
    if (w.size() == 1) return {};
    auto [a, u] = decompose(w);
    return rajcode_recursive(u).prepended(a + d_count(u, a));
}

WeakComposition rajcode_inv_recursive(const Permutation& w) {
    if (w.size() == 1) return {};
    auto [a, u] = decompose(w);
    WeakComposition out = rajcode_inv_recursive(u).inserted_after(static_cast<std::size_t>(a), d_count(u, a));
    for (int p = 1; p <= a; ++p) out.increment(static_cast<std::size_t>(p));
    return out;
}

WeakComposition movecode_recursive_inserted(const Permutation& w) {
    auto [a, u] = decompose(w);
    return movecode_recursive(u).inserted_after(static_cast<std::size_t>(a), 0);
}

WeakComposition movecode_recursive(const Permutation& w) {
    if (w.size() == 1) return {};
    const int a = decompose(w).a;
    WeakComposition out = movecode_recursive_inserted(w);
    for (int p = a; p >= 1; --p) {
        const int before = out[static_cast<std::size_t>(p)];
        out.increment(static_cast<std::size_t>(p));
        if (before == 0) break;
    }
    return out;
}

namespace {

// Shift down one row and push columns a+1, a+2, ... right by one.
Diagram shift_for_prepend(const Diagram& d, int a) {
    Diagram out;
    for (Cell c : d) out.insert({c.row + 1, c.col > a ? c.col + 1 : c.col});
    return out;
}

}  // namespace

Diagram rothe_recursive(const Permutation& w) {
    if (w.size() == 1) return {};
    auto [a, u] = decompose(w);
    Diagram out = shift_for_prepend(rothe_recursive(u), a);
    for (int c = 1; c <= a; ++c) out.insert({1, c});
    return out;
}

Diagram dark_recursive(const Permutation& w) {
    if (w.size() == 1) return {};
    auto [a, u] = decompose(w);
    Diagram out = shift_for_prepend(dark_recursive(u), a);
    // Columns 1..a keep their dark clouds under the shift. When all of them
    // are taken (e.g. w = 231) row 1 gets no cloud.
    for (int c = a; c >= 1; --c) {
        if (out.column(c).empty()) {
            out.insert({1, c});
            break;
        }
    }
    return out;
}

}  // namespace pipedream

std::size_t std::hash<pipedream::Diagram>::operator()(const pipedream::Diagram& d) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (pipedream::Cell c : d) {
        h ^= static_cast<std::size_t>(c.row) * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(c.col);
        h *= 0x100000001b3ULL;
    }
    return h;
}
