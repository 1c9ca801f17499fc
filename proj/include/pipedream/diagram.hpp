#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "pipedream/composition.hpp"
#include "pipedream/permutation.hpp"

namespace pipedream {

// Matrix coordinates: row 1 is the top row, column 1 the leftmost.
struct Cell {
    int row;
    int col;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A finite set of cells in Z_{>0} x Z_{>0}. Iteration is row-major ascending.
class Diagram {
public:
    using const_iterator = std::set<Cell>::const_iterator;

    Diagram() = default;
    Diagram(std::initializer_list<Cell> cells);
    explicit Diagram(const std::vector<Cell>& cells);

    bool contains(Cell cell) const { return cells_.count(cell) != 0; }
    bool contains(int row, int col) const { return contains(Cell{row, col}); }

    /// Returns false if the cell was already present. Throws on row/col < 1.
    bool insert(Cell cell);
    bool erase(Cell cell) { return cells_.erase(cell) != 0; }

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const_iterator begin() const { return cells_.begin(); }
    const_iterator end() const { return cells_.end(); }

    /// Columns occupied in row r, ascending.
    std::vector<int> row(int r) const;
    /// Rows occupied in column c, ascending.
    std::vector<int> column(int c) const;

    int max_row() const;
    int max_col() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend bool operator<(const Diagram& a, const Diagram& b) { return a.cells_ < b.cells_; }

private:
    std::set<Cell> cells_;
};

std::string to_string(const Diagram& d);  // "{(1,2),(2,1)}"

WeakComposition row_weight(const Diagram& d);
WeakComposition col_weight(const Diagram& d);

Diagram left_justify(const Diagram& d);
Diagram conjugate(const Diagram& d);
Diagram shift_down(const Diagram& d, int k);
Diagram set_union(const Diagram& a, const Diagram& b);

/// Dark clouds: scan rows bottom to top; in each row pick the rightmost cell
/// whose column holds no dark cell yet.
Diagram dark(const Diagram& d);

// Permutation statistics read off the Rothe diagram.

Diagram rothe(const Permutation& w);
/// Rothe(w) plus, above each dark cloud, every empty cell of its column.
Diagram snow_diagram(const Permutation& w);
/// Rothe(w) plus, left of each dark cloud, every empty cell of its row.
Diagram left_snow_diagram(const Permutation& w);

WeakComposition rajcode(const Permutation& w);
/// Column weight of the left snow diagram; equals rajcode(inverse(w)).
WeakComposition rajcode_inv(const Permutation& w);
/// Entry c counts cells of Rothe(w) in column c with no dark cloud strictly
/// to their right in the same row.
WeakComposition movecode(const Permutation& w);
/// Number of dark clouds of Rothe(w) strictly right of column c.
int d_count(const Permutation& w, int c);
/// |rajcode(w)| - |invcode(w)|.
int reg(const Permutation& w);

// Recursive constructions through w = (a, u).

WeakComposition rajcode_recursive(const Permutation& w);
WeakComposition rajcode_inv_recursive(const Permutation& w);
WeakComposition movecode_recursive(const Permutation& w);
Diagram rothe_recursive(const Permutation& w);
Diagram dark_recursive(const Permutation& w);

/// The zero-padded insertion step of the movecode recursion, before the
/// increment pass. Exposed for inspection.
WeakComposition movecode_recursive_inserted(const Permutation& w);

}  // namespace pipedream

template <>
struct std::hash<pipedream::Diagram> {
    std::size_t operator()(const pipedream::Diagram& d) const noexcept;
};
