#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pipedream {

// A weak composition: nonnegative integers indexed from 1, all but finitely
// many zero. Stored trimmed so that equality ignores trailing zeros.
class WeakComposition {
public:
    WeakComposition() = default;
    WeakComposition(std::initializer_list<int> entries);
    explicit WeakComposition(std::vector<int> entries);

    /// Entry i (1-based); zero past the stored support.
    int operator[](std::size_t i) const {
        return (i >= 1 && i <= entries_.size()) ? entries_[i - 1] : 0;
    }

    void set(std::size_t i, int value);
    void increment(std::size_t i, int by = 1);

    /// Index of the last positive entry (0 for the zero composition).
    std::size_t length() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    int total() const;

    const std::vector<int>& entries() const { return entries_; }

    /// Entries 1..k, zero padded.
    std::vector<int> padded(std::size_t k) const;

    /// Entrywise comparison: every entry of *this is at most the other's.
    bool dominated_by(const WeakComposition& other) const;

    WeakComposition prepended(int value) const;
    /// Inserts `value` so it becomes entry pos + 1 (i.e. between pos and pos+1).
    WeakComposition inserted_after(std::size_t pos, int value) const;

    std::string to_string() const;

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend std::strong_ordering operator<=>(const WeakComposition& a, const WeakComposition& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    void trim();

    std::vector<int> entries_;
};

WeakComposition operator+(const WeakComposition& a, const WeakComposition& b);

/// e_i
WeakComposition unit_vector(std::size_t i);

}  // namespace pipedream
