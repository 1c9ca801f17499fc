#include "pipedream/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pipedream {

WeakComposition::WeakComposition(std::initializer_list<int> entries)
    : WeakComposition(std::vector<int>(entries)) {}

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("weak composition entries must be nonnegative");
    }
    trim();
}

void WeakComposition::trim() {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

void WeakComposition::set(std::size_t i, int value) {
    if (i < 1) throw std::out_of_range("weak composition index is 1-based");
    if (value < 0) throw std::invalid_argument("weak composition entries must be nonnegative");
    if (i > entries_.size()) {
        if (value == 0) return;
        entries_.resize(i, 0);
    }
    entries_[i - 1] = value;
    trim();
}

void WeakComposition::increment(std::size_t i, int by) { set(i, (*this)[i] + by); }

int WeakComposition::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::vector<int> WeakComposition::padded(std::size_t k) const {
    std::vector<int> out(k, 0);
    std::copy_n(entries_.begin(), std::min(k, entries_.size()), out.begin());
    return out;
}

bool WeakComposition::dominated_by(const WeakComposition& other) const {
    if (entries_.size() > other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > other.entries_[i]) return false;
    }
    return true;
}

WeakComposition WeakComposition::prepended(int value) const {
    std::vector<int> out;
    out.reserve(entries_.size() + 1);
    out.push_back(value);
    out.insert(out.end(), entries_.begin(), entries_.end());
    return WeakComposition(std::move(out));
}

WeakComposition WeakComposition::inserted_after(std::size_t pos, int value) const {
    std::vector<int> out = padded(std::max(pos, entries_.size()));
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), value);
    return WeakComposition(std::move(out));
}

std::string WeakComposition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

WeakComposition operator+(const WeakComposition& a, const WeakComposition& b) {
    std::size_t k = std::max(a.length(), b.length());
    std::vector<int> out(k);
    for (std::size_t i = 1; i <= k; ++i) out[i - 1] = a[i] + b[i];
    return WeakComposition(std::move(out));
}

WeakComposition unit_vector(std::size_t i) {
    WeakComposition e;
    e.set(i, 1);
    return e;
}

}  // namespace pipedream
