#include "pipedream/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "pipedream/errors.hpp"

namespace pipedream {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Reports the first entry that breaks the bijection property, if any.
void validate_one_line(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) throw ParseError("empty permutation", 0);
    std::vector<std::size_t> seen_at(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t pos = 1; pos <= values.size(); ++pos) {
        int v = values[pos - 1];
        if (v < 1 || v > n) {
            throw ParseError("value " + std::to_string(v) + " at position " + std::to_string(pos) +
                                 " is outside 1.." + std::to_string(n),
                             pos);
        }
        auto& prev = seen_at[static_cast<std::size_t>(v)];
        if (prev != 0) {
            throw ParseError("duplicate value " + std::to_string(v) + " at position " +
                                 std::to_string(pos) + " (first seen at position " +
                                 std::to_string(prev) + ")",
                             pos);
        }
        prev = pos;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    validate_one_line(one_line_);
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be at least 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i) != i) return false;
    }
    return true;
}

std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < one_line_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(one_line_[i]);
    }
    return s;
}

std::string Permutation::to_compact_string() const {
    if (size() > 9) return to_string();
    std::string s;
    for (int v : one_line_) s += static_cast<char>('0' + v);
    return s;
}

Permutation parse_permutation(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty permutation", 0);

    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw ParseError("unexpected character '" + std::string(1, text[i]) +
                                     "' at position " + std::to_string(i + 1),
                                 i + 1);
            }
            values.push_back(text[i] - '0');
        }
        if (values.size() > 9) {
            throw ParseError("digit form is limited to n <= 9; use commas for larger n", 10);
        }
    } else {
        std::size_t pos = 1;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = text.find(',', start);
            std::string_view field =
                trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
            int v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
                throw ParseError("entry " + std::to_string(pos) + " ('" + std::string(field) +
                                     "') is not an integer",
                                 pos);
            }
            values.push_back(v);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
            ++pos;
        }
    }
    validate_one_line(values);
    return Permutation(std::move(values));
}

Permutation inverse(const Permutation& w) {
    std::vector<int> v(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) v[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation(std::move(v));
}

Permutation operator*(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> out(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(i - 1)] = v(w(i));
    return Permutation(std::move(out));
}

int length(const Permutation& w) { return invcode(w).total(); }

WeakComposition invcode(const Permutation& w) {
    std::vector<int> code(static_cast<std::size_t>(w.size()), 0);
    for (int i = 1; i <= w.size(); ++i) {
        for (int j = i + 1; j <= w.size(); ++j) {
            if (w(j) < w(i)) ++code[static_cast<std::size_t>(i - 1)];
        }
    }
    return WeakComposition(std::move(code));
}

Permutation from_invcode(const WeakComposition& alpha, int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be at least 1");
    if (alpha.length() > static_cast<std::size_t>(n)) {
        throw std::invalid_argument("code " + alpha.to_string() + " has support beyond n = " +
                                    std::to_string(n));
    }
    std::vector<int> remaining(static_cast<std::size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int a = alpha[static_cast<std::size_t>(i)];
        if (a > n - i) {
            throw std::invalid_argument("code entry " + std::to_string(i) + " = " + std::to_string(a) +
                                        " exceeds n - i = " + std::to_string(n - i));
        }
        out.push_back(remaining[static_cast<std::size_t>(a)]);
        remaining.erase(remaining.begin() + a);
    }
    return Permutation(std::move(out));
}

Decomposition decompose(const Permutation& w) {
    if (w.size() < 2) throw std::invalid_argument("decompose requires n >= 2");
    const int first = w(1);
    std::vector<int> tail;
    tail.reserve(static_cast<std::size_t>(w.size() - 1));
    for (int i = 2; i <= w.size(); ++i) tail.push_back(w(i) > first ? w(i) - 1 : w(i));
    return {first - 1, Permutation(std::move(tail))};
}

Permutation compose(int a, const Permutation& u) {
    if (a < 0 || a > u.size()) {
        throw std::invalid_argument("compose: a = " + std::to_string(a) + " outside 0.." +
                                    std::to_string(u.size()));
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(u.size() + 1));
    out.push_back(a + 1);
    for (int v : u.one_line()) out.push_back(v > a ? v + 1 : v);
    return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace pipedream
