#include "pipedream/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace pipedream {

Monomial operator*(const Monomial& a, const Monomial& b) { return {a.xexp + b.xexp, a.yexp + b.yexp}; }

std::string to_string(const Monomial& m) {
    std::string s;
    auto emit = [&](char name, const WeakComposition& e) {
        for (std::size_t i = 1; i <= e.length(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += name + std::to_string(i);
            if (e[i] > 1) s += '^' + std::to_string(e[i]);
        }
    };
    emit('x', m.xexp);
    emit('y', m.yexp);
    return s.empty() ? "1" : s;
}

namespace {

int exponent(const Monomial& m, Variable v) {
    const WeakComposition& e = v.alphabet == Alphabet::x ? m.xexp : m.yexp;
    return e[static_cast<std::size_t>(v.index)];
}

// Lex with x_k > ... > x_1 > y_k > ... > y_1; +1 / 0 / -1.
int compare_standard(const Monomial& a, const Monomial& b) {
    auto cmp = [](const WeakComposition& p, const WeakComposition& q) {
        for (std::size_t k = std::max(p.length(), q.length()); k >= 1; --k) {
            if (p[k] != q[k]) return p[k] > q[k] ? 1 : -1;
        }
        return 0;
    };
    if (int c = cmp(a.xexp, b.xexp)) return c;
    return cmp(a.yexp, b.yexp);
}

}  // namespace

TermOrder TermOrder::standard() { return TermOrder{}; }

TermOrder TermOrder::ranking(std::vector<Variable> greatest_first) {
    int last_x = 0;
    int last_y = 0;
    for (const Variable& v : greatest_first) {
        if (v.index < 1) throw std::invalid_argument("variable indices start at 1");
        int& last = v.alphabet == Alphabet::x ? last_x : last_y;
        if (last != 0 && v.index >= last) {
            throw std::invalid_argument("ranking must list each alphabet by decreasing index");
        }
        last = v.index;
    }
    TermOrder order;
    order.ranking_ = std::move(greatest_first);
    return order;
}

TermOrder TermOrder::random_admissible(int n, std::mt19937_64& rng) {
    std::vector<Variable> vars;
    int xs = n;
    int ys = n;
    while (xs > 0 || ys > 0) {
        // Uniform over interleavings: pick x with probability xs / (xs + ys).
        std::uniform_int_distribution<int> pick(1, xs + ys);
        if (pick(rng) <= xs) {
            vars.push_back({Alphabet::x, xs--});
        } else {
            vars.push_back({Alphabet::y, ys--});
        }
    }
    return ranking(std::move(vars));
}

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
    for (const Variable& v : ranking_) {
        const int ea = exponent(a, v);
        const int eb = exponent(b, v);
        if (ea != eb) return ea > eb;
    }
    // Variables outside the ranking (or the standard order itself).
    return compare_standard(a, b) > 0;
}

Polynomial Polynomial::constant(const Coefficient& c) { return monomial(Monomial{}, c); }

Polynomial Polynomial::monomial(const Monomial& m, const Coefficient& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::x(int i) { return monomial({unit_vector(static_cast<std::size_t>(i)), {}}); }

Polynomial Polynomial::y(int j) { return monomial({{}, unit_vector(static_cast<std::size_t>(j))}); }

Coefficient Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

int Polynomial::max_degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::min_degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    Polynomial product;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) product.add_term(ma * mb, ca * cb);
    }
    *this = std::move(product);
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial degree_component(const Polynomial& p, int d) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() == d) out.add_term(m, c);
    }
    return out;
}

Polynomial top_degree(const Polynomial& p) { return p.is_zero() ? p : degree_component(p, p.max_degree()); }

Polynomial bottom_degree(const Polynomial& p) { return p.is_zero() ? p : degree_component(p, p.min_degree()); }

Polynomial set_y_zero(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        if (m.yexp.is_zero()) out.add_term(m, c);
    }
    return out;
}

std::pair<Monomial, Coefficient> leading_term(const Polynomial& p, const TermOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
    if (order.is_standard()) return *p.terms().begin();
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it) {
        if (order.greater(it->first, best->first)) best = it;
    }
    return *best;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Coefficient magnitude = negative ? Coefficient(-c) : c;
        if (s.empty()) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            s += magnitude.str();
        } else {
            if (magnitude != 1) s += magnitude.str() + '*';
            s += to_string(m);
        }
    }
    return s;
}

}  // namespace pipedream
