#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pipedream/composition.hpp"

namespace pipedream {

using Coefficient = boost::multiprecision::cpp_int;

struct Monomial {
    WeakComposition xexp;
    WeakComposition yexp;

    int degree() const { return xexp.total() + yexp.total(); }
    bool is_one() const { return xexp.is_zero() && yexp.is_zero(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m);  // "x1^2*y3", "1" for the unit

enum class Alphabet { x, y };

struct Variable {
    Alphabet alphabet;
    int index;

    friend bool operator==(const Variable&, const Variable&) = default;
};

// Lexicographic term order given by a ranking of the variables from greatest
// to least. The standard ranking is x_n > ... > x_1 > y_n > ... > y_1 for
// every n; other rankings list finitely many variables explicitly and are
// only meaningful for monomials supported on them.
class TermOrder {
public:
    static TermOrder standard();
    /// Throws std::invalid_argument unless ranking orders each alphabet by
    /// decreasing index.
    static TermOrder ranking(std::vector<Variable> greatest_first);
    /// A random interleaving of x_n > ... > x_1 with y_n > ... > y_1.
    static TermOrder random_admissible(int n, std::mt19937_64& rng);

    /// Strict "a > b".
    bool greater(const Monomial& a, const Monomial& b) const;

    bool is_standard() const { return ranking_.empty(); }
    const std::vector<Variable>& variables() const { return ranking_; }

private:
    std::vector<Variable> ranking_;  // empty = standard
};

// Sparse polynomial in x_1, x_2, ... and y_1, y_2, ... with integer
// coefficients. Terms are kept in descending standard order, no zero
// coefficients stored.
class Polynomial {
    struct StandardDescending {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return TermOrder::standard().greater(a, b);
        }
    };

public:
    using TermMap = std::map<Monomial, Coefficient, StandardDescending>;

    Polynomial() = default;
    static Polynomial constant(const Coefficient& c);
    static Polynomial monomial(const Monomial& m, const Coefficient& c = 1);
    static Polynomial x(int i);
    static Polynomial y(int j);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Coefficient coefficient(const Monomial& m) const;

    /// Highest / lowest total degree present. Throws on the zero polynomial.
    int max_degree() const;
    int min_degree() const;

    void add_term(const Monomial& m, const Coefficient& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        r *= b;
        return r;
    }
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

Polynomial degree_component(const Polynomial& p, int d);
Polynomial top_degree(const Polynomial& p);
Polynomial bottom_degree(const Polynomial& p);

/// Substitutes y_j = 0 for every j.
Polynomial set_y_zero(const Polynomial& p);

/// Greatest monomial and its coefficient. Throws std::invalid_argument on 0.
std::pair<Monomial, Coefficient> leading_term(const Polynomial& p,
                                              const TermOrder& order = TermOrder::standard());

/// "x1*y2 - 2*x1^2 + 1", terms in descending standard order.
std::string to_string(const Polynomial& p);

}  // namespace pipedream
