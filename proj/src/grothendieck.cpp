#include "pipedream/grothendieck.hpp"

#include "pipedream/diagram.hpp"
#include "pipedream/errors.hpp"
#include "pipedream/pipedream.hpp"

#include <stdexcept>
#include <string>

namespace pipedream {

namespace {

constexpr int kExpansionLimit = 7;

void guard(const char* what, const Permutation& w, bool unguarded) {
    if (!unguarded) check_guard(what, w.size(), kExpansionLimit);
}

}  // namespace

Polynomial cross_factor(int i, int j) {
    Polynomial xy = Polynomial::x(i) * Polynomial::y(j);
    return Polynomial::x(i) + Polynomial::y(j) - xy;
}

Polynomial grothendieck_double(const Permutation& w, bool unguarded) {
    guard("grothendieck_double", w, unguarded);
    Polynomial sum;
    for (const Pipedream& p : enumerate_pd(w, unguarded)) {
        Polynomial term = Polynomial::constant(1);
        for (Cell cell : p.crosses()) term *= cross_factor(cell.row, cell.col);
        sum += term;
    }
    return sum;
}

Polynomial grothendieck_single(const Permutation& w, bool unguarded) {
    guard("grothendieck_single", w, unguarded);
    Polynomial sum;
    for (const Pipedream& p : enumerate_pd(w, unguarded)) {
        sum.add_term(Monomial{row_weight(p.crosses()), {}}, 1);
    }
    return sum;
}

std::vector<Monomial> per_degree_leading(const Permutation& w, bool unguarded) {
    const Polynomial g = grothendieck_single(w, unguarded);
    std::vector<Monomial> out;
    for (int d = invcode(w).total(); d <= rajcode(w).total(); ++d) {
        const Polynomial component = degree_component(g, d);
        if (component.is_zero()) {
            throw std::logic_error("no terms of degree " + std::to_string(d) + " in the expansion of " +
                                   w.to_string());
        }
        out.push_back(leading_term(component).first);
    }
    return out;
}

}  // namespace pipedream
