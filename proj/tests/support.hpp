#pragma once

#include "doctest.h"

#include "pipedream/composition.hpp"
#include "pipedream/diagram.hpp"
#include "pipedream/permutation.hpp"

namespace doctest {

template <>
struct StringMaker<pipedream::Diagram> {
    static String convert(const pipedream::Diagram& d) { return pipedream::to_string(d).c_str(); }
};

template <>
struct StringMaker<pipedream::WeakComposition> {
    static String convert(const pipedream::WeakComposition& w) { return w.to_string().c_str(); }
};

template <>
struct StringMaker<pipedream::Permutation> {
    static String convert(const pipedream::Permutation& w) { return w.to_string().c_str(); }
};

template <>
struct StringMaker<std::vector<int>> {
    static String convert(const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
        return (s + "]").c_str();
    }
};

}  // namespace doctest
