#pragma once

#include <random>
#include <string>
#include <vector>

#include "stellar/complex.hpp"

namespace test {

// Facets separated by ';', vertices by spaces.
inline stellar::Complex cx(const std::string& spec)
{
    std::string text = spec;
    for (char& c : text)
        if (c == ';') c = '\n';
    return stellar::parse_facet_text(text);
}

// Facets written as digit strings, e.g. "124 134".
inline stellar::Complex digits(const std::string& spec)
{
    stellar::FacetList facets;
    std::vector<std::string> facet;
    for (char c : spec + " ") {
        if (c == ' ') {
            if (!facet.empty()) facets.push_back(facet);
            facet.clear();
        } else {
            facet.push_back(std::string(1, c));
        }
    }
    return stellar::Complex::from_facets(facets);
}

inline stellar::Face ids(const stellar::Complex& x, const std::vector<std::string>& names) { return x.face_of(names); }

// Direct definition: a face is in X iff it lies in some facet.
inline bool contains_by_scan(const stellar::Complex& x, stellar::Face f)
{
    for (stellar::Face facet : x.facets())
        if (f.subset_of(facet)) return true;
    return false;
}

}  // namespace test
