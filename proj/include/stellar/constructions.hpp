#pragma once

#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/vectors.hpp"

namespace stellar {

// Vertices "1".."d+2"; d = -1 gives the empty complex.
Complex standard_sphere(int d);
// Single simplex on vertices "1".."d+1".
Complex standard_ball(int d);
// Join of d+1 copies of S^0 on vertices x1..x{d+1}, y1..y{d+1}.
Complex cross_polytope(int d);
// Orbit closure of the generators under i -> i+1 mod n; vertices "0".."n-1".
Complex cyclic_complex(int n, const std::vector<std::vector<int>>& generators);
// {x} * antistar(x), keeping the vertex names of s.
Complex cone_over_antistar(const Complex& s, VertexId x);

struct KleeNovik {
    Complex mbar;  // (d+1)-dimensional, facets of the cross polytope with at most k sign changes
    Complex m;     // its boundary
};
// Vertices x1..x{d+2}, y1..y{d+2}.
KleeNovik klee_novik(int k, int d);
// f-vector of M(k,d) predicted from its g-vector and Euler characteristic, for d >= 2k.
std::vector<BigInt> klee_novik_expected_f(int k, int d);

enum class KleeNovikMap { D, E, R };
// Vertex permutation of the named symmetry on the vertex ids of klee_novik(k, d).mbar.
std::vector<VertexId> klee_novik_automorphism(const Complex& mbar, int k, int d, KleeNovikMap which);

struct CorpusEntry {
    std::string name;
    std::string description;
    Complex complex;
    std::vector<long long> expected_f;
    std::vector<std::string> tags;
};

// Built once; every entry is checked against its expected f-vector (and, for transcribed facet
// lists, a frozen digest) and the first mismatch throws.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);
// Corpus entries plus parametric names: standard_sphere_D, standard_ball_D, cross_polytope_D,
// kn_K_D and knbar_K_D.
Complex named_complex(const std::string& name);
std::vector<std::string> corpus_names();

}  // namespace stellar
