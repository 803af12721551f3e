#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stellar/complex.hpp"

namespace stellar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Generalised binomial coefficient; zero for k < 0.
BigInt binomial(long long n, long long k);
std::string to_string(const BigInt& value);
// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// f_0..f_d (f_{-1} = 1 is implicit).
std::vector<BigInt> f_vector(const Complex& x);
// Transforms for a complex of dimension d given f_0..f_d.
std::vector<BigInt> h_from_f(int d, const std::vector<BigInt>& f);
std::vector<BigInt> g_from_f(int d, const std::vector<BigInt>& f);
std::vector<BigInt> f_from_g(int d, const std::vector<BigInt>& g);
std::vector<BigInt> h_vector(const Complex& x);
std::vector<BigInt> g_vector(const Complex& x);

struct VectorProfile {
    int d = -1;
    std::vector<BigInt> f;  // f_0..f_d
    std::vector<BigInt> h;  // h_0..h_{d+1}
    std::vector<BigInt> g;  // g_0..g_{d+1}
};
VectorProfile profile(const Complex& x);

struct ResidualReport {
    std::string name;
    std::vector<BigInt> residuals;  // indexed by the checked index starting at first_index
    int first_index = 1;
    bool ok() const;
};

// g_{d+2-i} + g_i for 1 <= i <= d+1.
ResidualReport check_dehn_sommerville(const Complex& x);
// g_{d+2-i} + g_i - (-1)^{i-1} C(d+2,i) (chi - chi(S^d)) for 1 <= i <= d+1.
ResidualReport check_klee(const Complex& x, long long chi);

struct IdentitySides {
    BigInt lhs;
    BigInt rhs;
};
// Sum over vertices of g_j of the link against (d+2-j) g_j + (j+1) g_{j+1}.
IdentitySides link_g_identity(const Complex& x, int j);

struct RationalSides {
    Rational lhs;
    Rational rhs;
};
// Sum_j C(m-d-2, j-t-1)/C(m,j) against (m+1)/((d+3) C(d+2,t+1)).
RationalSides euler_identity_check(int m, int d, int t);

struct RelationLine {
    std::string label;
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};
struct RelationReport {
    std::vector<RelationLine> lines;
    bool ok() const;
};
// g-vector relations forced on members of W_k(d), plus the Euler characteristic formula for even d >= 2k.
RelationReport w_k_gvector_relations(const Complex& x, int k);

}  // namespace stellar
