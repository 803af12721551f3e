#include <doctest.h>

#include "helpers.hpp"
#include "stellar/vectors.hpp"

using namespace stellar;
using test::digits;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> values)
{
    std::vector<BigInt> out;
    for (long long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("binomials")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-3, 2) == 6);  // (-3)(-4)/2
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("h and g of the 4-cycle")
{
    Complex c4 = digits("12 23 34 41");
    CHECK(f_vector(c4) == ints({4, 4}));
    CHECK(h_vector(c4) == ints({1, 2, 1}));
    CHECK(g_vector(c4) == ints({1, 1, -1}));
}

TEST_CASE("standard sphere has g = (1, 0, ..., 0)")
{
    Complex s24 = digits("123 124 134 234");
    CHECK(g_vector(s24) == ints({1, 0, 0, 0}));
    CHECK(h_vector(s24) == ints({1, 1, 1, 1}));
}

TEST_CASE("f from g inverts g from f")
{
    const std::vector<std::vector<BigInt>> samples = {ints({4, 4}), ints({5, 9, 6}), ints({16, 120, 208, 104}),
                                                      ints({10, 24, 22, 7}), ints({3})};
    for (const auto& f : samples) {
        const int d = static_cast<int>(f.size()) - 1;
        const auto g = g_from_f(d, f);
        CHECK(f_from_g(d, g) == f);
        CHECK(g[1] == f[0] - (d + 2));
        const auto h = h_from_f(d, f);
        for (int j = 1; j <= d + 1; ++j) CHECK(g[j] == h[j] - h[j - 1]);
    }
    CHECK_THROWS_AS(f_from_g(2, ints({1, 2})), Error);
    CHECK_THROWS_AS(f_from_g(1, ints({2, 0, 0})), Error);
}

TEST_CASE("Euler identity sums")
{
    // Hand oracle for (6,3,0): only j = 1 and j = 2 contribute, 1/6 + 1/15.
    auto s = euler_identity_check(6, 3, 0);
    CHECK(s.lhs == Rational(7, 30));
    CHECK(s.rhs == Rational(7, 30));
    for (int m = 2; m <= 30; ++m)
        for (int d = 0; d <= std::min(10, m - 2); ++d)
            for (int t = 0; t <= d; ++t) {
                auto sides = euler_identity_check(m, d, t);
                CHECK(sides.lhs == sides.rhs);
            }
}

TEST_CASE("Dehn-Sommerville and Klee residuals")
{
    Complex s24 = digits("123 124 134 234");
    CHECK(check_dehn_sommerville(s24).ok());
    Complex path = digits("12 23 34");
    CHECK_FALSE(check_dehn_sommerville(path).ok());
}

TEST_CASE("link g identity on small complexes")
{
    for (const Complex& c : {digits("123 124 134 234"), digits("124 134 234 125 135 235"), digits("12 23 34"),
                             digits("1234 2345")}) {
        for (int j = 0; j <= c.dim(); ++j) {
            auto sides = link_g_identity(c, j);
            CHECK(sides.lhs == sides.rhs);
        }
    }
    auto s = link_g_identity(digits("123 124 134 234"), 1);
    CHECK(s.lhs == 0);
    CHECK(s.rhs == 0);
}

TEST_CASE("rational formatting")
{
    CHECK(to_string(Rational(-4, 5)) == "-4/5");
    CHECK(to_string(Rational(6, 3)) == "2");
}
