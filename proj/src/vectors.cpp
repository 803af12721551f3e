#include "stellar/vectors.hpp"

namespace stellar {

BigInt binomial(long long n, long long k)
{
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    if (n >= 0 && k > n - k) k = n - k;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::vector<BigInt> f_vector(const Complex& x)
{
    std::vector<BigInt> f;
    for (int i = 0; i <= x.dim(); ++i) f.emplace_back(x.face_count(i));
    return f;
}

namespace {

// f_i for i = -1..d, with f_{-1} = 1.
BigInt f_at(const std::vector<BigInt>& f, int i) { return i < 0 ? BigInt(1) : f.at(static_cast<std::size_t>(i)); }

BigInt sign(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

void require_length(int d, std::size_t length, std::size_t expected, const char* what)
{
    if (length != expected)
        throw Error(Error::Kind::Input, std::string(what) + ": length " + std::to_string(length) +
                                            " does not match dimension " + std::to_string(d));
}

}  // namespace

std::vector<BigInt> h_from_f(int d, const std::vector<BigInt>& f)
{
    require_length(d, f.size(), static_cast<std::size_t>(d + 1), "f-vector");
    std::vector<BigInt> h;
    for (int j = 0; j <= d + 1; ++j) {
        BigInt sum = 0;
        for (int i = -1; i <= j - 1; ++i) sum += sign(j - i - 1) * binomial(d - i, j - i - 1) * f_at(f, i);
        h.push_back(sum);
    }
    return h;
}

std::vector<BigInt> g_from_f(int d, const std::vector<BigInt>& f)
{
    require_length(d, f.size(), static_cast<std::size_t>(d + 1), "f-vector");
    std::vector<BigInt> g;
    for (int j = 0; j <= d + 1; ++j) {
        BigInt sum = 0;
        for (int i = -1; i <= j - 1; ++i) sum += sign(j - i - 1) * binomial(d - i + 1, j - i - 1) * f_at(f, i);
        g.push_back(sum);
    }
    return g;
}

std::vector<BigInt> f_from_g(int d, const std::vector<BigInt>& g)
{
    require_length(d, g.size(), static_cast<std::size_t>(d + 2), "g-vector");
    if (g.front() != 1) throw Error(Error::Kind::Input, "g-vector must start with g_0 = 1");
    std::vector<BigInt> f;
    for (int i = 0; i <= d; ++i) {
        BigInt sum = 0;
        for (int j = 0; j <= i + 1; ++j) sum += binomial(d - j + 2, i - j + 1) * g[static_cast<std::size_t>(j)];
        f.push_back(sum);
    }
    return f;
}

std::vector<BigInt> h_vector(const Complex& x) { return h_from_f(x.dim(), f_vector(x)); }
std::vector<BigInt> g_vector(const Complex& x) { return g_from_f(x.dim(), f_vector(x)); }

VectorProfile profile(const Complex& x)
{
    VectorProfile p;
    p.d = x.dim();
    p.f = f_vector(x);
    p.h = h_from_f(p.d, p.f);
    p.g = g_from_f(p.d, p.f);
    return p;
}

bool ResidualReport::ok() const
{
    for (const auto& r : residuals)
        if (r != 0) return false;
    return true;
}

ResidualReport check_dehn_sommerville(const Complex& x)
{
    ResidualReport report = check_klee(x, x.dim() % 2 == 0 ? 2 : 0);
    report.name = "dehn-sommerville";
    return report;
}

ResidualReport check_klee(const Complex& x, long long chi)
{
    const int d = x.dim();
    const auto g = g_vector(x);
    const long long sphere_chi = (d % 2 == 0) ? 2 : 0;
    ResidualReport report;
    report.name = "klee";
    for (int i = 1; i <= d + 1; ++i) {
        BigInt r = g[static_cast<std::size_t>(d + 2 - i)] + g[static_cast<std::size_t>(i)];
        r -= sign(i - 1) * binomial(d + 2, i) * (chi - sphere_chi);
        report.residuals.push_back(r);
    }
    return report;
}

IdentitySides link_g_identity(const Complex& x, int j)
{
    const int d = x.dim();
    if (j < 0 || j > d) throw Error(Error::Kind::Range, "link identity index outside 0..d");
    IdentitySides sides;
    for (VertexId v = 0; v < static_cast<VertexId>(x.vertex_count()); ++v) {
        const Complex lk = link(x, Face{v});
        // Links are read as (d-1)-dimensional, padding missing top counts with zero.
        std::vector<BigInt> f = f_vector(lk);
        f.resize(static_cast<std::size_t>(d), BigInt(0));
        sides.lhs += g_from_f(d - 1, f)[static_cast<std::size_t>(j)];
    }
    const auto g = g_vector(x);
    sides.rhs = BigInt(d + 2 - j) * g[static_cast<std::size_t>(j)] + BigInt(j + 1) * g[static_cast<std::size_t>(j + 1)];
    return sides;
}

RationalSides euler_identity_check(int m, int d, int t)
{
    if (t < 0 || t > d || m < d + 2) throw Error(Error::Kind::Range, "identity requires 0 <= t <= d and m >= d+2");
    RationalSides sides;
    for (int j = 0; j <= m; ++j) sides.lhs += Rational(binomial(m - d - 2, j - t - 1), binomial(m, j));
    sides.rhs = Rational(BigInt(m + 1), BigInt(d + 3) * binomial(d + 2, t + 1));
    return sides;
}

bool RelationReport::ok() const
{
    for (const auto& line : lines)
        if (!line.holds()) return false;
    return true;
}

RelationReport w_k_gvector_relations(const Complex& x, int k)
{
    const int d = x.dim();
    const auto g = g_vector(x);
    RelationReport report;
    const Rational base(g.at(static_cast<std::size_t>(k + 1)), binomial(d + 2, k + 1));
    for (int j = k + 2; j <= d - k + 1; ++j) {
        RelationLine line;
        line.label = "g_" + std::to_string(j) + "/C(" + std::to_string(d + 2) + "," + std::to_string(j) + ")";
        line.lhs = Rational(g[static_cast<std::size_t>(j)], binomial(d + 2, j));
        line.rhs = (((j - k - 1) % 2 == 0) ? 1 : -1) * base;
        report.lines.push_back(line);
    }
    if (d % 2 == 0 && d >= 2 * k) {
        RelationLine line;
        line.label = "(-1)^k (chi - 2)";
        line.lhs = Rational(((k % 2 == 0) ? 1 : -1) * (euler_characteristic(x) - 2));
        line.rhs = 2 * base;
        report.lines.push_back(line);
    }
    return report;
}

}  // namespace stellar
