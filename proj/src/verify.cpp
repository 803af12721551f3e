#include "stellar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stellar/constructions.hpp"
#include "stellar/homology.hpp"
#include "stellar/moves.hpp"
#include "stellar/tightness.hpp"

namespace stellar {

namespace {

class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& actual, const B& expected, const std::string& what)
    {
        if (!(actual == expected)) failures.push_back(what + ": got " + show(actual) + ", expected " + show(expected));
    }

    std::vector<std::string> failures;

private:
    static std::string show(const std::string& s) { return s; }
    static std::string show(long long v) { return std::to_string(v); }
    static std::string show(int v) { return std::to_string(v); }
    static std::string show(std::size_t v) { return std::to_string(v); }
    static std::string show(const BigInt& v) { return to_string(v); }
    static std::string show(const Rational& v) { return to_string(v); }
    template <class T>
    static std::string show(const std::vector<T>& v)
    {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + show(v[i]);
        return out + ")";
    }
};

template <class T>
std::vector<BigInt> big(const std::vector<T>& v)
{
    return {v.begin(), v.end()};
}

bool has_tag(const CorpusEntry& e, const std::string& tag)
{
    return std::find(e.tags.begin(), e.tags.end(), tag) != e.tags.end();
}

std::string tag_value(const CorpusEntry& e, const std::string& prefix)
{
    for (const auto& t : e.tags)
        if (t.rfind(prefix, 0) == 0) return t.substr(prefix.size());
    return {};
}

// "1357 1356" -> {{1,3,5,7},{1,3,5,6}} with one-character vertex names.
FacetList digit_facets(const std::string& text)
{
    FacetList out;
    std::istringstream in(text);
    std::string word;
    while (in >> word) {
        std::vector<std::string> facet;
        for (char c : word) facet.emplace_back(1, c);
        out.push_back(facet);
    }
    return out;
}

std::vector<std::string> sorted_names(const Complex& x, Face f)
{
    auto names = x.names_of(f);
    std::sort(names.begin(), names.end());
    return names;
}

std::vector<long long> sphere_betti(int d)
{
    std::vector<long long> b(static_cast<std::size_t>(d + 1), 0);
    b[0] += 1;
    b[d] += 1;
    return b;
}

std::vector<long long> product_betti(int k, int d)
{
    std::vector<long long> b(static_cast<std::size_t>(d + 1), 0);
    b[0] = 1;
    b[k] += 1;
    b[d - k] += 1;
    b[d] = 1;
    return b;
}

bool homology_sphere(const Complex& x, Field field)
{
    return x.dim() >= 0 && betti(x, field).beta == sphere_betti(x.dim());
}

bool acyclic(const Complex& x, Field field)
{
    auto b = betti(x, field).reduced;
    return std::all_of(b.begin(), b.end(), [](long long v) { return v == 0; });
}

using MoveKey = std::pair<std::vector<std::string>, std::vector<std::string>>;

// Pairs (alpha, beta) with |alpha| + |beta| = d + 2, |beta| >= 2, spanning exactly alpha * ∂beta as an induced subcomplex.
std::set<MoveKey> brute_force_moves(const Complex& x)
{
    std::set<MoveKey> out;
    const int d = x.dim();
    const int m = x.vertex_count();
    for (std::uint64_t u = 1; u < (std::uint64_t{1} << m); ++u) {
        if (std::popcount(u) != d + 2) continue;
        for (std::uint64_t b = (u - 1) & u; b; b = (b - 1) & u) {
            const std::uint64_t a = u & ~b;
            if (a == 0 || std::popcount(b) < 2) continue;
            bool induced = true;
            for (std::uint64_t t = u;; t = (t - 1) & u) {
                if (x.contains(Face(t)) != ((t & b) != b)) {
                    induced = false;
                    break;
                }
                if (t == 0) break;
            }
            if (!induced) continue;
            auto an = x.names_of(Face(a)), bn = x.names_of(Face(b));
            std::sort(an.begin(), an.end());
            std::sort(bn.begin(), bn.end());
            out.insert({an, bn});
        }
    }
    return out;
}

std::set<MoveKey> move_keys(const std::vector<BistellarMove>& moves)
{
    std::set<MoveKey> out;
    for (const auto& mv : moves) out.insert({mv.alpha, mv.beta});
    return out;
}

// g changes by +1 at index l+1 and -1 at d-l+1 for a move of index l (nothing when 2l = d).
bool g_delta_holds(const Complex& before, const Complex& after, int index)
{
    const int d = before.dim();
    const auto g0 = g_vector(before), g1 = g_vector(after);
    if (g0.size() != g1.size()) return false;
    for (int j = -1; j <= d; ++j) {
        BigInt expected = 0;
        if (2 * index != d) {
            if (j == index) expected += 1;
            if (j == d - index) expected -= 1;
        }
        if (g1[j + 1] - g0[j + 1] != expected) return false;
    }
    return true;
}

Complex random_sphere(int d, int extra_vertices, std::mt19937_64& rng)
{
    Complex s = standard_sphere(d);
    for (int i = 0; i < extra_vertices; ++i) {
        auto zero = zero_moves(s, "v" + std::to_string(i));
        s = apply_bistellar(s, zero[rng() % zero.size()]);
        auto moves = enumerate_bistellar(s);
        for (int flips = 0; flips < 3 && !moves.empty(); ++flips) {
            const auto& mv = moves[rng() % moves.size()];
            if (mv.index == d) continue;
            s = apply_bistellar(s, mv);
            moves = enumerate_bistellar(s);
        }
    }
    return s;
}

// Complete graph plus random triangles and a few tetrahedra.
Complex random_two_neighbourly(std::mt19937_64& rng, int m)
{
    FacetList facets;
    auto name = [](int v) { return "v" + std::to_string(v); };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            facets.push_back({name(a), name(b)});
            for (int c = b + 1; c < m; ++c) {
                if (rng() % 3 == 0) facets.push_back({name(a), name(b), name(c)});
                const int e = static_cast<int>(rng() % m);
                if (rng() % 23 == 0 && e != a && e != b && e != c) facets.push_back({name(a), name(b), name(c), name(e)});
            }
        }
    return Complex::from_facets(facets);
}

TightnessOptions tightness_options(const VerifyOptions& o)
{
    TightnessOptions t;
    t.jobs = o.jobs;
    t.sigma_cap = std::max(t.sigma_cap, o.sigma_cap);
    return t;
}

StellationOptions stellation_options(const VerifyOptions& o)
{
    StellationOptions s;
    s.budget = o.budget;
    s.seed = o.seed;
    return s;
}

const std::vector<Field> kAllFields = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};

void corpus_face_counts(Checker& c, const VerifyOptions&)
{
    c.equal(f_vector(corpus_entry("S3_16").complex), big(std::vector<int>{16, 120, 208, 104}), "f(S3_16)");
    c.equal(f_vector(corpus_entry("Sigma3_16").complex), big(std::vector<int>{16, 106, 180, 90}), "f(Sigma3_16)");
    c.equal(corpus_entry("ziegler_B2").complex.facets().size(), std::size_t{21}, "facets of ziegler_B2");
    c.equal(corpus_entry("lutz_B2").complex.facets().size(), std::size_t{15}, "facets of lutz_B2");
    for (const auto& e : corpus()) c.equal(f_vector(e.complex), big(e.expected_f), "f(" + e.name + ")");
}

void unflippable(Checker& c, const VerifyOptions&)
{
    c.expect(enumerate_bistellar(corpus_entry("S3_16").complex).empty(), "S3_16 admits a bistellar move");
    // The boundaries of B4_16 joined with a simplex of dimension d-4, for d = 4, 5.
    const Complex& b4 = corpus_entry("B4_16").complex;
    for (int d : {4, 5}) {
        FacetList facets;
        for (Face f : b4.facets()) {
            auto names = b4.names_of(f);
            for (int i = 1; i <= d - 3; ++i) names.push_back("e" + std::to_string(i));
            facets.push_back(names);
        }
        const Complex sphere = boundary(Complex::from_facets(facets));
        c.equal(sphere.dim(), d, "dimension of the joined boundary");
        c.expect(homology_sphere(sphere, Field::rationals()), "joined boundary is not a homology sphere, d=" + std::to_string(d));
        c.expect(enumerate_bistellar(sphere).empty(), "joined boundary admits a move, d=" + std::to_string(d));
    }
}

void homology_sphere_betti(Checker& c, const VerifyOptions&)
{
    for (Field field : kAllFields)
        c.equal(betti(corpus_entry("Sigma3_16").complex, field).beta, std::vector<long long>{1, 0, 0, 1},
                "Betti numbers of Sigma3_16 over " + field.name());
}

void ears_and_shellings(Checker& c, const VerifyOptions& o)
{
    const Complex& zb2 = corpus_entry("ziegler_B2").complex;
    c.expect(ears(zb2).empty(), "ziegler_B2 has an ear");
    const auto search = find_shelling(zb2, o.budget);
    c.expect(search.outcome == ShellingSearch::Outcome::None,
             "find_shelling(ziegler_B2) did not exhaust to none (nodes " + std::to_string(search.nodes) + ")");

    const auto& lutz = corpus_entry("lutz_B2");
    std::vector<std::vector<std::string>> ear_names;
    for (Face f : ears(lutz.complex)) ear_names.push_back(sorted_names(lutz.complex, f));
    c.expect(ear_names == std::vector<std::vector<std::string>>{{"2", "4", "5", "7"}}, "ears(lutz_B2) is not {2457}");
    const auto check = verify_shelling(lutz.complex, digit_facets(tag_value(lutz, "shelling-order:")));
    c.expect(check.valid, "printed shelling order of lutz_B2 fails: " + check.message);
    c.expect(check.certificate && check.certificate->k_bound == 2, "lutz_B2 certificate does not type as 2-shelled");
    c.expect(check.h_matches, "lutz_B2 step indices do not reproduce its h-vector");
}

void klee_novik_checks(Checker& c, const VerifyOptions& o)
{
    for (auto [k, d] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
        const std::string tag = "M(" + std::to_string(k) + "," + std::to_string(d) + ")";
        const KleeNovik kn = klee_novik(k, d);
        c.equal(kn.m.vertex_count(), 2 * d + 4, "vertices of " + tag);
        const auto g = g_vector(kn.m);
        for (int j = 0; j <= k + 1; ++j) c.equal(g[j], binomial(d + 2, j), "g_" + std::to_string(j) + " of " + tag);
        c.expect(boundary(kn.mbar) == kn.m, "boundary of the filled complex differs from " + tag);
        c.equal(betti(kn.m, Field::rationals()).beta, product_betti(k, d), "Betti numbers of " + tag);
        if (d >= 2 * k + 2) {
            const auto canon = canonical_manifold(kn.m, k);
            c.expect(canon.status == CanonicalResult::Status::Ok && canon.complex == kn.mbar,
                     "canonical_manifold does not reproduce the filling of " + tag + ": " + canon.diagnostic);
        }
        const auto wk = w_k_membership(kn.m, k, stellation_options(o), o.jobs);
        c.expect(wk.verdict == WkMembership::Verdict::Member, tag + " links not all certified: " + to_string(wk.verdict));
    }
}

void cross_polytope_forms(Checker& c, const VerifyOptions& o)
{
    const auto options = tightness_options(o);
    for (int d = 1; d <= 5; ++d) {
        const std::string tag = "d=" + std::to_string(d);
        const Complex x = cross_polytope(d);
        const auto sigma = sigma_vector(x, Field::rationals(), options);
        const auto mu = mu_vector(x, Field::rationals(), options);
        c.equal(sigma[0], Rational(-2 * d, 2 * d + 1), "sigma_0, " + tag);
        for (int i = 1; i <= d; ++i)
            c.equal(sigma[i], Rational(binomial(d + 1, i + 1), binomial(2 * d + 2, 2 * i + 2)), "sigma_" + std::to_string(i) + ", " + tag);
        for (int i = 0; i <= d; ++i)
            c.equal(mu[i], Rational(binomial(d, i), binomial(2 * d, 2 * i)), "mu_" + std::to_string(i) + ", " + tag);
        Rational alternating = 0;
        for (int i = 0; i <= d; ++i) alternating += ((d - i) % 2 ? -1 : 1) * mu[i];
        c.equal(alternating, Rational(2 * d + 1, 2 * d + 2) * (d % 2 ? 0 : 2), "alternating mu sum, " + tag);
    }
}

void tightness_witnesses(Checker& c, const VerifyOptions& o)
{
    const auto options = tightness_options(o);
    for (TightMode mode : {TightMode::Direct, TightMode::MuBeta}) {
        const std::string name = mode == TightMode::Direct ? "direct" : "mu-beta";
        for (int d = 1; d <= 5; ++d)
            c.expect(is_tight(standard_sphere(d), Field::rationals(), mode, options).tight,
                     "standard " + std::to_string(d) + "-sphere not tight (" + name + ")");
        const auto torus = is_tight(corpus_entry("torus_7").complex, Field::rationals(), mode, options);
        c.expect(torus.tight, "torus_7 not tight over Q (" + name + ")");
        c.expect(is_tight(corpus_entry("rp2_6").complex, Field::prime(2), mode, options).tight, "rp2_6 not tight over Z2 (" + name + ")");
        c.expect(!is_tight(corpus_entry("rp2_6").complex, Field::rationals(), mode, options).tight, "rp2_6 tight over Q (" + name + ")");
    }
    const auto torus = is_tight(corpus_entry("torus_7").complex, Field::rationals(), TightMode::MuBeta, options);
    c.equal(torus.mu, std::vector<Rational>{1, 2, 1}, "mu of torus_7");
    c.equal(torus.beta, std::vector<long long>{1, 2, 1}, "beta of torus_7");
}

void manifold_lower_bound(Checker& c, const VerifyOptions& o)
{
    const Complex m = klee_novik(1, 4).m;
    c.equal(f_vector(m), big(std::vector<int>{12, 60, 120, 120, 48}), "f(M(1,4))");
    c.equal(betti(m, Field::prime(2)).beta[1], 1LL, "beta_1(M(1,4); Z2)");
    BatteryOptions battery;
    battery.tightness = tightness_options(o);
    battery.wk_certified = w_k_membership(m, 1, stellation_options(o), o.jobs).verdict == WkMembership::Verdict::Member;
    const auto report = criterion_battery(m, 1, Field::prime(2), battery);
    int equalities = 0;
    bool strict_b = false;
    for (const auto& line : report.lines) {
        if (line.criterion != "manifold-lower-bound") continue;
        c.expect(line.hypothesis_met, "manifold hypothesis not met for " + line.clause);
        if (line.clause == "(b)")
            strict_b = line.outcome == CriterionLine::Outcome::Holds;
        else if (line.outcome == CriterionLine::Outcome::Equality)
            ++equalities;
        else
            c.expect(false, "no equality at " + line.clause + ": " + line.lhs + " vs " + line.rhs);
    }
    c.equal(equalities, 4, "equalities in the face-count bound");
    c.expect(strict_b, "the vertex-count bound is not strict");
    c.expect(report.consistent(), "criterion battery inconsistent");
}

void identity_suites(Checker& c, const VerifyOptions& o)
{
    for (const auto& e : corpus()) {
        const Complex& x = e.complex;
        const int d = x.dim();
        const auto f = f_vector(x);
        c.equal(f_from_g(d, g_from_f(d, f)), f, "f/h/g round trip on " + e.name);
        const auto h = h_from_f(d, f);
        const auto g = g_from_f(d, f);
        for (int j = 1; j <= d + 1; ++j) c.expect(g[j] == h[j] - h[j - 1], "g = delta h on " + e.name);
        const bool sphere = has_tag(e, "sphere") || has_tag(e, "homology-sphere");
        if (sphere) c.expect(check_dehn_sommerville(x).ok(), "Dehn-Sommerville residual on " + e.name);
        if (sphere || has_tag(e, "manifold"))
            c.expect(check_klee(x, euler_characteristic(x)).ok(), "Klee residual on " + e.name);
        for (int j = 0; j <= d; ++j) {
            const auto sides = link_g_identity(x, j);
            c.expect(sides.lhs == sides.rhs, "link g identity at j=" + std::to_string(j) + " on " + e.name);
        }
    }
    for (int m = 2; m <= 30; ++m)
        for (int d = 0; d <= m - 2; ++d)
            for (int t = 0; t <= d; ++t) {
                const auto sides = euler_identity_check(m, d, t);
                c.expect(sides.lhs == sides.rhs, "Euler identity at m=" + std::to_string(m) + " d=" + std::to_string(d) +
                                                      " t=" + std::to_string(t));
            }
    std::mt19937_64 rng(o.seed + 500);
    for (int d : {2, 3}) {
        Complex s = standard_sphere(d);
        int fresh = 0;
        for (int step = 0; step < 500; ++step) {
            auto moves = enumerate_bistellar(s);
            if (s.vertex_count() < 12) {
                auto zero = zero_moves(s, "w" + std::to_string(fresh));
                moves.push_back(zero[rng() % zero.size()]);
            }
            const auto mv = moves[rng() % moves.size()];
            const Complex next = apply_bistellar(s, mv);
            if (mv.index == 0) ++fresh;
            c.expect(g_delta_holds(s, next, mv.index), "g-vector change of a move, walk step " + std::to_string(step));
            s = next;
        }
    }
}

void oracle_equivalences(Checker& c, const VerifyOptions& o)
{
    const auto options = tightness_options(o);
    std::mt19937_64 rng(o.seed + 10);
    std::vector<Complex> neighbourly = {corpus_entry("torus_7").complex, corpus_entry("rp2_6").complex};
    for (int d = 1; d <= 7; ++d) neighbourly.push_back(standard_sphere(d));
    for (int i = 0; i < 12; ++i) neighbourly.push_back(random_two_neighbourly(rng, 4 + i % 6));
    for (const auto& x : neighbourly)
        for (Field field : {Field::rationals(), Field::prime(2)})
            c.expect(mu_via_pairs(x, field, options) == mu_vector(x, field, options),
                     "pair and link mu-vectors differ on a " + std::to_string(x.vertex_count()) + "-vertex complex");

    std::vector<Complex> small;
    for (const auto& e : corpus())
        if (e.complex.vertex_count() <= 12) small.push_back(e.complex);
    for (int d = 1; d <= 5; ++d) small.push_back(cross_polytope(d));
    for (int i = 0; i < 8; ++i) small.push_back(random_two_neighbourly(rng, 5 + i % 4));
    for (const auto& x : small)
        for (Field field : {Field::rationals(), Field::prime(2)})
            c.expect(is_tight(x, field, TightMode::Direct, options).tight == is_tight(x, field, TightMode::MuBeta, options).tight,
                     "tightness modes disagree on a " + std::to_string(x.vertex_count()) + "-vertex complex over " + field.name());

    std::vector<Complex> spheres;
    for (const auto& e : corpus())
        if (e.complex.vertex_count() <= 10 && (has_tag(e, "sphere") || has_tag(e, "manifold"))) spheres.push_back(e.complex);
    for (int i = 0; i < 12; ++i) spheres.push_back(random_sphere(2 + i % 3, 1 + i % 5, rng));
    for (const auto& x : spheres)
        if (x.vertex_count() <= 10)
            c.expect(move_keys(enumerate_bistellar(x)) == brute_force_moves(x),
                     "move enumeration differs from the induced-subcomplex oracle");
}

void morse_inequalities(Checker& c, const VerifyOptions& o)
{
    const auto options = tightness_options(o);
    int checked = 0, dualities = 0;
    for (const auto& e : corpus()) {
        const Complex& x = e.complex;
        if (neighbourliness(x) < 2 || x.vertex_count() - 1 > options.sigma_cap) continue;
        for (Field field : {Field::rationals(), Field::prime(2)}) {
            const auto r = morse_report(x, field, options);
            const std::string tag = e.name + " over " + field.name();
            ++checked;
            for (std::size_t j = 0; j < r.slack.size(); ++j) c.expect(r.slack[j] >= 0, "negative slack at j=" + std::to_string(j) + " on " + tag);
            c.expect(r.slack.back() == 0, "nonzero top slack on " + tag);
            for (std::size_t j = 0; j < r.weak.size(); ++j) c.expect(r.weak[j], "mu below beta at j=" + std::to_string(j) + " on " + tag);
            const bool closed_orientable = is_closed_pseudomanifold(x) && orientable(x, field) && is_homology_manifold(x, field);
            if (closed_orientable) {
                ++dualities;
                c.expect(r.duality && *r.duality, "duality fails on " + tag);
            }
        }
    }
    c.expect(checked >= 10, "too few 2-neighbourly corpus complexes checked");
    c.expect(dualities >= 6, "too few duality checks");
}

void corpus_tags(Checker& c, const VerifyOptions& o)
{
    for (const auto& e : corpus()) {
        const Complex& x = e.complex;
        for (const auto& tag : e.tags) {
            const std::string where = tag + " on " + e.name;
            if (tag == "sphere") {
                c.expect(is_closed_pseudomanifold(x) && homology_sphere(x, Field::rationals()) && homology_sphere(x, Field::prime(2)) &&
                             is_homology_manifold(x, Field::prime(2)),
                         where);
            } else if (tag == "homology-sphere") {
                for (Field field : kAllFields) c.expect(homology_sphere(x, field), where + " over " + field.name());
            } else if (tag == "ball" || tag == "homology-ball") {
                const Complex bd = boundary(x);
                c.expect(!bd.is_empty() && acyclic(x, Field::rationals()) && acyclic(x, Field::prime(2)), where);
                c.expect(homology_sphere(bd, Field::rationals()), where + ": boundary");
            } else if (tag == "manifold") {
                c.expect(is_closed_pseudomanifold(x) && is_homology_manifold(x, Field::rationals()) && is_homology_manifold(x, Field::prime(2)), where);
            } else if (tag == "unflippable") {
                c.expect(enumerate_bistellar(x).empty(), where);
            } else if (tag == "2-neighbourly") {
                c.expect(neighbourliness(x) >= 2, where);
            } else if (tag == "2-stacked") {
                c.expect(is_k_stacked_ball(x, 2), where);
            } else if (tag == "no-ears") {
                c.expect(ears(x).empty(), where);
            } else if (tag == "not-shellable") {
                c.expect(find_shelling(x, o.budget).outcome == ShellingSearch::Outcome::None, where);
            } else if (tag == "dual-graph:path") {
                c.expect(dual_graph(x).is_path(), where);
            } else if (tag.rfind("ears:", 0) == 0) {
                std::vector<std::vector<std::string>> expected = digit_facets(tag.substr(5)), got;
                for (Face f : ears(x)) got.push_back(sorted_names(x, f));
                c.expect(got == expected, where);
            } else if (tag.rfind("shelling-order:", 0) == 0) {
                c.expect(verify_shelling(x, digit_facets(tag.substr(15))).valid, where);
            } else if (tag.rfind("boundary:", 0) == 0) {
                c.expect(boundary(x) == corpus_entry(tag.substr(9)).complex, where);
            } else if (tag.rfind("edge-link:", 0) == 0) {
                const auto eq = tag.find('=');
                std::istringstream in(tag.substr(10, eq - 10));
                std::vector<std::string> edge;
                for (std::string v; in >> v;) edge.push_back(v);
                c.expect(link(x, x.face_of(edge)) == corpus_entry(tag.substr(eq + 1)).complex, where);
            } else {
                c.expect(false, "unknown tag " + where);
            }
        }
    }
}

void shelled_versus_stacked(Checker& c, const VerifyOptions& o)
{
    int compared = 0;
    for (const auto& e : corpus()) {
        if (!has_tag(e, "ball")) continue;
        const Complex& b = e.complex;
        int stacked = b.dim();
        for (int k = 0; k <= b.dim(); ++k)
            if (is_k_stacked_ball(b, k)) {
                stacked = k;
                break;
            }
        const auto search = find_shelling(b, o.budget);
        if (search.outcome != ShellingSearch::Outcome::Found) continue;
        ++compared;
        // Shelled with indices below k exactly when shellable and k-stacked, so the least such k agree.
        c.equal(search.certificate->k_bound, stacked, "least shelling index bound against least stacking on " + e.name);
        c.expect(replay(*search.certificate) == b, "shelling certificate does not replay to " + e.name);
    }
    c.expect(compared >= 3, "too few shellable corpus balls");
    const auto& lutz = corpus_entry("lutz_B2");
    c.expect(is_k_stacked_ball(lutz.complex, 2) && !is_k_stacked_ball(lutz.complex, 1), "lutz_B2 is not exactly 2-stacked");
}

void middle_moves(Checker& c, const VerifyOptions& o)
{
    // Every sphere along a k-stellated certificate is k-stellated, so each must lack moves of index k+1..d-k.
    int spheres = 0;
    for (auto [k, d] : {std::pair{1, 4}, {1, 5}, {2, 6}}) {
        const Complex m = klee_novik(k, d).m;
        for (VertexId v = 0; v < (d == 4 ? 3u : 1u); ++v) {
            const Complex lk = link(m, Face{v});
            const auto result = stellation_search(lk, k, stellation_options(o));
            if (!result.certificate) {
                c.expect(false, "no certificate for a vertex link of M(" + std::to_string(k) + "," + std::to_string(d) + ")");
                continue;
            }
            Complex x = result.certificate->start;
            const int sd = x.dim();
            auto check = [&](const Complex& s) {
                ++spheres;
                for (const auto& mv : enumerate_bistellar(s))
                    c.expect(mv.index < k + 1 || mv.index > sd - k, "a k-stellated sphere admits a move of index " + std::to_string(mv.index));
            };
            check(x);
            for (const auto& step : result.certificate->steps) {
                x = apply_bistellar(x, {step.alpha, step.beta, step.index});
                check(x);
            }
        }
    }
    c.expect(spheres > 10, "too few certified spheres examined");
}

struct CheckDef {
    const char* title;
    void (*run)(Checker&, const VerifyOptions&);
};

const std::vector<CheckDef>& checks()
{
    static const std::vector<CheckDef> all = {
        {"corpus face counts", corpus_face_counts},
        {"unflippable spheres", unflippable},
        {"homology 3-sphere Betti numbers", homology_sphere_betti},
        {"ears and shellability", ears_and_shellings},
        {"Klee-Novik complexes", klee_novik_checks},
        {"cross polytope sigma and mu", cross_polytope_forms},
        {"tightness witnesses", tightness_witnesses},
        {"manifold lower bound on M(1,4)", manifold_lower_bound},
        {"identity suites", identity_suites},
        {"oracle equivalences", oracle_equivalences},
        {"Morse inequalities", morse_inequalities},
        {"corpus tags", corpus_tags},
        {"shelled versus stacked balls", shelled_versus_stacked},
        {"no middle-index moves on stellated spheres", middle_moves},
    };
    return all;
}

}  // namespace

int check_count() { return static_cast<int>(checks().size()); }

std::string check_title(int id)
{
    if (id < 1 || id > check_count()) throw Error(Error::Kind::Range, "no check numbered " + std::to_string(id));
    return checks()[static_cast<std::size_t>(id - 1)].title;
}

CheckResult run_check(int id, const VerifyOptions& options)
{
    CheckResult r;
    r.id = id;
    r.title = check_title(id);
    const auto start = std::chrono::steady_clock::now();
    Checker c;
    try {
        checks()[static_cast<std::size_t>(id - 1)].run(c, options);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.failures = std::move(c.failures);
    r.passed = r.failures.empty();
    return r;
}

std::vector<CheckResult> run_checks(const VerifyOptions& options, bool stop_on_failure,
                                    const std::function<void(const CheckResult&)>& on_result)
{
    std::vector<CheckResult> out;
    for (int id = 1; id <= check_count(); ++id) {
        out.push_back(run_check(id, options));
        if (on_result) on_result(out.back());
        if (stop_on_failure && !out.back().passed) break;
    }
    return out;
}

std::string to_json(const std::vector<CheckResult>& results)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json item;
        item["id"] = r.id;
        item["title"] = r.title;
        item["passed"] = r.passed;
        item["failures"] = r.failures;
        j.push_back(std::move(item));
    }
    return j.dump(2);
}

}  // namespace stellar
