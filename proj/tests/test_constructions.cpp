#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "stellar/constructions.hpp"
#include "stellar/homology.hpp"

using namespace stellar;
using test::cx;
using test::digits;

namespace {

long long choose(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<long long> f_of(const Complex& x)
{
    std::vector<long long> out;
    for (int j = 0; j <= x.dim(); ++j) out.push_back(static_cast<long long>(x.face_count(j)));
    return out;
}

// Stellar subdivision of a facet, written out by hand.
Complex subdivide_facet(const Complex& x, std::size_t facet_index, const std::string& apex)
{
    FacetList facets;
    for (std::size_t i = 0; i < x.facets().size(); ++i) {
        const Face f = x.facets()[i];
        if (i != facet_index) {
            facets.push_back(x.names_of(f));
            continue;
        }
        f.for_each_vertex([&](VertexId v) {
            auto names = x.names_of(f.without(v));
            names.push_back(apex);
            facets.push_back(names);
        });
    }
    return Complex::from_facets(facets);
}

}  // namespace

TEST_CASE("standard spheres, balls and cross polytopes")
{
    CHECK(f_of(standard_sphere(2)) == std::vector<long long>{4, 6, 4});
    CHECK(standard_sphere(-1).is_empty());
    CHECK(standard_ball(3).facets().size() == 1);
    CHECK(boundary(standard_ball(3)) == standard_sphere(2));
    CHECK(isomorphic(cross_polytope(1), digits("12 23 34 41")));
    for (int d = 0; d <= 5; ++d) {
        const Complex c = cross_polytope(d);
        CHECK(c.facets().size() == (std::size_t{1} << (d + 1)));
        for (int i = 0; i <= d; ++i) CHECK(static_cast<long long>(c.face_count(i)) == (1ll << (i + 1)) * choose(d + 1, i + 1));
        for (int i = 1; i <= d + 1; ++i)
            CHECK_FALSE(c.contains(c.face_of({"x" + std::to_string(i), "y" + std::to_string(i)})));
        if (d >= 1) CHECK(is_closed_pseudomanifold(c));
    }
}

TEST_CASE("cyclic complexes")
{
    CHECK(cyclic_complex(4, {{0, 1}}) == digits("01 12 23 30"));
    const Complex s = cyclic_complex(
        16, {{0, 1, 4, 6}, {0, 1, 4, 9}, {0, 1, 6, 14}, {0, 1, 8, 9}, {0, 1, 8, 10}, {0, 1, 10, 14}, {0, 2, 9, 13}});
    CHECK(s.facets().size() == 104);
    CHECK(cyclic_complex(16, {{0, 1, 8, 9}}).facets().size() == 8);
    CHECK(neighbourliness(s) == 2);

    const Complex t = cyclic_complex(7, {{0, 1, 3}, {0, 2, 3}});
    CHECK(f_of(t) == std::vector<long long>{7, 21, 14});
    CHECK(euler_characteristic(t) == 0);
    CHECK(t == digits("013 124 235 346 450 561 602 023 134 245 356 460 501 612"));
    CHECK(cyclic_complex(7, {{0, 1, 3}}).facets().size() == 7);
    CHECK_THROWS_AS(cyclic_complex(5, {{0, 5}}), Error);
}

TEST_CASE("cone over an antistar bounds the sphere")
{
    const Complex s = standard_sphere(3);
    CHECK(cone_over_antistar(s, 0) == standard_ball(4));

    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 25; ++trial) {
        Complex sphere = standard_sphere(2 + trial % 2);
        const int steps = 1 + static_cast<int>(rng() % 8);
        for (int s = 0; s < steps; ++s)
            sphere = subdivide_facet(sphere, rng() % sphere.facets().size(), "n" + std::to_string(s));
        const VertexId x = static_cast<VertexId>(rng() % sphere.vertex_count());
        const Complex ball = cone_over_antistar(sphere, x);
        CHECK(boundary(ball) == sphere);
        CHECK(ball.vertex_count() == sphere.vertex_count());
        CHECK(euler_characteristic(ball) == 1);
    }
}

TEST_CASE("Klee-Novik complexes")
{
    for (int d = 1; d <= 5; ++d) {
        for (int k = 0; k <= d; ++k) {
            const KleeNovik kn = klee_novik(k, d);
            long long expected = 0;
            for (int j = 0; j <= k; ++j) expected += 2 * choose(d + 1, j);
            CHECK(static_cast<long long>(kn.mbar.facets().size()) == expected);
            CHECK(kn.mbar.dim() == d + 1);
            if (k < d + 1 && kn.m.dim() >= 0) CHECK(boundary(kn.m).is_empty());
            for (auto which : {KleeNovikMap::D, KleeNovikMap::E, KleeNovikMap::R}) {
                const auto perm = klee_novik_automorphism(kn.mbar, k, d, which);
                CHECK(relabel(kn.mbar, perm) == kn.mbar);
            }
        }
    }

    const KleeNovik m13 = klee_novik(1, 3);
    CHECK(m13.m.vertex_count() == 10);
    CHECK(betti(m13.m, Field::rationals()).beta == std::vector<long long>{1, 1, 1, 1});
    CHECK(f_of(klee_novik(1, 2).m) == std::vector<long long>{8, 24, 16});

    for (auto [k, d] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {1, 5}, {2, 6}, {3, 6}}) {
        const Complex m = klee_novik(k, d).m;
        const auto g = g_vector(m);
        for (int j = 0; j <= k + 1; ++j) CHECK(g[j] == choose(d + 2, j));
        const auto predicted = klee_novik_expected_f(k, d);
        const auto actual = f_of(m);
        REQUIRE(predicted.size() == actual.size());
        for (std::size_t i = 0; i < actual.size(); ++i) CHECK(predicted[i] == actual[i]);
        // chi(S^k x S^(d-k)) from the f-vector.
        long long chi = 0;
        for (std::size_t i = 0; i < actual.size(); ++i) chi += (i % 2 ? -1 : 1) * actual[i];
        CHECK(chi == (1 + (k % 2 ? -1 : 1)) * (1 + ((d - k) % 2 ? -1 : 1)));
    }
    CHECK_THROWS_AS(klee_novik(3, 2), Error);
}

TEST_CASE("corpus entries")
{
    REQUIRE_NOTHROW(corpus());
    CHECK(f_of(corpus_entry("S3_16").complex) == std::vector<long long>{16, 120, 208, 104});
    CHECK(f_of(corpus_entry("Sigma3_16").complex) == std::vector<long long>{16, 106, 180, 90});
    CHECK(corpus_entry("ziegler_B2").complex.facets().size() == 21);
    CHECK(corpus_entry("lutz_B2").complex.facets().size() == 15);
    CHECK_THROWS_AS(corpus_entry("nonexistent"), Error);

    for (const auto& e : corpus()) {
        CAPTURE(e.name);
        CHECK(f_of(e.complex) == e.expected_f);
        if (std::find(e.tags.begin(), e.tags.end(), "ball") != e.tags.end()) {
            CHECK(boundary(boundary(e.complex)).is_empty());
            CHECK(euler_characteristic(e.complex) == 1);
        }
        if (std::find(e.tags.begin(), e.tags.end(), "sphere") != e.tags.end())
            CHECK(is_closed_pseudomanifold(e.complex));
        for (const auto& tag : e.tags)
            if (tag.rfind("boundary:", 0) == 0) CHECK(boundary(e.complex) == corpus_entry(tag.substr(9)).complex);
    }
}

TEST_CASE("the split spheres are unions of their two balls")
{
    for (auto [sphere, b1, b2] : {std::tuple{"ziegler_S3_10", "ziegler_B1", "ziegler_B2"},
                                  {"lutz_S3_8", "lutz_B1", "lutz_B2"}}) {
        const auto& s = corpus_entry(sphere).complex;
        auto facets = corpus_entry(b1).complex.canonical_facets();
        const auto rest = corpus_entry(b2).complex.canonical_facets();
        facets.insert(facets.end(), rest.begin(), rest.end());
        std::sort(facets.begin(), facets.end());
        CHECK(facets == s.canonical_facets());
    }
    CHECK(dual_graph(corpus_entry("ziegler_B1").complex).is_path());
    CHECK(dual_graph(corpus_entry("ziegler_B1").complex).nodes == 7);
}

TEST_CASE("derived entries")
{
    const Complex& s5 = corpus_entry("S5_18").complex;
    CHECK(link(s5, s5.face_of({"a", "b"})) == corpus_entry("Sigma3_16").complex);
    const Complex& sigma = corpus_entry("Sigma3_16").complex;
    CHECK(link(sigma, sigma.face_of({"6'"})).vertex_count() == 15);
    CHECK(betti(sigma, Field::rationals()).beta == std::vector<long long>{1, 0, 0, 1});

    const Complex& unflip4 = corpus_entry("unflip_S4_17").complex;
    CHECK(neighbourliness(unflip4) == 2);
    CHECK(unflip4.dim() == 4);

    const Complex& glued = corpus_entry("lutz_glued_B6_16").complex;
    CHECK(glued.vertex_count() == 16);
    CHECK(glued.dim() == 6);
    CHECK(is_pseudomanifold(glued));
}

TEST_CASE("vertex identities on corpus complexes")
{
    for (const auto& e : corpus()) {
        if (e.complex.vertex_count() > 12) continue;
        CAPTURE(e.name);
        const Complex& c = e.complex;
        for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v) {
            const Complex lk = link(c, Face{v});
            CHECK(star(c, Face{v}) == cone(lk, c.name(v)));
            // Facets of X split into those of the star and of the antistar.
            CHECK(star(c, Face{v}).facets().size() + antistar(c, v).facets().size() >= c.facets().size());
        }
    }
}

TEST_CASE("named complexes")
{
    CHECK(named_complex("standard_sphere_3") == standard_sphere(3));
    CHECK(named_complex("standard_ball_2") == standard_ball(2));
    CHECK(named_complex("cross_polytope_2") == cross_polytope(2));
    CHECK(named_complex("kn_1_3") == klee_novik(1, 3).m);
    CHECK(named_complex("knbar_2_5") == klee_novik(2, 5).mbar);
    CHECK(named_complex("kn_1_6") == klee_novik(1, 6).m);
    CHECK(named_complex("torus_7") == corpus_entry("torus_7").complex);
    CHECK_THROWS_AS(named_complex("standard_sphere_x"), Error);
    CHECK_THROWS_AS(named_complex("kn_1"), Error);
}
