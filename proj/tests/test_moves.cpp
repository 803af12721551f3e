#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "stellar/constructions.hpp"
#include "stellar/moves.hpp"

using namespace stellar;
using test::cx;
using test::digits;

namespace {

using MoveKey = std::pair<std::vector<std::string>, std::vector<std::string>>;

// Every pair (alpha, beta) of disjoint vertex sets with |alpha| + |beta| = d + 2 and |beta| >= 2 whose
// union spans exactly the faces of alpha * ∂beta.
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
                const bool expected = (t & b) != b;
                if (x.contains(Face(t)) != expected) {
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

std::set<MoveKey> keys(const std::vector<BistellarMove>& moves)
{
    std::set<MoveKey> out;
    for (const auto& mv : moves) out.insert({mv.alpha, mv.beta});
    return out;
}

// g_{j+1} changes by +1 at j = l and -1 at j = d - l for a move of index l.
void check_g_delta(const Complex& before, const Complex& after, int index)
{
    const int d = before.dim();
    const auto g0 = g_vector(before), g1 = g_vector(after);
    REQUIRE(g0.size() == g1.size());
    for (int j = -1; j <= d; ++j) {
        BigInt expected = 0;
        if (2 * index != d) {
            if (j == index) expected += 1;
            if (j == d - index) expected -= 1;
        }
        CHECK(g1[j + 1] - g0[j + 1] == expected);
    }
}

std::vector<long long> f_of(const Complex& x)
{
    std::vector<long long> out;
    for (int j = 0; j <= x.dim(); ++j) out.push_back(static_cast<long long>(x.face_count(j)));
    return out;
}

// Induced subcomplex of ∂B on the facet, tested for being a (d-1)-ball the slow way.
bool ear_by_definition(const Complex& ball, Face facet)
{
    if (ball.facets().size() == 1) return true;
    const Complex bd = boundary(ball);
    std::vector<std::string> names;
    for (const auto& n : ball.names_of(facet))
        if (bd.has_vertex(n)) names.push_back(n);
    const Complex part = induced(bd, bd.face_of(names));
    if (part.is_empty() || part.dim() != ball.dim() - 1 || !part.is_pure()) return false;
    return part.facets().size() < static_cast<std::size_t>(ball.dim() + 1);
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

}  // namespace

TEST_CASE("standard sphere admits no move of positive index")
{
    for (int d = 1; d <= 5; ++d) CHECK(enumerate_bistellar(standard_sphere(d)).empty());
}

TEST_CASE("0-move and its reverse on the tetrahedron boundary")
{
    const Complex s = standard_sphere(2);
    const BistellarMove zero{{"1", "2", "3"}, {"5"}, 0};
    const Complex y = apply_bistellar(s, zero);
    CHECK(f_of(y) == std::vector<long long>{5, 9, 6});
    const auto moves = enumerate_bistellar(y);
    const auto removal = std::find_if(moves.begin(), moves.end(), [](const BistellarMove& mv) {
        return mv.alpha == std::vector<std::string>{"5"};
    });
    REQUIRE(removal != moves.end());
    CHECK(removal->beta == std::vector<std::string>{"1", "2", "3"});
    CHECK(removal->index == 2);
    CHECK(apply_reverse(y, zero) == s);
    CHECK(keys(moves) == brute_force_moves(y));
    check_g_delta(s, y, 0);
}

TEST_CASE("inadmissible moves are rejected")
{
    const Complex s = standard_sphere(2);
    CHECK_THROWS_AS(apply_bistellar(s, {{"1", "2"}, {"3", "4"}, 1}), Error);
    CHECK_THROWS_AS(apply_bistellar(s, {{"1", "2", "3"}, {"4"}, 0}), Error);
    CHECK_THROWS_AS(apply_bistellar(s, {{"1", "2"}, {"5"}, 0}), Error);
    CHECK_FALSE(is_admissible(s, {{"1"}, {"2", "3", "4"}, 2}));
    try {
        apply_bistellar(s, {{"1", "2"}, {"3", "4"}, 1});
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::Admissibility);
        CHECK(std::string(e.what()).find("induced") != std::string::npos);
    }
}

TEST_CASE("enumerator agrees with the brute-force oracle")
{
    std::vector<Complex> samples = {corpus_entry("torus_7").complex, corpus_entry("rp2_6").complex,
                                    corpus_entry("lutz_S3_8").complex, corpus_entry("lutz_S2_8").complex,
                                    corpus_entry("ziegler_S3_10").complex, corpus_entry("ziegler_S2_10").complex,
                                    corpus_entry("kn_1_2").complex, cross_polytope(2), cross_polytope(3)};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 12; ++i) samples.push_back(random_sphere(2 + i % 3, 1 + i % 5, rng));
    for (const auto& x : samples) {
        REQUIRE(x.vertex_count() <= 10);
        const auto moves = enumerate_bistellar(x);
        CHECK(keys(moves) == brute_force_moves(x));
        for (const auto& mv : moves) {
            const Complex y = apply_bistellar(x, mv);
            check_g_delta(x, y, mv.index);
            CHECK(apply_reverse(y, mv) == x);
        }
    }
}

TEST_CASE("unflippable spheres")
{
    CHECK(enumerate_bistellar(corpus_entry("S3_16").complex).empty());
    CHECK(enumerate_bistellar(corpus_entry("unflip_S4_17").complex).empty());
    CHECK_FALSE(enumerate_bistellar(corpus_entry("Sigma3_16").complex).empty());
}

TEST_CASE("random walk keeps the g-vector law")
{
    std::mt19937_64 rng(500);
    for (int d : {2, 3}) {
        Complex s = standard_sphere(d);
        int fresh = 0;
        for (int step = 0; step < 250; ++step) {
            auto moves = enumerate_bistellar(s);
            if (s.vertex_count() < 12) {
                auto zero = zero_moves(s, "w" + std::to_string(fresh));
                moves.push_back(zero[rng() % zero.size()]);
            }
            REQUIRE_FALSE(moves.empty());
            const auto mv = moves[rng() % moves.size()];
            const Complex next = apply_bistellar(s, mv);
            if (mv.index == 0) ++fresh;
            check_g_delta(s, next, mv.index);
            CHECK(next.vertex_count() <= 12);
            s = next;
        }
        CHECK(is_closed_pseudomanifold(s));
    }
}

TEST_CASE("shelling moves track boundary bistellar moves")
{
    // Adding a facet by a shelling move of index < d acts on the boundary as the same move.
    const Complex& b = corpus_entry("lutz_B2").complex;
    const FacetList order = {{"1", "3", "5", "7"}, {"1", "3", "5", "6"}, {"1", "3", "6", "8"}, {"1", "3", "4", "8"},
                             {"1", "2", "4", "8"}, {"3", "4", "6", "8"}, {"1", "5", "6", "8"}, {"1", "5", "7", "8"},
                             {"1", "2", "7", "8"}, {"2", "4", "6", "8"}, {"2", "6", "7", "8"}, {"1", "2", "3", "7"},
                             {"2", "4", "6", "7"}, {"2", "3", "5", "7"}, {"2", "4", "5", "7"}};
    Complex y = Complex::from_facets({order[0]});
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto step = shelling_step(y, order[i]);
        REQUIRE(step.has_value());
        const Complex x = apply_shelling(y, *step);
        if (step->index < y.dim()) {
            const Complex moved = apply_bistellar(boundary(y), {step->alpha, step->beta, step->index});
            CHECK(moved == boundary(x));
        }
        y = x;
    }
    CHECK(y == b);
}

TEST_CASE("verify_shelling")
{
    const Complex& b = corpus_entry("lutz_B2").complex;
    FacetList order;
    for (const char* f : {"1357", "1356", "1368", "1348", "1248", "3468", "1568", "1578", "1278", "2468", "2678",
                          "1237", "2467", "2357", "2457"}) {
        std::vector<std::string> facet;
        for (const char* c = f; *c; ++c) facet.emplace_back(1, *c);
        order.push_back(facet);
    }
    const auto check = verify_shelling(b, order);
    REQUIRE(check.valid);
    CHECK(check.certificate->length() == 14);
    CHECK(check.certificate->k_bound == 2);
    CHECK(check.h_matches);
    CHECK(replay(*check.certificate) == b);

    FacetList swapped = order;
    std::swap(swapped[1], swapped[14]);
    const auto bad = verify_shelling(b, swapped);
    CHECK_FALSE(bad.valid);
    CHECK(bad.failed_position == 1);

    const auto single = verify_shelling(standard_ball(3), standard_ball(3).canonical_facets());
    REQUIRE(single.valid);
    CHECK(single.certificate->length() == 0);
    CHECK_FALSE(verify_shelling(b, FacetList(order.begin(), order.end() - 1)).valid);
}

TEST_CASE("find_shelling")
{
    const auto none = find_shelling(corpus_entry("ziegler_B2").complex, 10'000'000);
    CHECK(none.outcome == ShellingSearch::Outcome::None);

    for (const char* name : {"lutz_B2", "lutz_B1", "ziegler_B1"}) {
        const auto found = find_shelling(corpus_entry(name).complex, 1'000'000);
        REQUIRE(found.outcome == ShellingSearch::Outcome::Found);
        CHECK(replay(*found.certificate) == corpus_entry(name).complex);
    }
    const auto trivial = find_shelling(standard_ball(4), 10);
    REQUIRE(trivial.outcome == ShellingSearch::Outcome::Found);
    CHECK(trivial.certificate->length() == 0);

    const auto tiny = find_shelling(corpus_entry("lutz_B2").complex, 1);
    CHECK(tiny.outcome == ShellingSearch::Outcome::Exhausted);
}

TEST_CASE("ears")
{
    CHECK(ears(corpus_entry("ziegler_B2").complex).empty());
    const Complex& lutz = corpus_entry("lutz_B2").complex;
    const auto lutz_ears = ears(lutz);
    REQUIRE(lutz_ears.size() == 1);
    CHECK(lutz.format_face(lutz_ears[0]) == lutz.format_face(lutz.face_of({"2", "4", "5", "7"})));
    CHECK(ears(standard_ball(3)).size() == 1);

    for (const char* name : {"ziegler_B1", "ziegler_B2", "lutz_B1", "lutz_B2", "B4_16"}) {
        const Complex& ball = corpus_entry(name).complex;
        const auto found = ears(ball);
        for (Face f : ball.facets()) {
            const bool listed = std::find(found.begin(), found.end(), f) != found.end();
            CHECK(listed == ear_by_definition(ball, f));
        }
    }
    CHECK(ears(corpus_entry("lutz_glued_B6_16").complex).empty());
}

TEST_CASE("stacked balls")
{
    CHECK(is_k_stacked_ball(standard_ball(4), 0));
    const Complex& b4 = corpus_entry("B4_16").complex;
    CHECK(is_k_stacked_ball(b4, 2));
    CHECK_FALSE(is_k_stacked_ball(b4, 1));
    CHECK(is_k_stacked_ball(corpus_entry("D6_18").complex, 2));
    CHECK(is_k_stacked_ball(corpus_entry("lutz_glued_B6_16").complex, 2));
    const Complex s = corpus_entry("ziegler_S3_10").complex;
    for (VertexId x = 0; x < 3; ++x) CHECK(is_k_stacked_ball(cone_over_antistar(s, x), 3));

    CHECK(is_1_stacked_via_tree(corpus_entry("ziegler_B1").complex));
    CHECK_FALSE(is_1_stacked_via_tree(corpus_entry("ziegler_B2").complex));
    CHECK(is_1_stacked_via_tree(standard_ball(3)));
    for (const auto& e : corpus()) {
        if (std::find(e.tags.begin(), e.tags.end(), "ball") == e.tags.end()) continue;
        CAPTURE(e.name);
        CHECK(is_1_stacked_via_tree(e.complex) == is_k_stacked_ball(e.complex, 1));
    }

    // Random stacked balls from index-0 shelling moves.
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + trial % 3;
        Complex ball = standard_ball(d);
        const int steps = 1 + static_cast<int>(rng() % 10);
        for (int s = 0; s < steps; ++s) {
            const Complex bd = boundary(ball);
            auto facet = bd.names_of(bd.facets()[rng() % bd.facets().size()]);
            facet.push_back("n" + std::to_string(s));
            const auto step = shelling_step(ball, facet);
            REQUIRE(step.has_value());
            CHECK(step->index == 0);
            ball = apply_shelling(ball, *step);
        }
        CHECK(is_1_stacked_via_tree(ball));
        CHECK(is_k_stacked_ball(ball, 1));
        CHECK(is_1_stacked_via_tree(ball) == is_k_stacked_ball(ball, 1));
    }
}

TEST_CASE("shelled balls are stacked")
{
    for (const char* name : {"lutz_B1", "lutz_B2", "ziegler_B1"}) {
        const Complex& ball = corpus_entry(name).complex;
        const auto found = find_shelling(ball, 1'000'000);
        REQUIRE(found.outcome == ShellingSearch::Outcome::Found);
        CHECK(is_k_stacked_ball(ball, found.certificate->k_bound));
    }
}

TEST_CASE("canonical ball")
{
    for (int d = 2; d <= 5; ++d)
        for (int k = 0; 2 * k <= d; ++k) {
            const auto r = canonical_ball(standard_sphere(d), k);
            CHECK(r.status == CanonicalResult::Status::Ok);
            CHECK(r.complex == standard_ball(d + 1));
        }
    const auto two = canonical_ball(digits("124 134 234 125 135 235"), 1);
    CHECK(two.status == CanonicalResult::Status::Ok);
    CHECK(two.complex == digits("1234 1235"));
    CHECK_THROWS_AS(canonical_ball(corpus_entry("S3_16").complex, 2), Error);

    const auto s = canonical_ball(corpus_entry("S3_16").complex, 1);
    CHECK(s.status == CanonicalResult::Status::Unknown);
    const auto octa = canonical_ball(cross_polytope(2), 1);
    CHECK(octa.status == CanonicalResult::Status::HypothesisViolated);
}

TEST_CASE("canonical manifold")
{
    const KleeNovik kn = klee_novik(1, 4);
    const auto r = canonical_manifold(kn.m, 1);
    CHECK(r.status == CanonicalResult::Status::Ok);
    CHECK(r.complex.canonical_facets() == kn.mbar.canonical_facets());
    const auto sphere = canonical_manifold(standard_sphere(3), 0);
    CHECK(sphere.status == CanonicalResult::Status::Ok);
    CHECK(sphere.complex == standard_ball(4));
    CHECK_THROWS_AS(canonical_manifold(klee_novik(1, 3).m, 1), Error);
}

TEST_CASE("stellation search")
{
    const auto pentagon = stellation_search(digits("12 23 34 45 51"), 1);
    REQUIRE(pentagon.outcome == StellationResult::Outcome::Certified);
    CHECK(pentagon.certificate->length() == 2);
    CHECK(pentagon.h_k_minus_one == 2);

    const auto s16 = stellation_search(corpus_entry("S3_16").complex, 3);
    CHECK(s16.outcome == StellationResult::Outcome::Exhausted);
    CHECK(s16.complete);
    CHECK(s16.nodes == 1);

    const Complex m25 = klee_novik(2, 5).m;
    const Complex lk = link(m25, m25.face_of({"x1"}));
    const auto r = stellation_search(lk, 2);
    REQUIRE(r.outcome == StellationResult::Outcome::Certified);
    CHECK(r.index_counts == std::vector<long long>{6, 15});
    CHECK(r.certificate->length() == r.h_k_minus_one);
    CHECK(replay(*r.certificate) == lk);

    for (int d = 2; d <= 4; ++d) {
        const auto c = stellation_search(cross_polytope(d), d - 1);
        CHECK(c.outcome == StellationResult::Outcome::Exhausted);
        CHECK(c.complete);
    }

    std::mt19937_64 rng(3);
    for (int i = 0; i < 6; ++i) {
        const Complex s = random_sphere(2 + i % 2, 3 + i, rng);
        const auto full = stellation_search(s, s.dim() + 1, {200000, 1, -1});
        if (full.outcome == StellationResult::Outcome::Certified) CHECK(replay(*full.certificate) == s);
    }
}

TEST_CASE("certificate determinism and JSON")
{
    const Complex m = klee_novik(1, 3).m;
    const Complex lk = link(m, m.face_of({"y2"}));
    const auto a = stellation_search(lk, 1, {1000, 9, -1});
    const auto b = stellation_search(lk, 1, {1000, 9, -1});
    REQUIRE(a.outcome == StellationResult::Outcome::Certified);
    CHECK(a.certificate->to_json() == b.certificate->to_json());
    CHECK(a.certificate->to_json().find("\"start_hash\"") != std::string::npos);
}

TEST_CASE("W_k membership")
{
    CHECK(w_k_membership(standard_sphere(3), 0).verdict == WkMembership::Verdict::Member);
    for (auto [k, d] : {std::pair{1, 2}, {1, 3}, {1, 4}}) {
        const auto r = w_k_membership(klee_novik(k, d).m, k, {1'000'000, 0, -1}, 4);
        CHECK(r.verdict == WkMembership::Verdict::Member);
        CHECK(r.links.size() == static_cast<std::size_t>(2 * d + 4));
    }
    const auto cross = w_k_membership(cross_polytope(3), 1);
    CHECK(cross.verdict == WkMembership::Verdict::NotMember);
    // Octahedral links are 2-stellated, as every 2-sphere is.
    CHECK(w_k_membership(cross_polytope(3), 2).verdict == WkMembership::Verdict::Member);
    const auto serial = w_k_membership(klee_novik(1, 3).m, 1, {1000, 5, -1}, 1);
    const auto parallel = w_k_membership(klee_novik(1, 3).m, 1, {1000, 5, -1}, 3);
    for (std::size_t i = 0; i < serial.links.size(); ++i)
        CHECK(serial.links[i].result.certificate->to_json() == parallel.links[i].result.certificate->to_json());
}
