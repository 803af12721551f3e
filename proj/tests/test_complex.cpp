#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "stellar/complex.hpp"

using namespace stellar;
using test::cx;
using test::digits;

TEST_CASE("from_facets assigns names in first-occurrence order")
{
    Complex c = cx("1 2; 2 3; 3 1");
    CHECK(c.dim() == 1);
    CHECK(c.vertex_count() == 3);
    CHECK(c.names() == std::vector<std::string>{"1", "2", "3"});
    CHECK(c.facets().size() == 3);
}

TEST_CASE("dominated facets are dropped with a warning")
{
    std::vector<std::string> warnings;
    Complex c = Complex::from_facets({{"1", "2", "3"}, {"1", "2"}}, &warnings);
    CHECK(c.facets().size() == 1);
    CHECK(c.dim() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("[1 2]") != std::string::npos);
}

TEST_CASE("duplicate vertex in a facet is rejected")
{
    CHECK_THROWS_AS(Complex::from_facets({{"a", "b", "a"}}), Error);
}

TEST_CASE("empty complex")
{
    Complex e;
    CHECK(e.dim() == -1);
    CHECK(e.vertex_count() == 0);
    CHECK(e.contains(Face()));
    CHECK(e.faces(-1).size() == 1);
}

TEST_CASE("lexicographic face order")
{
    CHECK(lex_less(Face{0, 2}, Face{1}));
    CHECK(lex_less(Face{0}, Face{0, 1}));
    CHECK(lex_less(Face{0, 1, 3}, Face{0, 2, 3}));
    CHECK_FALSE(lex_less(Face{1, 2}, Face{1, 2}));
    CHECK_FALSE(lex_less(Face{1}, Face{0, 5}));
}

TEST_CASE("face index agrees with a subset scan")
{
    const Complex samples[] = {cx("1 2 3; 2 3 4; 4 5; 6"), digits("124 134 234 125 135 235"),
                               digits("0123 1234 2345 3456 4567 5678 6789")};
    for (const Complex& c : samples) {
        const std::uint64_t all = c.vertex_set().bits();
        for (std::uint64_t s = 0; s <= all; ++s) {
            if ((s & ~all) != 0) continue;
            CHECK(c.contains(Face(s)) == test::contains_by_scan(c, Face(s)));
        }
        std::size_t total = 0;
        for (int j = -1; j <= c.dim(); ++j) {
            for (Face f : c.faces(j)) CHECK(test::contains_by_scan(c, f));
            CHECK(std::is_sorted(c.faces(j).begin(), c.faces(j).end(), lex_less));
            total += c.faces(j).size();
        }
        std::size_t counted = 0;
        for (std::uint64_t s = 0; s <= all; ++s)
            if ((s & ~all) == 0 && test::contains_by_scan(c, Face(s))) ++counted;
        CHECK(total == counted);
    }
}

TEST_CASE("skeleton")
{
    Complex s24 = digits("123 124 134 234");
    Complex k4 = skeleton(s24, 1);
    CHECK(k4.dim() == 1);
    CHECK(k4.facets().size() == 6);
    CHECK(skeleton(s24, 2) == s24);
    CHECK_THROWS_AS(skeleton(s24, 3), Error);
}

TEST_CASE("link, star and antistar")
{
    Complex s24 = digits("123 124 134 234");
    Complex lk = link(s24, test::ids(s24, {"1"}));
    CHECK(lk == digits("23 24 34"));
    Complex ast = antistar(s24, s24.id_of("1"));
    CHECK(ast == digits("234"));
    CHECK_THROWS_AS(link(s24, Face::range(4)), Error);

    // star = cone over link; X = star ∪ antistar with intersection link.
    Complex c = digits("124 134 234 125 135 235");
    for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v) {
        Complex st = star(c, Face{v});
        Complex lkv = link(c, Face{v});
        Complex asv = antistar(c, v);
        CHECK(st == cone(lkv, c.name(v)));
        std::size_t faces_union = 0, faces_c = 0;
        for (int j = 0; j <= c.dim(); ++j) {
            faces_c += c.face_count(j);
            for (Face f : c.faces(j)) {
                const auto names = c.names_of(f);
                const bool in_star = std::all_of(names.begin(), names.end(), [&](auto& n) { return st.has_vertex(n); }) &&
                                     st.contains(st.face_of(names));
                const bool in_anti = std::all_of(names.begin(), names.end(), [&](auto& n) { return asv.has_vertex(n); }) &&
                                     asv.contains(asv.face_of(names));
                const bool in_link = std::all_of(names.begin(), names.end(), [&](auto& n) { return lkv.has_vertex(n); }) &&
                                     lkv.contains(lkv.face_of(names));
                if (in_star || in_anti) ++faces_union;
                CHECK((in_star && in_anti) == in_link);
            }
        }
        CHECK(faces_union == faces_c);
    }
}

TEST_CASE("induced subcomplex")
{
    Complex c4 = digits("12 23 34 41");
    Complex two = induced(c4, test::ids(c4, {"1", "3"}));
    CHECK(two.dim() == 0);
    CHECK(two.vertex_count() == 2);
    CHECK(induced(c4, c4.vertex_set()) == c4);
    CHECK(induced(c4, Face(~std::uint64_t{0})) == c4);
    CHECK(induced(c4, Face()).is_empty());
}

TEST_CASE("join")
{
    Complex a = cx("a; b"), b = cx("c; d");
    Complex square = join(a, b);
    CHECK(square.dim() == 1);
    CHECK(square.facets().size() == 4);
    CHECK(is_closed_pseudomanifold(square));
    CHECK_THROWS_AS(join(a, a), Error);
    Complex c = cone(digits("12 23 31"), "x");
    CHECK(euler_characteristic(c) == 1);

    Complex p = cx("e; f");
    Complex left = join(join(a, b), p), right = join(a, join(b, p));
    CHECK(left == right);
    CHECK(isomorphic(left, right));
}

TEST_CASE("boundary and dual graph")
{
    Complex tet = digits("1234");
    CHECK(boundary(tet) == digits("123 124 134 234"));
    CHECK(boundary(boundary(tet)).is_empty());

    Complex b1 = cx("0 1 2 3; 1 2 3 4; 2 3 4 5; 3 4 5 6; 4 5 6 7; 5 6 7 8; 6 7 8 9");
    DualGraph g = dual_graph(b1);
    CHECK(g.nodes == 7);
    CHECK(g.is_path());
    CHECK(boundary(boundary(b1)).is_empty());

    Complex s24 = digits("123 124 134 234");
    DualGraph k4 = dual_graph(s24);
    CHECK(k4.edges.size() == 6);

    CHECK_FALSE(is_pseudomanifold(digits("123 456")));
    CHECK_THROWS_AS(boundary(digits("123 124 125")), Error);

    // Edge count equals the number of interior (d-1)-faces.
    const Complex bd = boundary(b1);
    std::size_t interior = 0;
    for (Face r : b1.faces(b1.dim() - 1))
        if (!bd.contains(bd.face_of(b1.names_of(r)))) ++interior;
    CHECK(g.edges.size() == interior);
}

TEST_CASE("neighbourliness")
{
    CHECK(neighbourliness(digits("123 124 134 234")) == 3);
    CHECK(neighbourliness(digits("12 23 34 41")) == 1);
}

TEST_CASE("connected sum of two tetrahedron boundaries")
{
    Complex a = digits("123 124 134 234");
    Complex b = cx("5 6 7; 5 6 8; 5 7 8; 6 7 8");
    Complex s = connected_sum(a, b, test::ids(a, {"1", "2", "3"}), test::ids(b, {"5", "6", "7"}),
                              {{"5", "1"}, {"6", "2"}, {"7", "3"}});
    CHECK(s.vertex_count() == 5);
    CHECK(s.face_count(0) == 5);
    CHECK(s.face_count(1) == 9);
    CHECK(s.face_count(2) == 6);
    CHECK(euler_characteristic(s) == euler_characteristic(a) + euler_characteristic(b) - 2);
    CHECK_THROWS_AS(connected_sum(a, b, test::ids(a, {"1", "2"}), test::ids(b, {"5", "6"}), {}), Error);
}

TEST_CASE("facet file round trip")
{
    Complex c = cx("x3 6' a; 6' a b; b c");
    std::vector<std::string> warnings;
    Complex back = parse_facet_text("# comment\n" + to_facet_text(c) + "\n\n", &warnings);
    CHECK(back == c);
    CHECK(warnings.empty());
    CHECK(c.digest() == back.digest());
    CHECK(c.digest().size() == 64);
}

TEST_CASE("isomorphism")
{
    Complex a = digits("123 124 134 234");
    Complex b = cx("p q r; p q s; p r s; q r s");
    CHECK(isomorphic(a, b));
    CHECK(isomorphic(digits("12 23 34 41 15"), digits("12 23 34 41 25")));
    CHECK_FALSE(isomorphic(digits("12 23 31 45"), digits("12 23 34 45")));
}
