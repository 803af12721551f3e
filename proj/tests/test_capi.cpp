// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "stellar/stellar.h"

namespace {

using Json = nlohmann::ordered_json;

struct Owned {
    stellar_complex* c = nullptr;
    ~Owned() { stellar_free(c); }
};

Json take(char* text)
{
    REQUIRE(text != nullptr);
    Json j = Json::parse(text);
    stellar_string_free(text);
    return j;
}

stellar_options options()
{
    stellar_options o;
    stellar_default_options(&o);
    return o;
}

}  // namespace

TEST_CASE("loading and vectors")
{
    Owned x;
    REQUIRE(stellar_load("corpus:Sigma3_16", &x.c) == STELLAR_OK);
    char* text = nullptr;
    REQUIRE(stellar_vectors(x.c, &text) == STELLAR_OK);
    const Json v = take(text);
    CHECK(v["f"] == Json::parse("[16, 106, 180, 90]"));
    // h of a 3-sphere is symmetric with h_0 = 1 and h_1 = f_0 - 4.
    CHECK(v["h"][0] == 1);
    CHECK(v["h"][1] == 12);
    CHECK(v["h"][4] == 1);
    CHECK(v["h"][1] == v["h"][3]);
}

TEST_CASE("parse and facet text round trip")
{
    Owned x, y;
    REQUIRE(stellar_parse("# triangle boundary\na b\nb c\nc a\n", &x.c) == STELLAR_OK);
    char* text = nullptr;
    REQUIRE(stellar_facet_text(x.c, &text) == STELLAR_OK);
    REQUIRE(stellar_parse(text, &y.c) == STELLAR_OK);
    stellar_string_free(text);
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(stellar_summary(x.c, &a) == STELLAR_OK);
    REQUIRE(stellar_summary(y.c, &b) == STELLAR_OK);
    const Json sa = take(a), sb = take(b);
    CHECK(sa["digest"] == sb["digest"]);
    CHECK(sa["euler_characteristic"] == 0);
    CHECK(sa["closed_pseudomanifold"] == true);
}

TEST_CASE("errors map to status codes")
{
    Owned x;
    CHECK(stellar_load("/nonexistent/file", &x.c) == STELLAR_INPUT);
    CHECK(std::strlen(stellar_last_error()) > 0);
    CHECK(stellar_load("corpus:no_such_entry", &x.c) == STELLAR_INPUT);

    REQUIRE(stellar_load("corpus:torus_7", &x.c) == STELLAR_OK);
    CHECK(std::strlen(stellar_last_error()) == 0);
    stellar_options o = options();
    o.field = 4;
    char* text = nullptr;
    CHECK(stellar_betti(x.c, &o, &text) == STELLAR_INPUT);
    CHECK(text == nullptr);

    o = options();
    o.cap = 5;
    CHECK(stellar_sigma(x.c, &o, &text) == STELLAR_BUDGET);
    CHECK(text == nullptr);
}

TEST_CASE("tightness statuses")
{
    Owned torus, rp2;
    REQUIRE(stellar_load("corpus:torus_7", &torus.c) == STELLAR_OK);
    REQUIRE(stellar_load("corpus:rp2_6", &rp2.c) == STELLAR_OK);
    stellar_options o = options();
    o.mode = STELLAR_TIGHT_MU_BETA;
    char* text = nullptr;
    REQUIRE(stellar_tight(torus.c, &o, &text) == STELLAR_OK);
    const Json t = take(text);
    CHECK(t["mu"] == Json::parse(R"(["1", "2", "1"])"));
    CHECK(t["beta"] == Json::parse("[1, 2, 1]"));

    CHECK(stellar_tight(rp2.c, &o, &text) == STELLAR_REFUTED);
    take(text);
    o.field = 2;
    CHECK(stellar_tight(rp2.c, &o, &text) == STELLAR_OK);
    take(text);
}

TEST_CASE("shelling check reads facet lines")
{
    Owned ball;
    REQUIRE(stellar_parse("1 2 3\n2 3 4\n", &ball.c) == STELLAR_OK);
    char* text = nullptr;
    CHECK(stellar_shellcheck(ball.c, "# order\n2 3 4\n\n1 2 3\n", &text) == STELLAR_OK);
    CHECK(take(text)["valid"] == true);
    CHECK(stellar_shellcheck(ball.c, "1 2 3\n", &text) == STELLAR_REFUTED);
    CHECK(take(text)["valid"] == false);
}

TEST_CASE("Klee-Novik handles and W_k membership")
{
    Owned m, mbar;
    REQUIRE(stellar_klee_novik(1, 3, &m.c, &mbar.c) == STELLAR_OK);
    char* text = nullptr;
    REQUIRE(stellar_vectors(m.c, &text) == STELLAR_OK);
    const Json v = take(text);
    CHECK(v["f"][0] == 10);
    stellar_options o = options();
    CHECK(stellar_wk(m.c, &o, &text) == STELLAR_OK);
    CHECK(take(text)["verdict"] == "member");

    Owned cross;
    REQUIRE(stellar_load("corpus:cross_polytope_3", &cross.c) == STELLAR_OK);
    CHECK(stellar_wk(cross.c, &o, &text) == STELLAR_REFUTED);
    CHECK(take(text)["verdict"] == "not-member");
}

TEST_CASE("search reports are reproducible")
{
    Owned m;
    REQUIRE(stellar_load("corpus:S3_16", &m.c) == STELLAR_OK);
    stellar_options o = options();
    o.seed = 7;
    char* a = nullptr;
    char* b = nullptr;
    const auto sa = stellar_stellate(m.c, &o, &a);
    const auto sb = stellar_stellate(m.c, &o, &b);
    CHECK(sa == sb);
    CHECK(take(a) == take(b));
}
