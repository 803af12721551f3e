#include "stellar/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stellar {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int first, int count)
{
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
    return out;
}

Complex simplex_boundary_on(const std::vector<std::string>& names)
{
    const int n = static_cast<int>(names.size());
    std::vector<Face> faces;
    for (int v = 0; v < n; ++v) faces.push_back(Face::range(n).without(static_cast<VertexId>(v)));
    return Complex::from_faces(names, faces);
}

}  // namespace

Complex standard_sphere(int d)
{
    if (d < -1) throw Error(Error::Kind::Range, "standard sphere needs d >= -1");
    if (d == -1) return Complex::empty();
    if (d + 2 > kMaxVertices) throw Error(Error::Kind::Range, "too many vertices");
    return simplex_boundary_on(numbered("", 1, d + 2));
}

Complex standard_ball(int d)
{
    if (d < 0) throw Error(Error::Kind::Range, "standard ball needs d >= 0");
    if (d + 1 > kMaxVertices) throw Error(Error::Kind::Range, "too many vertices");
    return Complex::from_faces(numbered("", 1, d + 1), {Face::range(d + 1)});
}

Complex cross_polytope(int d)
{
    if (d < 0) throw Error(Error::Kind::Range, "cross polytope needs d >= 0");
    const int n = d + 1;
    if (2 * n > kMaxVertices) throw Error(Error::Kind::Range, "too many vertices");
    auto names = numbered("x", 1, n);
    auto ys = numbered("y", 1, n);
    names.insert(names.end(), ys.begin(), ys.end());
    std::vector<Face> faces;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
        Face f;
        for (int i = 0; i < n; ++i) f = f.with(static_cast<VertexId>((signs >> i) & 1 ? n + i : i));
        faces.push_back(f);
    }
    return Complex::from_faces(names, faces);
}

Complex cyclic_complex(int n, const std::vector<std::vector<int>>& generators)
{
    if (n < 1 || n > kMaxVertices) throw Error(Error::Kind::Range, "cyclic complex needs 1 <= n <= 64");
    std::vector<Face> faces;
    for (const auto& g : generators) {
        if (g.empty()) throw Error(Error::Kind::Input, "empty generator");
        for (int shift = 0; shift < n; ++shift) {
            Face f;
            for (int v : g) {
                const int r = ((v + shift) % n + n) % n;
                if (f.contains(static_cast<VertexId>(r))) throw Error(Error::Kind::Input, "generator repeats a residue");
                f = f.with(static_cast<VertexId>(r));
            }
            faces.push_back(f);
        }
    }
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) { return a.bits() < b.bits(); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return Complex::from_faces(numbered("", 0, n), faces);
}

Complex cone_over_antistar(const Complex& s, VertexId x)
{
    if (x >= static_cast<VertexId>(s.vertex_count())) throw Error(Error::Kind::Range, "vertex out of range");
    std::vector<Face> faces;
    for (Face f : s.facets())
        if (!f.contains(x)) faces.push_back(f.with(x));
    return Complex::from_faces(s.names(), faces);
}

namespace {

void check_kn_range(int k, int d)
{
    if (d < 0 || k < 0 || k > d) throw Error(Error::Kind::Range, "Klee-Novik construction needs 0 <= k <= d");
    if (2 * (d + 2) > kMaxVertices) throw Error(Error::Kind::Range, "too many vertices");
}

}  // namespace

KleeNovik klee_novik(int k, int d)
{
    check_kn_range(k, d);
    const int n = d + 2;
    auto names = numbered("x", 1, n);
    auto ys = numbered("y", 1, n);
    names.insert(names.end(), ys.begin(), ys.end());
    // Positions 1..d+1 where the sign flips, encoded as bits 0..d; iterate sets of size <= k.
    std::vector<Face> faces;
    for (std::uint64_t changes = 0; changes < (std::uint64_t{1} << (d + 1)); ++changes) {
        if (std::popcount(changes) > k) continue;
        for (int first = 0; first < 2; ++first) {
            int sign = first;
            Face f;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && ((changes >> (i - 1)) & 1)) sign ^= 1;
                f = f.with(static_cast<VertexId>(sign ? n + i : i));
            }
            faces.push_back(f);
        }
    }
    KleeNovik out;
    out.mbar = Complex::from_faces(names, faces);
    out.m = boundary(out.mbar);
    return out;
}

std::vector<BigInt> klee_novik_expected_f(int k, int d)
{
    check_kn_range(k, d);
    if (k < 1 || d < 2 * k) throw Error(Error::Kind::Range, "predicted f-vector needs 1 <= k and d >= 2k");
    std::vector<BigInt> g(static_cast<std::size_t>(d + 2), 0);
    g[0] = 1;
    for (int l = 0; l <= k; ++l) g[l + 1] = binomial(d + 2, l + 1);
    for (int l = k + 1; l <= d - k; ++l) g[l + 1] = ((l - k) % 2 ? -1 : 1) * binomial(d + 2, l + 1);
    const long long chi = (1 + (k % 2 ? -1 : 1)) * (1 + ((d - k) % 2 ? -1 : 1));
    const long long chi_sphere = d % 2 ? 0 : 2;
    for (int i = 1; i <= k; ++i) {
        const BigInt sign = (i - 1) % 2 ? -1 : 1;
        g[d + 2 - i] = sign * binomial(d + 2, i) * (chi - chi_sphere) - g[i];
    }
    return f_from_g(d, g);
}

std::vector<VertexId> klee_novik_automorphism(const Complex& mbar, int k, int d, KleeNovikMap which)
{
    check_kn_range(k, d);
    const int n = d + 2;
    // Position p in 0..2n-1: x_{p+1} for p < n, y_{p-n+1} otherwise.
    auto label = [n](int p) { return p < n ? "x" + std::to_string(p + 1) : "y" + std::to_string(p - n + 1); };
    std::vector<int> image(static_cast<std::size_t>(2 * n));
    for (int p = 0; p < 2 * n; ++p) {
        const int i = p % n;
        const bool is_y = p >= n;
        switch (which) {
            case KleeNovikMap::D:
                image[p] = is_y ? i : n + i;
                break;
            case KleeNovikMap::E: {
                // Swaps index j with d+3-j (1-based), i.e. i with n-1-i.
                const int j = n - 1 - i;
                image[p] = is_y ? n + j : j;
                break;
            }
            case KleeNovikMap::R:
                if (k % 2 == 0)
                    image[p] = (is_y ? n : 0) + (i + 1) % n;
                else
                    image[p] = (p + 1) % (2 * n);
                break;
        }
    }
    std::vector<VertexId> perm(static_cast<std::size_t>(mbar.vertex_count()));
    for (int p = 0; p < 2 * n; ++p) {
        const std::string from = label(p);
        if (!mbar.has_vertex(from)) throw Error(Error::Kind::Input, "complex lacks vertex " + from);
        perm[mbar.id_of(from)] = mbar.id_of(label(image[p]));
    }
    return perm;
}

namespace {

// Facets separated by ';', vertex tokens by spaces.
Complex facets_from(const std::string& text)
{
    FacetList facets;
    std::stringstream facet_stream(text);
    std::string chunk;
    while (std::getline(facet_stream, chunk, ';')) {
        std::stringstream tokens(chunk);
        std::vector<std::string> facet;
        std::string t;
        while (tokens >> t) facet.push_back(t);
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    return Complex::from_facets(facets);
}

// Facets written as digit strings with single-character vertex names.
Complex digit_facets(const std::string& text)
{
    FacetList facets;
    std::stringstream tokens(text);
    std::string word;
    while (tokens >> word) {
        std::vector<std::string> facet;
        for (char c : word) facet.emplace_back(1, c);
        facets.push_back(std::move(facet));
    }
    return Complex::from_facets(facets);
}

const char* const kZieglerS3 =
    "0123 1234 2345 3456 4567 5678 6789 0128 0139 0189 0238 0356 0358 0369 0568 0689 1248 1349 1457 1458 "
    "1467 1469 1578 1679 1789 2358 2458 3469";
const char* const kZieglerS2 = "012 013 023 124 134 235 245 346 356 457 467 568 578 679 689 789";
const char* const kLutzS3 =
    "1234 2345 3456 4567 5678 1237 1248 1278 1348 1356 1357 1368 1568 1578 2357 2457 2467 2468 2678 3468";
const char* const kLutzS2 = "123 124 134 235 245 346 356 457 467 568 578 678";
const char* const kLutzB2Shelling = "1357 1356 1368 1348 1248 3468 1568 1578 1278 2468 2678 1237 2467 2357 2457";
const char* const kRp2 = "124 126 135 136 145 234 235 256 346 456";

const char* const kSigma3 =
    "1 2 4 9; 1 2 4 6'; 1 2 6 5'; 1 2 6 6'; 1 2 9 5'; 1 3 4 3'; 1 3 4 6'; 1 3 7 1'; 1 3 7 3'; 1 3 1' 6'; "
    "1 4 9 3'; 1 5 6 4'; 1 5 6 5'; 1 5 8 2'; 1 5 8 4'; 1 5 2' 5'; 1 6 4' 6'; 1 7 8 1'; 1 7 8 2'; 1 7 2' 3'; "
    "1 8 1' 4'; 1 9 2' 3'; 1 9 2' 5'; 1 1' 4' 6'; 2 3 5 1'; 2 3 5 2'; 2 3 7 1'; 2 3 7 4'; 2 3 2' 4'; "
    "2 4 9 4'; 2 4 2' 4'; 2 4 2' 6'; 2 5 8 2'; 2 5 8 3'; 2 5 1' 3'; 2 6 1' 3'; 2 6 1' 5'; 2 6 3' 6'; "
    "2 7 9 4'; 2 7 9 5'; 2 7 1' 5'; 2 8 2' 6'; 2 8 3' 6'; 3 4 5 5'; 3 4 5 6'; 3 4 3' 5'; 3 5 1' 6'; "
    "3 5 2' 5'; 3 7 3' 4'; 3 2' 4' 5'; 3 3' 4' 5'; 4 5 6 7; 4 5 6 5'; 4 5 7 6'; 4 6 7 2'; 4 6 1' 2'; "
    "4 6 1' 5'; 4 7 2' 6'; 4 8 9 3'; 4 8 9 4'; 4 8 1' 4'; 4 8 1' 5'; 4 8 3' 5'; 4 1' 2' 4'; 5 6 7 4'; "
    "5 7 9 4'; 5 7 9 6'; 5 8 9 3'; 5 8 9 4'; 5 9 1' 3'; 5 9 1' 6'; 6 7 2' 3'; 6 7 3' 4'; 6 1' 2' 3'; "
    "6 3' 4' 6'; 7 8 1' 5'; 7 8 2' 6'; 7 8 5' 6'; 7 9 5' 6'; 8 3' 5' 6'; 9 1' 2' 3'; 9 1' 2' 7'; "
    "9 1' 6' 7'; 9 2' 5' 7'; 9 5' 6' 7'; 1' 2' 4' 7'; 1' 4' 6' 7'; 2' 4' 5' 7'; 3' 4' 5' 6'; 4' 5' 6' 7'";

// SHA-256 of the canonical text of each transcribed facet list.
const std::map<std::string, std::string>& frozen_digests()
{
    static const std::map<std::string, std::string> digests = {
        {"S3_16", "ce1dc4fcc64fa49134476b9fd0444585c3da9113f67570a961ebe78b10fd78ee"},
        {"Sigma3_16", "14492c18adac7d4121c9f44abd19cdab47404223fc5c5f74d73877a88e4bcbd2"},
        {"ziegler_S3_10", "684ba08061a6ef9d0c1faf7ef7dae851cb2dd2a314cc14ab9b4601abc9a2c04f"},
        {"ziegler_S2_10", "fc537ea309f200b2d13566c0922d3894870cd6cd6aa4d439da033a6855b1c6c4"},
        {"lutz_S3_8", "e00153799b6af93e02583272120391cf40a4a62b1b180b44a185ed6fc0cc1ddb"},
        {"lutz_S2_8", "6157e4fbd4bf058bfc18a98cce929881b1de1b5aff60c3d1ec3ffa42a3de63fe"},
        {"torus_7", "04500bed1a80eb330438b935410b90683adcc80a58075c14e898aa41018125a0"},
        {"rp2_6", "a88a3d7bdcfdd002a20bccf5b0c739a04cd7a3d35e8e276aff175122acc3e520"},
    };
    return digests;
}

Complex first_facets(const char* text, std::size_t count, bool take_head)
{
    std::stringstream tokens(text);
    std::vector<std::string> words;
    std::string w;
    while (tokens >> w) words.push_back(w);
    std::string kept;
    for (std::size_t i = 0; i < words.size(); ++i)
        if ((i < count) == take_head) kept += words[i] + " ";
    return digit_facets(kept);
}

std::vector<long long> to_ll(const std::vector<BigInt>& v)
{
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(static_cast<long long>(x));
    return out;
}

// Join with a simplex on the given new vertex names.
Complex join_simplex(const Complex& x, const std::vector<std::string>& names)
{
    return join(x, Complex::from_faces(names, {Face::range(static_cast<int>(names.size()))}));
}

std::vector<CorpusEntry> build_corpus()
{
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, std::string description, Complex c, std::vector<long long> f,
                   std::vector<std::string> tags) {
        out.push_back({std::move(name), std::move(description), std::move(c), std::move(f), std::move(tags)});
    };

    const Complex s3_16 = cyclic_complex(
        16, {{0, 1, 4, 6}, {0, 1, 4, 9}, {0, 1, 6, 14}, {0, 1, 8, 9}, {0, 1, 8, 10}, {0, 1, 10, 14}, {0, 2, 9, 13}});
    add("S3_16", "unflippable 16-vertex 3-sphere from seven cyclic orbits", s3_16, {16, 120, 208, 104},
        {"sphere", "unflippable", "2-neighbourly"});
    const Complex b4_16 = cone_over_antistar(s3_16, s3_16.id_of("0"));
    add("B4_16", "cone from vertex 0 over its antistar in S3_16", b4_16, {16, 120, 274, 247, 78},
        {"ball", "2-stacked", "boundary:S3_16"});
    add("unflip_S4_17", "boundary of B4_16 joined with a point", boundary(join_simplex(b4_16, {"e1"})),
        {17, 136, 394, 455, 182}, {"sphere", "unflippable", "2-neighbourly"});
    add("unflip_S5_18", "boundary of B4_16 joined with an edge", boundary(join_simplex(b4_16, {"e1", "e2"})),
        {18, 153, 530, 915, 780, 260}, {"sphere", "unflippable", "2-neighbourly"});

    const Complex sigma = facets_from(kSigma3);
    add("Sigma3_16", "16-vertex triangulation of the Poincare homology sphere", sigma, {16, 106, 180, 90},
        {"homology-sphere", "manifold"});
    const Complex d4_16 = cone_over_antistar(sigma, sigma.id_of("6'"));
    add("D4_16", "cone from 6' over its antistar in Sigma3_16", d4_16, {16, 106, 232, 205, 64},
        {"homology-ball", "boundary:Sigma3_16"});
    const Complex d6_18 = join_simplex(d4_16, {"a", "b"});
    add("D6_18", "D4_16 joined with an edge", d6_18, {18, 139, 460, 775, 706, 333, 64},
        {"ball", "2-stacked"});
    add("S5_18", "boundary of D6_18, a non-combinatorial 5-sphere", boundary(d6_18), {18, 139, 460, 775, 654, 218},
        {"sphere", "edge-link:a b=Sigma3_16"});

    add("ziegler_S3_10", "10-vertex 3-sphere split into two 3-balls", digit_facets(kZieglerS3), {10, 38, 56, 28},
        {"sphere"});
    add("ziegler_S2_10", "common boundary of ziegler_B1 and ziegler_B2", digit_facets(kZieglerS2), {10, 24, 16},
        {"sphere"});
    add("ziegler_B1", "first seven facets of ziegler_S3_10", first_facets(kZieglerS3, 7, true), {10, 24, 22, 7},
        {"ball", "dual-graph:path", "boundary:ziegler_S2_10"});
    add("ziegler_B2", "remaining 21 facets of ziegler_S3_10", first_facets(kZieglerS3, 7, false),
        {10, 38, 50, 21}, {"ball", "no-ears", "not-shellable", "boundary:ziegler_S2_10"});

    add("lutz_S3_8", "8-vertex 3-sphere split into two 3-balls", digit_facets(kLutzS3), {8, 28, 40, 20}, {"sphere"});
    add("lutz_S2_8", "common boundary of lutz_B1 and lutz_B2", digit_facets(kLutzS2), {8, 18, 12}, {"sphere"});
    add("lutz_B1", "first five facets of lutz_S3_8", first_facets(kLutzS3, 5, true), {8, 18, 16, 5},
        {"ball", "boundary:lutz_S2_8"});
    add("lutz_B2", "remaining 15 facets of lutz_S3_8", first_facets(kLutzS3, 5, false), {8, 28, 36, 15},
        {"ball", "ears:2457", std::string("shelling-order:") + kLutzB2Shelling, "boundary:lutz_S2_8"});

    {
        // Two copies of lutz_B2 * (triangle abc) glued along the boundary face 245abc.
        const Complex b = join_simplex(first_facets(kLutzS3, 5, false), {"a", "b", "c"});
        const Complex b_copy = rename(b, [](const std::string& v) { return v + "'"; });
        const std::vector<std::string> glue = {"2", "4", "5", "a", "b", "c"};
        std::vector<VertexMatch> matching;
        std::vector<std::string> glue_copy;
        for (const auto& v : glue) {
            matching.push_back({v + "'", v});
            glue_copy.push_back(v + "'");
        }
        const Complex glued = boundary_connected_sum(b, b_copy, b.face_of(glue), b_copy.face_of(glue_copy), matching);
        add("lutz_glued_B6_16", "two copies of lutz_B2 * triangle glued along 245abc", glued,
            {16, 95, 270, 415, 356, 161, 30}, {"ball", "2-stacked", "no-ears"});
    }

    add("torus_7", "7-vertex torus, orbits of {0,1,3} and {0,2,3} mod 7", cyclic_complex(7, {{0, 1, 3}, {0, 2, 3}}),
        {7, 21, 14}, {"manifold", "2-neighbourly"});
    add("rp2_6", "6-vertex real projective plane", digit_facets(kRp2), {6, 15, 10}, {"manifold", "2-neighbourly"});

    for (auto [k, d] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
        const std::string suffix = std::to_string(k) + "_" + std::to_string(d);
        add("kn_" + suffix, "boundary of the sign-change filtered cross polytope, k=" + std::to_string(k) +
                                ", d=" + std::to_string(d),
            klee_novik(k, d).m, to_ll(klee_novik_expected_f(k, d)), {"manifold"});
    }
    return out;
}

std::vector<CorpusEntry> validated_corpus()
{
    auto entries = build_corpus();
    const auto& digests = frozen_digests();
    for (const auto& e : entries) {
        const auto f = to_ll(f_vector(e.complex));
        if (f != e.expected_f) {
            std::string got;
            for (long long x : f) got += (got.empty() ? "" : ",") + std::to_string(x);
            throw Error(Error::Kind::Internal, "corpus entry " + e.name + " has f = (" + got + ")");
        }
        auto it = digests.find(e.name);
        if (it != digests.end() && it->second != e.complex.digest())
            throw Error(Error::Kind::Internal, "corpus entry " + e.name + " does not match its frozen digest");
    }
    return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus()
{
    static const std::vector<CorpusEntry> entries = validated_corpus();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name)
{
    for (const auto& e : corpus())
        if (e.name == name) return e;
    throw Error(Error::Kind::Input, "no corpus entry named '" + name + "'");
}

std::vector<std::string> corpus_names()
{
    std::vector<std::string> out;
    for (const auto& e : corpus()) out.push_back(e.name);
    return out;
}

namespace {

// Parses "prefix_A" or "prefix_A_B" into integers.
bool parse_params(const std::string& name, const std::string& prefix, std::size_t count, std::vector<int>& out)
{
    if (name.rfind(prefix + "_", 0) != 0) return false;
    std::stringstream rest(name.substr(prefix.size() + 1));
    std::string part;
    out.clear();
    while (std::getline(rest, part, '_')) {
        if (part.empty() || part.size() > 3) return false;
        const bool negative = part[0] == '-';
        if (!std::all_of(part.begin() + (negative ? 1 : 0), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return false;
        if (negative && part.size() == 1) return false;
        out.push_back(std::stoi(part));
    }
    return out.size() == count;
}

}  // namespace

Complex named_complex(const std::string& name)
{
    std::vector<int> p;
    if (parse_params(name, "standard_sphere", 1, p)) return standard_sphere(p[0]);
    if (parse_params(name, "standard_ball", 1, p)) return standard_ball(p[0]);
    if (parse_params(name, "cross_polytope", 1, p)) return cross_polytope(p[0]);
    if (parse_params(name, "knbar", 2, p)) return klee_novik(p[0], p[1]).mbar;
    if (parse_params(name, "kn", 2, p)) {
        for (const auto& e : corpus())
            if (e.name == name) return e.complex;
        return klee_novik(p[0], p[1]).m;
    }
    return corpus_entry(name).complex;
}

}  // namespace stellar
