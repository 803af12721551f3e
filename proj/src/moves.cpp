#include "stellar/moves.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace stellar {

namespace {

std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::string> sorted_names(const Complex& x, Face f) { return sorted(x.names_of(f)); }

bool has_all(const Complex& x, const std::vector<std::string>& names)
{
    return std::all_of(names.begin(), names.end(), [&](const std::string& n) { return x.has_vertex(n); });
}

// Face of x spanned by names, or nullopt when a name is missing or the set is not a face.
std::optional<Face> face_in(const Complex& x, const std::vector<std::string>& names)
{
    if (!has_all(x, names)) return std::nullopt;
    const Face f = x.face_of(names);
    if (!x.contains(f)) return std::nullopt;
    return f;
}

std::string join_names(const std::vector<std::string>& names)
{
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
    return "[" + out + "]";
}

std::vector<std::string> unite(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    std::vector<std::string> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return sorted(out);
}

void require_pure(const Complex& x, const char* what)
{
    if (!x.is_pure()) throw Error(Error::Kind::Precondition, std::string(what) + " needs a pure complex");
}

}  // namespace

std::vector<BistellarMove> enumerate_bistellar(const Complex& x)
{
    require_pure(x, "enumerate_bistellar");
    const int d = x.dim();
    std::vector<BistellarMove> out;
    if (d < 1) return out;
    // lk(alpha) facets for every nonempty alpha with |alpha| <= d.
    std::unordered_map<std::uint64_t, std::vector<Face>, std::hash<std::uint64_t>> links;
    for (Face f : x.facets()) {
        const std::uint64_t full = f.bits();
        for (std::uint64_t sub = (full - 1) & full; sub; sub = (sub - 1) & full) links[sub].push_back(Face(full & ~sub));
    }
    for (const auto& [bits, lk] : links) {
        const Face alpha(bits);
        const int n = d + 2 - alpha.size();  // |beta|
        if (static_cast<int>(lk.size()) != n) continue;
        Face u;
        for (Face t : lk) u = u | t;
        if (u.size() != n || x.contains(u)) continue;
        out.push_back({sorted_names(x, alpha), sorted_names(x, u), n - 1});
    }
    std::sort(out.begin(), out.end(), [](const BistellarMove& a, const BistellarMove& b) {
        if (a.index != b.index) return a.index < b.index;
        return std::tie(a.alpha, a.beta) < std::tie(b.alpha, b.beta);
    });
    return out;
}

std::vector<BistellarMove> zero_moves(const Complex& x, const std::string& fresh_name)
{
    require_pure(x, "zero_moves");
    if (x.has_vertex(fresh_name)) throw Error(Error::Kind::Input, "vertex '" + fresh_name + "' already exists");
    std::vector<BistellarMove> out;
    for (Face f : x.facets()) out.push_back({sorted_names(x, f), {fresh_name}, 0});
    return out;
}

void check_admissible(const Complex& x, const BistellarMove& mv)
{
    auto fail = [&](const std::string& why) {
        throw Error(Error::Kind::Admissibility,
                    "move " + join_names(mv.alpha) + " -> " + join_names(mv.beta) + " is not admissible: " + why);
    };
    const int d = x.dim();
    if (mv.alpha.empty() || mv.beta.empty()) fail("both cores must be nonempty");
    if (static_cast<int>(mv.alpha.size() + mv.beta.size()) != d + 2) fail("core sizes must add up to d+2");
    if (mv.index != static_cast<int>(mv.beta.size()) - 1) fail("index must equal dim(beta)");
    for (const auto& a : mv.alpha)
        if (std::find(mv.beta.begin(), mv.beta.end(), a) != mv.beta.end()) fail("cores must be disjoint");
    const auto alpha = face_in(x, mv.alpha);
    if (!alpha || alpha->size() != static_cast<int>(mv.alpha.size())) fail("alpha is not a face");
    if (mv.beta.size() == 1) {
        if (x.has_vertex(mv.beta[0])) fail("a 0-move must insert a new vertex");
        bool is_facet = false;
        for (Face f : x.facets()) is_facet = is_facet || f == *alpha;
        if (!is_facet) fail("a 0-move needs a facet as alpha");
        return;
    }
    if (!has_all(x, mv.beta)) fail("beta has a vertex outside the complex");
    const Face beta = x.face_of(mv.beta);
    if (beta.size() != static_cast<int>(mv.beta.size())) fail("repeated vertex in beta");
    if (x.contains(beta)) fail("beta is already a face, so alpha * ∂beta is not induced");
    int count = 0;
    for (Face f : x.facets()) {
        if (!alpha->subset_of(f)) continue;
        if (!f.minus(*alpha).subset_of(beta)) fail("lk(alpha) has a face outside beta");
        ++count;
    }
    if (count != static_cast<int>(mv.beta.size())) fail("lk(alpha) is not ∂beta");
}

bool is_admissible(const Complex& x, const BistellarMove& mv)
{
    try {
        check_admissible(x, mv);
        return true;
    } catch (const Error& e) {
        if (e.kind() == Error::Kind::Admissibility) return false;
        throw;
    }
}

Complex apply_bistellar(const Complex& x, const BistellarMove& mv)
{
    check_admissible(x, mv);
    std::vector<std::string> names = x.names();
    for (const auto& b : mv.beta)
        if (!x.has_vertex(b)) names.push_back(b);
    if (names.size() > static_cast<std::size_t>(kMaxVertices)) throw Error(Error::Kind::Range, "too many vertices");
    auto id = [&](const std::string& n) { return static_cast<VertexId>(std::find(names.begin(), names.end(), n) - names.begin()); };
    Face alpha, beta;
    for (const auto& a : mv.alpha) alpha = alpha.with(id(a));
    for (const auto& b : mv.beta) beta = beta.with(id(b));
    std::vector<Face> faces;
    for (Face f : x.facets())
        if (!(alpha.subset_of(f) && f.minus(alpha).subset_of(beta))) faces.push_back(f);
    alpha.for_each_vertex([&](VertexId u) { faces.push_back(alpha.without(u) | beta); });
    return Complex::from_faces(std::move(names), std::move(faces));
}

BistellarMove reversed(const BistellarMove& mv)
{
    return {mv.beta, mv.alpha, static_cast<int>(mv.alpha.size()) - 1};
}

Complex apply_reverse(const Complex& y, const BistellarMove& mv) { return apply_bistellar(y, reversed(mv)); }

std::optional<ShellingMove> shelling_step(const Complex& y, const std::vector<std::string>& facet)
{
    const auto sigma = sorted(facet);
    if (std::adjacent_find(sigma.begin(), sigma.end()) != sigma.end()) return std::nullopt;
    if (static_cast<int>(sigma.size()) != y.dim() + 1 || y.is_empty()) return std::nullopt;
    ShellingMove mv;
    for (const auto& v : sigma) {
        std::vector<std::string> rest;
        for (const auto& w : sigma)
            if (w != v) rest.push_back(w);
        if (face_in(y, rest))
            mv.beta.push_back(v);
        else
            mv.alpha.push_back(v);
    }
    if (mv.beta.empty() || face_in(y, mv.beta)) return std::nullopt;
    mv.index = static_cast<int>(mv.beta.size()) - 1;
    return mv;
}

Complex apply_shelling(const Complex& y, const ShellingMove& mv)
{
    const auto facet = unite(mv.alpha, mv.beta);
    const auto step = shelling_step(y, facet);
    if (!step || step->alpha != sorted(mv.alpha) || step->beta != sorted(mv.beta))
        throw Error(Error::Kind::Admissibility, "adding " + join_names(facet) + " is not the stated shelling move");
    FacetList facets = y.canonical_facets();
    facets.push_back(facet);
    return Complex::from_facets(facets);
}

std::string MoveCertificate::to_json() const
{
    nlohmann::ordered_json j;
    j["kind"] = kind == Kind::Bistellar ? "bistellar" : "shelling";
    j["start_hash"] = start_hash;
    j["k_bound"] = k_bound;
    j["length"] = steps.size();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json step;
        step["alpha"] = s.alpha;
        step["beta"] = s.beta;
        step["index"] = s.index;
        arr.push_back(std::move(step));
    }
    j["steps"] = std::move(arr);
    j["end_hash"] = end_hash;
    return j.dump(2);
}

Complex replay(const MoveCertificate& certificate)
{
    Complex x = certificate.start;
    if (x.digest() != certificate.start_hash) throw Error(Error::Kind::Input, "certificate start does not match start_hash");
    for (std::size_t i = 0; i < certificate.steps.size(); ++i) {
        const auto& s = certificate.steps[i];
        if (s.index >= certificate.k_bound)
            throw Error(Error::Kind::Admissibility, "step " + std::to_string(i) + " exceeds the index bound");
        if (certificate.kind == MoveCertificate::Kind::Bistellar)
            x = apply_bistellar(x, {s.alpha, s.beta, s.index});
        else
            x = apply_shelling(x, {s.alpha, s.beta, s.index});
    }
    if (x.digest() != certificate.end_hash) throw Error(Error::Kind::Input, "replay does not reach end_hash");
    return x;
}

// Shellings ---------------------------------------------------------------------------------------

namespace {

using FacetSet = std::vector<std::uint64_t>;  // bitset over facet positions

bool in_set(const FacetSet& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1; }
void set_bit(FacetSet& s, std::size_t i, bool on)
{
    if (on)
        s[i / 64] |= std::uint64_t{1} << (i % 64);
    else
        s[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

struct FacetSetHash {
    std::size_t operator()(const FacetSet& s) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : s) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

bool covered(const std::vector<Face>& facets, const FacetSet& members, Face f)
{
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (in_set(members, i) && f.subset_of(facets[i])) return true;
    return false;
}

// beta of the shelling step adding facets[i] to the members (excluding i); empty Face when invalid.
Face step_beta(const std::vector<Face>& facets, const FacetSet& members, std::size_t i)
{
    const Face sigma = facets[i];
    Face beta;
    sigma.for_each_vertex([&](VertexId v) {
        if (covered(facets, members, sigma.without(v))) beta = beta.with(v);
    });
    if (beta.empty() || covered(facets, members, beta)) return Face();
    return beta;
}

}  // namespace

ShellingCheck verify_shelling(const Complex& ball, const FacetList& order)
{
    ShellingCheck out;
    require_pure(ball, "verify_shelling");
    const int d = ball.dim();
    std::vector<Face> facets;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto f = face_in(ball, order[i]);
        if (!f || f->size() != d + 1 || f->size() != static_cast<int>(order[i].size())) {
            out.failed_position = i;
            out.message = join_names(order[i]) + " is not a facet";
            return out;
        }
        if (!seen.insert(f->bits()).second) {
            out.failed_position = i;
            out.message = join_names(order[i]) + " appears twice";
            return out;
        }
        facets.push_back(*f);
    }
    if (facets.size() != ball.facets().size()) {
        out.failed_position = facets.size();
        out.message = "order lists " + std::to_string(facets.size()) + " of " + std::to_string(ball.facets().size()) +
                      " facets";
        return out;
    }
    FacetSet members((facets.size() + 63) / 64, 0);
    MoveCertificate cert;
    cert.kind = MoveCertificate::Kind::Shelling;
    cert.start = Complex::from_facets({ball.names_of(facets[0])});
    cert.start_hash = cert.start.digest();
    out.index_counts.assign(static_cast<std::size_t>(d + 2), 0);
    out.index_counts[0] = 1;
    set_bit(members, 0, true);
    int max_index = -1;
    for (std::size_t i = 1; i < facets.size(); ++i) {
        const Face beta = step_beta(facets, members, i);
        if (beta.empty()) {
            out.failed_position = i;
            out.message = "adding " + ball.format_face(facets[i]) + " is not a shelling move";
            return out;
        }
        const int index = beta.dim();
        cert.steps.push_back({sorted_names(ball, facets[i].minus(beta)), sorted_names(ball, beta), index});
        out.index_counts[static_cast<std::size_t>(index + 1)]++;
        max_index = std::max(max_index, index);
        set_bit(members, i, true);
    }
    cert.k_bound = max_index + 1;
    cert.end_hash = ball.digest();
    out.valid = true;
    out.certificate = std::move(cert);
    out.h = h_vector(ball);
    out.h_matches = out.h.size() == out.index_counts.size() &&
                    std::equal(out.h.begin(), out.h.end(), out.index_counts.begin(),
                               [](const BigInt& a, long long b) { return a == b; });
    return out;
}

ShellingSearch find_shelling(const Complex& ball, std::uint64_t budget)
{
    require_pure(ball, "find_shelling");
    ShellingSearch out;
    const std::vector<Face>& facets = ball.facets();
    const std::size_t n = facets.size();
    FacetSet members((n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i) set_bit(members, i, true);
    std::unordered_set<FacetSet, FacetSetHash> failed;
    std::vector<std::size_t> peeled;
    bool exhausted = false;

    std::function<bool(std::size_t)> search = [&](std::size_t remaining) -> bool {
        if (remaining == 1) return true;
        if (out.nodes >= budget) {
            exhausted = true;
            return false;
        }
        ++out.nodes;
        for (std::size_t i = 0; i < n; ++i) {
            if (!in_set(members, i)) continue;
            set_bit(members, i, false);
            if (!step_beta(facets, members, i).empty() && !failed.count(members)) {
                peeled.push_back(i);
                if (search(remaining - 1)) return true;
                peeled.pop_back();
                if (exhausted) {
                    set_bit(members, i, true);
                    return false;
                }
                failed.insert(members);
            }
            set_bit(members, i, true);
        }
        return false;
    };

    if (n == 0 || ball.dim() < 0) {
        out.outcome = ShellingSearch::Outcome::None;
        return out;
    }
    if (search(n)) {
        FacetList order;
        for (std::size_t i = 0; i < n; ++i)
            if (in_set(members, i)) order.push_back(ball.names_of(facets[i]));
        for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) order.push_back(ball.names_of(facets[*it]));
        auto check = verify_shelling(ball, order);
        if (!check.valid) throw Error(Error::Kind::Internal, "shelling search produced an invalid order");
        out.outcome = ShellingSearch::Outcome::Found;
        out.certificate = std::move(check.certificate);
    } else {
        out.outcome = exhausted ? ShellingSearch::Outcome::Exhausted : ShellingSearch::Outcome::None;
    }
    return out;
}

namespace {

// Boundary (d-1)-faces as bitmasks in x's vertex ids.
std::vector<Face> boundary_facets(const Complex& x)
{
    std::unordered_map<std::uint64_t, int> count;
    for (Face f : x.facets()) f.for_each_vertex([&](VertexId v) { ++count[f.without(v).bits()]; });
    std::vector<Face> out;
    for (const auto& [bits, c] : count) {
        if (c > 2) throw Error(Error::Kind::Structure, "a codimension-one face lies in more than two facets");
        if (c == 1) out.push_back(Face(bits));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

std::vector<Face> ears(const Complex& ball)
{
    require_pure(ball, "ears");
    if (ball.facets().size() == 1) return ball.facets();
    const auto bd = boundary_facets(ball);
    std::unordered_set<std::uint64_t> bd_set;
    for (Face f : bd) bd_set.insert(f.bits());
    std::vector<Face> out;
    for (Face alpha : ball.facets()) {
        Face free;  // v with alpha \ v a boundary facet
        alpha.for_each_vertex([&](VertexId v) {
            if (bd_set.count(alpha.without(v).bits())) free = free.with(v);
        });
        if (free.empty() || free == alpha) continue;
        // Every face of ∂B inside alpha must avoid some vertex of `free`.
        bool pure = true;
        for (Face t : bd) {
            if (free.subset_of(t & alpha)) {
                pure = false;
                break;
            }
        }
        if (pure) out.push_back(alpha);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool is_k_stacked_ball(const Complex& ball, int k)
{
    require_pure(ball, "is_k_stacked_ball");
    if (k < 0) throw Error(Error::Kind::Range, "k must be nonnegative");
    const auto bd = boundary_facets(ball);
    if (bd.empty()) throw Error(Error::Kind::Precondition, "is_k_stacked_ball needs a nonempty boundary");
    const int t = ball.dim() - k - 1;
    if (t < 0) return true;
    std::unordered_set<std::uint64_t> bd_faces;
    for (Face f : bd) {
        const std::uint64_t full = f.bits();
        for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
            if (std::popcount(sub) == t + 1) bd_faces.insert(sub);
            if (sub == 0) break;
        }
    }
    for (Face f : ball.faces(t))
        if (!bd_faces.count(f.bits())) return false;
    return true;
}

bool is_1_stacked_via_tree(const Complex& ball) { return dual_graph(ball).is_tree(); }

// Canonical closures ------------------------------------------------------------------------------

namespace {

// All vertex sets whose subsets of size <= t are faces of x, up to size max_size + 1.
std::vector<Face> closure(const Complex& x, int t, int max_size, bool& overflow)
{
    const int m = x.vertex_count();
    std::vector<Face> all;
    std::vector<Face> level;
    for (int v = 0; v < m; ++v) level.push_back(Face{static_cast<VertexId>(v)});
    overflow = false;
    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        if (level.front().size() > max_size) {
            overflow = true;
            break;
        }
        std::vector<Face> next;
        for (Face a : level) {
            const int top = 63 - std::countl_zero(a.bits());
            for (int v = top + 1; v < m; ++v) {
                // Check T + v for every T ⊆ a with |T| <= t - 1.
                bool ok = true;
                const std::uint64_t full = a.bits();
                for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
                    if (std::popcount(sub) <= t - 1 && !x.contains(Face(sub).with(static_cast<VertexId>(v)))) {
                        ok = false;
                        break;
                    }
                    if (sub == 0) break;
                }
                if (ok) next.push_back(a.with(static_cast<VertexId>(v)));
            }
        }
        level = std::move(next);
    }
    return all;
}

std::optional<Complex> boundary_or_none(const Complex& x)
{
    try {
        return boundary(x);
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

std::string to_string(CanonicalResult::Status status)
{
    switch (status) {
        case CanonicalResult::Status::Ok: return "ok";
        case CanonicalResult::Status::HypothesisViolated: return "hypothesis-violated";
        case CanonicalResult::Status::Unknown: return "unknown";
    }
    return "unknown";
}

CanonicalResult canonical_ball(const Complex& s, int k)
{
    const int d = s.dim();
    if (k < 0 || d < 2 * k) throw Error(Error::Kind::Range, "canonical ball needs 0 <= k and dim >= 2k");
    CanonicalResult out;
    bool overflow = false;
    const auto faces = closure(s, k + 1, d + 2, overflow);
    out.complex = Complex::from_faces(s.names(), faces);
    std::string problem;
    if (overflow || out.complex.dim() != d + 1 || !out.complex.is_pure()) {
        problem = "closure is not a pure (d+1)-complex";
    } else if (auto bd = boundary_or_none(out.complex); !bd || !(*bd == s)) {
        problem = "boundary of the closure differs from the input";
    } else if (!is_k_stacked_ball(out.complex, k)) {
        problem = "closure is not k-stacked";
    }
    if (problem.empty()) {
        out.status = CanonicalResult::Status::Ok;
        return out;
    }
    // For d = 2k a failure means the input is not k-stellated; beyond that a k-stacked ball may
    // still exist without being given by the closure.
    out.status = d == 2 * k ? CanonicalResult::Status::HypothesisViolated : CanonicalResult::Status::Unknown;
    out.diagnostic = problem + (d == 2 * k ? "; the input is not a k-stellated sphere"
                                           : "; the input is not k-stellated, k-stackedness undetermined");
    return out;
}

CanonicalResult canonical_manifold(const Complex& m, int k)
{
    const int d = m.dim();
    if (k < 0 || d < 2 * k + 2) throw Error(Error::Kind::Range, "canonical manifold needs 0 <= k and dim >= 2k+2");
    CanonicalResult out;
    bool overflow = false;
    const auto faces = closure(m, k + 2, d + 2, overflow);
    out.complex = Complex::from_faces(m.names(), faces);
    std::string problem;
    if (overflow || out.complex.dim() != d + 1 || !out.complex.is_pure()) {
        problem = "closure is not a pure (d+1)-complex";
    } else if (auto bd = boundary_or_none(out.complex); !bd || !(*bd == m)) {
        problem = "boundary of the closure differs from the input";
    } else if (!(skeleton(out.complex, d - k) == skeleton(m, d - k))) {
        problem = "closure adds faces of dimension <= d-k";
    }
    if (problem.empty()) {
        out.status = CanonicalResult::Status::Ok;
    } else {
        out.status = CanonicalResult::Status::HypothesisViolated;
        out.diagnostic = problem + "; the input is not in W_k(d)";
    }
    return out;
}

// Stellation search -------------------------------------------------------------------------------

namespace {

bool is_standard_sphere(const Complex& x)
{
    return x.dim() >= 0 && x.vertex_count() == x.dim() + 2 && static_cast<int>(x.facets().size()) == x.dim() + 2;
}

}  // namespace

StellationResult stellation_search(const Complex& s, int k, const StellationOptions& options)
{
    const int d = s.dim();
    if (k < 0 || k > d + 1) throw Error(Error::Kind::Range, "k must lie in 0..d+1");
    if (!is_closed_pseudomanifold(s)) throw Error(Error::Kind::Precondition, "stellation search needs a closed pseudomanifold");
    StellationResult out;
    out.h_k_minus_one = h_vector(s)[static_cast<std::size_t>(k)] - 1;
    const int min_reverse = d - k + 1;
    const std::size_t facet_cap =
        s.facets().size() + static_cast<std::size_t>(options.facet_slack < 0 ? 2 * (d + 1) : options.facet_slack);
    std::mt19937_64 rng(options.seed);

    struct Frame {
        Complex x;
        BistellarMove via;
        std::vector<BistellarMove> moves;
        std::size_t next = 0;
    };
    auto candidates = [&](const Complex& x) {
        std::vector<std::pair<double, BistellarMove>> scored;
        std::uniform_real_distribution<double> noise(0.0, 1.0);
        for (auto& mv : enumerate_bistellar(x)) {
            if (mv.index < min_reverse) continue;
            const double delta = static_cast<double>(d - 2 * mv.index);  // change in facet count
            scored.emplace_back(delta + noise(rng), std::move(mv));
        }
        std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<BistellarMove> moves;
        for (auto& [_, mv] : scored) moves.push_back(std::move(mv));
        return moves;
    };

    std::vector<Frame> stack;
    std::unordered_set<std::string> visited;
    bool pruned = false;
    bool found = is_standard_sphere(s);
    visited.insert(s.digest());
    out.nodes = 1;
    if (!found) stack.push_back({s, {}, candidates(s), 0});
    while (!found && !stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.moves.size()) {
            stack.pop_back();
            continue;
        }
        const BistellarMove mv = top.moves[top.next++];
        Complex y = apply_bistellar(top.x, mv);
        if (!visited.insert(y.digest()).second) continue;
        if (y.facets().size() > facet_cap) {
            pruned = true;
            continue;
        }
        if (++out.nodes > options.budget) {
            out.outcome = StellationResult::Outcome::Exhausted;
            out.complete = false;
            return out;
        }
        if (is_standard_sphere(y)) {
            stack.push_back({std::move(y), mv, {}, 0});
            found = true;
            break;
        }
        auto moves = candidates(y);
        stack.push_back({std::move(y), mv, std::move(moves), 0});
    }
    if (!found) {
        out.outcome = StellationResult::Outcome::Exhausted;
        // Reverse 0-moves are never tried, so k = d+1 cannot be refuted here.
        out.complete = !pruned && min_reverse >= 1;
        return out;
    }
    MoveCertificate cert;
    cert.kind = MoveCertificate::Kind::Bistellar;
    cert.start = stack.empty() ? s : stack.back().x;
    cert.start_hash = cert.start.digest();
    cert.end_hash = s.digest();
    out.index_counts.assign(static_cast<std::size_t>(std::max(k, 1)), 0);
    int max_index = -1;
    for (std::size_t i = stack.size(); i-- > 1;) {
        const BistellarMove forward = reversed(stack[i].via);
        cert.steps.push_back({forward.alpha, forward.beta, forward.index});
        max_index = std::max(max_index, forward.index);
        if (forward.index < static_cast<int>(out.index_counts.size())) out.index_counts[forward.index]++;
    }
    cert.k_bound = max_index + 1;
    if (!(replay(cert) == s)) throw Error(Error::Kind::Internal, "stellation certificate does not replay");
    out.outcome = StellationResult::Outcome::Certified;
    out.complete = true;
    out.certificate = std::move(cert);
    return out;
}

std::string to_string(WkMembership::Verdict verdict)
{
    switch (verdict) {
        case WkMembership::Verdict::Member: return "member";
        case WkMembership::Verdict::NotMember: return "not-member";
        case WkMembership::Verdict::NotCertified: return "not-certified";
    }
    return "not-certified";
}

WkMembership w_k_membership(const Complex& m, int k, const StellationOptions& options, int jobs)
{
    if (!is_connected(m)) throw Error(Error::Kind::Precondition, "W_k membership needs a connected complex");
    const int n = m.vertex_count();
    WkMembership out;
    out.links.resize(static_cast<std::size_t>(n));
    std::vector<Complex> links;
    for (int v = 0; v < n; ++v) {
        links.push_back(link(m, Face{static_cast<VertexId>(v)}));
        if (!is_closed_pseudomanifold(links.back()))
            throw Error(Error::Kind::Precondition, "the link of " + m.name(static_cast<VertexId>(v)) +
                                                       " is not a closed pseudomanifold");
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    auto worker = [&] {
        for (int v = next++; v < n; v = next++) {
            try {
                StellationOptions per_link = options;
                per_link.seed = options.seed + static_cast<std::uint64_t>(v);
                out.links[v] = {m.name(static_cast<VertexId>(v)), stellation_search(links[v], k, per_link)};
            } catch (...) {
                errors[v] = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min(jobs, n));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    bool all = true, refuted = false;
    for (const auto& l : out.links) {
        if (l.result.outcome != StellationResult::Outcome::Certified) {
            all = false;
            refuted = refuted || l.result.complete;
        }
    }
    out.verdict = all ? WkMembership::Verdict::Member
                      : (refuted ? WkMembership::Verdict::NotMember : WkMembership::Verdict::NotCertified);
    return out;
}

}  // namespace stellar
