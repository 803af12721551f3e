#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/vectors.hpp"

namespace stellar {

// Moves are stored by vertex names so that they survive relabelling and can name fresh vertices.
struct BistellarMove {
    std::vector<std::string> alpha;  // removed core, sorted
    std::vector<std::string> beta;   // inserted core, sorted
    int index = 0;                   // dim(beta)
};

struct ShellingMove {
    std::vector<std::string> alpha;
    std::vector<std::string> beta;  // nonempty; the new facet is alpha ⊔ beta
    int index = 0;
};

struct MoveStep {
    std::vector<std::string> alpha;
    std::vector<std::string> beta;
    int index = 0;
};

struct MoveCertificate {
    enum class Kind { Bistellar, Shelling };
    Kind kind = Kind::Bistellar;
    Complex start;  // standard sphere for bistellar certificates, a single simplex for shellings
    std::vector<MoveStep> steps;
    int k_bound = 0;  // max step index + 1 (0 for an empty certificate)
    std::string start_hash;
    std::string end_hash;

    std::size_t length() const { return steps.size(); }
    std::string to_json() const;
};

// All admissible moves of index >= 1: lk(alpha) = ∂beta with beta not a face. Sorted by index, then
// lexicographically by alpha.
std::vector<BistellarMove> enumerate_bistellar(const Complex& x);
// The 0-move on each facet, inserting a vertex named fresh_name (which must be unused).
std::vector<BistellarMove> zero_moves(const Complex& x, const std::string& fresh_name);
// Throws Admissibility naming the violated condition.
void check_admissible(const Complex& x, const BistellarMove& mv);
bool is_admissible(const Complex& x, const BistellarMove& mv);
Complex apply_bistellar(const Complex& x, const BistellarMove& mv);
// Applies the reverse move beta -> alpha to y.
Complex apply_reverse(const Complex& y, const BistellarMove& mv);
BistellarMove reversed(const BistellarMove& mv);

// Shelling step adding `facet` to the pure complex y; nullopt when it is not a shelling move.
std::optional<ShellingMove> shelling_step(const Complex& y, const std::vector<std::string>& facet);
Complex apply_shelling(const Complex& y, const ShellingMove& mv);

struct ShellingCheck {
    bool valid = false;
    std::optional<MoveCertificate> certificate;
    std::size_t failed_position = 0;  // index into the order of the first invalid step
    std::string message;
    // index_counts[j] = #steps of index j - 1 (the first facet counts as index -1).
    std::vector<long long> index_counts;
    std::vector<BigInt> h;
    bool h_matches = false;
};
ShellingCheck verify_shelling(const Complex& ball, const FacetList& order);

struct ShellingSearch {
    enum class Outcome { Found, None, Exhausted };
    Outcome outcome = Outcome::None;
    std::optional<MoveCertificate> certificate;
    std::uint64_t nodes = 0;
};
// Peels facets from the end: the last facet must be a shelling step onto the rest.
ShellingSearch find_shelling(const Complex& ball, std::uint64_t budget);

// Facets whose induced boundary subcomplex is a (d-1)-ball; a single-facet ball reports its facet.
std::vector<Face> ears(const Complex& ball);

// All faces of dimension <= dim(ball) - k - 1 lie in the boundary.
bool is_k_stacked_ball(const Complex& ball, int k);
bool is_1_stacked_via_tree(const Complex& ball);

struct CanonicalResult {
    enum class Status { Ok, HypothesisViolated, Unknown };
    Status status = Status::Unknown;
    Complex complex;  // the closure formula output, returned even when validation fails
    std::string diagnostic;
};
// Sets whose subsets of size <= k+1 are faces of s; requires dim(s) >= 2k.
CanonicalResult canonical_ball(const Complex& s, int k);
// Sets whose subsets of size <= k+2 are faces of m; requires dim(m) >= 2k+2.
CanonicalResult canonical_manifold(const Complex& m, int k);
std::string to_string(CanonicalResult::Status status);

struct StellationOptions {
    std::uint64_t budget = 1'000'000;  // explored complexes
    std::uint64_t seed = 0;
    // Non-reducing reverse moves may raise the facet count at most this far above the start.
    int facet_slack = -1;  // -1 picks 2(d+1)
};

struct StellationResult {
    enum class Outcome { Certified, Exhausted };
    Outcome outcome = Outcome::Exhausted;
    // Exhausted with complete = true means every reachable reduction was explored: not k-stellated.
    bool complete = false;
    std::optional<MoveCertificate> certificate;
    std::uint64_t nodes = 0;
    BigInt h_k_minus_one;  // lower bound on the certificate length
    std::vector<long long> index_counts;
};
// Reduces s towards the standard sphere with reverse moves of index >= d-k+1, then replays the
// forward certificate before returning it.
StellationResult stellation_search(const Complex& s, int k, const StellationOptions& options = {});

struct LinkVerdict {
    std::string vertex;
    StellationResult result;
};
struct WkMembership {
    enum class Verdict { Member, NotMember, NotCertified };
    Verdict verdict = Verdict::NotCertified;
    std::vector<LinkVerdict> links;
};
WkMembership w_k_membership(const Complex& m, int k, const StellationOptions& options = {}, int jobs = 1);
std::string to_string(WkMembership::Verdict verdict);

// Replays a certificate from its start complex, checking admissibility and indices at every step.
Complex replay(const MoveCertificate& certificate);

}  // namespace stellar
