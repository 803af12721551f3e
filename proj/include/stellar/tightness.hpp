#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/homology.hpp"
#include "stellar/vectors.hpp"

namespace stellar {

struct TightnessOptions {
    int sigma_cap = 16;   // largest vertex count for full subset enumeration
    int direct_cap = 12;  // largest vertex count for the direct tightness check
    int jobs = 1;
};

// Subset-averaged reduced Betti numbers sigma_0..sigma_d, with the empty subset counted as -1 in degree 0.
std::vector<Rational> sigma_vector(const Complex& x, Field field, const TightnessOptions& options = {});
// mu_0 = 1 and mu_i = [i = 1] + (1/m) * sum over vertices of sigma_{i-1}(link).
std::vector<Rational> mu_vector(const Complex& x, Field field, const TightnessOptions& options = {});
// The same vector from relative Betti numbers of covering pairs A ⊂ B; requires 2-neighbourliness.
std::vector<Rational> mu_via_pairs(const Complex& x, Field field, const TightnessOptions& options = {});

struct MuReport {
    enum class Verdict { Tight, NotTight, NotApplicable };
    Field field;
    std::vector<Rational> sigma;  // empty when the vertex count exceeds the sigma cap
    std::vector<Rational> mu;
    BettiTable beta;
    // slack[j] = sum_{i <= j} (-1)^(j-i) (mu_i - beta_i)
    std::vector<Rational> slack;
    std::vector<bool> weak;  // mu_j >= beta_j
    bool two_neighbourly = false;
    std::optional<bool> duality;  // set for orientable closed homology manifolds
    Verdict verdict = Verdict::NotApplicable;
    std::vector<std::string> witnesses;

    std::string to_json() const;
};
MuReport morse_report(const Complex& x, Field field, const TightnessOptions& options = {});
std::string to_string(MuReport::Verdict verdict);

enum class TightMode { Direct, MuBeta };

struct TightResult {
    bool tight = false;
    TightMode mode = TightMode::Direct;
    // An induced subcomplex and degree where H_j(X[A]) -> H_j(X) is not injective.
    std::optional<std::vector<std::string>> witness_subset;
    int witness_degree = -1;
    std::string reason;
    std::vector<Rational> mu;  // filled in MuBeta mode
    std::vector<long long> beta;
};
// Direct mode checks every induced subcomplex, by size then lexicographically, degrees ascending.
TightResult is_tight(const Complex& x, Field field, TightMode mode, const TightnessOptions& options = {});

// Homology manifold test: every vertex link has the field homology of a sphere of one dimension less.
bool is_homology_manifold(const Complex& x, Field field);

struct CriterionLine {
    enum class Outcome { Skipped, Holds, Equality, Fails };
    std::string criterion;
    std::string clause;
    bool hypothesis_met = false;
    Outcome outcome = Outcome::Skipped;
    std::string lhs;
    std::string rhs;
    std::string note;
};
std::string to_string(CriterionLine::Outcome outcome);

struct CriterionReport {
    int k = 0;
    Field field;
    std::vector<CriterionLine> lines;
    // No line whose hypothesis holds reports a failed conclusion.
    bool consistent() const;
    std::string to_json() const;
};

struct BatteryOptions {
    TightnessOptions tightness;
    // Set by the caller when every vertex link carries a verified k-stellated certificate.
    bool wk_certified = false;
};
// Evaluates each tightness criterion and bound for a closed manifold and a claimed k. Never decides W_k membership.
CriterionReport criterion_battery(const Complex& m, int k, Field field, const BatteryOptions& options = {});

// Sigma against g-vector relations for a k-stellated sphere of dimension >= 2k-1. Without a certificate the lines
// are reported as skipped.
CriterionReport stellated_sigma_check(const Complex& sphere, int k, Field field, bool certified,
                                      const TightnessOptions& options = {});

}  // namespace stellar
