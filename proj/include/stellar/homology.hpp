#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

struct Field {
    std::uint32_t p = 0;  // 0 stands for the rationals

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint32_t p);
    // Accepts q, z2, z3, z5, zP (any prime P), case-insensitive.
    static Field parse(const std::string& text);
    bool is_rational() const { return p == 0; }
    std::string name() const;
    friend bool operator==(Field a, Field b) { return a.p == b.p; }
};

bool is_prime(std::uint64_t n);

struct BettiTable {
    Field field;
    std::vector<long long> beta;     // beta_0..beta_d
    std::vector<long long> reduced;  // reduced Betti numbers, same range
};

BettiTable betti(const Complex& x, Field field);
// Betti numbers beta_0..beta_d of the pair (X[b], X[a]); requires a ⊆ b.
std::vector<long long> relative_betti(const Complex& x, Face a, Face b, Field field);
// Whether H_j(X[a]) -> H_j(X) is injective, via dim(Z_j(X[a]) ∩ B_j(X)) = dim B_j(X[a]).
bool inclusion_injective(const Complex& x, Face a, int j, Field field);
// beta_d = 1 for a closed connected pseudomanifold.
bool orientable(const Complex& x, Field field);

// Homology of induced subcomplexes of one fixed complex, with the boundary data prepared once.
// Thread-safe for concurrent queries.
class InducedHomology {
public:
    InducedHomology(const Complex& x, Field field);
    ~InducedHomology();
    InducedHomology(InducedHomology&&) noexcept;

    int dim() const;
    // Reduced Betti numbers of X[a] for 0..d; X[∅] gives (-1, 0, ...).
    std::vector<long long> reduced_betti(Face a) const;
    // Betti numbers of (X[b], X[a]) for 0..d.
    std::vector<long long> relative_betti(Face a, Face b) const;
    bool injective(Face a, int j) const;

private:
    struct Data;
    std::unique_ptr<Data> data_;
};

}  // namespace stellar
