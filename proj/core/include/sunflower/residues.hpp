#pragma once

#include <cstdint>
#include <vector>

#include "sunflower/combinatorics.hpp"
#include "sunflower/set_system.hpp"

namespace sunflower {

/// Both sides of the prime-power binomial criterion for t + 1 = p^α:
///   C(a, t) ≡ 0 (mod p)  ⟺  a ≢ -1 (mod t+1).
struct LucasCheck {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::uint64_t binomial_residue = 0;  // C(a,t) mod p, from the exact value
    bool binomial_vanishes = false;      // C(a,t) ≡ 0 (mod p)
    bool not_minus_one = false;          // a ≢ -1 (mod t+1)

    [[nodiscard]] bool equivalence_holds() const noexcept { return binomial_vanishes == not_minus_one; }
};

/// Throws InvalidArgument unless t + 1 is a prime power.
LucasCheck lucas_residue_check(std::uint64_t a, std::uint64_t t);

struct InclusionExclusionTerm {
    std::size_t order = 0;      // i: number of members intersected
    BigInt value;               // Σ_{|F| = i} C(|∩F|, t), unsigned
    std::uint64_t residue = 0;  // value mod p
};

/// Exact evaluation of
///   C(N,t) = Σ_i (-1)^{i+1} Σ_{F ⊆ family, |F| = i} C(|∩F|, t)
/// with residues modulo p, where t + 1 = p^α.
struct InclusionExclusionReport {
    std::uint64_t prime = 0;
    BigInt lhs;                   // C(N, t)
    std::uint64_t lhs_residue = 0;
    BigInt rhs;
    std::vector<InclusionExclusionTerm> terms;
    bool identity_holds = false;
    bool all_terms_vanish = false;
    /// Members with |A| ≡ -1 (mod t+1): the only ones whose C(|A|,t) survives mod p.
    std::vector<VertexSet> minus_one_members;
    /// lhs ≢ 0 while every term ≡ 0: the arithmetic refutes the family.
    bool contradiction_certified = false;
};

/// Requires t + 1 a prime power, an intersection-closed family, and coverage
/// of every t-subset of {1..N}; each violation has its own diagnostic.
InclusionExclusionReport inclusion_exclusion_residue(const SetSystem& sys, int t);

}  // namespace sunflower
