#pragma once

#include <cstddef>
#include <vector>

#include "sunflower/set_system.hpp"
#include "sunflower/vertex_set.hpp"

namespace sunflower {

/// s positions of an input collection whose members intersect in exactly
/// s - 1 elements.
struct FranklKatonaWitness {
    std::vector<std::size_t> indices;  // 0-based positions, ascending
    std::size_t s = 0;
    VertexSet intersection;
};

/// Among m + 1 (not necessarily distinct) subsets of {1..m}, finds the
/// smallest s admitting s sets with intersection of size exactly s - 1;
/// lexicographically least positions among those. Such a witness always
/// exists; failing to find one raises InternalError. m <= 62.
FranklKatonaWitness frankl_katona(const std::vector<VertexSet>& collection, int m);

bool verify_frankl_katona(const std::vector<VertexSet>& collection, const FranklKatonaWitness& w);

/// Constructive refutation of a closed, covering family on {1..2t+1}: either
/// [N] is itself a member (a direct size-residue violation), or the trace
/// below ends in a member of size exactly t.
struct RefutationTrace {
    int t = 0;
    bool full_set_member = false;
    VertexSet minimal_uncovered;  // S
    VertexSet pivots;             // the t+1 least elements of S
    std::vector<VertexSet> chosen;   // A_i with A_i ∩ S = S \ {pivot_i}
    std::vector<VertexSet> outside;  // D_i = A_i \ pivots
    FranklKatonaWitness fk;          // over the D_i, relabelled into {1..t}
    VertexSet member;                // ∩ of the selected A_i
};

/// Throws InvalidArgument if N != 2t+1 or the family is not closed/covering.
RefutationTrace refute_system_2t1(const SetSystem& sys, int t);

}  // namespace sunflower
