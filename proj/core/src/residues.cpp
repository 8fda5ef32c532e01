#include "sunflower/residues.hpp"

#include <map>
#include <string>

#include "set_masks.hpp"
#include "sunflower/errors.hpp"

namespace sunflower {

namespace {

PrimePower require_prime_power(std::uint64_t t) {
    auto pp = prime_power(t + 1);
    if (!pp) {
        throw InvalidArgument("t+1 = " + std::to_string(t + 1) +
                              " is not a prime power; the residue criterion does not apply");
    }
    return *pp;
}

std::uint64_t mod_small(const BigInt& value, std::uint64_t p) {
    BigInt r = value % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

}  // namespace

LucasCheck lucas_residue_check(std::uint64_t a, std::uint64_t t) {
    const PrimePower pp = require_prime_power(t);
    LucasCheck out;
    out.prime = pp.prime;
    out.exponent = pp.exponent;
    const BigInt exact = binomial(static_cast<std::int64_t>(a), static_cast<std::int64_t>(t));
    out.binomial_residue = mod_small(exact, pp.prime);
    out.binomial_vanishes = out.binomial_residue == 0;
    out.not_minus_one = (a + 1) % (t + 1) != 0;
    return out;
}

InclusionExclusionReport inclusion_exclusion_residue(const SetSystem& sys, int t) {
    if (t < 0) throw InvalidArgument("t must be non-negative");
    const PrimePower pp = require_prime_power(static_cast<std::uint64_t>(t));
    if (!is_intersection_closed(sys)) {
        throw InvalidArgument("inclusion-exclusion precondition: family is not intersection-closed");
    }
    if (!covers_all_t_sets(sys, t)) {
        throw InvalidArgument("inclusion-exclusion precondition: some t-subset of [N] is uncovered");
    }

    InclusionExclusionReport out;
    out.prime = pp.prime;
    out.lhs = binomial(sys.ground_size(), t);
    out.lhs_residue = mod_small(out.lhs, pp.prime);

    // (intersection, order) -> number of subfamilies; intersections stay
    // inside the family because it is closed.
    const std::size_t m = sys.size();
    std::map<detail::SetMask, std::vector<BigInt>> counts;
    for (const auto& member : sys.family()) {
        const detail::SetMask a = detail::mask_of(member);
        std::map<detail::SetMask, std::vector<BigInt>> next = counts;
        auto bump = [&](detail::SetMask x, std::size_t order, const BigInt& by) {
            auto& row = next[x];
            if (row.size() < m + 1) row.resize(m + 1);
            row[order] += by;
        };
        bump(a, 1, 1);
        for (const auto& [x, row] : counts) {
            for (std::size_t i = 1; i < row.size(); ++i) {
                if (row[i] != 0) bump(x & a, i + 1, row[i]);
            }
        }
        counts = std::move(next);
    }

    out.terms.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.terms[i].order = i + 1;
    for (const auto& [x, row] : counts) {
        const BigInt c = binomial(detail::size_of(x), t);
        for (std::size_t i = 1; i < row.size(); ++i) {
            if (row[i] != 0) out.terms[i - 1].value += row[i] * c;
        }
    }
    out.all_terms_vanish = true;
    for (auto& term : out.terms) {
        term.residue = mod_small(term.value, pp.prime);
        out.all_terms_vanish = out.all_terms_vanish && term.residue == 0;
        if (term.order % 2 == 1) out.rhs += term.value;
        else out.rhs -= term.value;
    }
    out.identity_holds = out.rhs == out.lhs;

    const auto modulus = static_cast<std::size_t>(t + 1);
    for (const auto& member : sys.family()) {
        if ((member.size() + 1) % modulus == 0) out.minus_one_members.push_back(member);
    }
    out.contradiction_certified = out.lhs_residue != 0 && out.all_terms_vanish;
    return out;
}

}  // namespace sunflower
