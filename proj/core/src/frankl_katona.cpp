#include "sunflower/frankl_katona.hpp"

#include <algorithm>
#include <string>

#include "set_masks.hpp"
#include "sunflower/errors.hpp"

namespace sunflower {

using detail::SetMask;

namespace {

/// Positions j_1 < ... < j_s with |∩| = s - 1; intersections only shrink, so a
/// partial pick already below s - 1 is abandoned.
bool pick(const std::vector<SetMask>& sets, std::size_t s, std::size_t from, SetMask acc,
          std::vector<std::size_t>& chosen) {
    if (static_cast<std::size_t>(detail::size_of(acc)) < s - 1) return false;
    if (chosen.size() == s) return static_cast<std::size_t>(detail::size_of(acc)) == s - 1;
    for (std::size_t i = from; i + (s - chosen.size()) <= sets.size(); ++i) {
        chosen.push_back(i);
        if (pick(sets, s, i + 1, acc & sets[i], chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

FranklKatonaWitness frankl_katona(const std::vector<VertexSet>& collection, int m) {
    if (m < 0 || m > 62) throw InvalidArgument("Frankl-Katona needs 0 <= m <= 62");
    if (collection.size() != static_cast<std::size_t>(m) + 1) {
        throw InvalidArgument("Frankl-Katona needs exactly m+1 sets");
    }
    std::vector<SetMask> sets;
    for (const auto& s : collection) {
        if (!s.within(m)) throw InvalidArgument("set " + s.to_string() + " is not inside {1..m}");
        sets.push_back(detail::mask_of(s));
    }
    const SetMask all = detail::full_mask(m);
    for (std::size_t s = 1; s <= sets.size(); ++s) {
        std::vector<std::size_t> chosen;
        if (pick(sets, s, 0, all, chosen)) {
            SetMask acc = all;
            for (auto i : chosen) acc &= sets[i];
            return {std::move(chosen), s, detail::set_of(acc)};
        }
    }
    throw InternalError("no Frankl-Katona witness among " + std::to_string(sets.size()) +
                        " subsets of [" + std::to_string(m) + "]");
}

bool verify_frankl_katona(const std::vector<VertexSet>& collection, const FranklKatonaWitness& w) {
    if (w.s == 0 || w.indices.size() != w.s) return false;
    if (!std::is_sorted(w.indices.begin(), w.indices.end())) return false;
    if (std::adjacent_find(w.indices.begin(), w.indices.end()) != w.indices.end()) return false;
    if (w.indices.back() >= collection.size()) return false;
    VertexSet acc = collection[w.indices.front()];
    for (auto i : w.indices) acc = acc.intersect(collection[i]);
    return acc == w.intersection && acc.size() == w.s - 1;
}

RefutationTrace refute_system_2t1(const SetSystem& sys, int t) {
    if (t < 0) throw InvalidArgument("t must be non-negative");
    const int N = 2 * t + 1;
    if (sys.ground_size() != N) throw InvalidArgument("refutation needs ground set size 2t+1");
    if (!is_intersection_closed(sys)) throw InvalidArgument("family is not intersection-closed");
    if (!covers_all_t_sets(sys, t)) throw InvalidArgument("family does not cover every t-set");

    RefutationTrace trace;
    trace.t = t;
    const VertexSet full = VertexSet::range(1, N);
    if (sys.contains(full)) {
        trace.full_set_member = true;
        trace.member = full;
        return trace;
    }

    std::vector<SetMask> members;
    for (const auto& a : sys.family()) members.push_back(detail::mask_of(a));
    auto covered = [&](SetMask s) {
        return std::any_of(members.begin(), members.end(), [&](SetMask a) { return (a & s) == s; });
    };

    // least size first, so the first uncovered set is inclusion-minimal
    SetMask minimal = 0;
    bool found = false;
    for (int size = 0; size <= N && !found; ++size) {
        for (SetMask s : detail::k_subset_masks(N, size)) {
            if (!covered(s)) {
                minimal = s;
                found = true;
                break;
            }
        }
    }
    SUNFLOWER_ENSURE(found, "[N] is uncovered yet no uncovered set was found");
    trace.minimal_uncovered = detail::set_of(minimal);
    SUNFLOWER_ENSURE(trace.minimal_uncovered.size() >= static_cast<std::size_t>(t) + 1,
                     "coverage holds but a set of size <= t is uncovered");

    const auto& s_members = trace.minimal_uncovered.vector();
    trace.pivots = VertexSet::from_sorted({s_members.begin(), s_members.begin() + t + 1});
    const SetMask pivot_mask = detail::mask_of(trace.pivots);

    for (Vertex i : trace.pivots) {
        const SetMask want = minimal & ~(SetMask{1} << (i - 1));
        const auto it = std::find_if(members.begin(), members.end(),
                                     [&](SetMask a) { return (a & minimal) == want; });
        SUNFLOWER_ENSURE(it != members.end(), "minimality of S fails at pivot " + std::to_string(i));
        trace.chosen.push_back(detail::set_of(*it));
        trace.outside.push_back(detail::set_of(*it & ~pivot_mask));
    }

    // relabel [N] \ pivots onto {1..t}
    const VertexSet rest = full.minus(trace.pivots);
    std::vector<VertexSet> relabelled;
    for (const auto& d : trace.outside) {
        std::vector<Vertex> ids;
        for (Vertex v : d) {
            ids.push_back(static_cast<Vertex>(std::lower_bound(rest.begin(), rest.end(), v) - rest.begin()) + 1);
        }
        relabelled.push_back(VertexSet::from_sorted(std::move(ids)));
    }
    trace.fk = frankl_katona(relabelled, t);

    SetMask acc = detail::full_mask(N);
    for (auto j : trace.fk.indices) acc &= detail::mask_of(trace.chosen[j]);
    trace.member = detail::set_of(acc);
    SUNFLOWER_ENSURE(trace.member.size() == static_cast<std::size_t>(t),
                     "refutation member has size " + std::to_string(trace.member.size()) + ", not t");
    SUNFLOWER_ENSURE(sys.contains(trace.member), "refutation member missing from a closed family");
    return trace;
}

}  // namespace sunflower
