#include "sunflower/matching.hpp"

#include "bits.hpp"
#include "matching_kernel.hpp"
#include "sunflower/errors.hpp"

namespace sunflower {

MatchingOrCover greedy_matching_or_cover(const Hypergraph& link, std::size_t k) {
    if (k < 1) throw InvalidArgument("greedy matching needs k >= 1");
    MatchingOrCover out;
    if (link.r() == 0 && !link.empty()) {
        if (k == 1) {
            out.branch = DichotomyBranch::matching;
            out.matching.push_back(VertexSet{});
        } else {
            out.branch = DichotomyBranch::uncoverable_degenerate;
        }
        return out;
    }
    VertexSet used;
    for (const auto& e : link.edges()) {
        if (e.disjoint_from(used)) {
            out.matching.push_back(e);
            used = used.unite(e);
            if (out.matching.size() == k) {
                out.branch = DichotomyBranch::matching;
                return out;
            }
        }
    }
    out.branch = DichotomyBranch::cover;
    out.matching.clear();
    out.cover = std::move(used);
    return out;
}

bool dichotomy_is_sound(const Hypergraph& link, std::size_t k, const MatchingOrCover& result) {
    switch (result.branch) {
        case DichotomyBranch::matching: {
            if (result.matching.size() != k) return false;
            for (std::size_t i = 0; i < k; ++i) {
                if (!link.contains(result.matching[i])) return false;
                for (std::size_t j = i + 1; j < k; ++j) {
                    if (!result.matching[i].disjoint_from(result.matching[j])) return false;
                }
            }
            return true;
        }
        case DichotomyBranch::cover: {
            const auto u = static_cast<std::size_t>(link.r());
            if (result.cover.size() > (k - 1) * u) return false;
            for (const auto& e : link.edges()) {
                if (e.disjoint_from(result.cover)) return false;
            }
            return true;
        }
        case DichotomyBranch::uncoverable_degenerate:
            return link.r() == 0 && !link.empty() && k >= 2;
    }
    return false;
}

MatchingResult max_matching_exact(const Hypergraph& link, std::size_t goal) {
    return detail::dispatch_width(link.n(), [&]<class Mask>() {
        auto masks = detail::to_masks<Mask>(link.edges());
        detail::MatchingSearch<Mask> search(masks, link.r(), goal);
        auto picked = search.run();
        MatchingResult out;
        out.nodes = search.nodes();
        for (auto i : picked) {
            out.indices.push_back(i);
            out.edges.push_back(link.edge(i));
        }
        return out;
    });
}

}  // namespace sunflower
