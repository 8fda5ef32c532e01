#include "sunflower/vertex_set.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

#include "sunflower/errors.hpp"

namespace sunflower {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw InvalidArgument("vertex set has a repeated id");
    }
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> members) {
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
    VertexSet s;
    if (last >= first) {
        s.members_.resize(static_cast<std::size_t>(last - first + 1));
        std::iota(s.members_.begin(), s.members_.end(), first);
    }
    return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

bool VertexSet::disjoint_from(const VertexSet& other) const noexcept {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a;
        else ++b;
    }
    return true;
}

bool VertexSet::within(int n) const noexcept {
    return members_.empty() || (members_.front() >= 1 && members_.back() <= n);
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) os << ',';
        os << members_[i];
    }
    os << '}';
    return os.str();
}

std::vector<VertexSet> subsets_of_size(const VertexSet& base, std::size_t k) {
    std::vector<VertexSet> out;
    for_each_combination(base.members(), k, [&](std::span<const Vertex> pick) {
        out.push_back(VertexSet::from_sorted({pick.begin(), pick.end()}));
    });
    return out;
}

}  // namespace sunflower
