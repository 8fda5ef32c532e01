#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sunflower {

/// Vertex ids are 1-based everywhere they leave the library.
using Vertex = int;

/// Sorted, duplicate-free set of vertex ids. Comparison is lexicographic on
/// the sorted member sequence, which is the canonical edge order.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    /// Sorts the input; throws InvalidArgument on repeated ids.
    explicit VertexSet(std::vector<Vertex> members);

    /// Caller guarantees strictly increasing input.
    static VertexSet from_sorted(std::vector<Vertex> members);
    /// {first, ..., last}; empty when last < first.
    static VertexSet range(Vertex first, Vertex last);

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] std::span<const Vertex> members() const noexcept { return members_; }
    [[nodiscard]] const std::vector<Vertex>& vector() const noexcept { return members_; }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    [[nodiscard]] bool contains(Vertex v) const noexcept;
    [[nodiscard]] bool is_subset_of(const VertexSet& other) const noexcept;
    [[nodiscard]] bool disjoint_from(const VertexSet& other) const noexcept;
    /// True when every member lies in {1..n}.
    [[nodiscard]] bool within(int n) const noexcept;

    [[nodiscard]] VertexSet intersect(const VertexSet& other) const;
    [[nodiscard]] VertexSet unite(const VertexSet& other) const;
    [[nodiscard]] VertexSet minus(const VertexSet& other) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.members_ <=> b.members_;
    }

private:
    std::vector<Vertex> members_;
};

/// All size-k subsets of `items` in lexicographic order of index tuples.
template <class F>
void for_each_combination(std::span<const Vertex> items, std::size_t k, F&& visit) {
    const std::size_t n = items.size();
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Vertex> pick(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) pick[i] = items[idx[i]];
        visit(std::span<const Vertex>(pick));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// All size-k subsets of a vertex set, as VertexSets, lexicographic.
std::vector<VertexSet> subsets_of_size(const VertexSet& base, std::size_t k);

}  // namespace sunflower
