#pragma once

#include "expdom/graph.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace expdom {

/// Largest order accepted by the canonical labelling.
inline constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism-class identifier: the order plus the upper-triangle adjacency
/// bits (row-major, first bit most significant) of the canonical form.
/// Codes of equal order compare in the same order as those bit strings.
class CanonicalCode {
public:
    CanonicalCode() = default;

    int order() const { return order_; }
    /// Fixed-length big-endian byte string: order byte then 16 bit bytes.
    std::array<std::uint8_t, 17> bytes() const;
    /// The canonical representative itself.
    Graph to_graph() const;
    std::string to_graph6() const;

    std::size_t hash() const
    {
        std::uint64_t h = high_ * 0x9E3779B97F4A7C15ULL ^ low_;
        h ^= static_cast<std::uint64_t>(order_) << 56;
        h ^= h >> 29;
        h *= 0xBF58476D1CE4E5B9ULL;
        h ^= h >> 32;
        return static_cast<std::size_t>(h);
    }

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend std::strong_ordering operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

private:
    friend CanonicalCode pack_code(const Graph& g);

    int order_ = 0;
    std::uint64_t high_ = 0;
    std::uint64_t low_ = 0;
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const { return c.hash(); }
};

struct CanonicalForm {
    /// g relabelled by `labeling`.
    Graph graph;
    /// labeling[v] is the canonical label of original vertex v.
    std::vector<int> labeling;
    CanonicalCode code;
};

/// Packs the upper triangle of g as labelled; no canonicalisation.
CanonicalCode pack_code(const Graph& g);

/// Individualisation-refinement search returning the labelling whose
/// adjacency bit string is lexicographically smallest among search-tree
/// leaves. Throws SizeLimitError above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

} // namespace expdom

template <>
struct std::hash<expdom::CanonicalCode> {
    std::size_t operator()(const expdom::CanonicalCode& c) const noexcept { return c.hash(); }
};
