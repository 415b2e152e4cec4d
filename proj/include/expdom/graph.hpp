#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace expdom {

/// Largest supported vertex count: one neighbourhood fits in a machine word.
inline constexpr int kMaxOrder = 64;

/// Distance value used for "no such path".
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Invalid graph construction (out-of-range vertex, self-loop, bad order).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An input exceeds the order an operation supports.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A set of vertices 0..63 held in one word. Carries no reference to a
/// graph; operations taking a graph validate membership against its order.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    /// {0, ..., n-1}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet of(std::initializer_list<int> vs)
    {
        std::uint64_t bits = 0;
        for (int v : vs)
            bits |= std::uint64_t{1} << v;
        return VertexSet(bits);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }
    /// Largest member; undefined on the empty set.
    constexpr int last() const { return 63 - std::countl_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1 with n <= 64.
/// Row u holds the neighbourhood of u as a bit set.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph of order n.
    explicit Graph(int n);

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges)
    {
        return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }
    /// Validates symmetry, irreflexivity and range.
    static Graph from_rows(std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    int size() const;

    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
    VertexSet closed_neighborhood(int v) const { return VertexSet(rows_[v]).with(v); }
    std::uint64_t row(int v) const { return rows_[v]; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    /// Degrees sorted in non-increasing order.
    std::vector<int> degree_sequence() const;

    /// Copy with one extra vertex n adjacent to `neighbors`.
    Graph with_vertex(VertexSet neighbors) const;
    Graph with_edge(int u, int v) const;
    /// Copy where vertex v is renamed to new_label[v]; new_label must be a permutation.
    Graph relabeled(std::span<const int> new_label) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves} with centre 0.
Graph star_graph(int leaves);

/// Vertices of s relabelled 0..|s|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet s);

using DistanceRow = std::array<int, kMaxOrder>;

/// BFS distances from source where every vertex other than the source must lie
/// in `allowed`. Unreached entries hold kInfiniteDistance.
DistanceRow bfs_distances(const Graph& g, int source, VertexSet allowed);
DistanceRow bfs_distances(const Graph& g, int source);

/// Minimum length of a path between a vertex of x and a vertex of y.
int set_distance(const Graph& g, VertexSet x, VertexSet y);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Shortest cycle length; kInfiniteDistance for forests.
int girth(const Graph& g);

} // namespace expdom
