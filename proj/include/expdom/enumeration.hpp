#pragma once

#include "expdom/canonical.hpp"
#include "expdom/graph.hpp"
#include "expdom/patterns.hpp"

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

namespace expdom {

enum class StreamMode { connected_graphs, trees };

inline constexpr int kMaxConnectedOrder = 10;
inline constexpr int kMaxTreeOrder = 14;

struct EnumerationOptions {
    /// Only graphs free of every listed pattern are produced.
    std::optional<PatternSet> filter;
    int workers = 1;
};

/// Pairwise non-isomorphic graphs of one order, held as canonical codes in
/// ascending code order. Yields canonical representatives.
class GraphStream {
public:
    class iterator {
    public:
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(std::vector<CanonicalCode>::const_iterator it) : it_(it) {}

        Graph operator*() const { return it_->to_graph(); }
        iterator& operator++()
        {
            ++it_;
            return *this;
        }
        iterator operator++(int)
        {
            iterator old = *this;
            ++it_;
            return old;
        }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        std::vector<CanonicalCode>::const_iterator it_;
    };

    GraphStream(int order, StreamMode mode, std::optional<PatternSet> filter, std::vector<CanonicalCode> codes);

    int order() const { return order_; }
    StreamMode mode() const { return mode_; }
    const std::optional<PatternSet>& filter() const { return filter_; }
    std::size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }
    const std::vector<CanonicalCode>& codes() const { return codes_; }
    Graph operator[](std::size_t i) const { return codes_[i].to_graph(); }

    iterator begin() const { return iterator(codes_.begin()); }
    iterator end() const { return iterator(codes_.end()); }

private:
    int order_;
    StreamMode mode_;
    std::optional<PatternSet> filter_;
    std::vector<CanonicalCode> codes_;
};

/// Connected graphs of order n (1 <= n <= 10), grown one vertex at a time
/// from the connected graphs of order n-1 and deduplicated by canonical code.
/// A filter prunes during growth: a graph with a forbidden induced pattern
/// never has a pattern-free extension.
GraphStream connected_graphs(int n, const EnumerationOptions& options = {});

/// Free trees of order n (1 <= n <= 14) by leaf augmentation.
GraphStream trees(int n, const EnumerationOptions& options = {});

/// Post-hoc filter; the result carries the union of both filters.
GraphStream filtered(const GraphStream& stream, PatternSet names);

/// Streams of every order 1..n_max; element i holds order i+1.
std::vector<GraphStream> connected_graph_levels(int n_max, const EnumerationOptions& options = {});
std::vector<GraphStream> tree_levels(int n_max, const EnumerationOptions& options = {});

} // namespace expdom
