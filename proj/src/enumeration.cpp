#include "expdom/enumeration.hpp"

#include "expdom/detail/parallel.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace expdom {

namespace {

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

void check_range(int n, int max, const char* what)
{
    if (n < 1 || n > max)
        throw std::out_of_range(std::string(what) + " order " + std::to_string(n) + " outside 1.." +
                                std::to_string(max));
}

GraphStream seed(StreamMode mode, const EnumerationOptions& options)
{
    const Graph k1(1);
    std::vector<CanonicalCode> codes;
    if (!options.filter || is_free(k1, *options.filter))
        codes.push_back(canonical_code(k1));
    return GraphStream(1, mode, options.filter, std::move(codes));
}

/// All children of `parents` with one more vertex: any nonempty neighbourhood
/// for connected graphs, a single neighbour for trees. Children containing a
/// filtered pattern are dropped; only copies through the new vertex need
/// checking because the parent is pattern-free.
GraphStream grow(const GraphStream& parents, const EnumerationOptions& options)
{
    const int m = parents.order();
    const int workers = std::max(1, options.workers);
    std::vector<CodeSet> found(workers);

    detail::run_workers(workers, [&](int w) {
        CodeSet& local = found[w];
        for (std::size_t i = w; i < parents.size(); i += workers) {
            const Graph parent = parents[i];
            auto consider = [&](VertexSet nbrs) {
                const Graph child = parent.with_vertex(nbrs);
                if (options.filter && !is_free_through(child, *options.filter, m))
                    return;
                local.insert(canonical_code(child));
            };
            if (parents.mode() == StreamMode::trees) {
                for (int v = 0; v < m; ++v)
                    consider(VertexSet::singleton(v));
            } else {
                const std::uint64_t limit = std::uint64_t{1} << m;
                for (std::uint64_t mask = 1; mask < limit; ++mask)
                    consider(VertexSet(mask));
            }
        }
    });

    CodeSet merged = std::move(found[0]);
    for (int w = 1; w < workers; ++w)
        merged.insert(found[w].begin(), found[w].end());
    std::vector<CanonicalCode> codes(merged.begin(), merged.end());
    std::sort(codes.begin(), codes.end());
    return GraphStream(m + 1, parents.mode(), options.filter, std::move(codes));
}

std::vector<GraphStream> levels(int n_max, StreamMode mode, const EnumerationOptions& options)
{
    std::vector<GraphStream> out;
    out.push_back(seed(mode, options));
    while (out.back().order() < n_max)
        out.push_back(grow(out.back(), options));
    return out;
}

} // namespace

GraphStream::GraphStream(int order, StreamMode mode, std::optional<PatternSet> filter,
                         std::vector<CanonicalCode> codes)
    : order_(order), mode_(mode), filter_(filter), codes_(std::move(codes))
{
}

GraphStream connected_graphs(int n, const EnumerationOptions& options)
{
    check_range(n, kMaxConnectedOrder, "connected graph");
    return std::move(levels(n, StreamMode::connected_graphs, options).back());
}

GraphStream trees(int n, const EnumerationOptions& options)
{
    check_range(n, kMaxTreeOrder, "tree");
    return std::move(levels(n, StreamMode::trees, options).back());
}

GraphStream filtered(const GraphStream& stream, PatternSet names)
{
    std::vector<CanonicalCode> kept;
    for (const CanonicalCode& code : stream.codes())
        if (is_free(code.to_graph(), names))
            kept.push_back(code);
    const PatternSet combined = stream.filter() ? (*stream.filter() | names) : names;
    return GraphStream(stream.order(), stream.mode(), combined, std::move(kept));
}

std::vector<GraphStream> connected_graph_levels(int n_max, const EnumerationOptions& options)
{
    check_range(n_max, kMaxConnectedOrder, "connected graph");
    return levels(n_max, StreamMode::connected_graphs, options);
}

std::vector<GraphStream> tree_levels(int n_max, const EnumerationOptions& options)
{
    check_range(n_max, kMaxTreeOrder, "tree");
    return levels(n_max, StreamMode::trees, options);
}

} // namespace expdom
