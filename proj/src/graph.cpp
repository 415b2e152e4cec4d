#include "expdom/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace expdom {

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxOrder)
        throw GraphError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        g.rows_[u] |= std::uint64_t{1} << v;
        g.rows_[v] |= std::uint64_t{1} << u;
    }
    return g;
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows)
{
    Graph g(static_cast<int>(rows.size()));
    const std::uint64_t valid = VertexSet::range(g.n_).bits();
    for (int u = 0; u < g.n_; ++u) {
        if (rows[u] & ~valid)
            throw GraphError("row " + std::to_string(u) + " names a vertex outside the graph");
        if ((rows[u] >> u) & 1U)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        g.rows_[u] = rows[u];
    }
    for (int u = 0; u < g.n_; ++u)
        for (int v : VertexSet(rows[u]))
            if (!g.adjacent(v, u))
                throw GraphError("adjacency is not symmetric at " + std::to_string(u) + "," + std::to_string(v));
    return g;
}

int Graph::size() const
{
    int twice = 0;
    for (int u = 0; u < n_; ++u)
        twice += std::popcount(rows_[u]);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(rows_[u] & ~VertexSet::range(u + 1).bits()))
            out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const
{
    std::vector<int> out;
    out.reserve(n_);
    for (int u = 0; u < n_; ++u)
        out.push_back(degree(u));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Graph Graph::with_vertex(VertexSet neighbors) const
{
    if (n_ == kMaxOrder)
        throw SizeLimitError("cannot grow a graph beyond " + std::to_string(kMaxOrder) + " vertices");
    if (!neighbors.subset_of(vertices()))
        throw GraphError("new vertex neighbourhood names a vertex outside the graph");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.rows_[n_] = neighbors.bits();
    for (int v : neighbors)
        g.rows_[v] |= std::uint64_t{1} << n_;
    return g;
}

Graph Graph::with_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    Graph g = *this;
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
    return g;
}

Graph Graph::relabeled(std::span<const int> new_label) const
{
    if (static_cast<int>(new_label.size()) != n_)
        throw GraphError("relabelling has wrong length");
    std::uint64_t seen = 0;
    for (int l : new_label) {
        check_vertex(l);
        seen |= std::uint64_t{1} << l;
    }
    if (std::popcount(seen) != n_)
        throw GraphError("relabelling is not a permutation");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            g.rows_[new_label[u]] |= std::uint64_t{1} << new_label[v];
    return g;
}

Graph path_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph star_graph(int leaves)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph induced_subgraph(const Graph& g, VertexSet s)
{
    if (!s.subset_of(g.vertices()))
        throw GraphError("selector names a vertex outside the graph");
    std::array<int, kMaxOrder> position{};
    int k = 0;
    for (int v : s)
        position[v] = k++;
    std::vector<std::uint64_t> rows(k, 0);
    for (int v : s)
        for (int w : g.neighbors(v) & s)
            rows[position[v]] |= std::uint64_t{1} << position[w];
    return Graph::from_rows(rows);
}

DistanceRow bfs_distances(const Graph& g, int source, VertexSet allowed)
{
    DistanceRow dist;
    dist.fill(kInfiniteDistance);
    dist[source] = 0;
    std::uint64_t visited = std::uint64_t{1} << source;
    std::uint64_t frontier = visited;
    const std::uint64_t open = allowed.bits();
    for (int d = 1; frontier != 0; ++d) {
        std::uint64_t next = 0;
        for (int u : VertexSet(frontier))
            next |= g.row(u);
        next &= open & ~visited;
        for (int w : VertexSet(next))
            dist[w] = d;
        visited |= next;
        frontier = next;
    }
    return dist;
}

DistanceRow bfs_distances(const Graph& g, int source)
{
    return bfs_distances(g, source, g.vertices());
}

int set_distance(const Graph& g, VertexSet x, VertexSet y)
{
    if (x.empty() || y.empty())
        throw GraphError("set_distance needs two nonempty vertex sets");
    if (!x.subset_of(g.vertices()) || !y.subset_of(g.vertices()))
        throw GraphError("vertex set names a vertex outside the graph");
    std::uint64_t visited = x.bits();
    std::uint64_t frontier = visited;
    for (int d = 0; frontier != 0; ++d) {
        if (frontier & y.bits())
            return d;
        std::uint64_t next = 0;
        for (int u : VertexSet(frontier))
            next |= g.row(u);
        next &= ~visited;
        visited |= next;
        frontier = next;
    }
    return kInfiniteDistance;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    std::uint64_t unseen = g.vertices().bits();
    while (unseen != 0) {
        std::uint64_t comp = unseen & -unseen;
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (int u : VertexSet(frontier))
                next |= g.row(u);
            frontier = next & ~comp;
            comp |= next;
        }
        out.emplace_back(comp);
        unseen &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() == 1;
}

int girth(const Graph& g)
{
    int best = kInfiniteDistance;
    for (int root = 0; root < g.order(); ++root) {
        std::array<int, kMaxOrder> parent{};
        DistanceRow dist;
        dist.fill(kInfiniteDistance);
        dist[root] = 0;
        parent[root] = -1;
        std::array<int, kMaxOrder> queue{};
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[u] + 1 >= best)
                break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == kInfiniteDistance) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

} // namespace expdom
