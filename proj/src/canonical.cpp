#include "expdom/canonical.hpp"

#include "expdom/graph6.hpp"

#include <algorithm>
#include <numeric>

namespace expdom {

namespace {

using Bits128 = unsigned __int128;

/// Ordered partition of the vertex set into cells held as bit masks.
struct Partition {
    std::array<std::uint64_t, kMaxCanonicalOrder> cells{};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

using Perm = std::array<std::int8_t, kMaxCanonicalOrder>;

/// Splits cells until every cell has a uniform neighbour count into every
/// other cell. Fragments are ordered by ascending count, so the result
/// depends only on the graph structure and the input partition.
void refine(const Graph& g, Partition& p)
{
    // At most n initial cells plus 2n fragments are ever queued.
    std::array<std::uint64_t, 3 * kMaxCanonicalOrder> queue{};
    std::size_t head = 0, tail = 0;
    for (int i = 0; i < p.count; ++i)
        queue[tail++] = p.cells[i];

    while (head < tail) {
        const std::uint64_t splitter = queue[head++];
        for (int c = 0; c < p.count; ++c) {
            const std::uint64_t cell = p.cells[c];
            if (std::popcount(cell) == 1)
                continue;
            std::array<std::uint64_t, kMaxCanonicalOrder + 1> by_count{};
            int lo = kMaxCanonicalOrder, hi = 0;
            for (int v : VertexSet(cell)) {
                const int k = std::popcount(g.row(v) & splitter);
                by_count[k] |= std::uint64_t{1} << v;
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
            if (lo == hi)
                continue;
            std::array<std::uint64_t, kMaxCanonicalOrder> fragments{};
            int f = 0;
            for (int k = lo; k <= hi; ++k)
                if (by_count[k])
                    fragments[f++] = by_count[k];
            std::copy_backward(p.cells.begin() + c + 1, p.cells.begin() + p.count,
                               p.cells.begin() + p.count + f - 1);
            std::copy(fragments.begin(), fragments.begin() + f, p.cells.begin() + c);
            p.count += f - 1;
            for (int i = 0; i < f; ++i)
                queue[tail++] = fragments[i];
            c += f - 1;
        }
    }
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    void run()
    {
        Partition root;
        root.cells[0] = g_.vertices().bits();
        root.count = 1;
        descend(root, 0);
    }

    const Perm& best_lab() const { return best_lab_; }

private:
    using Path = std::array<int, kMaxCanonicalOrder>;

    /// Returns the depth the search should resume at. A value below `depth`
    /// abandons this node: its subtree is an automorphic image of one
    /// already explored.
    int descend(Partition p, int depth)
    {
        refine(g_, p);
        if (p.discrete(n_))
            return leaf(p, depth);
        int target = 0;
        while (std::popcount(p.cells[target]) == 1)
            ++target;
        const std::uint64_t cell = p.cells[target];

        std::uint64_t explored = 0;
        for (int x : VertexSet(cell)) {
            if (explored != 0 && equivalent_to_explored(x, explored, depth))
                continue;
            explored |= std::uint64_t{1} << x;
            Partition child = p;
            std::copy_backward(child.cells.begin() + target + 1, child.cells.begin() + child.count,
                               child.cells.begin() + child.count + 1);
            child.cells[target] = std::uint64_t{1} << x;
            child.cells[target + 1] = cell & ~(std::uint64_t{1} << x);
            ++child.count;
            path_[depth] = x;
            const int resume = descend(child, depth + 1);
            if (resume < depth)
                return resume;
        }
        return depth;
    }

    /// True if x lies in the orbit of an explored sibling under the known
    /// automorphisms that fix the current prefix pointwise.
    bool equivalent_to_explored(int x, std::uint64_t explored, int depth) const
    {
        std::array<int, kMaxCanonicalOrder> parent{};
        std::iota(parent.begin(), parent.begin() + n_, 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        bool any = false;
        for (const Perm& a : automorphisms_) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i)
                fixes = a[path_[i]] == path_[i];
            if (!fixes)
                continue;
            any = true;
            for (int v = 0; v < n_; ++v) {
                int r1 = find(v), r2 = find(a[v]);
                if (r1 != r2)
                    parent[std::max(r1, r2)] = std::min(r1, r2);
            }
        }
        if (!any)
            return false;
        const int root = find(x);
        for (int e : VertexSet(explored))
            if (find(e) == root)
                return true;
        return false;
    }

    int leaf(const Partition& p, int depth)
    {
        Perm lab{};   // position -> vertex
        Perm label{}; // vertex -> position
        for (int i = 0; i < n_; ++i) {
            lab[i] = static_cast<std::int8_t>(std::countr_zero(p.cells[i]));
            label[lab[i]] = static_cast<std::int8_t>(i);
        }
        std::array<std::uint64_t, kMaxCanonicalOrder> rows{};
        for (int i = 0; i < n_; ++i)
            for (int w : g_.neighbors(lab[i]))
                rows[i] |= std::uint64_t{1} << label[w];
        Bits128 code = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                code = (code << 1) | ((rows[i] >> j) & 1U);

        if (!have_first_) {
            have_first_ = true;
            first_code_ = best_code_ = code;
            first_lab_ = best_lab_ = lab;
            first_path_ = best_path_ = path_;
            first_depth_ = best_depth_ = depth;
            return depth;
        }
        int resume = depth;
        if (code == first_code_) {
            record_automorphism(label, first_lab_);
            resume = std::min(resume, common_prefix(first_path_, first_depth_, depth));
        }
        if (code == best_code_) {
            if (best_lab_ != first_lab_) {
                record_automorphism(label, best_lab_);
                resume = std::min(resume, common_prefix(best_path_, best_depth_, depth));
            }
        } else if (code < best_code_) {
            best_code_ = code;
            best_lab_ = lab;
            best_path_ = path_;
            best_depth_ = depth;
        }
        return resume;
    }

    int common_prefix(const Path& other, int other_depth, int depth) const
    {
        int k = 0;
        while (k < depth && k < other_depth && other[k] == path_[k])
            ++k;
        return k;
    }

    /// Both leaves give the same relabelled graph, so mapping the vertex at
    /// each position of this leaf to the vertex at that position of the
    /// other leaf is an automorphism.
    void record_automorphism(const Perm& label, const Perm& other_lab)
    {
        Perm a{};
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            a[v] = other_lab[label[v]];
            identity = identity && a[v] == v;
        }
        if (!identity)
            automorphisms_.push_back(a);
    }

    const Graph& g_;
    int n_;
    bool have_first_ = false;
    Bits128 first_code_ = 0;
    Bits128 best_code_ = 0;
    Perm first_lab_{};
    Perm best_lab_{};
    Path path_{};
    Path first_path_{};
    Path best_path_{};
    int first_depth_ = 0;
    int best_depth_ = 0;
    std::vector<Perm> automorphisms_;
};

} // namespace

CanonicalCode pack_code(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw SizeLimitError("canonical codes support at most " + std::to_string(kMaxCanonicalOrder) +
                             " vertices");
    Bits128 bits = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            bits = (bits << 1) | (g.adjacent(i, j) ? 1U : 0U);
    CanonicalCode c;
    c.order_ = g.order();
    c.high_ = static_cast<std::uint64_t>(bits >> 64);
    c.low_ = static_cast<std::uint64_t>(bits);
    return c;
}

std::array<std::uint8_t, 17> CanonicalCode::bytes() const
{
    std::array<std::uint8_t, 17> out{};
    out[0] = static_cast<std::uint8_t>(order_);
    for (int i = 0; i < 8; ++i) {
        out[1 + i] = static_cast<std::uint8_t>(high_ >> (56 - 8 * i));
        out[9 + i] = static_cast<std::uint8_t>(low_ >> (56 - 8 * i));
    }
    return out;
}

Graph CanonicalCode::to_graph() const
{
    const Bits128 bits = (static_cast<Bits128>(high_) << 64) | low_;
    const int total = order_ * (order_ - 1) / 2;
    std::vector<std::uint64_t> rows(order_, 0);
    int k = total - 1;
    for (int i = 0; i < order_; ++i) {
        for (int j = i + 1; j < order_; ++j, --k) {
            if ((bits >> k) & 1U) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    return Graph::from_rows(rows);
}

std::string CanonicalCode::to_graph6() const
{
    return encode_graph6(to_graph());
}

CanonicalForm canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxCanonicalOrder)
        throw SizeLimitError("canonical labelling supports at most " + std::to_string(kMaxCanonicalOrder) +
                             " vertices");
    CanonicalForm out;
    out.labeling.resize(n);
    if (n <= 1) {
        std::iota(out.labeling.begin(), out.labeling.end(), 0);
        out.graph = g;
        out.code = pack_code(g);
        return out;
    }
    Search search(g);
    search.run();
    for (int i = 0; i < n; ++i)
        out.labeling[search.best_lab()[i]] = i;
    out.graph = g.relabeled(out.labeling);
    out.code = pack_code(out.graph);
    return out;
}

CanonicalCode canonical_code(const Graph& g)
{
    return canonical_form(g).code;
}

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence())
        return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace expdom
