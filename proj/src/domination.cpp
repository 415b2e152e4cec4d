#include "expdom/domination.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace expdom {

namespace {

using Numerator = DyadicWeight::Numerator;
using NumeratorRow = std::array<Numerator, kMaxOrder>;

std::string to_decimal(Numerator value)
{
    if (value == 0)
        return "0";
    std::string out;
    while (value > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    return {out.rbegin(), out.rend()};
}

DyadicWeight reduced(const DyadicWeight& w)
{
    Numerator num = w.numerator();
    int k = w.scale_exponent();
    while (k > 0 && num != 0 && (num & 1U) == 0) {
        num >>= 1;
        --k;
    }
    if (num == 0)
        k = 0;
    return {num, k};
}

void check_set(const Graph& g, VertexSet d)
{
    if (!d.subset_of(g.vertices()))
        throw GraphError("vertex set names a vertex outside the graph");
}

void check_vertex(const Graph& g, int u)
{
    if (u < 0 || u >= g.order())
        throw GraphError("vertex " + std::to_string(u) + " out of range");
}

/// Adds, for every vertex u, the numerator at scale 2^n of v's term in the
/// constrained weight of u. One BFS from v in the graph minus (d \ {v}).
void add_constrained_terms(const Graph& g, VertexSet d, int v, NumeratorRow& acc)
{
    const int n = g.order();
    const DistanceRow dist = bfs_distances(g, v, (g.vertices() - d).with(v));
    acc[v] += Numerator{1} << (n + 1);
    for (int u : g.vertices() - d)
        if (dist[u] != kInfiniteDistance)
            acc[u] += Numerator{1} << (n + 1 - dist[u]);
}

NumeratorRow constrained_numerators(const Graph& g, VertexSet d)
{
    NumeratorRow acc{};
    for (int v : d)
        add_constrained_terms(g, d, v, acc);
    return acc;
}

bool all_at_least_one(const Graph& g, const NumeratorRow& acc)
{
    const Numerator one = Numerator{1} << g.order();
    for (int u = 0; u < g.order(); ++u)
        if (acc[u] < one)
            return false;
    return true;
}

/// terms[v][u] = numerator at scale 2^n of (1/2)^(dist_G(u,v) - 1).
std::vector<NumeratorRow> porous_terms(const Graph& g)
{
    const int n = g.order();
    std::vector<NumeratorRow> terms(n);
    for (int v = 0; v < n; ++v) {
        const DistanceRow dist = bfs_distances(g, v);
        for (int u = 0; u < n; ++u)
            terms[v][u] = dist[u] == kInfiniteDistance ? 0 : Numerator{1} << (n + 1 - dist[u]);
    }
    return terms;
}

bool porous_covers(const Graph& g, const std::vector<NumeratorRow>& terms, VertexSet d)
{
    const Numerator one = Numerator{1} << g.order();
    for (int u = 0; u < g.order(); ++u) {
        Numerator sum = 0;
        for (int v : d)
            sum += terms[v][u];
        if (sum < one)
            return false;
    }
    return true;
}

/// Visits k-subsets of {0..n-1} in lexicographic order of their ascending
/// vertex sequences; returns the first accepted one.
template <class Accept>
std::optional<VertexSet> first_combination(int n, int k, Accept accept)
{
    if (k > n)
        return std::nullopt;
    std::array<int, kMaxOrder> idx{};
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::uint64_t bits = 0;
        for (int i = 0; i < k; ++i)
            bits |= std::uint64_t{1} << idx[i];
        if (accept(VertexSet(bits)))
            return VertexSet(bits);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return std::nullopt;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Branch and bound for minimum dominating sets: branch on the smallest
/// undominated vertex over its closed neighbourhood, bounding by the number
/// of undominated vertices over the best single-vertex coverage.
class DominationSearch {
public:
    explicit DominationSearch(const Graph& g) : g_(g), all_(g.vertices().bits())
    {
        for (int v = 0; v < g.order(); ++v)
            closed_[v] = g.closed_neighborhood(v).bits();
    }

    /// Minimum dominating set drawn from `allowed` that contains `forced`,
    /// if one of size at most `budget` exists.
    std::optional<VertexSet> solve(VertexSet forced, VertexSet allowed, int budget, bool first_hit)
    {
        allowed_ = allowed.bits();
        best_size_ = budget + 1;
        best_set_ = 0;
        first_hit_ = first_hit;
        done_ = false;
        std::uint64_t dominated = 0;
        for (int v : forced)
            dominated |= closed_[v];
        branch(dominated, forced.bits(), forced.size());
        if (best_size_ > budget)
            return std::nullopt;
        return VertexSet(best_set_);
    }

private:
    int lower_bound(std::uint64_t undominated) const
    {
        int coverage = 0;
        for (int w : VertexSet(allowed_))
            coverage = std::max(coverage, std::popcount(closed_[w] & undominated));
        if (coverage == 0)
            return kMaxOrder + 1;
        const int missing = std::popcount(undominated);
        return (missing + coverage - 1) / coverage;
    }

    void branch(std::uint64_t dominated, std::uint64_t chosen, int size)
    {
        if (done_)
            return;
        const std::uint64_t undominated = all_ & ~dominated;
        if (undominated == 0) {
            if (size < best_size_) {
                best_size_ = size;
                best_set_ = chosen;
                done_ = first_hit_;
            }
            return;
        }
        if (size + lower_bound(undominated) >= best_size_)
            return;
        const int u = std::countr_zero(undominated);
        std::array<std::pair<int, int>, kMaxOrder> order{};
        int count = 0;
        for (int c : VertexSet(closed_[u] & allowed_))
            order[count++] = {-std::popcount(closed_[c] & undominated), c};
        std::sort(order.begin(), order.begin() + count);
        for (int i = 0; i < count; ++i) {
            const int c = order[i].second;
            branch(dominated | closed_[c], chosen | (std::uint64_t{1} << c), size + 1);
        }
    }

    const Graph& g_;
    std::uint64_t all_;
    std::array<std::uint64_t, kMaxOrder> closed_{};
    std::uint64_t allowed_ = 0;
    int best_size_ = 0;
    std::uint64_t best_set_ = 0;
    bool first_hit_ = false;
    bool done_ = false;
};

int domination_value(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    DominationSearch search(g);
    return search.solve({}, g.vertices(), g.order(), false)->size();
}

std::optional<VertexSet> smallest_exponential_set(const Graph& g, int upper)
{
    for (int k = 1; k <= upper; ++k) {
        auto hit = first_combination(g.order(), k, [&](VertexSet d) {
            return all_at_least_one(g, constrained_numerators(g, d));
        });
        if (hit)
            return hit;
    }
    return std::nullopt;
}

std::optional<VertexSet> smallest_porous_set(const Graph& g, int upper)
{
    const auto terms = porous_terms(g);
    for (int k = 1; k <= upper; ++k) {
        auto hit = first_combination(g.order(), k, [&](VertexSet d) { return porous_covers(g, terms, d); });
        if (hit)
            return hit;
    }
    return std::nullopt;
}

ParameterTriple connected_triple(const Graph& g)
{
    ParameterTriple t;
    t.gamma = domination_value(g);
    t.gamma_e = smallest_exponential_set(g, t.gamma)->size();
    t.gamma_e_star = smallest_porous_set(g, t.gamma_e)->size();
    return t;
}

} // namespace

DyadicWeight::DyadicWeight(Numerator numerator, int scale_exponent)
    : numerator_(numerator), exponent_(scale_exponent)
{
    if (scale_exponent < 0 || scale_exponent > 120)
        throw std::invalid_argument("dyadic scale exponent out of range");
}

std::string DyadicWeight::to_string() const
{
    const DyadicWeight r = reduced(*this);
    return to_decimal(r.numerator_) + "/2^" + std::to_string(r.exponent_);
}

DyadicWeight& DyadicWeight::operator+=(const DyadicWeight& other)
{
    if (exponent_ == other.exponent_) {
        numerator_ += other.numerator_;
        return *this;
    }
    const DyadicWeight a = reduced(*this);
    const DyadicWeight b = reduced(other);
    const int k = std::max(a.exponent_, b.exponent_);
    numerator_ = (a.numerator_ << (k - a.exponent_)) + (b.numerator_ << (k - b.exponent_));
    exponent_ = k;
    return *this;
}

std::strong_ordering operator<=>(const DyadicWeight& a, const DyadicWeight& b)
{
    // Compare a.num * 2^s with b.num where s = b.k - a.k, without shifting
    // the larger side.
    auto cmp = [](Numerator small_scale, Numerator large_scale, int shift) {
        const Numerator q = large_scale >> shift;
        const Numerator r = large_scale - (q << shift);
        if (small_scale != q)
            return small_scale <=> q;
        return r == 0 ? std::strong_ordering::equal : std::strong_ordering::less;
    };
    if (a.exponent_ <= b.exponent_)
        return cmp(a.numerator_, b.numerator_, b.exponent_ - a.exponent_);
    return 0 <=> cmp(b.numerator_, a.numerator_, a.exponent_ - b.exponent_);
}

std::string_view to_string(ParameterKind kind)
{
    switch (kind) {
    case ParameterKind::gamma:
        return "gamma";
    case ParameterKind::gamma_e:
        return "gamma_e";
    case ParameterKind::gamma_e_star:
        return "gamma_e_star";
    }
    return "unknown";
}

ParameterTriple& operator+=(ParameterTriple& a, const ParameterTriple& b)
{
    a.gamma += b.gamma;
    a.gamma_e += b.gamma_e;
    a.gamma_e_star += b.gamma_e_star;
    return a;
}

int constrained_distance(const Graph& g, VertexSet d, int u, int v)
{
    check_set(g, d);
    check_vertex(g, u);
    check_vertex(g, v);
    if (!d.contains(v))
        throw GraphError("constrained_distance: v must belong to the set");
    if (u == v)
        return 0;
    if (d.contains(u))
        return kInfiniteDistance;
    return bfs_distances(g, v, (g.vertices() - d).with(v))[u];
}

std::vector<DyadicWeight> weights(const Graph& g, VertexSet d)
{
    check_set(g, d);
    if (d.empty())
        throw GraphError("weight needs a nonempty set");
    const NumeratorRow acc = constrained_numerators(g, d);
    std::vector<DyadicWeight> out;
    out.reserve(g.order());
    for (int u = 0; u < g.order(); ++u)
        out.emplace_back(acc[u], g.order());
    return out;
}

DyadicWeight weight(const Graph& g, VertexSet d, int u)
{
    check_vertex(g, u);
    return weights(g, d)[u];
}

std::vector<DyadicWeight> porous_weights(const Graph& g, VertexSet d)
{
    check_set(g, d);
    if (d.empty())
        throw GraphError("porous weight needs a nonempty set");
    const int n = g.order();
    NumeratorRow acc{};
    for (int v : d) {
        const DistanceRow dist = bfs_distances(g, v);
        for (int u = 0; u < n; ++u)
            if (dist[u] != kInfiniteDistance)
                acc[u] += Numerator{1} << (n + 1 - dist[u]);
    }
    std::vector<DyadicWeight> out;
    out.reserve(n);
    for (int u = 0; u < n; ++u)
        out.emplace_back(acc[u], n);
    return out;
}

DyadicWeight porous_weight(const Graph& g, VertexSet d, int u)
{
    check_vertex(g, u);
    return porous_weights(g, d)[u];
}

bool is_dominating(const Graph& g, VertexSet d)
{
    check_set(g, d);
    std::uint64_t covered = 0;
    for (int v : d)
        covered |= g.closed_neighborhood(v).bits();
    return covered == g.vertices().bits();
}

bool is_exponential_dominating(const Graph& g, VertexSet d)
{
    check_set(g, d);
    if (g.order() == 0)
        return true;
    if (d.empty())
        return false;
    return all_at_least_one(g, constrained_numerators(g, d));
}

bool is_porous_exponential_dominating(const Graph& g, VertexSet d)
{
    check_set(g, d);
    if (g.order() == 0)
        return true;
    if (d.empty())
        return false;
    for (const DyadicWeight& w : porous_weights(g, d))
        if (!w.at_least_one())
            return false;
    return true;
}

ParamResult domination_number(const Graph& g)
{
    ParamResult result{0, {}, ParameterKind::gamma};
    const int n = g.order();
    if (n == 0)
        return result;
    DominationSearch search(g);
    const int gamma = search.solve({}, g.vertices(), n, false)->size();
    // Fix the certificate one position at a time: the smallest vertex that
    // still extends to an optimal set using only larger vertices.
    VertexSet chosen;
    int last = -1;
    for (int pos = 0; pos < gamma; ++pos) {
        for (int v = last + 1; v < n; ++v) {
            const VertexSet forced = chosen.with(v);
            const VertexSet later = g.vertices() - VertexSet::range(v + 1);
            if (search.solve(forced, later, gamma, true)) {
                chosen = forced;
                last = v;
                break;
            }
        }
    }
    result.value = gamma;
    result.certificate = chosen;
    return result;
}

ParamResult exponential_domination_number(const Graph& g)
{
    ParamResult result{0, {}, ParameterKind::gamma_e};
    if (g.order() == 0)
        return result;
    const VertexSet found = *smallest_exponential_set(g, domination_value(g));
    result.value = found.size();
    result.certificate = found;
    return result;
}

ParamResult porous_exponential_domination_number(const Graph& g)
{
    ParamResult result{0, {}, ParameterKind::gamma_e_star};
    if (g.order() == 0)
        return result;
    const VertexSet found = *smallest_porous_set(g, domination_value(g));
    result.value = found.size();
    result.certificate = found;
    return result;
}

ParameterTriple parameter_triple(const Graph& g)
{
    ParameterTriple total;
    for (VertexSet comp : connected_components(g))
        total += connected_triple(comp == g.vertices() ? g : induced_subgraph(g, comp));
    return total;
}

} // namespace expdom
