#include "expdom/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

namespace expdom {

namespace {

struct CatalogEntry {
    PatternName name;
    std::string_view token;
    int order;
    int size;
    std::vector<std::pair<int, int>> edges;
};

std::vector<CatalogEntry> catalog_entries()
{
    return {
        {PatternName::k3, "K3", 3, 3, {{0, 1}, {1, 2}, {0, 2}}},
        {PatternName::k4, "K4", 4, 6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
        {PatternName::diamond, "DIAMOND", 4, 5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}},
        // triangle 0 1 2 with horns on 0 and 1
        {PatternName::bull, "BULL", 5, 5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}},
        {PatternName::k23, "K23", 5, 6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}},
        // ladder: top 0 1 2, bottom 3 4 5
        {PatternName::p2xp3, "P2xP3", 6, 7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}},
        {PatternName::p7, "P7", 7, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}},
        {PatternName::c7, "C7", 7, 7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}}},
        // path 0 1 2 with a pendant on each
        {PatternName::f1, "F1", 6, 5, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}},
        // 4-cycle 0 1 2 3, pendant path 1 4 5 6
        {PatternName::f2, "F2", 7, 7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 6}}},
        // 4-cycle 0 1 2 3 and 5-cycle 1 4 6 5 2 sharing edge 1 2
        {PatternName::f3, "F3", 7, 8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 5}, {4, 6}, {5, 6}}},
        // 4-cycles 0 1 2 3 and 0 4 5 6
        {PatternName::f4, "F4", 7, 8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}}},
        // 4-cycle p q r s = 0 1 2 3, path q 4 5 s, pendant 6 on r
        {PatternName::f5, "F5", 7, 8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 3}, {2, 6}}},
        // triangles 0 1 2 and 3 4 5 joined by a matching
        {PatternName::p2xc3, "P2xC3", 6, 9,
         {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}},
    };
}

/// Stable relabelling by non-increasing degree.
Graph degree_ordered(const Graph& g)
{
    std::vector<int> by_degree(g.order());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> label(g.order());
    for (int i = 0; i < g.order(); ++i)
        label[by_degree[i]] = i;
    return g.relabeled(label);
}

std::string upper(std::string_view s)
{
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

class Matcher {
public:
    /// `order` lists pattern vertices in matching order.
    Matcher(const Graph& host, const Graph& pattern, std::vector<int> order)
        : host_(host), order_(std::move(order)), k_(pattern.order())
    {
        for (int i = 0; i < k_; ++i) {
            std::uint64_t earlier = 0;
            for (int j = 0; j < i; ++j)
                if (pattern.adjacent(order_[i], order_[j]))
                    earlier |= std::uint64_t{1} << j;
            adjacent_earlier_[i] = earlier;
            degree_[i] = pattern.degree(order_[i]);
        }
    }

    std::optional<Embedding> run(std::optional<int> first_image = std::nullopt)
    {
        if (k_ > host_.order())
            return std::nullopt;
        if (k_ == 0)
            return Embedding{};
        first_image_ = first_image;
        if (!extend(0, 0))
            return std::nullopt;
        Embedding e;
        e.map.resize(k_);
        for (int i = 0; i < k_; ++i)
            e.map[order_[i]] = image_[i];
        return e;
    }

private:
    bool extend(int i, std::uint64_t used)
    {
        if (i == k_)
            return true;
        std::uint64_t cand = host_.vertices().bits() & ~used;
        for (int j = 0; j < i; ++j) {
            const std::uint64_t nbrs = host_.row(image_[j]);
            cand &= ((adjacent_earlier_[i] >> j) & 1U) ? nbrs : ~nbrs;
        }
        if (i == 0 && first_image_)
            cand &= std::uint64_t{1} << *first_image_;
        for (int h : VertexSet(cand)) {
            if (host_.degree(h) < degree_[i])
                continue;
            image_[i] = h;
            if (extend(i + 1, used | (std::uint64_t{1} << h)))
                return true;
        }
        return false;
    }

    const Graph& host_;
    std::vector<int> order_;
    int k_;
    std::array<std::uint64_t, kMaxOrder> adjacent_earlier_{};
    std::array<int, kMaxOrder> degree_{};
    std::array<int, kMaxOrder> image_{};
    std::optional<int> first_image_;
};

std::vector<int> matching_order(const Graph& pattern)
{
    std::vector<int> order(pattern.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    return order;
}

} // namespace

std::string_view to_string(PatternName name)
{
    static constexpr std::array<std::string_view, kPatternCount> tokens = {
        "K3", "K4", "DIAMOND", "BULL", "K23", "P2xP3", "P7", "C7", "F1", "F2", "F3", "F4", "F5", "P2xC3",
    };
    return tokens[static_cast<int>(name)];
}

PatternName parse_pattern_name(std::string_view token)
{
    const std::string key = upper(token);
    if (key == "B")
        return PatternName::bull;
    if (key == "D")
        return PatternName::diamond;
    for (int i = 0; i < kPatternCount; ++i) {
        const auto name = static_cast<PatternName>(i);
        if (upper(to_string(name)) == key)
            return name;
    }
    throw UnknownPatternError("unknown pattern name '" + std::string(token) + "'");
}

std::vector<PatternName> PatternSet::names() const
{
    std::vector<PatternName> out;
    for (int i = 0; i < kPatternCount; ++i)
        if ((bits_ >> i) & 1U)
            out.push_back(static_cast<PatternName>(i));
    return out;
}

std::string PatternSet::to_string() const
{
    std::string out;
    for (PatternName n : names()) {
        if (!out.empty())
            out += ',';
        out += expdom::to_string(n);
    }
    return out;
}

PatternSet parse_pattern_list(std::string_view list)
{
    PatternSet out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t end = list.find(',', start);
        if (end == std::string_view::npos)
            end = list.size();
        std::string_view token = list.substr(start, end - start);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
            token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
            token.remove_suffix(1);
        if (!token.empty())
            out.insert(parse_pattern_name(token));
        start = end + 1;
    }
    return out;
}

PatternSet theorem1_restriction()
{
    return {PatternName::bull, PatternName::diamond, PatternName::k4, PatternName::k23, PatternName::p2xp3};
}

PatternSet corollary1_restriction()
{
    return {PatternName::k3, PatternName::k23, PatternName::p2xp3};
}

PatternSet theorem1_obstructions()
{
    return {PatternName::p7, PatternName::c7, PatternName::f1, PatternName::f2,
            PatternName::f3, PatternName::f4, PatternName::f5};
}

PatternSet corollary2_obstructions()
{
    return {PatternName::p7, PatternName::f1};
}

const std::vector<Pattern>& catalog()
{
    static const std::vector<Pattern> patterns = [] {
        std::vector<Pattern> out;
        for (const auto& e : catalog_entries()) {
            Graph g = Graph::from_edge_list(e.order, e.edges);
            if (g.order() != e.order || g.size() != e.size)
                throw std::logic_error("catalog pattern " + std::string(e.token) + " has wrong order or size");
            out.push_back({e.name, degree_ordered(g)});
        }
        return out;
    }();
    return patterns;
}

const Pattern& pattern(PatternName name)
{
    return catalog()[static_cast<int>(name)];
}

VertexSet Embedding::image() const
{
    VertexSet s;
    for (int h : map)
        s = s.with(h);
    return s;
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& p)
{
    return Matcher(host, p, matching_order(p)).run();
}

std::optional<Embedding> find_induced(const Graph& host, PatternName name)
{
    return find_induced(host, pattern(name).graph);
}

std::optional<Embedding> find_induced_through(const Graph& host, const Graph& p, int anchor)
{
    if (anchor < 0 || anchor >= host.order())
        throw GraphError("anchor vertex out of range");
    const std::vector<int> base = matching_order(p);
    for (int a : base) {
        if (p.degree(a) > host.degree(anchor))
            continue;
        std::vector<int> order{a};
        for (int b : base)
            if (b != a)
                order.push_back(b);
        if (auto e = Matcher(host, p, order).run(anchor))
            return e;
    }
    return std::nullopt;
}

std::optional<FreenessWitness> find_forbidden(const Graph& host, PatternSet names)
{
    for (PatternName n : names.names())
        if (auto e = find_induced(host, n))
            return FreenessWitness{n, *e};
    return std::nullopt;
}

bool is_free(const Graph& host, PatternSet names)
{
    return !find_forbidden(host, names);
}

bool is_free_through(const Graph& host, PatternSet names, int anchor)
{
    for (PatternName n : names.names())
        if (find_induced_through(host, pattern(n).graph, anchor))
            return false;
    return true;
}

} // namespace expdom
