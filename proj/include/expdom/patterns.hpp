#pragma once

#include "expdom/graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace expdom {

enum class PatternName {
    k3,
    k4,
    diamond,
    bull,
    k23,
    p2xp3,
    p7,
    c7,
    f1,
    f2,
    f3,
    f4,
    f5,
    p2xc3,
};

inline constexpr int kPatternCount = 14;

class UnknownPatternError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// CLI token: K3, K4, DIAMOND, BULL, K23, P2xP3, P7, C7, F1..F5, P2xC3.
std::string_view to_string(PatternName name);
/// Accepts the tokens above case-insensitively, plus the aliases B and D.
PatternName parse_pattern_name(std::string_view token);

/// Small set of catalog names.
class PatternSet {
public:
    PatternSet() = default;
    PatternSet(std::initializer_list<PatternName> names)
    {
        for (PatternName n : names)
            insert(n);
    }

    void insert(PatternName n) { bits_ |= std::uint32_t{1} << static_cast<int>(n); }
    bool contains(PatternName n) const { return (bits_ >> static_cast<int>(n)) & 1U; }
    bool empty() const { return bits_ == 0; }
    std::vector<PatternName> names() const;
    /// Comma-separated tokens in catalog order.
    std::string to_string() const;

    friend PatternSet operator|(PatternSet a, PatternSet b)
    {
        a.bits_ |= b.bits_;
        return a;
    }
    friend bool operator==(PatternSet, PatternSet) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Parses "B,DIAMOND,K4" style lists; throws UnknownPatternError.
PatternSet parse_pattern_list(std::string_view list);

/// {BULL, DIAMOND, K4, K23, P2xP3}
PatternSet theorem1_restriction();
/// {K3, K23, P2xP3}
PatternSet corollary1_restriction();
/// {P7, C7, F1, ..., F5}
PatternSet theorem1_obstructions();
/// {P7, F1}
PatternSet corollary2_obstructions();

struct Pattern {
    PatternName name;
    Graph graph;
};

/// All 14 patterns, vertices labelled in non-increasing degree order.
/// Orders and sizes are checked on first use.
const std::vector<Pattern>& catalog();
const Pattern& pattern(PatternName name);

/// Induced embedding: map[a] is the host vertex of pattern vertex a.
struct Embedding {
    std::vector<int> map;

    VertexSet image() const;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Backtracking over pattern vertices in non-increasing degree order (ties
/// by index), host candidates ascending. The result is the least embedding
/// in that matching order; for catalog patterns that order is the natural
/// one, so `map` itself is lexicographically least.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);
std::optional<Embedding> find_induced(const Graph& host, PatternName name);

/// Some induced embedding whose image contains `anchor`, if any.
std::optional<Embedding> find_induced_through(const Graph& host, const Graph& pattern, int anchor);

struct FreenessWitness {
    PatternName name;
    Embedding embedding;
};

/// First listed pattern (catalog order) that embeds, with its embedding.
std::optional<FreenessWitness> find_forbidden(const Graph& host, PatternSet names);
bool is_free(const Graph& host, PatternSet names);
/// Freeness restricted to copies through `anchor`.
bool is_free_through(const Graph& host, PatternSet names, int anchor);

} // namespace expdom
