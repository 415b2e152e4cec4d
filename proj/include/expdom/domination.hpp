#pragma once

#include "expdom/graph.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace expdom {

/// Exact value numerator / 2^scale_exponent.
///
/// Weights are evaluated at scale 2^n for a graph of order n: a vertex of D
/// at constrained distance d contributes (1/2)^(d-1) = 2^(n+1-d) / 2^n, and
/// d is at most n-1 whenever it is finite, so every summand is an integer
/// numerator. Threshold tests compare the numerator with 2^n directly.
class DyadicWeight {
public:
    using Numerator = unsigned __int128;

    DyadicWeight() = default;
    DyadicWeight(Numerator numerator, int scale_exponent);

    Numerator numerator() const { return numerator_; }
    int scale_exponent() const { return exponent_; }

    bool at_least_one() const { return numerator_ >= (Numerator{1} << exponent_); }

    /// Reduced fraction "p/2^k" (p odd unless k is 0).
    std::string to_string() const;

    DyadicWeight& operator+=(const DyadicWeight& other);

    friend std::strong_ordering operator<=>(const DyadicWeight& a, const DyadicWeight& b);
    friend bool operator==(const DyadicWeight& a, const DyadicWeight& b)
    {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    Numerator numerator_ = 0;
    int exponent_ = 0;
};

enum class ParameterKind { gamma, gamma_e, gamma_e_star };

std::string_view to_string(ParameterKind kind);

/// Optimal value with the lexicographically smallest optimal set, comparing
/// sets as ascending vertex sequences.
struct ParamResult {
    int value = 0;
    VertexSet certificate;
    ParameterKind kind = ParameterKind::gamma;
};

struct ParameterTriple {
    int gamma = 0;
    int gamma_e = 0;
    int gamma_e_star = 0;

    friend bool operator==(const ParameterTriple&, const ParameterTriple&) = default;
};

ParameterTriple& operator+=(ParameterTriple& a, const ParameterTriple& b);

/// Length of a shortest u-v path with exactly one end vertex (v) in d and
/// no internal vertex in d. Requires v in d.
int constrained_distance(const Graph& g, VertexSet d, int u, int v);

DyadicWeight weight(const Graph& g, VertexSet d, int u);
/// Weights of every vertex, one constrained BFS per member of d.
std::vector<DyadicWeight> weights(const Graph& g, VertexSet d);

DyadicWeight porous_weight(const Graph& g, VertexSet d, int u);
std::vector<DyadicWeight> porous_weights(const Graph& g, VertexSet d);

bool is_dominating(const Graph& g, VertexSet d);
bool is_exponential_dominating(const Graph& g, VertexSet d);
bool is_porous_exponential_dominating(const Graph& g, VertexSet d);

ParamResult domination_number(const Graph& g);
ParamResult exponential_domination_number(const Graph& g);
ParamResult porous_exponential_domination_number(const Graph& g);

/// All three values, each summed over connected components.
ParameterTriple parameter_triple(const Graph& g);

} // namespace expdom
