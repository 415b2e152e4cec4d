#pragma once

#include "expdom/canonical.hpp"
#include "expdom/domination.hpp"
#include "expdom/enumeration.hpp"
#include "expdom/graph.hpp"
#include "expdom/patterns.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace expdom {

/// Largest query order for class membership.
inline constexpr int kMaxMembershipOrder = 12;

/// exponential: the class where gamma_e = gamma on every induced subgraph.
/// porous: the same with gamma_e* in place of gamma_e.
enum class ClassKind { exponential, porous };

/// "G" or "G*".
std::string_view class_label(ClassKind kind);

/// Concurrent memo of parameter triples for connected canonical graphs.
/// Inserts are idempotent; an optional sink sees each newly computed entry.
class ParameterTable {
public:
    using Sink = std::function<void(const CanonicalCode&, const ParameterTriple&)>;

    std::optional<ParameterTriple> find(const CanonicalCode& code) const;
    /// Stores without notifying the sink (used when preloading).
    void preload(const CanonicalCode& code, const ParameterTriple& triple);
    /// Looks up `form`, computing and recording the triple on a miss.
    ParameterTriple get(const CanonicalForm& form);
    std::size_t size() const;
    void set_sink(Sink sink);

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CanonicalCode, ParameterTriple, CanonicalCodeHash> entries_;
    Sink sink_;
};

struct MembershipResult {
    bool member = true;
    /// Canonical form of a minimum-order connected induced subgraph that
    /// violates equality; absent for members.
    std::optional<Graph> witness;
    /// Where that witness sits in the query graph.
    VertexSet witness_vertices;

    std::string witness_graph6() const;
};

/// Membership in the two hereditary classes, memoised on canonical codes.
/// Thread-safe; share one oracle across sweep workers.
class ClassOracle {
public:
    explicit ClassOracle(std::shared_ptr<ParameterTable> table = std::make_shared<ParameterTable>());

    /// Triple summed over components.
    ParameterTriple parameters(const Graph& g);
    /// gamma = gamma_e (or gamma_e*), per component and summed.
    bool equality_holds(const Graph& g, ClassKind kind);
    /// Every connected induced subgraph satisfies equality. n <= 12.
    MembershipResult in_class(const Graph& g, ClassKind kind);
    /// Connected, violates equality, and every vertex-deleted subgraph is a
    /// member. n <= 12.
    bool is_minimal_forbidden(const Graph& g, ClassKind kind);

    ParameterTable& table() { return *table_; }

private:
    struct Entry {
        bool member = true;
        int witness_order = 0;
        CanonicalCode witness;
    };

    Entry connected_entry(const CanonicalForm& form, ClassKind kind);
    Entry components_entry(const Graph& g, ClassKind kind);
    bool holds(const ParameterTriple& t, ClassKind kind) const;

    std::shared_ptr<ParameterTable> table_;
    std::shared_mutex memo_mutex_;
    std::unordered_map<CanonicalCode, Entry, CanonicalCodeHash> memo_[2];
};

bool equality_holds(const Graph& g, ClassKind kind = ClassKind::exponential);
MembershipResult in_class(const Graph& g, ClassKind kind = ClassKind::exponential);
bool is_minimal_forbidden(const Graph& g, ClassKind kind = ClassKind::exponential);

struct FoundGraph {
    std::string graph6;
    int order = 0;
    ParameterTriple parameters;
};

struct VerificationReport {
    std::string sweep_name;
    int max_n = 0;
    std::string class_label;
    std::optional<PatternSet> restriction;
    std::optional<PatternSet> obstructions;
    /// Graphs examined per order.
    std::map<int, std::uint64_t> graphs_per_order;
    /// Class members per order.
    std::map<int, std::uint64_t> members_per_order;
    /// Claim violations (theorem sweeps) or inequality-chain violations.
    std::vector<std::string> counterexamples;
    /// Graphs where membership in the two classes differs (conjecture probe).
    std::vector<std::string> divergences;
    /// Minimal forbidden graphs found (search sweeps).
    std::vector<FoundGraph> found;
    /// Obstruction patterns that failed the minimality check.
    std::vector<std::string> catalog_notes;
    std::string source = "builtin";
    std::string config_hash;
    double elapsed_seconds = 0.0;

    bool verified() const { return counterexamples.empty(); }
    std::uint64_t total_graphs() const;
};

inline constexpr int kDefaultTheorem1MaxN = 9;
inline constexpr int kDefaultCorollary1MaxN = 9;
inline constexpr int kDefaultCorollary2MaxN = 12;
inline constexpr int kDefaultConjecture3MaxN = 8;

struct SweepOptions {
    int workers = 1;
    /// Shared memo; a fresh one is created when null.
    std::shared_ptr<ParameterTable> table;
    /// External graphs replacing the built-in enumeration. Graphs outside
    /// the sweep's hypothesis (disconnected, not a tree, not pattern-free,
    /// larger than max_n) are skipped.
    std::optional<std::vector<Graph>> input;
};

/// Solver check of one obstruction pattern.
struct CatalogCheck {
    PatternName name = PatternName::p7;
    ParameterTriple parameters;
    bool minimal = false;
    /// Minimum-order proper violator (graph6) when not minimal.
    std::string inner_witness;

    bool parameters_ok() const { return parameters.gamma == 3 && parameters.gamma_e == 2; }
    bool passed() const { return parameters_ok() && minimal; }
    /// e.g. "F5: gamma=3 gamma_e=2 minimal=no (contains E@QW)".
    std::string describe() const;
};

/// P7, C7, F1..F5 in catalog order.
std::vector<CatalogCheck> catalog_self_check();
/// Runs the check once per process. Throws std::logic_error when a pattern
/// has the wrong parameters; minimality failures are returned as notes.
const std::vector<std::string>& require_catalog_self_check();

VerificationReport verify_theorem1(int n_max = kDefaultTheorem1MaxN, const SweepOptions& options = {});
VerificationReport verify_corollary1(int n_max = kDefaultCorollary1MaxN, const SweepOptions& options = {});
VerificationReport verify_corollary2(int n_max = kDefaultCorollary2MaxN, const SweepOptions& options = {});
/// Never fails on a membership divergence; divergences are listed in-band.
VerificationReport probe_conjecture3(int n_max = kDefaultConjecture3MaxN, const SweepOptions& options = {});
VerificationReport find_minimal_forbidden(int n_max, ClassKind kind, std::optional<PatternSet> restriction,
                                          const SweepOptions& options = {});

} // namespace expdom
