#include "expdom/hereditary.hpp"

#include "expdom/detail/parallel.hpp"
#include "expdom/graph6.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace expdom {

std::string_view class_label(ClassKind kind)
{
    return kind == ClassKind::exponential ? "G" : "G*";
}

// ---------------------------------------------------------------------------
// ParameterTable

std::optional<ParameterTriple> ParameterTable::find(const CanonicalCode& code) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(code);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void ParameterTable::preload(const CanonicalCode& code, const ParameterTriple& triple)
{
    std::unique_lock lock(mutex_);
    entries_.emplace(code, triple);
}

ParameterTriple ParameterTable::get(const CanonicalForm& form)
{
    if (auto hit = find(form.code))
        return *hit;
    const ParameterTriple triple = parameter_triple(form.graph);
    bool inserted = false;
    Sink sink;
    {
        std::unique_lock lock(mutex_);
        inserted = entries_.emplace(form.code, triple).second;
        sink = sink_;
    }
    if (inserted && sink)
        sink(form.code, triple);
    return triple;
}

std::size_t ParameterTable::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void ParameterTable::set_sink(Sink sink)
{
    std::unique_lock lock(mutex_);
    sink_ = std::move(sink);
}

// ---------------------------------------------------------------------------
// Membership

std::string MembershipResult::witness_graph6() const
{
    return witness ? encode_graph6(*witness) : std::string();
}

ClassOracle::ClassOracle(std::shared_ptr<ParameterTable> table) : table_(std::move(table))
{
    if (!table_)
        table_ = std::make_shared<ParameterTable>();
}

bool ClassOracle::holds(const ParameterTriple& t, ClassKind kind) const
{
    return t.gamma == (kind == ClassKind::exponential ? t.gamma_e : t.gamma_e_star);
}

ParameterTriple ClassOracle::parameters(const Graph& g)
{
    ParameterTriple total;
    for (VertexSet comp : connected_components(g)) {
        const Graph part = comp == g.vertices() ? g : induced_subgraph(g, comp);
        if (part.order() <= kMaxCanonicalOrder)
            total += table_->get(canonical_form(part));
        else
            total += parameter_triple(part);
    }
    return total;
}

bool ClassOracle::equality_holds(const Graph& g, ClassKind kind)
{
    return holds(parameters(g), kind);
}

ClassOracle::Entry ClassOracle::connected_entry(const CanonicalForm& form, ClassKind kind)
{
    auto& memo = memo_[static_cast<int>(kind)];
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo.find(form.code);
        if (it != memo.end())
            return it->second;
    }

    // Connected induced subgraphs of g other than g itself all live inside a
    // component of some g - v.
    Entry entry;
    const Graph& g = form.graph;
    for (int v = 0; v < g.order(); ++v) {
        const Entry child = components_entry(induced_subgraph(g, g.vertices().without(v)), kind);
        if (child.member)
            continue;
        if (entry.member || child.witness_order < entry.witness_order ||
            (child.witness_order == entry.witness_order && child.witness < entry.witness))
            entry = child;
    }
    if (entry.member && !holds(table_->get(form), kind))
        entry = Entry{false, g.order(), form.code};

    std::unique_lock lock(memo_mutex_);
    memo.emplace(form.code, entry);
    return entry;
}

ClassOracle::Entry ClassOracle::components_entry(const Graph& g, ClassKind kind)
{
    Entry entry;
    for (VertexSet comp : connected_components(g)) {
        const Graph part = comp == g.vertices() ? g : induced_subgraph(g, comp);
        const Entry child = connected_entry(canonical_form(part), kind);
        if (child.member)
            continue;
        if (entry.member || child.witness_order < entry.witness_order ||
            (child.witness_order == entry.witness_order && child.witness < entry.witness))
            entry = child;
    }
    return entry;
}

MembershipResult ClassOracle::in_class(const Graph& g, ClassKind kind)
{
    if (g.order() > kMaxMembershipOrder)
        throw SizeLimitError("class membership supports at most " + std::to_string(kMaxMembershipOrder) +
                             " vertices");
    const Entry entry = components_entry(g, kind);
    MembershipResult result;
    result.member = entry.member;
    if (!entry.member) {
        result.witness = entry.witness.to_graph();
        const auto located = find_induced(g, *result.witness);
        if (!located)
            throw std::logic_error("membership witness is not an induced subgraph of the query");
        result.witness_vertices = located->image();
    }
    return result;
}

bool ClassOracle::is_minimal_forbidden(const Graph& g, ClassKind kind)
{
    if (g.order() > kMaxMembershipOrder)
        throw SizeLimitError("class membership supports at most " + std::to_string(kMaxMembershipOrder) +
                             " vertices");
    if (!is_connected(g) || equality_holds(g, kind))
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (!components_entry(induced_subgraph(g, g.vertices().without(v)), kind).member)
            return false;
    return true;
}

bool equality_holds(const Graph& g, ClassKind kind)
{
    ClassOracle oracle;
    return oracle.equality_holds(g, kind);
}

MembershipResult in_class(const Graph& g, ClassKind kind)
{
    ClassOracle oracle;
    return oracle.in_class(g, kind);
}

bool is_minimal_forbidden(const Graph& g, ClassKind kind)
{
    ClassOracle oracle;
    return oracle.is_minimal_forbidden(g, kind);
}

// ---------------------------------------------------------------------------
// Sweeps

std::uint64_t VerificationReport::total_graphs() const
{
    std::uint64_t total = 0;
    for (const auto& [order, count] : graphs_per_order)
        total += count;
    return total;
}

std::string CatalogCheck::describe() const
{
    std::string out = std::string(to_string(name)) + ": gamma=" + std::to_string(parameters.gamma) +
                      " gamma_e=" + std::to_string(parameters.gamma_e) + " minimal=" + (minimal ? "yes" : "no");
    if (!inner_witness.empty())
        out += " (contains " + inner_witness + ")";
    return out;
}

std::vector<CatalogCheck> catalog_self_check()
{
    std::vector<CatalogCheck> out;
    ClassOracle oracle;
    for (PatternName name : theorem1_obstructions().names()) {
        const Graph& g = pattern(name).graph;
        CatalogCheck check;
        check.name = name;
        check.parameters = oracle.parameters(g);
        check.minimal = oracle.is_minimal_forbidden(g, ClassKind::exponential);
        if (!check.minimal) {
            for (int v = 0; v < g.order(); ++v) {
                const MembershipResult r =
                    oracle.in_class(induced_subgraph(g, g.vertices().without(v)), ClassKind::exponential);
                if (r.member)
                    continue;
                const std::string w = r.witness_graph6();
                if (check.inner_witness.empty() || r.witness->order() < decode_graph6(check.inner_witness).order())
                    check.inner_witness = w;
            }
        }
        out.push_back(check);
    }
    return out;
}

const std::vector<std::string>& require_catalog_self_check()
{
    static const std::vector<std::string> notes = [] {
        std::vector<std::string> notes;
        std::string errors;
        for (const CatalogCheck& c : catalog_self_check()) {
            if (!c.parameters_ok())
                errors += "\n  " + c.describe();
            else if (!c.minimal)
                notes.push_back(c.describe());
        }
        if (!errors.empty())
            throw std::logic_error("catalog self-check failed:" + errors);
        return notes;
    }();
    return notes;
}

namespace {

struct Outcome {
    bool member = false;
    bool porous_member = false;
    bool counterexample = false;
    bool divergence = false;
    bool found = false;
    ParameterTriple triple;
};

using Hypothesis = std::function<bool(const Graph&)>;
using Evaluate = std::function<Outcome(ClassOracle&, const Graph&)>;

std::string config_hash(const VerificationReport& r)
{
    std::string config = "expdom/1;sweep=" + r.sweep_name + ";max_n=" + std::to_string(r.max_n) +
                         ";class=" + r.class_label +
                         ";restriction=" + (r.restriction ? r.restriction->to_string() : "-") +
                         ";obstructions=" + (r.obstructions ? r.obstructions->to_string() : "-") +
                         ";source=" + r.source;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Graphs grouped by order, canonical and sorted by code within an order.
std::vector<std::vector<CanonicalCode>> collect(const std::vector<GraphStream>& streams)
{
    std::vector<std::vector<CanonicalCode>> out;
    for (const auto& s : streams)
        out.push_back(s.codes());
    return out;
}

std::vector<std::vector<CanonicalCode>> collect(const std::vector<Graph>& input, int n_max, const Hypothesis& keep)
{
    std::vector<std::vector<CanonicalCode>> out(n_max);
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    for (const Graph& g : input) {
        if (g.order() < 1 || g.order() > n_max || !keep(g))
            continue;
        const CanonicalCode code = canonical_code(g);
        if (seen.insert(code).second)
            out[g.order() - 1].push_back(code);
    }
    for (auto& level : out)
        std::sort(level.begin(), level.end());
    return out;
}

void run_sweep(VerificationReport& report, const std::vector<std::vector<CanonicalCode>>& by_order,
               const SweepOptions& options, const Evaluate& evaluate)
{
    const auto start = std::chrono::steady_clock::now();
    ClassOracle oracle(options.table ? options.table : std::make_shared<ParameterTable>());
    const int workers = std::max(1, options.workers);

    for (const auto& level : by_order) {
        if (level.empty())
            continue;
        std::vector<Outcome> outcomes(level.size());
        detail::run_workers(workers, [&](int w) {
            for (std::size_t i = w; i < level.size(); i += workers)
                outcomes[i] = evaluate(oracle, level[i].to_graph());
        });
        const int order = level.front().order();
        report.graphs_per_order[order] = level.size();
        std::uint64_t members = 0;
        for (std::size_t i = 0; i < level.size(); ++i) {
            const Outcome& o = outcomes[i];
            members += o.member ? 1 : 0;
            if (o.counterexample)
                report.counterexamples.push_back(level[i].to_graph6());
            if (o.divergence)
                report.divergences.push_back(level[i].to_graph6());
            if (o.found)
                report.found.push_back({level[i].to_graph6(), order, o.triple});
        }
        report.members_per_order[order] = members;
    }
    report.config_hash = config_hash(report);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool chain_holds(const ParameterTriple& t)
{
    return t.gamma_e_star <= t.gamma_e && t.gamma_e <= t.gamma;
}

bool is_tree(const Graph& g)
{
    return is_connected(g) && g.size() == g.order() - 1;
}

VerificationReport verify_restricted(std::string name, int n_max, PatternSet restriction, const SweepOptions& options)
{
    VerificationReport report;
    report.catalog_notes = require_catalog_self_check();
    report.sweep_name = std::move(name);
    report.max_n = n_max;
    report.class_label = class_label(ClassKind::exponential);
    report.restriction = restriction;
    report.obstructions = theorem1_obstructions();
    const PatternSet obstructions = *report.obstructions;

    std::vector<std::vector<CanonicalCode>> by_order;
    if (options.input) {
        report.source = "input";
        by_order = collect(*options.input, n_max,
                           [&](const Graph& g) { return is_connected(g) && is_free(g, restriction); });
    } else {
        by_order = collect(connected_graph_levels(n_max, {restriction, options.workers}));
    }
    run_sweep(report, by_order, options, [&](ClassOracle& oracle, const Graph& g) {
        Outcome o;
        o.member = oracle.in_class(g, ClassKind::exponential).member;
        o.counterexample = o.member != is_free(g, obstructions);
        return o;
    });
    return report;
}

} // namespace

VerificationReport verify_theorem1(int n_max, const SweepOptions& options)
{
    return verify_restricted("theorem1", n_max, theorem1_restriction(), options);
}

VerificationReport verify_corollary1(int n_max, const SweepOptions& options)
{
    return verify_restricted("corollary1", n_max, corollary1_restriction(), options);
}

VerificationReport verify_corollary2(int n_max, const SweepOptions& options)
{
    VerificationReport report;
    report.catalog_notes = require_catalog_self_check();
    report.sweep_name = "corollary2";
    report.max_n = n_max;
    report.class_label = class_label(ClassKind::exponential);
    report.obstructions = corollary2_obstructions();
    const PatternSet obstructions = *report.obstructions;

    std::vector<std::vector<CanonicalCode>> by_order;
    if (options.input) {
        report.source = "input";
        by_order = collect(*options.input, n_max, is_tree);
    } else {
        by_order = collect(tree_levels(n_max, {std::nullopt, options.workers}));
    }
    run_sweep(report, by_order, options, [&](ClassOracle& oracle, const Graph& g) {
        Outcome o;
        o.member = oracle.in_class(g, ClassKind::exponential).member;
        o.counterexample = o.member != is_free(g, obstructions);
        return o;
    });
    return report;
}

VerificationReport probe_conjecture3(int n_max, const SweepOptions& options)
{
    VerificationReport report;
    report.catalog_notes = require_catalog_self_check();
    report.sweep_name = "conjecture3";
    report.max_n = n_max;
    report.class_label = "G|G*";

    std::vector<std::vector<CanonicalCode>> by_order;
    if (options.input) {
        report.source = "input";
        by_order = collect(*options.input, n_max, [](const Graph& g) { return is_connected(g); });
    } else {
        by_order = collect(connected_graph_levels(n_max, {std::nullopt, options.workers}));
    }
    run_sweep(report, by_order, options, [&](ClassOracle& oracle, const Graph& g) {
        Outcome o;
        o.triple = oracle.parameters(g);
        o.member = oracle.in_class(g, ClassKind::exponential).member;
        o.porous_member = oracle.in_class(g, ClassKind::porous).member;
        o.divergence = o.member != o.porous_member;
        o.counterexample = !chain_holds(o.triple);
        return o;
    });
    return report;
}

VerificationReport find_minimal_forbidden(int n_max, ClassKind kind, std::optional<PatternSet> restriction,
                                          const SweepOptions& options)
{
    VerificationReport report;
    report.catalog_notes = require_catalog_self_check();
    report.sweep_name = "minimal";
    report.max_n = n_max;
    report.class_label = class_label(kind);
    report.restriction = restriction;

    std::vector<std::vector<CanonicalCode>> by_order;
    if (options.input) {
        report.source = "input";
        by_order = collect(*options.input, n_max, [&](const Graph& g) {
            return is_connected(g) && (!restriction || is_free(g, *restriction));
        });
    } else {
        by_order = collect(connected_graph_levels(n_max, {restriction, options.workers}));
    }
    run_sweep(report, by_order, options, [&](ClassOracle& oracle, const Graph& g) {
        Outcome o;
        o.member = oracle.in_class(g, kind).member;
        if (!o.member && oracle.is_minimal_forbidden(g, kind)) {
            o.found = true;
            o.triple = oracle.parameters(g);
        }
        return o;
    });
    return report;
}

} // namespace expdom
