#include "expdom/cli.hpp"

#include "expdom/enumeration.hpp"
#include "expdom/graph6.hpp"
#include "expdom/hereditary.hpp"
#include "expdom/patterns.hpp"
#include "expdom/report.hpp"
#include "expdom/results_cache.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>

namespace expdom {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

struct GraphInput {
    std::vector<std::string> graph6;
    std::string file;
    std::string edges;
};

void add_graph_input(CLI::App* cmd, GraphInput& input)
{
    cmd->add_option("graph6", input.graph6, "graph6 strings; standard input when none is given");
    cmd->add_option("--file", input.file, "file of graph6 lines ('-' for standard input)");
    cmd->add_option("--edges", input.edges, "edge-list file: vertex count, then one 'u v' pair per line");
}

std::vector<Graph> read_graph6_file(const std::string& path, std::istream& in)
{
    if (path == "-")
        return read_graph6_stream(in);
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot open " + path);
    return read_graph6_stream(file);
}

Graph read_edge_list(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot open " + path);
    std::stringstream text;
    for (std::string line; std::getline(file, line);)
        text << line.substr(0, line.find('#')) << '\n';
    long n = 0;
    if (!(text >> n))
        throw InputError(path + ": missing vertex count");
    if (n < 0)
        throw InputError(path + ": negative vertex count");
    if (n > kMaxOrder)
        throw SizeLimitError(path + ": at most " + std::to_string(kMaxOrder) + " vertices are supported");
    std::vector<std::pair<int, int>> edges;
    int u = 0;
    int v = 0;
    while (text >> u) {
        if (!(text >> v))
            throw InputError(path + ": odd number of edge endpoints");
        edges.emplace_back(u, v);
    }
    if (!text.eof())
        throw InputError(path + ": non-numeric token");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::vector<Graph> collect_graphs(const GraphInput& input, std::istream& in)
{
    std::vector<Graph> graphs;
    for (const auto& s : input.graph6) {
        if (s == "-") {
            for (Graph& g : read_graph6_stream(in))
                graphs.push_back(std::move(g));
        } else {
            graphs.push_back(decode_graph6(s));
        }
    }
    if (!input.file.empty())
        for (Graph& g : read_graph6_file(input.file, in))
            graphs.push_back(std::move(g));
    if (!input.edges.empty())
        graphs.push_back(read_edge_list(input.edges));
    if (input.graph6.empty() && input.file.empty() && input.edges.empty())
        graphs = read_graph6_stream(in);
    return graphs;
}

void require_order(const std::vector<Graph>& graphs, int cap, const std::string& what)
{
    for (const Graph& g : graphs)
        if (g.order() > cap)
            throw SizeLimitError(what + " supports at most " + std::to_string(cap) + " vertices (got " +
                                 std::to_string(g.order()) + ")");
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string vertex_list(VertexSet s, char sep)
{
    std::string out;
    for (int v : s) {
        if (!out.empty())
            out += sep;
        out += std::to_string(v);
    }
    return out;
}

std::vector<std::string> weight_strings(const std::vector<DyadicWeight>& w)
{
    std::vector<std::string> out;
    for (const auto& x : w)
        out.push_back(x.to_string());
    return out;
}

// --- params -----------------------------------------------------------------

struct ParamsArgs {
    GraphInput input;
    bool explain = false;
    std::string format = "json";
};

int cmd_params(const ParamsArgs& a, Io io)
{
    if (a.explain && a.format == "csv")
        throw UsageError("--explain is not available with --format csv");
    const std::vector<Graph> graphs = collect_graphs(a.input, io.in);
    require_order(graphs, kMaxParamsOrder, "params");
    if (a.format == "csv")
        io.out << "graph6,n,m,gamma,gamma_certificate,gamma_e,gamma_e_certificate,gamma_e_star,"
                  "gamma_e_star_certificate,gamma_equals_gamma_e,gamma_equals_gamma_e_star\n";
    for (const Graph& g : graphs) {
        const ParamsRecord r = compute_params(g);
        const auto exp_w = weight_strings(weights(g, r.gamma_e.certificate));
        const auto por_w = g.order() > 0 ? weight_strings(porous_weights(g, r.gamma_e_star.certificate))
                                         : std::vector<std::string>{};
        if (a.format == "json") {
            Json j = to_json(r);
            if (a.explain) {
                j["explain"] = {{"gamma_e", {{"set", to_json(r.gamma_e.certificate)}, {"weights", exp_w}}},
                                {"gamma_e_star",
                                 {{"set", to_json(r.gamma_e_star.certificate)}, {"weights", por_w}}}};
            }
            io.out << j.dump() << '\n';
        } else if (a.format == "csv") {
            io.out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.gamma.value << ','
                   << vertex_list(r.gamma.certificate, ' ') << ',' << r.gamma_e.value << ','
                   << vertex_list(r.gamma_e.certificate, ' ') << ',' << r.gamma_e_star.value << ','
                   << vertex_list(r.gamma_e_star.certificate, ' ') << ',' << r.gamma_equals_gamma_e() << ','
                   << r.gamma_equals_gamma_e_star() << '\n';
        } else {
            io.out << r.graph6 << " n=" << r.n << " m=" << r.m << " gamma=" << r.gamma.value << ' '
                   << format_set(r.gamma.certificate) << " gamma_e=" << r.gamma_e.value << ' '
                   << format_set(r.gamma_e.certificate) << " gamma_e_star=" << r.gamma_e_star.value << ' '
                   << format_set(r.gamma_e_star.certificate) << " gamma=gamma_e:" << yes_no(r.gamma_equals_gamma_e())
                   << " gamma=gamma_e_star:" << yes_no(r.gamma_equals_gamma_e_star()) << '\n';
            if (a.explain) {
                io.out << "  weights w.r.t. " << format_set(r.gamma_e.certificate) << ":";
                for (int v = 0; v < g.order(); ++v)
                    io.out << ' ' << v << '=' << exp_w[v];
                io.out << "\n  porous weights w.r.t. " << format_set(r.gamma_e_star.certificate) << ":";
                for (int v = 0; v < g.order(); ++v)
                    io.out << ' ' << v << '=' << por_w[v];
                io.out << '\n';
            }
        }
    }
    return kExitOk;
}

// --- member -----------------------------------------------------------------

struct MemberArgs {
    GraphInput input;
    bool porous = false;
    std::string format = "json";
};

int cmd_member(const MemberArgs& a, Io io)
{
    const std::vector<Graph> graphs = collect_graphs(a.input, io.in);
    require_order(graphs, kMaxMembershipOrder, "member");
    const ClassKind kind = a.porous ? ClassKind::porous : ClassKind::exponential;
    ClassOracle oracle;
    for (const Graph& g : graphs) {
        const MembershipResult r = oracle.in_class(g, kind);
        const std::string g6 = encode_graph6(g);
        if (a.format == "json") {
            Json j;
            j["graph6"] = g6;
            j["n"] = g.order();
            j["class"] = std::string(class_label(kind));
            j["member"] = r.member;
            j["witness"] = r.witness ? Json(r.witness_graph6()) : Json(nullptr);
            j["witness_order"] = r.witness ? Json(r.witness->order()) : Json(nullptr);
            j["witness_vertices"] = to_json(r.witness_vertices);
            io.out << j.dump() << '\n';
        } else if (r.member) {
            io.out << g6 << " member " << class_label(kind) << '\n';
        } else {
            io.out << g6 << " non-member " << class_label(kind) << " witness=" << r.witness_graph6()
                   << " vertices=" << format_set(r.witness_vertices) << '\n';
        }
    }
    return kExitOk;
}

// --- match ------------------------------------------------------------------

struct MatchArgs {
    GraphInput input;
    std::string pattern;
    std::string pattern_graph6;
    std::string format = "text";
};

int cmd_match(const MatchArgs& a, Io io)
{
    if (a.pattern.empty() == a.pattern_graph6.empty())
        throw UsageError("give exactly one of --pattern and --pattern-graph6");
    const Graph p = a.pattern.empty() ? decode_graph6(a.pattern_graph6) : pattern(parse_pattern_name(a.pattern)).graph;
    const std::string label = a.pattern.empty() ? a.pattern_graph6 : std::string(to_string(parse_pattern_name(a.pattern)));
    for (const Graph& host : collect_graphs(a.input, io.in)) {
        const auto e = find_induced(host, p);
        if (a.format == "json") {
            Json j;
            j["graph6"] = encode_graph6(host);
            j["pattern"] = label;
            j["free"] = !e.has_value();
            j["map"] = e ? Json(e->map) : Json(nullptr);
            io.out << j.dump() << '\n';
        } else if (!e) {
            io.out << "free\n";
        } else {
            for (std::size_t i = 0; i < e->map.size(); ++i)
                io.out << (i ? " " : "") << i << "->" << e->map[i];
            io.out << '\n';
        }
    }
    return kExitOk;
}

// --- enum -------------------------------------------------------------------

struct EnumArgs {
    int n = 0;
    bool trees = false;
    std::string free;
    bool all_orders = false;
    bool count = false;
    int jobs = 1;
};

int cmd_enum(const EnumArgs& a, Io io)
{
    const int cap = a.trees ? kMaxTreeOrder : kMaxConnectedOrder;
    if (a.n > cap)
        throw SizeLimitError(std::string(a.trees ? "trees" : "connected graphs") + " are enumerated up to order " +
                             std::to_string(cap));
    EnumerationOptions options;
    if (!a.free.empty())
        options.filter = parse_pattern_list(a.free);
    options.workers = a.jobs;
    std::vector<GraphStream> levels =
        a.trees ? tree_levels(a.n, options) : connected_graph_levels(a.n, options);
    if (!a.all_orders)
        levels.erase(levels.begin(), levels.end() - 1);
    for (const GraphStream& s : levels) {
        if (a.count) {
            io.out << s.order() << ' ' << s.size() << '\n';
            continue;
        }
        for (const CanonicalCode& c : s.codes())
            io.out << c.to_graph6() << '\n';
    }
    return kExitOk;
}

// --- verify / minimal -------------------------------------------------------

struct SweepArgs {
    std::string sweep;
    int max_n = 0;
    int jobs = 1;
    std::string input;
    std::string cache;
    bool no_cache = false;
    bool no_timing = false;
    std::string free;
    bool porous = false;
    std::string format = "json";
};

class CacheSession {
public:
    CacheSession(const SweepArgs& a, std::ostream& err) : table_(std::make_shared<ParameterTable>())
    {
        std::optional<std::filesystem::path> path;
        if (!a.cache.empty())
            path = a.cache;
        else if (!a.no_cache)
            path = ResultsCache::default_path();
        if (!path)
            return;
        cache_ = std::make_unique<ResultsCache>(*path);
        cache_->load(*table_, err);
        cache_->attach(*table_);
    }
    ~CacheSession()
    {
        if (cache_)
            table_->set_sink(nullptr);
    }

    std::shared_ptr<ParameterTable> table() const { return table_; }

private:
    std::shared_ptr<ParameterTable> table_;
    std::unique_ptr<ResultsCache> cache_;
};

SweepOptions sweep_options(const SweepArgs& a, const CacheSession& session, Io io)
{
    SweepOptions options;
    options.workers = a.jobs;
    options.table = session.table();
    if (!a.input.empty())
        options.input = read_graph6_file(a.input, io.in);
    return options;
}

int cmd_verify(const SweepArgs& a, Io io)
{
    int max_n = a.max_n;
    int cap = kMaxConnectedOrder;
    if (a.sweep == "theorem1")
        max_n = max_n ? max_n : kDefaultTheorem1MaxN;
    else if (a.sweep == "corollary1")
        max_n = max_n ? max_n : kDefaultCorollary1MaxN;
    else if (a.sweep == "corollary2") {
        max_n = max_n ? max_n : kDefaultCorollary2MaxN;
        cap = kMaxMembershipOrder;
    } else if (a.sweep == "conjecture3")
        max_n = max_n ? max_n : kDefaultConjecture3MaxN;
    if (!a.input.empty())
        cap = kMaxMembershipOrder;
    if (max_n > cap)
        throw SizeLimitError("sweep " + a.sweep + " supports --max-n up to " + std::to_string(cap));

    CacheSession session(a, io.err);
    const SweepOptions options = sweep_options(a, session, io);
    VerificationReport report;
    if (a.sweep == "theorem1")
        report = verify_theorem1(max_n, options);
    else if (a.sweep == "corollary1")
        report = verify_corollary1(max_n, options);
    else if (a.sweep == "corollary2")
        report = verify_corollary2(max_n, options);
    else
        report = probe_conjecture3(max_n, options);

    io.out << to_json(report, !a.no_timing).dump(2) << '\n';
    for (const auto& note : report.catalog_notes)
        io.err << "note: catalog pattern " << note << '\n';
    if (a.sweep != "conjecture3" && !report.verified())
        return kExitCounterexample;
    return kExitOk;
}

int cmd_minimal(const SweepArgs& a, Io io)
{
    const int cap = a.input.empty() ? kMaxConnectedOrder : kMaxMembershipOrder;
    if (a.max_n > cap)
        throw SizeLimitError("minimal supports --max-n up to " + std::to_string(cap));
    std::optional<PatternSet> restriction;
    if (!a.free.empty())
        restriction = parse_pattern_list(a.free);
    CacheSession session(a, io.err);
    const SweepOptions options = sweep_options(a, session, io);
    const VerificationReport report =
        find_minimal_forbidden(a.max_n, a.porous ? ClassKind::porous : ClassKind::exponential, restriction, options);
    if (a.format == "json") {
        io.out << to_json(report, !a.no_timing).dump(2) << '\n';
        return kExitOk;
    }
    const char sep = a.format == "csv" ? ',' : '\t';
    io.out << "graph6" << sep << "n" << sep << "gamma" << sep << "gamma_e" << sep << "gamma_e_star\n";
    for (const FoundGraph& f : report.found)
        io.out << f.graph6 << sep << f.order << sep << f.parameters.gamma << sep << f.parameters.gamma_e << sep
               << f.parameters.gamma_e_star << '\n';
    return kExitOk;
}

// --- selfcheck --------------------------------------------------------------

int cmd_selfcheck(Io io)
{
    bool ok = true;
    for (const CatalogCheck& c : catalog_self_check()) {
        io.out << (c.passed() ? "ok   " : "FAIL ") << c.describe() << '\n';
        ok = ok && c.passed();
    }
    return ok ? kExitOk : kExitCounterexample;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exponential domination toolkit", "expdom"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "expdom 1.0.0");
    const std::vector<std::string> formats{"json", "text", "csv"};

    ParamsArgs params;
    auto* p = app.add_subcommand("params", "gamma, gamma_e and gamma_e* with certificates");
    add_graph_input(p, params.input);
    p->add_flag("--explain", params.explain, "print per-vertex weights of the certificate sets");
    p->add_option("--format", params.format, "json, text or csv")->check(CLI::IsMember(formats));

    MemberArgs member;
    auto* m = app.add_subcommand("member", "membership in the hereditary equality class");
    add_graph_input(m, member.input);
    m->add_flag("--porous", member.porous, "use gamma_e* in place of gamma_e");
    m->add_option("--format", member.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    MatchArgs match;
    auto* mt = app.add_subcommand("match", "find an induced copy of a pattern");
    add_graph_input(mt, match.input);
    mt->add_option("--pattern", match.pattern, "catalog pattern name");
    mt->add_option("--pattern-graph6", match.pattern_graph6, "pattern given as graph6");
    mt->add_option("--format", match.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    EnumArgs en;
    auto* e = app.add_subcommand("enum", "non-isomorphic connected graphs or trees as graph6");
    e->add_option("--n", en.n, "order")->required()->check(CLI::PositiveNumber);
    e->add_flag("--trees", en.trees, "trees instead of connected graphs");
    e->add_option("--free", en.free, "comma-separated forbidden patterns");
    e->add_flag("--all-orders", en.all_orders, "every order from 1 to n");
    e->add_flag("--count", en.count, "print 'order count' lines instead of graphs");
    e->add_option("--jobs", en.jobs, "worker threads")->check(CLI::PositiveNumber);

    SweepArgs verify;
    auto* v = app.add_subcommand("verify", "exhaustive characterization sweep");
    v->add_option("--sweep", verify.sweep, "theorem1, corollary1, corollary2 or conjecture3")
        ->required()
        ->check(CLI::IsMember({"theorem1", "corollary1", "corollary2", "conjecture3"}));
    v->add_option("--max-n", verify.max_n, "largest order")->check(CLI::PositiveNumber);
    v->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber);
    v->add_option("--input", verify.input, "graph6 file replacing the built-in enumeration ('-' for stdin)");
    v->add_option("--cache", verify.cache, "results cache file (default: $EXPDOM_CACHE)");
    v->add_flag("--no-cache", verify.no_cache, "ignore $EXPDOM_CACHE");
    v->add_flag("--no-timing", verify.no_timing, "omit elapsed_seconds from the report");

    SweepArgs minimal;
    minimal.format = "text";
    auto* mn = app.add_subcommand("minimal", "minimal forbidden induced subgraphs up to an order");
    mn->add_option("--max-n", minimal.max_n, "largest order")->required()->check(CLI::PositiveNumber);
    mn->add_option("--free", minimal.free, "only search graphs free of these patterns");
    mn->add_flag("--porous", minimal.porous, "use gamma_e* in place of gamma_e");
    mn->add_option("--format", minimal.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    mn->add_option("--jobs", minimal.jobs, "worker threads")->check(CLI::PositiveNumber);
    mn->add_option("--input", minimal.input, "graph6 file replacing the built-in enumeration ('-' for stdin)");
    mn->add_option("--cache", minimal.cache, "results cache file (default: $EXPDOM_CACHE)");
    mn->add_flag("--no-cache", minimal.no_cache, "ignore $EXPDOM_CACHE");
    mn->add_flag("--no-timing", minimal.no_timing, "omit elapsed_seconds from the json report");

    auto* sc = app.add_subcommand("selfcheck", "solver checks of the obstruction catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Io io{in, out, err};
    try {
        if (p->parsed())
            return cmd_params(params, io);
        if (m->parsed())
            return cmd_member(member, io);
        if (mt->parsed())
            return cmd_match(match, io);
        if (e->parsed())
            return cmd_enum(en, io);
        if (v->parsed())
            return cmd_verify(verify, io);
        if (mn->parsed())
            return cmd_minimal(minimal, io);
        if (sc->parsed())
            return cmd_selfcheck(io);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const UnknownPatternError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const SizeLimitError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitSizeCap;
    } catch (const Graph6Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitParse;
    } catch (const GraphError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitParse;
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitParse;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"expdom"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

} // namespace expdom
