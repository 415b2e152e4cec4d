#include "expdom/report.hpp"

#include "expdom/graph6.hpp"

namespace expdom {

namespace {

Json counts(const std::map<int, std::uint64_t>& per_order)
{
    Json out = Json::object();
    for (const auto& [order, count] : per_order)
        out[std::to_string(order)] = count;
    return out;
}

Json names(const std::optional<PatternSet>& set)
{
    if (!set)
        return nullptr;
    Json out = Json::array();
    for (PatternName n : set->names())
        out.push_back(std::string(to_string(n)));
    return out;
}

Json to_json(const ParamResult& r)
{
    return Json{{"value", r.value}, {"certificate", to_json(r.certificate)}};
}

} // namespace

Json to_json(VertexSet s)
{
    Json out = Json::array();
    for (int v : s)
        out.push_back(v);
    return out;
}

std::string format_set(VertexSet s)
{
    std::string out = "{";
    for (int v : s) {
        if (out.size() > 1)
            out += ',';
        out += std::to_string(v);
    }
    return out + "}";
}

Json to_json(const VerificationReport& report, bool with_timing)
{
    Json j;
    j["sweep"] = report.sweep_name;
    j["max_n"] = report.max_n;
    j["class"] = report.class_label;
    j["restriction"] = names(report.restriction);
    j["obstructions"] = names(report.obstructions);
    j["source"] = report.source;
    j["config_hash"] = report.config_hash;
    j["graphs_per_order"] = counts(report.graphs_per_order);
    j["members_per_order"] = counts(report.members_per_order);
    j["total_graphs"] = report.total_graphs();
    j["counterexamples"] = report.counterexamples;
    j["divergences"] = report.divergences;
    Json found = Json::array();
    for (const FoundGraph& f : report.found)
        found.push_back({{"graph6", f.graph6},
                         {"n", f.order},
                         {"gamma", f.parameters.gamma},
                         {"gamma_e", f.parameters.gamma_e},
                         {"gamma_e_star", f.parameters.gamma_e_star}});
    j["found"] = found;
    j["catalog_notes"] = report.catalog_notes;
    j["verified"] = report.verified();
    if (with_timing)
        j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

ParamsRecord compute_params(const Graph& g)
{
    ParamsRecord r;
    r.graph6 = encode_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.gamma = domination_number(g);
    r.gamma_e = exponential_domination_number(g);
    r.gamma_e_star = porous_exponential_domination_number(g);
    return r;
}

Json to_json(const ParamsRecord& r)
{
    Json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["gamma"] = to_json(r.gamma);
    j["gamma_e"] = to_json(r.gamma_e);
    j["gamma_e_star"] = to_json(r.gamma_e_star);
    j["gamma_equals_gamma_e"] = r.gamma_equals_gamma_e();
    j["gamma_equals_gamma_e_star"] = r.gamma_equals_gamma_e_star();
    return j;
}

} // namespace expdom
