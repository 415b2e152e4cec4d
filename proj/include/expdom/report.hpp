#pragma once

#include "expdom/domination.hpp"
#include "expdom/graph.hpp"
#include "expdom/hereditary.hpp"

#include <json.hpp>

#include <string>

namespace expdom {

using Json = nlohmann::ordered_json;

/// Keys in a fixed order. `elapsed_seconds` is the only field that varies
/// between identical runs; it is left out when `with_timing` is false.
Json to_json(const VerificationReport& report, bool with_timing = true);

/// Ascending vertex list.
Json to_json(VertexSet s);

/// params record: graph6, n, m, the three parameters with certificates and
/// the two equality flags.
struct ParamsRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    ParamResult gamma;
    ParamResult gamma_e;
    ParamResult gamma_e_star;

    bool gamma_equals_gamma_e() const { return gamma.value == gamma_e.value; }
    bool gamma_equals_gamma_e_star() const { return gamma.value == gamma_e_star.value; }
};

ParamsRecord compute_params(const Graph& g);
Json to_json(const ParamsRecord& record);

/// "{0,3,5}"
std::string format_set(VertexSet s);

} // namespace expdom
