#include "q2col/analysis.hpp"

#include <json.hpp>

namespace q2col {

namespace {

using json = nlohmann::ordered_json;

json rat(const rational &x) {
    return json{{"num", x.numerator()}, {"den", x.denominator()}, {"str", to_string(x)}};
}

const char *rel_str(relation rel) {
    switch (rel) {
    case relation::le: return "<=";
    case relation::eq: return "=";
    case relation::ge: return ">=";
    }
    return "?";
}

json ineq(const inequality &q) {
    return json{{"name", q.name},     {"lhs", rat(q.lhs)},   {"rel", rel_str(q.rel)},
                {"rhs", rat(q.rhs)},  {"holds", q.holds},    {"asserted", q.asserted}};
}

template <class T> void put(json &j, const char *key, const std::optional<T> &v) {
    if (v)
        j[key] = *v;
}

} // namespace

std::string to_json(const diagnostics_report &rep) {
    json j;
    j["mode"] = rep.mode;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["delta"] = rep.delta;
    j["Delta"] = rep.Delta;
    j["matching_size"] = rep.matching_size;
    j["kappa"] = rat(rep.kappa);
    j["perfect_matching"] = rep.perfect_matching;
    j["triangle_free"] = rep.triangle_free;
    j["dirac"] = rep.dirac;
    if (rep.mode != "bounds") {
        j["c"] = rep.c;
        j["n0"] = rep.n0;
        j["n1"] = rep.n1;
        j["n2"] = rep.n2;
        j["paths"] = rep.paths;
    }
    put(j, "h_edges", rep.h_edges);
    put(j, "n2_n2_non_chi_edges", rep.n2_n2_non_chi_edges);
    put(j, "max_h_degree_n0", rep.max_h_degree_n0);
    put(j, "max_h_degree_n1", rep.max_h_degree_n1);
    if (rep.mode == "perfect")
        j["tight_steps"] = rep.tight_steps;
    put(j, "t", rep.t);
    put(j, "h0", rep.h0);
    put(j, "h1", rep.h1);
    put(j, "h2", rep.h2);
    put(j, "selected", rep.selected);
    put(j, "terminals", rep.terminals);
    put(j, "claim_a_violations", rep.claim_a_violations);
    put(j, "claim_b_violations", rep.claim_b_violations);
    put(j, "claim_c_violations", rep.claim_c_violations);
    put(j, "max_x_degree", rep.max_x_degree);
    put(j, "swaps", rep.swaps);
    j["bounds"] = json{{"perfect", rat(rep.bounds.perfect)},
                       {"triangle_free", rat(rep.bounds.triangle_free)},
                       {"general", rat(rep.bounds.general)},
                       {"general_delta_minus_2", rat(rep.bounds.general_d2)},
                       {"kappa_cap", rat(rep.bounds.kappa_cap)},
                       {"corollary", rat(rep.bounds.corollary)}};
    json qs = json::array();
    for (const auto &q : rep.inequalities)
        qs.push_back(ineq(q));
    j["inequality_results"] = qs;
    return j.dump();
}

std::string to_json(const ratio_verdict &v) {
    json j;
    j["status"] = to_string(v.status);
    j["alg"] = v.alg;
    if (v.opt)
        j["opt"] = *v.opt;
    else
        j["opt"] = nullptr;
    j["nodes_explored"] = v.nodes_explored;
    j["matching_size"] = v.run.matching_used.size();
    j["components"] = v.run.component_count;
    json qs = json::array();
    for (const auto &q : v.checks)
        qs.push_back(ineq(q));
    j["checks"] = qs;
    return j.dump();
}

std::string to_json(const characteristic_subgraph &chi) {
    json j;
    json es = json::array();
    for (std::size_t k = 0; k < chi.edges.size(); ++k)
        es.push_back(json{{"color", k + 1}, {"u", chi.edges[k].u}, {"v", chi.edges[k].v}});
    j["edges"] = es;
    j["paths"] = chi.paths;
    j["n0"] = chi.n0;
    j["n1"] = chi.n1;
    j["n2"] = chi.n2;
    j["cycle_swaps"] = chi.cycle_swaps;
    j["path_swaps"] = chi.path_swaps;
    return j.dump();
}

} // namespace q2col
