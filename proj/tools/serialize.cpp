#include "serialize.hpp"

namespace tgraph::cli {

Json to_json(const Params& p) { return Json{{"p", p.p}, {"lambda", p.lambda}, {"ell", p.ell}}; }

Json to_json(const BoundState& s) {
    Json j;
    j["kind"] = to_string(s.kind);
    j["z"] = s.z;
    j["y"] = s.y;
    j["half_orbits"] = s.half_orbits;
    j["orientation"] = s.orientation;
    j["level"] = s.level;
    j["constant"] = s.is_constant();
    return j;
}

Json to_json(const Observables& o) {
    return Json{{"mass", o.mass}, {"lp_norm_p", o.lp_norm_p}, {"grad_sq", o.grad_sq},
                {"energy", o.energy}, {"action", o.action},       {"sup", o.sup}};
}

Json to_json(const VerifyReport& r) {
    return Json{{"shoot_residual", r.shoot_residual},     {"kirchhoff_residual", r.kirchhoff_residual},
                {"continuity_residual", r.continuity_residual}, {"level_drift", r.level_drift},
                {"ode_residual_max", r.ode_residual_max}, {"pass", r.pass}};
}

Json to_json(const std::vector<Extremum>& ex) {
    Json a = Json::array();
    for (const auto& e : ex)
        a.push_back(Json{{"lambda", e.lambda}, {"value", e.value}, {"kind", e.kind == ExtremumKind::min ? "min" : "max"}, {"index", e.index}});
    return a;
}

Json to_json(const std::vector<Intersection>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(Json{{"segment_a", x.seg_a}, {"segment_b", x.seg_b}, {"mass", x.x}, {"energy", x.y}});
    return a;
}

Json to_json(const GridReport& r) {
    return Json{{"claim_id", r.claim_id}, {"grid_spec", r.grid_spec}, {"p", r.p},
                {"worst_value", r.worst_value}, {"worst_point", r.worst_point}, {"pass", r.pass}};
}

Json to_json(const ProbeReport& r) {
    Json j;
    j["params"] = to_json(r.params);
    j["regime"] = to_string(r.regime);
    j["cutoff"] = to_string(r.cutoff);
    j["eps"] = r.eps;
    j["h"] = r.h;
    j["second_derivative_fd"] = r.second_derivative_fd;
    j["second_derivative_half"] = r.second_derivative_half;
    j["second_derivative_richardson"] = r.second_derivative_richardson;
    j["first_derivative"] = r.first_derivative;
    j["asymptotic_prediction"] = r.asymptotic_prediction;
    j["relative_gap"] = r.relative_gap;
    j["p_moment"] = r.p_moment;
    j["energy_at_one"] = r.energy_at_one;
    j["ground_state_energy"] = r.ground_state_energy;
    j["mass"] = r.mass;
    j["mass_drift"] = r.mass_drift;
    Json table = Json::array();
    for (const auto& [t, e] : r.energies) table.push_back(Json{{"t", t}, {"energy", e}});
    j["energies"] = table;
    j["verdict"] = r.verdict;
    return j;
}

}  // namespace tgraph::cli
