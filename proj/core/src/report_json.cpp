#include "mimkit/report_json.hpp"

#include "mimkit/graph6.hpp"

namespace mimkit {

namespace {

nlohmann::json edge_list(const std::vector<Edge>& edges) {
    auto out = nlohmann::json::array();
    for (const auto& e : edges) out.push_back(to_string(e));
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const BoundReport& r) {
    j = {{"graph6", r.graph6}, {"n", r.n}, {"triangle_free", r.triangle_free}};
    if (r.skipped()) {
        j["skipped"] = true;
        return;
    }
    j["mim_count"] = r.mim_count;
    j["bound_holds"] = r.bound_holds;
    j["extremal"] = r.extremal;
    if (r.oracle_count) j["oracle_count"] = *r.oracle_count;
}

void to_json(nlohmann::json& j, const BoundRecord& r) {
    if (r.report) {
        j = *r.report;
    } else {
        j = {{"error", r.error}};
    }
    j["seq"] = r.seq;
}

void to_json(nlohmann::json& j, const BoundSummary& s) {
    j = {{"summary", true},
         {"graphs", s.graphs},
         {"triangle_free", s.triangle_free},
         {"skipped", s.skipped},
         {"violations", s.violations},
         {"extremal", s.extremal},
         {"cross_check_mismatches", s.cross_check_mismatches},
         {"errors", s.errors}};
}

void to_json(nlohmann::json& j, const RetargetCountReport& r) {
    j = {{"u", r.u}, {"v", r.v}, {"verdict", to_string(r.verdict)}};
    if (r.verdict == Verdict::Inapplicable) return;
    j["base"] = r.base;
    j["forward"] = r.forward;
    j["backward"] = r.backward;
}

void to_json(nlohmann::json& j, const TriangleFreeReport& r) {
    j = {{"u", r.u}, {"v", r.v}, {"verdict", to_string(r.verdict)}};
}

void to_json(nlohmann::json& j, const TwinCountReport& r) {
    j = {{"u", r.u}, {"v", r.v}, {"verdict", to_string(r.verdict)}};
    if (r.verdict == Verdict::Inapplicable) return;
    j["tau_before"] = r.tau_before;
    j["tau_after"] = r.tau_after;
}

void to_json(nlohmann::json& j, const Lemma6Report& r) {
    j = {{"u", r.u},
         {"v", r.v},
         {"avoid", r.avoid.to_vector()},
         {"lhs", r.lhs},
         {"rhs", r.rhs},
         {"injection_ok", r.injection_ok},
         {"verdict", to_string(r.verdict)}};
}

void to_json(nlohmann::json& j, const ExtremalFamilyReport& r) {
    j = {{"p", r.p},
         {"n", r.n},
         {"mim_count", r.mim_count},
         {"expected", r.expected},
         {"enumerated", r.enumerated},
         {"extremal", r.extremal},
         {"holds", r.holds()}};
}

void to_json(nlohmann::json& j, const RetargetResult& r) {
    j = {{"graph6", to_graph6(r.graph)}, {"removed", edge_list(r.removed)}, {"added", edge_list(r.added)}};
}

}  // namespace mimkit
