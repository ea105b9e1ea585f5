#include "grakit/session.hpp"

#include "grakit/canonical.hpp"
#include "grakit/explore.hpp"
#include "grakit/report.hpp"

namespace grakit {

using nlohmann::json;

namespace {

long long int_param(const TaskSpec& t, const std::string& key) {
    const std::string* v = t.find(key);
    if (!v) throw input_error("task '" + t.name + "' is missing '" + key + "'");
    return std::stoll(*v);
}

std::vector<int> list_param(const TaskSpec& t, const std::string& key) {
    const std::string* v = t.find(key);
    if (!v || v->size() < 2 || v->front() != '[' || v->back() != ']')
        throw input_error("task '" + t.name + "': '" + key + "' must be an integer list");
    std::vector<int> out;
    std::size_t pos = 1;
    while (pos < v->size() - 1) {
        std::size_t end = v->find(',', pos);
        if (end == std::string::npos || end > v->size() - 1) end = v->size() - 1;
        out.push_back(std::stoi(v->substr(pos, end - pos)));
        pos = end + 1;
    }
    return out;
}

const GradedRingPresentation& ring_of(const SessionIR& s, const TaskSpec& t) {
    const std::string* name = t.find("ring");
    if (!name) throw input_error("task '" + t.name + "' is missing 'ring'");
    const GradedRingPresentation* R = s.find_ring(*name);
    if (!R) throw input_error("undeclared ring '" + *name + "'");
    return *R;
}

json json_of_window(const std::optional<long long>& w) {
    return w ? json(*w) : json(nullptr);
}

}  // namespace

GradedModulePresentation resolve_module_ref(const SessionIR& s, const GradedRingPresentation& R,
                                            const std::string& ring_name, const std::string& ref,
                                            const Budget* budget) {
    if (ref == "k") return residue_field_presentation(R);
    if (ref == "m") return maximal_ideal_presentation(R, budget);
    if (ref == ring_name) {
        GradedModulePresentation cyclic;
        cyclic.cover.gen_degrees = {0};
        return cyclic;
    }
    const NamedModule* M = s.find_module(ref);
    if (!M) throw input_error("undeclared module '" + ref + "'");
    if (M->ring != ring_name)
        throw input_error("module '" + ref + "' is over ring '" + M->ring + "', not '" +
                          ring_name + "'");
    return M->pres;
}

std::string task_cache_key(const SessionIR& s, const TaskSpec& t) {
    std::string src = "task/v";
    src += kSchemaVersion;
    src += "\n";
    src += canonical_task(t);
    if (const std::string* rn = t.find("ring")) {
        if (const GradedRingPresentation* R = s.find_ring(*rn)) src += canonical_ring(*rn, *R);
    }
    if (const std::string* mn = t.find("module")) {
        if (const NamedModule* M = s.find_module(*mn))
            src += canonical_module(*mn, *M, *s.find_ring(M->ring));
    }
    return sha256_hex(src);
}

namespace {

TaskResult compute_task(const SessionIR& s, const TaskSpec& t, const Cache* cache,
                        const Budget* budget, int jobs) {
    TaskResult r;
    json& doc = r.doc;
    doc["schema_version"] = kSchemaVersion;
    doc["meta"]["tool_version"] = kToolVersion;
    doc["kind"] = t.kind;
    doc["task"] = t.name;
    for (const auto& [k, v] : t.params) doc["params"][k] = v;

    if (t.kind == "betti" || t.kind == "poincare" || t.kind == "regularity") {
        const auto& R = ring_of(s, t);
        int T = static_cast<int>(int_param(t, "T"));
        auto M = resolve_module_ref(s, R, *t.find("ring"), *t.find("module"), budget);
        Resolution res = minimal_resolution(R, M, T, budget);
        if (res.truncated_by_budget)
            throw resource_error("budget exhausted while resolving the module", res.bound);
        BettiTable B = betti_of(res);
        if (t.kind == "betti") {
            doc["betti"] = json_of_betti(B);
            doc["regularity_window"] = json_of_window(regularity_window(B));
        } else if (t.kind == "poincare") {
            B.bound = T;
            doc["poincare"] = json_of_biseries(from_betti(B));
        } else {
            doc["regularity_window"] = json_of_window(regularity_window(B));
        }
    } else if (t.kind == "hilbert") {
        const auto& R = ring_of(s, t);
        int T = static_cast<int>(int_param(t, "T"));
        RationalHilbert H = hilbert_series_rational(R, budget);
        doc["numerator"] = json_of_laurent(H.numerator);
        json w = json::array();
        for (int d : H.weights) w.push_back(d);
        doc["denominator_weights"] = w;
        json coeffs = json::array();
        for (const auto& c : expand_hilbert(H, T)) coeffs.push_back(c.str());
        doc["coefficients"] = coeffs;
    } else if (t.kind == "koszul") {
        const auto& R = ring_of(s, t);
        int T = static_cast<int>(int_param(t, "T"));
        KoszulVerdict v = koszul_probe(R, T, budget);
        doc["koszul"] = json_of_koszul(v);
        doc["regularity_if_koszul"] = koszul_regularity_bound(R);
        if (std::holds_alternative<NotKoszul>(v)) r.exit_code = 1;
    } else if (t.kind == "deviations") {
        const auto& R = ring_of(s, t);
        int T = static_cast<int>(int_param(t, "T"));
        DeviationTable D = deviations(R, T, budget);
        DeviationReport rep = deviation_report(D, R, budget);
        json entries = json::array();
        for (const auto& [ij, eps] : D.entries)
            if (eps != 0) entries.push_back({ij.first, ij.second, eps});
        doc["deviations"] = entries;
        json off = json::array();
        for (const auto& [i, j, eps] : rep.off_diagonal) off.push_back({i, j, eps});
        doc["off_diagonal"] = off;
        doc["proposition_violations"] = rep.proposition_violations;
        doc["complete_intersection"] = rep.complete_intersection;
        doc["ci_consistent"] = rep.ci_consistent;
    } else if (t.kind == "ci") {
        const auto& R = ring_of(s, t);
        bool ci = is_complete_intersection(R, budget);
        doc["complete_intersection"] = ci;
        doc["krull_dimension"] = krull_dimension(R);
        doc["minimal_generators"] =
            minimal_ideal_generators(R, R.ideal_gens, budget).size();
        if (!ci) r.exit_code = 1;
    } else if (t.kind == "verify-main1") {
        const auto& R = ring_of(s, t);
        int T = static_cast<int>(int_param(t, "T"));
        int power = static_cast<int>(int_param(t, "i"));
        auto L = resolve_module_ref(s, R, *t.find("ring"), *t.find("module"), budget);
        TightEmbedding E = tight_chain(R, L, power, budget);
        Main1Report rep = verify_main1(R, E, T, budget);
        doc["holds"] = rep.holds;
        doc["power"] = power;
        doc["t_bound"] = rep.t_bound;
        doc["hv"] = json_of_laurent(rep.hv);
        doc["poincare_k"] = json_of_biseries(rep.poincare_k);
        doc["poincare_m"] = json_of_biseries(rep.poincare_m);
        doc["lhs"] = json_of_biseries(rep.lhs);
        doc["rhs"] = json_of_biseries(rep.rhs);
        doc["comparison"] = json_of_leq(rep.verdict);
        doc["koszul"] = json_of_koszul(rep.koszul);
        if (rep.window_half) doc["window_half"] = *rep.window_half;
        if (rep.window_full) doc["window_full"] = *rep.window_full;
        if (!rep.holds) r.exit_code = 1;
    } else if (t.kind == "verify-main2") {
        const auto& R = ring_of(s, t);
        Main2Report rep =
            verify_main2(R, static_cast<int>(int_param(t, "m")),
                         static_cast<int>(int_param(t, "n")),
                         static_cast<int>(int_param(t, "T")), budget);
        doc["holds"] = rep.holds;
        doc["m"] = rep.m;
        doc["n"] = rep.n;
        doc["t_bound"] = rep.t_bound;
        doc["admissible_b"] = rep.admissible_b;
        doc["poincare_k"] = json_of_biseries(rep.poincare_k);
        doc["poincare_syzygy"] = json_of_biseries(rep.poincare_syzygy);
        doc["rhs"] = json_of_biseries(rep.rhs);
        if (!rep.holds) r.exit_code = 1;
    } else if (t.kind == "reg-growth") {
        const auto& R = ring_of(s, t);
        RegGrowthReport rep = syzygy_reg_growth(R, static_cast<int>(int_param(t, "n")),
                                                list_param(t, "samples"), budget);
        json windows = json::array();
        for (const auto& [ta, w] : rep.windows) windows.push_back({ta, json_of_window(w)});
        doc["n"] = rep.n;
        doc["windows"] = windows;
        doc["growth_evidence"] = rep.growth_evidence;
    } else if (t.kind == "explore") {
        ExploreParams p;
        p.vars = static_cast<int>(int_param(t, "vars"));
        p.max_gen_deg = static_cast<int>(int_param(t, "maxdeg"));
        p.weights = list_param(t, "weights");
        p.t_bound = static_cast<int>(int_param(t, "T"));
        if (t.find("count")) p.count_cap = int_param(t, "count");
        doc["explore"] = explore_batch(p, cache, budget, jobs);
    } else {
        throw input_error("unknown task kind '" + t.kind + "'");
    }
    return r;
}

}  // namespace

TaskResult run_task(const SessionIR& s, const TaskSpec& t, const Cache* cache,
                    const Budget* budget, int jobs) {
    std::string key;
    if (cache) {
        key = task_cache_key(s, t);
        if (auto hit = cache->load(key)) {
            json entry = json::parse(*hit, nullptr, false);
            if (!entry.is_discarded() && entry.contains("exit_code") && entry.contains("doc")) {
                TaskResult r;
                r.exit_code = entry["exit_code"].get<int>();
                r.doc = entry["doc"];
                return r;
            }
        }
    }
    TaskResult r = compute_task(s, t, cache, budget, jobs);
    if (cache) {
        json entry = {{"exit_code", r.exit_code}, {"doc", r.doc}};
        cache->store(key, entry.dump());
    }
    return r;
}

}  // namespace grakit
