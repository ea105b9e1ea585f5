#include "grakit/explore.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "grakit/canonical.hpp"
#include "grakit/report.hpp"

namespace grakit {

using nlohmann::json;

namespace {

std::vector<Monomial> candidate_monomials(const ExploreParams& p) {
    std::vector<Monomial> out;
    Monomial m(p.vars, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == p.vars) {
            if (total_degree(m) >= 2 && weighted_degree(m, p.weights) <= p.max_gen_deg)
                out.push_back(m);
            return;
        }
        for (int e = 0; e * p.weights[v] <= p.max_gen_deg; ++e) {
            m[v] = static_cast<std::uint32_t>(e);
            rec(v + 1);
        }
        m[v] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        long long da = weighted_degree(a, p.weights), db = weighted_degree(b, p.weights);
        if (da != db) return da < db;
        return a > b;  // x-heavy first: x^2, x*y, y^2
    });
    return out;
}

// Weight-preserving variable permutations.
std::vector<std::vector<int>> symmetry_group(const std::vector<int>& weights) {
    std::vector<int> perm(weights.size());
    for (std::size_t v = 0; v < weights.size(); ++v) perm[v] = static_cast<int>(v);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (std::size_t v = 0; v < weights.size(); ++v)
            if (weights[perm[v]] != weights[v]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Monomial> sorted_image(const std::vector<Monomial>& gens,
                                   const std::vector<int>& perm) {
    std::vector<Monomial> img;
    for (const auto& g : gens) {
        Monomial m(g.size(), 0);
        for (std::size_t v = 0; v < g.size(); ++v) m[v] = g[perm[v]];
        img.push_back(std::move(m));
    }
    std::sort(img.begin(), img.end());
    return img;
}

bool is_canonical_rep(const std::vector<Monomial>& gens,
                      const std::vector<std::vector<int>>& sym) {
    // representative: the x-heaviest image under the symmetry group
    std::vector<Monomial> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& perm : sym)
        if (sorted_image(gens, perm) > sorted) return false;
    return true;
}

std::string mono_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out;
}

json ring_record(const ExploreParams& p, const std::vector<Monomial>& gens,
                 const std::vector<std::string>& names, const Budget* budget) {
    PolyContext ctx(p.characteristic, p.weights);
    std::vector<Polynomial> polys;
    for (const auto& g : gens)
        polys.push_back(poly_from_terms(ctx, {Term{1, g}}));
    GradedRingPresentation R = make_ring(ctx, names, polys);

    DeviationTable D = deviations(R, p.t_bound, budget);
    DeviationReport rep = deviation_report(D, R, budget);

    json entries = json::array();
    for (const auto& [ij, eps] : D.entries)
        if (eps != 0) entries.push_back({ij.first, ij.second, eps});
    json off = json::array();
    bool empty_off_high = true;
    for (const auto& [i, j, eps] : rep.off_diagonal) {
        off.push_back({i, j, eps});
        if (i >= 3) empty_off_high = false;
    }

    json rec = {{"deviations", entries},
                {"off_diagonal", off},
                {"empty_off_diagonal_from_3", empty_off_high},
                {"complete_intersection", rep.complete_intersection},
                {"ci_consistent", rep.ci_consistent},
                {"koszul", json_of_koszul(koszul_probe(R, p.t_bound, budget))},
                {"proposition_violations", rep.proposition_violations}};

    if (!rep.proposition_violations.empty()) {
        // recheck at a higher bound: surviving violations are anomalies,
        // the rest were truncation artifacts
        DeviationTable D2 = deviations(R, p.t_bound + 4, budget);
        DeviationReport rep2 = deviation_report(D2, R, budget);
        json resolved = json::array(), unresolved = json::array();
        for (int d : rep.proposition_violations) {
            bool still = std::find(rep2.proposition_violations.begin(),
                                   rep2.proposition_violations.end(),
                                   d) != rep2.proposition_violations.end();
            (still ? unresolved : resolved).push_back(d);
        }
        rec["recheck"] = {{"t_bound", p.t_bound + 4},
                          {"resolved", resolved},
                          {"unresolved", unresolved}};
    }
    return rec;
}

}  // namespace

json explore_batch(const ExploreParams& p, const Cache* cache, const Budget* budget, int jobs) {
    if (p.vars < 1 || p.vars > 4) throw input_error("explore supports 1..4 variables");
    if (p.max_gen_deg < 2 || p.max_gen_deg > 5)
        throw input_error("explore generator degree must be in 2..5");
    if (static_cast<int>(p.weights.size()) != p.vars)
        throw input_error("explore weights list must have one entry per variable");
    if (p.t_bound < 1) throw input_error("explore bound must be >= 1");

    std::vector<std::string> names;
    const char* pool = "xyzw";
    for (int v = 0; v < p.vars; ++v) names.push_back(std::string(1, pool[v]));

    auto cands = candidate_monomials(p);
    auto sym = symmetry_group(p.weights);

    // Antichain enumeration in index order; DFS yields the lexicographic
    // order over sorted generator index sets.
    std::vector<std::vector<Monomial>> family;
    std::vector<Monomial> chosen;
    bool capped = false;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (capped) return;
        for (std::size_t i = start; i < cands.size() && !capped; ++i) {
            bool comparable = false;
            for (const auto& c : chosen)
                if (divides(c, cands[i]) || divides(cands[i], c)) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            chosen.push_back(cands[i]);
            if (is_canonical_rep(chosen, sym)) {
                family.push_back(chosen);
                if (p.count_cap && static_cast<long long>(family.size()) >= *p.count_cap)
                    capped = true;
                if (!capped) rec(i + 1);
            } else {
                rec(i + 1);
            }
            chosen.pop_back();
        }
    };
    rec(0);

    struct Slot {
        std::string ideal;
        json gens = json::array();
        std::string key;
        json record;
        bool done = false, exhausted = false;
    };
    std::vector<Slot> slots(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::string ideal = "(";
        for (std::size_t g = 0; g < family[i].size(); ++g) {
            std::string ms = mono_string(family[i][g], names);
            if (g) ideal += ", ";
            ideal += ms;
            slots[i].gens.push_back(ms);
        }
        slots[i].ideal = ideal + ")";
        std::string key_src = "explore-ring/v" + std::string(kSchemaVersion) + "\nchar=" +
                              std::to_string(p.characteristic) + "\nweights=";
        for (int w : p.weights) key_src += std::to_string(w) + ",";
        key_src += "\nT=" + std::to_string(p.t_bound) + "\nideal=" + slots[i].ideal + "\n";
        slots[i].key = sha256_hex(key_src);
    }

    std::atomic<std::size_t> next{0};
    std::mutex cache_mu;
    // snapshot before any charges so every ring gets a full entry budget
    const Budget proto = budget ? *budget : Budget::unlimited();
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= slots.size()) break;
            Slot& s = slots[i];
            Budget local = proto;
            if (cache) {
                std::lock_guard<std::mutex> lk(cache_mu);
                if (auto hit = cache->load(s.key)) {
                    json rec = json::parse(*hit, nullptr, false);
                    if (!rec.is_discarded()) {
                        s.record = std::move(rec);
                        s.done = true;
                        continue;
                    }
                }
            }
            try {
                s.record = ring_record(p, family[i], names, &local);
                s.done = true;
                if (cache) {
                    std::lock_guard<std::mutex> lk(cache_mu);
                    cache->store(s.key, s.record.dump());
                }
            } catch (const resource_error&) {
                s.exhausted = true;
            }
        }
    };
    int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    json rings = json::array();
    json vanish_candidates = json::array();
    json anomalies = json::array();
    bool complete = true;
    for (auto& s : slots) {
        json rec = {{"ideal", s.ideal}, {"gens", s.gens}};
        if (s.done) {
            rec.update(s.record);
            if (rec.value("empty_off_diagonal_from_3", false)) vanish_candidates.push_back(s.ideal);
            if (rec.contains("recheck") && !rec["recheck"]["unresolved"].empty())
                anomalies.push_back({{"ideal", s.ideal}, {"unresolved", rec["recheck"]["unresolved"]}});
        } else {
            rec["budget_exhausted"] = true;
            complete = false;
        }
        rings.push_back(std::move(rec));
    }

    json weights = json::array();
    for (int w : p.weights) weights.push_back(w);
    return {{"kind", "explore"},
            {"family",
             {{"char", p.characteristic},
              {"vars", p.vars},
              {"max_gen_deg", p.max_gen_deg},
              {"weights", weights},
              {"t_bound", p.t_bound}}},
            {"count", rings.size()},
            {"complete", complete},
            {"rings", rings},
            {"vanishing_candidates", vanish_candidates},
            {"window_anomalies", anomalies}};
}

}  // namespace grakit
