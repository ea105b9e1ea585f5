#include "grakit/theorems.hpp"

#include <algorithm>
#include <functional>

namespace grakit {

namespace {

// All monomials with the given total exponent sum (word length in m).
std::vector<Monomial> monomials_of_length(int nvars, int length) {
    std::vector<Monomial> out;
    Monomial m(nvars, 0);
    std::function<void(int, int)> rec = [&](int v, int rem) {
        if (v == nvars - 1) {
            m[v] = rem;
            out.push_back(m);
            m[v] = 0;
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            m[v] = e;
            rec(v + 1, rem - e);
        }
        m[v] = 0;
    };
    if (nvars == 0) return out;
    rec(0, length);
    return out;
}

std::vector<FreeElement> concat(std::vector<FreeElement> a, const std::vector<FreeElement>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// m * gens: every variable times every generator.
std::vector<FreeElement> ideal_times(const GradedRingPresentation& R,
                                     const std::vector<FreeElement>& gens) {
    std::vector<FreeElement> out;
    for (int v = 0; v < R.ctx.nvars(); ++v) {
        Monomial xv(R.ctx.nvars(), 0);
        xv[v] = 1;
        for (const auto& g : gens) out.push_back(fe_term_mul(R.ctx, 1, xv, g));
    }
    return out;
}

}  // namespace

std::vector<long long> module_hilbert_function(const GradedRingPresentation& R,
                                               const FreeModule& cover,
                                               const std::vector<FreeElement>& relations,
                                               int max_degree, const Budget* budget) {
    GBEngine engine(R.ctx, cover, 0, budget);
    for (const auto& r : relations) engine.add(r);
    for (int g = 0; g < cover.rank(); ++g)
        for (const auto& e : R.ideal_gb.elems) {
            FreeElement col = fe_zero(cover.rank());
            col.entries[g] = e.value.entries[0];
            engine.add(col);
        }
    engine.complete(max_degree);

    std::vector<long long> dims(max_degree + 1, 0);
    for (int g = 0; g < cover.rank(); ++g) {
        for (int d = cover.gen_degrees[g]; d <= max_degree; ++d) {
            long long target = d - cover.gen_degrees[g];
            // count standard monomials at this position
            std::vector<const Monomial*> leads;
            for (const auto& b : engine.basis())
                if (b.lead_pos == g) leads.push_back(&b.lead_mon);
            // enumerate monomials of weighted degree `target`
            std::function<void(Monomial&, int, long long)> rec = [&](Monomial& m, int v,
                                                                     long long rem) {
                if (v == R.ctx.nvars()) {
                    if (rem != 0) return;
                    for (const auto* l : leads)
                        if (divides(*l, m)) return;
                    ++dims[d];
                    return;
                }
                for (long long e = 0; e * R.ctx.weights[v] <= rem; ++e) {
                    m[v] = static_cast<std::uint32_t>(e);
                    rec(m, v + 1, rem - e * R.ctx.weights[v]);
                }
                m[v] = 0;
            };
            Monomial m(R.ctx.nvars(), 0);
            rec(m, 0, target);
        }
    }
    return dims;
}

SubmoduleData submodule_presentation(const GradedRingPresentation& R,
                                     const GradedModulePresentation& L,
                                     const std::vector<FreeElement>& gens, const Budget* budget) {
    SubmoduleData out;
    auto idx = minimal_generator_indices(R, L.cover, gens, L.relations, budget);
    struct Col {
        long long degree;
        std::size_t index;
    };
    std::vector<Col> cols;
    for (auto i : idx) {
        FreeElement red = reduce_entries(R, gens[i]);
        auto d = fe_degree_if_homogeneous(R.ctx, L.cover, red);
        cols.push_back({*d, i});
    }
    std::stable_sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.index < b.index;
    });
    for (const auto& c : cols) {
        out.gens_in_ambient.push_back(reduce_entries(R, gens[c.index]));
        out.pres.cover.gen_degrees.push_back(static_cast<int>(c.degree));
    }
    if (out.gens_in_ambient.empty()) return out;  // zero submodule

    auto rels = kernel_gens(R, L.cover, out.gens_in_ambient, L.relations, budget);
    auto keep = minimal_generator_indices(R, out.pres.cover, rels, {}, budget);
    for (auto i : keep) out.pres.relations.push_back(rels[i]);
    return out;
}

TightEmbedding tight_chain(const GradedRingPresentation& R, const GradedModulePresentation& L,
                           int power, const Budget* budget) {
    if (power < 1) throw input_error("tight chain power must be >= 1");
    const PolyContext& ctx = R.ctx;
    int rank = L.cover.rank();

    auto power_gens = [&](int p) {
        std::vector<FreeElement> out;
        if (p == 0) {
            for (int g = 0; g < rank; ++g) out.push_back(fe_unit(ctx, rank, g));
            return out;
        }
        for (const auto& m : monomials_of_length(ctx.nvars(), p))
            for (int g = 0; g < rank; ++g) out.push_back(fe_term_mul(ctx, 1, m, fe_unit(ctx, rank, g)));
        return out;
    };

    TightEmbedding E;
    E.power = power;
    SubmoduleData M = submodule_presentation(R, L, power_gens(power), budget);
    if (M.pres.cover.rank() == 0)
        throw input_error("m^" + std::to_string(power) + " L is zero: empty embedding");
    SubmoduleData A;
    if (power == 1) {
        A.pres = L;
        A.gens_in_ambient = power_gens(0);
    } else {
        A = submodule_presentation(R, L, power_gens(power - 1), budget);
    }

    // chain conditions, checked by membership
    auto span_with_rels = [&](const std::vector<FreeElement>& gens) {
        return concat(gens, L.relations);
    };
    for (const auto& g : M.gens_in_ambient)
        if (!in_span(R, L.cover, span_with_rels(A.gens_in_ambient), g, budget))
            throw internal_error("chain violation: M not inside ambient");
    for (const auto& h : ideal_times(R, A.gens_in_ambient))
        if (!in_span(R, L.cover, span_with_rels(M.gens_in_ambient), h, budget))
            throw internal_error("chain violation: m*ambient not inside M");
    for (const auto& h : ideal_times(R, M.gens_in_ambient))
        if (!in_span(R, L.cover, span_with_rels(ideal_times(R, A.gens_in_ambient)), h, budget))
            throw internal_error("chain violation: m*M not inside m*ambient");

    // H_V from the minimal generators of M; cross-checked against the
    // Hilbert functions of L/mM and L/m*ambient.
    std::map<int, long long> hv_dims;
    for (int d : M.pres.cover.gen_degrees) hv_dims[d]++;
    E.hv = hilbert_of_graded_vs(hv_dims);

    int dmax = *std::max_element(M.pres.cover.gen_degrees.begin(), M.pres.cover.gen_degrees.end());
    auto h_mod_mM = module_hilbert_function(
        R, L.cover, concat(ideal_times(R, M.gens_in_ambient), L.relations), dmax, budget);
    auto h_mod_mA = module_hilbert_function(
        R, L.cover, concat(ideal_times(R, A.gens_in_ambient), L.relations), dmax, budget);
    for (int d = 0; d <= dmax; ++d) {
        long long hv = h_mod_mM[d] - h_mod_mA[d];
        if (hv != E.hv.at(d))
            throw internal_error("H_V mismatch between generator degrees and Hilbert functions");
    }
    if (E.hv.is_zero()) throw internal_error("tight embedding with V = 0");

    E.ambient = A.pres;
    E.sub = M.pres;
    E.sub_gens_in_L = M.gens_in_ambient;
    E.ambient_gens_in_L = A.gens_in_ambient;
    return E;
}

LeqVerdict main1_compare(const TruncatedBiseries& poincare_k, const LaurentPoly& hv,
                         const TruncatedBiseries& poincare_m, const std::vector<int>& weights) {
    TruncatedBiseries lhs = mul_truncated(poincare_k, hv);
    TruncatedBiseries rhs = mul_truncated(poincare_m, koszul_factor(weights, poincare_m.t_bound));
    return leq_witness(lhs, rhs);
}

Main1Report verify_main1(const GradedRingPresentation& R, const TightEmbedding& E, int t_bound,
                         const Budget* budget) {
    Main1Report rep;
    rep.t_bound = t_bound;
    rep.hv = E.hv;

    Resolution res_k = minimal_resolution(R, residue_field_presentation(R), t_bound, budget);
    Resolution res_m = minimal_resolution(R, E.sub, t_bound, budget);
    if (res_k.truncated_by_budget || res_m.truncated_by_budget)
        throw resource_error("budget exhausted during verification",
                             std::min(res_k.bound, res_m.bound));
    BettiTable bk = betti_of(res_k);
    BettiTable bm = betti_of(res_m);
    bk.bound = bm.bound = t_bound;
    rep.poincare_k = from_betti(bk);
    rep.poincare_m = from_betti(bm);
    rep.lhs = mul_truncated(rep.poincare_k, E.hv);
    rep.rhs = mul_truncated(rep.poincare_m, koszul_factor(R.ctx.weights, t_bound));
    rep.verdict = leq_witness(rep.lhs, rep.rhs);
    rep.holds = std::holds_alternative<LeqHolds>(rep.verdict);
    rep.koszul = koszul_verdict_from(R, bk);

    if (std::holds_alternative<NotKoszul>(rep.koszul)) {
        BettiTable half;
        half.bound = t_bound / 2;
        for (const auto& [ij, v] : bm.entries)
            if (ij.first <= half.bound) half.entries[ij] = v;
        rep.window_half = regularity_window(half);
        rep.window_full = regularity_window(bm);
    }
    return rep;
}

std::vector<int> main2_admissible(const TruncatedBiseries& poincare_k,
                                  const TruncatedBiseries& poincare_syzygy,
                                  const std::vector<int>& weights) {
    TruncatedBiseries rhs =
        mul_truncated(poincare_syzygy, koszul_factor(weights, poincare_syzygy.t_bound));
    if (rhs.coeffs.empty() || poincare_k.coeffs.empty()) return {};
    int rhs_min = rhs.coeffs.begin()->first.second, rhs_max = rhs_min;
    for (const auto& [ij, c] : rhs.coeffs) {
        rhs_min = std::min(rhs_min, ij.second);
        rhs_max = std::max(rhs_max, ij.second);
    }
    int k_min = poincare_k.coeffs.begin()->first.second, k_max = k_min;
    for (const auto& [ij, c] : poincare_k.coeffs) {
        k_min = std::min(k_min, ij.second);
        k_max = std::max(k_max, ij.second);
    }
    std::vector<int> admissible;
    for (int b = rhs_min - k_max; b <= rhs_max - k_min; ++b)
        if (leq_holds(s_shift(poincare_k, b), rhs)) admissible.push_back(b);
    return admissible;
}

Main2Report verify_main2(const GradedRingPresentation& R, int m, int n, int t_bound,
                         const Budget* budget) {
    if (m < 1) throw input_error("main2 requires m >= 1");
    if (n < 0) throw input_error("main2 requires n >= 0");
    if (!is_complete_intersection(R, budget))
        throw input_error("main2 hypothesis: the ring is not a complete intersection");

    Main2Report rep;
    rep.m = m;
    rep.n = n;
    rep.t_bound = t_bound;
    int shift = m + n;
    Resolution res = minimal_resolution(R, residue_field_presentation(R), t_bound + shift, budget);
    if (res.truncated_by_budget)
        throw resource_error("budget exhausted while resolving k", res.bound);
    BettiTable B = betti_of(res);

    rep.poincare_k.t_bound = t_bound;
    rep.poincare_syzygy.t_bound = t_bound;
    for (const auto& [ij, v] : B.entries) {
        if (v == 0) continue;
        if (ij.first <= t_bound) rep.poincare_k.set(ij.first, ij.second, v);
        if (ij.first >= shift && ij.first - shift <= t_bound)
            rep.poincare_syzygy.set(ij.first - shift, ij.second, v);
    }
    rep.rhs = mul_truncated(rep.poincare_syzygy, koszul_factor(R.ctx.weights, t_bound));
    rep.admissible_b = main2_admissible(rep.poincare_k, rep.poincare_syzygy, R.ctx.weights);
    rep.holds = !rep.admissible_b.empty();
    return rep;
}

RegGrowthReport syzygy_reg_growth(const GradedRingPresentation& R, int n,
                                  const std::vector<int>& samples, const Budget* budget) {
    if (samples.empty()) throw input_error("reg-growth requires at least one sample bound");
    for (std::size_t a = 1; a < samples.size(); ++a)
        if (samples[a] <= samples[a - 1])
            throw input_error("reg-growth sample bounds must be strictly increasing");
    RegGrowthReport rep;
    rep.n = n;
    int t_max = samples.back();
    Resolution res = minimal_resolution(R, residue_field_presentation(R), t_max + n, budget);
    if (res.truncated_by_budget)
        throw resource_error("budget exhausted while resolving k", res.bound);
    BettiTable B = betti_of(res);

    for (int ta : samples) {
        std::optional<long long> window;
        for (const auto& [ij, v] : B.entries) {
            if (v == 0 || ij.first < n || ij.first > ta + n) continue;
            long long w = static_cast<long long>(ij.second) - (ij.first - n);
            if (!window || w > *window) window = w;
        }
        rep.windows.push_back({ta, window});
    }
    int increases = 0;
    for (std::size_t a = 1; a < rep.windows.size(); ++a) {
        auto &prev = rep.windows[a - 1].second, &cur = rep.windows[a].second;
        if (prev && cur && *cur > *prev) ++increases;
    }
    rep.growth_evidence = increases >= std::min<int>(2, static_cast<int>(rep.windows.size()) - 1) &&
                          increases >= 1;
    return rep;
}

}  // namespace grakit
