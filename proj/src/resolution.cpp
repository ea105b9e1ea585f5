#include "grakit/resolution.hpp"

#include <algorithm>

namespace grakit {

namespace {

std::vector<FreeElement> pick_sorted_by_degree(const PolyContext& ctx, const FreeModule& mod,
                                               const std::vector<FreeElement>& all,
                                               const std::vector<std::size_t>& idx) {
    struct Col {
        long long degree;
        std::size_t index;
    };
    std::vector<Col> cols;
    for (auto i : idx) {
        auto d = fe_degree_if_homogeneous(ctx, mod, all[i]);
        cols.push_back({d ? *d : 0, i});
    }
    std::stable_sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.index < b.index;
    });
    std::vector<FreeElement> out;
    for (const auto& c : cols) out.push_back(all[c.index]);
    return out;
}

FreeModule module_of_columns(const PolyContext& ctx, const FreeModule& target,
                             const std::vector<FreeElement>& cols) {
    FreeModule mod;
    for (const auto& c : cols) {
        auto d = fe_degree_if_homogeneous(ctx, target, c);
        if (!d) throw internal_error("zero column in a differential");
        mod.gen_degrees.push_back(static_cast<int>(*d));
    }
    return mod;
}

}  // namespace

GradedModulePresentation residue_field_presentation(const GradedRingPresentation& R) {
    GradedModulePresentation k;
    k.cover.gen_degrees = {0};
    for (int v = 0; v < R.ctx.nvars(); ++v)
        k.relations.push_back(FreeElement{{poly_variable(R.ctx, v)}});
    return k;
}

GradedModulePresentation maximal_ideal_presentation(const GradedRingPresentation& R,
                                                    const Budget* budget) {
    FreeModule ambient{{0}};
    std::vector<FreeElement> vars;
    for (int v = 0; v < R.ctx.nvars(); ++v)
        vars.push_back(FreeElement{{poly_variable(R.ctx, v)}});
    auto idx = minimal_generator_indices(R, ambient, vars, {}, budget);
    std::vector<FreeElement> gens = pick_sorted_by_degree(R.ctx, ambient, vars, idx);
    GradedModulePresentation pres;
    pres.cover = module_of_columns(R.ctx, ambient, gens);
    auto syz = kernel_gens(R, ambient, gens, {}, budget);
    auto keep = minimal_generator_indices(R, pres.cover, syz, {}, budget);
    pres.relations = pick_sorted_by_degree(R.ctx, pres.cover, syz, keep);
    return pres;
}

GradedModulePresentation minimalize_presentation(const GradedRingPresentation& R,
                                                 GradedModulePresentation pres,
                                                 const Budget* budget) {
    const PolyContext& ctx = R.ctx;
    for (auto& rel : pres.relations) rel = reduce_entries(R, rel);

    // Cancel unit entries: a degree-0 entry lets one generator be expressed
    // through the others, removing one generator and one relation.
    bool changed = true;
    while (changed) {
        changed = false;
        int rank = pres.cover.rank();
        for (std::size_t c = 0; c < pres.relations.size() && !changed; ++c) {
            for (int g = 0; g < rank; ++g) {
                const Polynomial& entry = pres.relations[c].entries[g];
                if (entry.is_zero() || total_degree(entry.lead().mon) != 0) continue;
                Fp pivot_inv = ctx.field.inv(entry.lead().coeff);
                FreeElement pivot_col = pres.relations[c];
                std::vector<FreeElement> next_rels;
                for (std::size_t c2 = 0; c2 < pres.relations.size(); ++c2) {
                    if (c2 == c) continue;
                    FreeElement col = pres.relations[c2];
                    if (!col.entries[g].is_zero()) {
                        Polynomial factor =
                            poly_scale(ctx, pivot_inv, poly_neg(ctx, col.entries[g]));
                        for (int h = 0; h < rank; ++h)
                            col.entries[h] = poly_add(
                                ctx, col.entries[h],
                                normal_form(ctx, poly_mul(ctx, factor, pivot_col.entries[h]),
                                            R.ideal_gb));
                    }
                    col.entries.erase(col.entries.begin() + g);
                    next_rels.push_back(std::move(col));
                }
                pres.relations = std::move(next_rels);
                pres.cover.gen_degrees.erase(pres.cover.gen_degrees.begin() + g);
                changed = true;
                break;
            }
        }
    }

    std::erase_if(pres.relations, [](const FreeElement& f) { return f.is_zero(); });
    auto keep = minimal_generator_indices(R, pres.cover, pres.relations, {}, budget);
    pres.relations = pick_sorted_by_degree(ctx, pres.cover, pres.relations, keep);
    return pres;
}

Resolution minimal_resolution(const GradedRingPresentation& R, const GradedModulePresentation& M,
                              int bound, const Budget* budget) {
    if (bound < 0) throw input_error("resolution bound must be >= 0");
    Resolution res;
    res.frees.push_back(M.cover);
    std::vector<FreeElement> current;
    try {
        {
            std::vector<FreeElement> rels;
            for (const auto& r : M.relations) rels.push_back(reduce_entries(R, r));
            auto idx = minimal_generator_indices(R, M.cover, rels, {}, budget);
            current = pick_sorted_by_degree(R.ctx, M.cover, rels, idx);
        }
        while (static_cast<int>(res.diffs.size()) < bound) {
            if (current.empty()) {
                res.finite = true;
                break;
            }
            // copy: the push_back below reallocates res.frees
            FreeModule target = res.frees.back();
            FreeModule next = module_of_columns(R.ctx, target, current);
            res.diffs.push_back(current);
            res.frees.push_back(next);
            if (static_cast<int>(res.diffs.size()) == bound) break;
            auto syz = kernel_gens(R, target, current, {}, budget);
            auto idx = minimal_generator_indices(R, next, syz, {}, budget);
            current = pick_sorted_by_degree(R.ctx, next, syz, idx);
        }
        if (current.empty() && static_cast<int>(res.diffs.size()) < bound) res.finite = true;
    } catch (const resource_error&) {
        res.truncated_by_budget = true;
    }
    res.bound = res.truncated_by_budget ? static_cast<int>(res.diffs.size()) : bound;
    return res;
}

BettiTable betti_of(const Resolution& res) {
    BettiTable B;
    B.bound = res.bound;
    B.finite = res.finite;
    for (std::size_t i = 0; i < res.frees.size(); ++i)
        for (int j : res.frees[i].gen_degrees) B.entries[{static_cast<int>(i), j}]++;
    return B;
}

GradedModulePresentation syzygy_module(const GradedRingPresentation& R,
                                       const GradedModulePresentation& M, int n,
                                       const Budget* budget) {
    if (n < 0) throw input_error("syzygy index must be >= 0");
    Resolution res = minimal_resolution(R, M, n + 1, budget);
    if (res.truncated_by_budget && static_cast<int>(res.diffs.size()) < n + 1 && !res.finite)
        throw resource_error("budget exhausted before syzygy module was reached",
                             static_cast<int>(res.diffs.size()));
    GradedModulePresentation pres;
    if (static_cast<int>(res.frees.size()) <= n) {
        pres.cover.gen_degrees = {};  // zero module
        return pres;
    }
    pres.cover = res.frees[n];
    if (static_cast<int>(res.diffs.size()) > n) pres.relations = res.diffs[n];
    return pres;
}

std::optional<long long> regularity_window(const BettiTable& B) {
    std::optional<long long> best;
    for (const auto& [ij, v] : B.entries) {
        if (v == 0) continue;
        long long w = static_cast<long long>(ij.second) - ij.first;
        if (!best || w > *best) best = w;
    }
    return best;
}

long long koszul_regularity_bound(const GradedRingPresentation& R) {
    long long s = 0;
    for (int d : R.ctx.weights) s += d - 1;
    return s;
}

KoszulVerdict koszul_verdict_from(const GradedRingPresentation& R, const BettiTable& betti_k) {
    long long bound = koszul_regularity_bound(R);
    for (const auto& [ij, v] : betti_k.entries) {
        if (v == 0) continue;
        if (static_cast<long long>(ij.second) - ij.first > bound)
            return NotKoszul{ij.first, ij.second};
    }
    return KoszulUpTo{betti_k.bound};
}

KoszulVerdict koszul_probe(const GradedRingPresentation& R, int bound, const Budget* budget) {
    if (bound < 1) throw input_error("koszul probe bound must be >= 1");
    Resolution res = minimal_resolution(R, residue_field_presentation(R), bound, budget);
    return koszul_verdict_from(R, betti_of(res));
}

}  // namespace grakit
