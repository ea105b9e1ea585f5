#include "grakit/invariants.hpp"

#include <algorithm>
#include <functional>

namespace grakit {

RationalHilbert hilbert_series_rational(const GradedRingPresentation& R, const Budget* budget) {
    GradedRingPresentation S = make_ring(R.ctx, R.var_names, {});
    GradedModulePresentation cyclic;
    cyclic.cover.gen_degrees = {0};
    for (const auto& g : R.ideal_gens) cyclic.relations.push_back(FreeElement{{g}});
    // Hilbert syzygy theorem: the resolution over S has length <= e.
    Resolution res = minimal_resolution(S, cyclic, R.ctx.nvars(), budget);
    BettiTable B = betti_of(res);
    RationalHilbert H;
    H.weights = R.ctx.weights;
    for (const auto& [ij, v] : B.entries) {
        if (v == 0) continue;
        BigInt c = (ij.first % 2 == 0) ? BigInt(v) : BigInt(-v);
        BigInt next = H.numerator.at(ij.second) + c;
        if (next == 0)
            H.numerator.coeffs.erase(ij.second);
        else
            H.numerator.coeffs[ij.second] = next;
    }
    return H;
}

std::vector<BigInt> expand_hilbert(const RationalHilbert& H, int max_degree) {
    std::vector<BigInt> c(max_degree + 1, 0);
    for (const auto& [j, v] : H.numerator.coeffs) {
        if (j < 0) throw internal_error("negative exponent in Hilbert numerator");
        if (j <= max_degree) c[j] += v;
    }
    for (int d : H.weights)
        for (int j = d; j <= max_degree; ++j) c[j] += c[j - d];
    return c;
}

namespace {

// Enumerate all monomials of the given weighted degree.
void for_each_monomial(const std::vector<int>& weights, long long degree,
                       const std::function<void(const Monomial&)>& fn) {
    Monomial m(weights.size(), 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t v, long long rem) {
        if (v == weights.size()) {
            if (rem == 0) fn(m);
            return;
        }
        if (v == weights.size() - 1) {
            if (rem % weights[v] == 0) {
                m[v] = static_cast<std::uint32_t>(rem / weights[v]);
                fn(m);
                m[v] = 0;
            }
            return;
        }
        for (long long e = 0; e * weights[v] <= rem; ++e) {
            m[v] = static_cast<std::uint32_t>(e);
            rec(v + 1, rem - e * weights[v]);
        }
        m[v] = 0;
    };
    rec(0, degree);
}

}  // namespace

std::vector<long long> hilbert_function(const GradedRingPresentation& R, int max_degree) {
    std::vector<Monomial> leads;
    for (const auto& e : R.ideal_gb.elems) leads.push_back(e.lead_mon);
    std::vector<long long> dims(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        long long count = 0;
        for_each_monomial(R.ctx.weights, d, [&](const Monomial& m) {
            for (const auto& l : leads)
                if (divides(l, m)) return;
            ++count;
        });
        dims[d] = count;
    }
    return dims;
}

int krull_dimension(const GradedRingPresentation& R) {
    int e = R.ctx.nvars();
    std::vector<Monomial> leads;
    for (const auto& g : R.ideal_gb.elems) leads.push_back(g.lead_mon);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        // independent: no lead monomial supported entirely inside the set
        bool independent = true;
        for (const auto& l : leads) {
            bool inside = true;
            for (int v = 0; v < e; ++v)
                if (l[v] > 0 && !(mask & (1u << v))) {
                    inside = false;
                    break;
                }
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

bool is_complete_intersection(const GradedRingPresentation& R, const Budget* budget) {
    auto min_gens = minimal_ideal_generators(R, R.ideal_gens, budget);
    int codim = R.ctx.nvars() - krull_dimension(R);
    return static_cast<int>(min_gens.size()) == codim;
}

DeviationTable deviations_from_poincare(const TruncatedBiseries& poincare_k) {
    int T = poincare_k.t_bound;
    DeviationTable D;
    D.bound = T;
    TruncatedBiseries residual = poincare_k;
    if (residual.at(0, 0) != 1)
        throw internal_error("Poincare series of k must start with 1");
    for (int i = 1; i <= T; ++i) {
        std::vector<std::pair<int, long long>> slice;  // (j, eps)
        for (const auto& [ij, c] : residual.coeffs) {
            if (ij.first != i) continue;
            if (c < 0)
                throw internal_error("negative deviation extracted at (" + std::to_string(i) +
                                     "," + std::to_string(ij.second) + ")");
            slice.push_back({ij.second, c.convert_to<long long>()});
        }
        for (auto [j, eps] : slice) {
            D.entries[{i, j}] = eps;
            // strip the step-i factors from the residual
            if (i % 2 == 1) {
                // divide by (1 + s^j t^i): multiply by sum_a (-1)^a s^{aj} t^{ai}
                TruncatedBiseries inv;
                inv.t_bound = T;
                for (int a = 0; a * i <= T; ++a) inv.set(a * i, a * j, (a % 2 == 0) ? 1 : -1);
                for (long long r = 0; r < eps; ++r) residual = mul_truncated(residual, inv);
            } else {
                // the factor is (1 - s^j t^i)^{-eps}; multiply by (1 - s^j t^i)^eps
                TruncatedBiseries fac = biseries_one(T);
                fac.set(i, j, -1);
                for (long long r = 0; r < eps; ++r) residual = mul_truncated(residual, fac);
            }
        }
    }
    if (!(residual == biseries_one(T)))
        throw internal_error("deviation factorization left a nontrivial residual");
    return D;
}

DeviationTable deviations(const GradedRingPresentation& R, int bound, const Budget* budget) {
    // Characteristic 2 is rejected at field construction already; the
    // factor shapes below assume odd characteristic.
    Resolution res = minimal_resolution(R, residue_field_presentation(R), bound, budget);
    if (res.truncated_by_budget)
        throw resource_error("budget exhausted while resolving k", res.bound);
    BettiTable B = betti_of(res);
    B.bound = bound;
    return deviations_from_poincare(from_betti(B));
}

TruncatedBiseries deviation_factor_product(const DeviationTable& D) {
    int T = D.bound;
    TruncatedBiseries prod = biseries_one(T);
    for (const auto& [ij, eps] : D.entries) {
        auto [i, j] = ij;
        if (eps == 0) continue;
        TruncatedBiseries fac;
        fac.t_bound = T;
        if (i % 2 == 1) {
            fac = biseries_one(T);
            if (i <= T) fac.set(i, j, 1);
        } else {
            // (1 - s^j t^i)^{-1} = sum_a s^{aj} t^{ai}
            for (int a = 0; a * i <= T; ++a) fac.set(a * i, a * j, 1);
        }
        for (long long r = 0; r < eps; ++r) prod = mul_truncated(prod, fac);
    }
    return prod;
}

DeviationReport deviation_report(const DeviationTable& D, const GradedRingPresentation& R,
                                 const Budget* budget) {
    DeviationReport rep;
    rep.bound = D.bound;
    for (const auto& [ij, eps] : D.entries)
        if (eps != 0 && ij.first != ij.second)
            rep.off_diagonal.push_back({ij.first, ij.second, eps});

    auto off_diag_zero_at = [&](int i) {
        for (const auto& [ij, eps] : D.entries)
            if (ij.first == i && ij.first != ij.second && eps != 0) return false;
        return true;
    };
    for (int d = 4; d <= D.bound; d += 2) {
        bool hypothesis = true;
        for (int i = d; i <= D.bound; ++i)
            if (!off_diag_zero_at(i)) {
                hypothesis = false;
                break;
            }
        if (hypothesis && !off_diag_zero_at(d - 1)) rep.proposition_violations.push_back(d);
    }

    rep.complete_intersection = is_complete_intersection(R, budget);
    if (rep.complete_intersection) {
        for (const auto& [ij, eps] : D.entries)
            if (ij.first >= 3 && eps != 0) rep.ci_consistent = false;
    }

    rep.off_diagonal_vanishes_from_3 = true;
    for (const auto& [i, j, eps] : rep.off_diagonal)
        if (i >= 3) rep.off_diagonal_vanishes_from_3 = false;
    return rep;
}

}  // namespace grakit
