#include "grakit/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace grakit {

int ModuleOrder::compare(int pos_a, const Monomial& a, int pos_b, const Monomial& b) const {
    if (elim_split > 0) {
        int block_a = pos_a < elim_split ? 0 : 1;
        int block_b = pos_b < elim_split ? 0 : 1;
        if (block_a != block_b) return block_a < block_b ? 1 : -1;
    }
    long long da = weighted_degree(a, ctx->weights) + mod->gen_degrees[pos_a];
    long long db = weighted_degree(b, ctx->weights) + mod->gen_degrees[pos_b];
    if (da != db) return da < db ? -1 : 1;
    int c = term_order_compare(a, b, ctx->weights);
    if (c != 0) return c;
    if (pos_a != pos_b) return pos_a < pos_b ? 1 : -1;
    return 0;
}

namespace {

// Greatest term of a free element under the module order.
std::optional<std::pair<int, const Term*>> module_lead(const ModuleOrder& ord, const FreeElement& f) {
    std::optional<std::pair<int, const Term*>> best;
    for (int pos = 0; pos < static_cast<int>(f.entries.size()); ++pos) {
        if (f.entries[pos].is_zero()) continue;
        const Term& t = f.entries[pos].lead();
        if (!best || ord.compare(pos, t.mon, best->first, best->second->mon) > 0)
            best = {pos, &t};
    }
    return best;
}

FreeElement reduce_by(const PolyContext& ctx, const ModuleOrder& ord,
                      const std::vector<GBElem>& basis, FreeElement work,
                      const Budget* budget) {
    FreeElement rem = fe_zero(static_cast<int>(work.entries.size()));
    while (true) {
        auto lead = module_lead(ord, work);
        if (!lead) break;
        if (budget) budget->charge(static_cast<long long>(work.entries.size()));
        int pos = lead->first;
        const Term top = *lead->second;
        const GBElem* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.lead_pos == pos && divides(g.lead_mon, top.mon)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            // basis elements are monic
            work = fe_sub(ctx, work,
                          fe_term_mul(ctx, top.coeff, mon_quot(top.mon, reducer->lead_mon),
                                      reducer->value));
        } else {
            Polynomial t{{top}};
            rem.entries[pos] = poly_add(ctx, rem.entries[pos], t);
            work.entries[pos] = poly_sub(ctx, work.entries[pos], t);
        }
    }
    return rem;
}

}  // namespace

GBEngine::GBEngine(const PolyContext& ctx, FreeModule mod, int elim_split, const Budget* budget)
    : ctx_(ctx), mod_(std::move(mod)), budget_(budget) {
    order_ = ModuleOrder{&ctx_, &mod_, elim_split};
}

void GBEngine::queue_pairs(std::size_t n) {
    const GBElem& g = basis_[n];
    for (std::size_t k = 0; k < n; ++k) {
        if (basis_[k].lead_pos != g.lead_pos) continue;
        Monomial l = mon_lcm(basis_[k].lead_mon, g.lead_mon);
        long long deg = weighted_degree(l, ctx_.weights) + mod_.gen_degrees[g.lead_pos];
        pairs_.insert({deg, {k, n}});
    }
}

bool GBEngine::add(const FreeElement& f) {
    FreeElement nf = reduce_by(ctx_, order_, basis_, f, budget_);
    auto lead = module_lead(order_, nf);
    if (!lead) return false;
    Fp lc = lead->second->coeff;
    nf = fe_scale(ctx_, ctx_.field.inv(lc), nf);
    GBElem e;
    e.lead_pos = lead->first;
    e.lead_mon = nf.entries[e.lead_pos].lead().mon;
    e.degree = weighted_degree(e.lead_mon, ctx_.weights) + mod_.gen_degrees[e.lead_pos];
    e.value = std::move(nf);
    basis_.push_back(std::move(e));
    queue_pairs(basis_.size() - 1);
    return true;
}

void GBEngine::complete(std::optional<long long> cap) {
    while (!pairs_.empty()) {
        auto it = pairs_.begin();
        if (cap && it->first > *cap) break;
        auto [i, j] = it->second;
        pairs_.erase(it);
        if (budget_) budget_->charge(static_cast<long long>(basis_.size()));
        const GBElem& gi = basis_[i];
        const GBElem& gj = basis_[j];
        Monomial l = mon_lcm(gi.lead_mon, gj.lead_mon);
        FreeElement sp = fe_sub(ctx_, fe_term_mul(ctx_, 1, mon_quot(l, gi.lead_mon), gi.value),
                                fe_term_mul(ctx_, 1, mon_quot(l, gj.lead_mon), gj.value));
        add(sp);
    }
    if (pairs_.empty())
        completed_through_ = std::numeric_limits<long long>::max();
    else
        completed_through_ = *cap;
}

FreeElement GBEngine::normal_form(const FreeElement& f) const {
    return reduce_by(ctx_, order_, basis_, f, budget_);
}

std::vector<GBElem> GBEngine::reduced_basis() {
    if (!pairs_.empty()) throw internal_error("reduced_basis on an incomplete engine");
    // sort ascending by lead term
    std::vector<std::size_t> idx(basis_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order_.compare(basis_[a].lead_pos, basis_[a].lead_mon, basis_[b].lead_pos,
                               basis_[b].lead_mon);
        if (c != 0) return c < 0;
        return a < b;
    });
    // drop elements whose lead is divisible by an earlier kept lead
    std::vector<GBElem> kept;
    for (std::size_t a : idx) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.lead_pos == basis_[a].lead_pos && divides(k.lead_mon, basis_[a].lead_mon)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis_[a]);
    }
    // tail-reduce each against the others
    std::vector<GBElem> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<GBElem> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        GBElem e = kept[i];
        e.value = reduce_by(ctx_, order_, others, e.value, budget_);
        out.push_back(std::move(e));
    }
    return out;
}

GroebnerBasis groebner_basis(const PolyContext& ctx, const FreeModule& mod,
                             const std::vector<FreeElement>& gens,
                             std::optional<long long> degree_cap, const Budget* budget) {
    GBEngine engine(ctx, mod, 0, budget);
    for (const auto& g : gens) engine.add(g);
    engine.complete(degree_cap);
    GroebnerBasis G;
    G.mod = mod;
    if (engine.fully_completed()) {
        G.elems = engine.reduced_basis();
        G.reduced = true;
    } else {
        G.elems = engine.basis();
        G.degree_cap = degree_cap;
    }
    return G;
}

namespace {

FreeElement poly_as_fe(const Polynomial& f) { return FreeElement{{f}}; }

}  // namespace

GroebnerBasis ideal_groebner_basis(const PolyContext& ctx, const std::vector<Polynomial>& gens,
                                   std::optional<long long> degree_cap, const Budget* budget) {
    FreeModule mod{{0}};
    std::vector<FreeElement> fes;
    fes.reserve(gens.size());
    for (const auto& g : gens) fes.push_back(poly_as_fe(g));
    return groebner_basis(ctx, mod, fes, degree_cap, budget);
}

FreeElement normal_form(const PolyContext& ctx, const FreeElement& f, const GroebnerBasis& G) {
    if (G.degree_cap) {
        auto d = fe_degree_if_homogeneous(ctx, G.mod, f);
        if (d && *d > *G.degree_cap)
            throw incomplete_basis_error("element degree exceeds the basis degree cap");
    }
    ModuleOrder ord{&ctx, &G.mod, 0};
    return reduce_by(ctx, ord, G.elems, f, nullptr);
}

Polynomial normal_form(const PolyContext& ctx, const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(ctx, poly_as_fe(f), G).entries[0];
}

GradedRingPresentation make_ring(PolyContext ctx, std::vector<std::string> var_names,
                                 std::vector<Polynomial> ideal_gens) {
    if (static_cast<int>(var_names.size()) != ctx.nvars())
        throw input_error("variable name count does not match weight count");
    for (const auto& g : ideal_gens) {
        auto d = poly_degree_if_homogeneous(ctx, g);  // throws when inhomogeneous
        if (d && *d < 2) throw input_error("ideal generator of degree < 2");
    }
    GroebnerBasis gb = ideal_groebner_basis(ctx, ideal_gens);
    return GradedRingPresentation{std::move(ctx), std::move(var_names), std::move(ideal_gens),
                                  std::move(gb)};
}

FreeElement reduce_entries(const GradedRingPresentation& R, const FreeElement& f) {
    FreeElement r = f;
    for (auto& e : r.entries) e = normal_form(R.ctx, e, R.ideal_gb);
    return r;
}

namespace {

// Deterministic order on free elements used for result sorting.
bool fe_less(const PolyContext& ctx, const FreeModule& mod, const FreeElement& a,
             const FreeElement& b) {
    auto da = fe_degree_if_homogeneous(ctx, mod, a);
    auto db = fe_degree_if_homogeneous(ctx, mod, b);
    long long xa = da ? *da : -1, xb = db ? *db : -1;
    if (xa != xb) return xa < xb;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        int c = poly_compare(ctx, a.entries[i], b.entries[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// Ideal basis elements spread over every position of a free module.
std::vector<FreeElement> ideal_columns(const GradedRingPresentation& R, const FreeModule& mod,
                                       int big_rank, int offset) {
    std::vector<FreeElement> out;
    for (int g = 0; g < mod.rank(); ++g) {
        for (const auto& e : R.ideal_gb.elems) {
            FreeElement col = fe_zero(big_rank);
            col.entries[offset + g] = e.value.entries[0];
            out.push_back(std::move(col));
        }
    }
    return out;
}

}  // namespace

std::vector<FreeElement> kernel_gens(const GradedRingPresentation& R, const FreeModule& mod,
                                     const std::vector<FreeElement>& gens,
                                     const std::vector<FreeElement>& background,
                                     const Budget* budget) {
    const PolyContext& ctx = R.ctx;
    int r = mod.rank();
    int m = static_cast<int>(gens.size());
    FreeModule big;
    big.gen_degrees = mod.gen_degrees;
    for (const auto& g : gens) {
        auto d = fe_degree_if_homogeneous(ctx, mod, g);
        big.gen_degrees.push_back(d ? static_cast<int>(*d) : 0);
    }
    GBEngine engine(ctx, big, r, budget);
    for (int j = 0; j < m; ++j) {
        FreeElement h = fe_zero(r + m);
        for (int g = 0; g < r; ++g) h.entries[g] = gens[j].entries[g];
        h.entries[r + j] = poly_constant(ctx, 1);
        engine.add(h);
    }
    for (const auto& b : background) {
        FreeElement h = fe_zero(r + m);
        for (int g = 0; g < r; ++g) h.entries[g] = b.entries[g];
        engine.add(h);
    }
    for (const auto& col : ideal_columns(R, mod, r + m, 0)) engine.add(col);
    engine.complete();

    FreeModule syz_mod;
    syz_mod.gen_degrees.assign(big.gen_degrees.begin() + r, big.gen_degrees.end());
    std::vector<FreeElement> out;
    for (const auto& e : engine.basis()) {
        bool upper_zero = true;
        for (int g = 0; g < r; ++g)
            if (!e.value.entries[g].is_zero()) {
                upper_zero = false;
                break;
            }
        if (!upper_zero) continue;
        FreeElement c = fe_zero(m);
        for (int j = 0; j < m; ++j)
            c.entries[j] = normal_form(ctx, e.value.entries[r + j], R.ideal_gb);
        if (!c.is_zero()) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [&](const FreeElement& a, const FreeElement& b) {
        return fe_less(ctx, syz_mod, a, b);
    });
    return out;
}

std::vector<FreeElement> module_syzygies(const GradedRingPresentation& R, const FreeModule& mod,
                                         const std::vector<FreeElement>& gens,
                                         const Budget* budget) {
    return kernel_gens(R, mod, gens, {}, budget);
}

std::vector<std::size_t> minimal_generator_indices(const GradedRingPresentation& R,
                                                   const FreeModule& mod,
                                                   const std::vector<FreeElement>& candidates,
                                                   const std::vector<FreeElement>& background,
                                                   const Budget* budget) {
    const PolyContext& ctx = R.ctx;
    struct Cand {
        std::size_t index;
        FreeElement reduced;
        long long degree;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        FreeElement red = reduce_entries(R, candidates[i]);
        auto d = fe_degree_if_homogeneous(ctx, mod, red);
        if (!d) continue;  // zero in R: never a minimal generator
        cands.push_back({i, std::move(red), *d});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.degree < b.degree; });

    GBEngine engine(ctx, mod, 0, budget);
    for (const auto& b : background) engine.add(b);
    for (const auto& col : ideal_columns(R, mod, mod.rank(), 0)) engine.add(col);

    std::vector<std::size_t> accepted;
    for (const auto& c : cands) {
        engine.complete(c.degree);
        if (!engine.normal_form(c.reduced).is_zero()) {
            accepted.push_back(c.index);
            engine.add(c.reduced);
            engine.complete(c.degree);
        }
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

std::vector<Polynomial> minimal_ideal_generators(const GradedRingPresentation& ambient,
                                                 const std::vector<Polynomial>& gens,
                                                 const Budget* budget) {
    GradedRingPresentation S = make_ring(ambient.ctx, ambient.var_names, {});
    FreeModule mod{{0}};
    std::vector<FreeElement> fes;
    for (const auto& g : gens) fes.push_back(FreeElement{{g}});
    auto idx = minimal_generator_indices(S, mod, fes, {}, budget);
    std::vector<Polynomial> out;
    for (auto i : idx) out.push_back(gens[i]);
    return out;
}

bool in_span(const GradedRingPresentation& R, const FreeModule& mod,
             const std::vector<FreeElement>& gens, const FreeElement& f, const Budget* budget) {
    FreeElement red = reduce_entries(R, f);
    auto d = fe_degree_if_homogeneous(R.ctx, mod, red);
    if (!d) return true;
    GBEngine engine(R.ctx, mod, 0, budget);
    for (const auto& g : gens) engine.add(g);
    for (const auto& col : ideal_columns(R, mod, mod.rank(), 0)) engine.add(col);
    engine.complete(*d);
    return engine.normal_form(red).is_zero();
}

}  // namespace grakit
