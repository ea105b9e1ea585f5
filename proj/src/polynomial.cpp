#include "grakit/polynomial.hpp"

#include <algorithm>

namespace grakit {

Polynomial poly_zero() { return {}; }

Polynomial poly_constant(const PolyContext& ctx, Fp c) {
    Polynomial f;
    if (c != 0) f.terms.push_back({c, Monomial(ctx.nvars(), 0)});
    return f;
}

Polynomial poly_variable(const PolyContext& ctx, int var) {
    Monomial m(ctx.nvars(), 0);
    m[var] = 1;
    return Polynomial{{{1, m}}};
}

Polynomial poly_from_terms(const PolyContext& ctx, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return term_order_compare(a.mon, b.mon, ctx.weights) > 0;
    });
    Polynomial f;
    for (auto& t : terms) {
        if (!f.terms.empty() && f.terms.back().mon == t.mon) {
            f.terms.back().coeff = ctx.field.add(f.terms.back().coeff, t.coeff);
            if (f.terms.back().coeff == 0) f.terms.pop_back();
        } else if (t.coeff != 0) {
            f.terms.push_back(std::move(t));
        }
    }
    return f;
}

Polynomial poly_add(const PolyContext& ctx, const Polynomial& f, const Polynomial& g) {
    Polynomial r;
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = term_order_compare(f.terms[i].mon, g.terms[j].mon, ctx.weights);
        if (c > 0) {
            r.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(g.terms[j++]);
        } else {
            Fp s = ctx.field.add(f.terms[i].coeff, g.terms[j].coeff);
            if (s != 0) r.terms.push_back({s, f.terms[i].mon});
            ++i, ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

Polynomial poly_neg(const PolyContext& ctx, const Polynomial& f) {
    Polynomial r = f;
    for (auto& t : r.terms) t.coeff = ctx.field.neg(t.coeff);
    return r;
}

Polynomial poly_sub(const PolyContext& ctx, const Polynomial& f, const Polynomial& g) {
    return poly_add(ctx, f, poly_neg(ctx, g));
}

Polynomial poly_scale(const PolyContext& ctx, Fp c, const Polynomial& f) {
    if (c == 0) return {};
    Polynomial r = f;
    for (auto& t : r.terms) t.coeff = ctx.field.mul(c, t.coeff);
    return r;
}

Polynomial poly_term_mul(const PolyContext& ctx, Fp c, const Monomial& m, const Polynomial& f) {
    if (c == 0) return {};
    Polynomial r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms)
        r.terms.push_back({ctx.field.mul(c, t.coeff), mon_mul(m, t.mon)});
    return r;
}

Polynomial poly_mul(const PolyContext& ctx, const Polynomial& f, const Polynomial& g) {
    std::vector<Term> acc;
    acc.reserve(f.terms.size() * g.terms.size());
    for (const auto& a : f.terms)
        for (const auto& b : g.terms)
            acc.push_back({ctx.field.mul(a.coeff, b.coeff), mon_mul(a.mon, b.mon)});
    return poly_from_terms(ctx, std::move(acc));
}

bool poly_equal(const Polynomial& f, const Polynomial& g) {
    if (f.terms.size() != g.terms.size()) return false;
    for (std::size_t i = 0; i < f.terms.size(); ++i)
        if (f.terms[i].coeff != g.terms[i].coeff || f.terms[i].mon != g.terms[i].mon) return false;
    return true;
}

int poly_compare(const PolyContext& ctx, const Polynomial& f, const Polynomial& g) {
    std::size_t n = std::min(f.terms.size(), g.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = term_order_compare(f.terms[i].mon, g.terms[i].mon, ctx.weights);
        if (c != 0) return c;
        if (f.terms[i].coeff != g.terms[i].coeff)
            return f.terms[i].coeff < g.terms[i].coeff ? -1 : 1;
    }
    if (f.terms.size() != g.terms.size()) return f.terms.size() < g.terms.size() ? -1 : 1;
    return 0;
}

std::optional<long long> poly_degree_if_homogeneous(const PolyContext& ctx, const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    long long d = weighted_degree(f.terms.front().mon, ctx.weights);
    for (const auto& t : f.terms)
        if (weighted_degree(t.mon, ctx.weights) != d)
            throw input_error("polynomial is not homogeneous");
    return d;
}

std::map<long long, Polynomial> homogeneous_components(const PolyContext& ctx, const Polynomial& f) {
    std::map<long long, Polynomial> comps;
    for (const auto& t : f.terms)
        comps[weighted_degree(t.mon, ctx.weights)].terms.push_back(t);
    return comps;
}

std::string poly_to_string(const PolyContext& ctx, const Polynomial& f,
                           const std::vector<std::string>& var_names) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        if (i) out += " + ";
        bool constant = total_degree(t.mon) == 0;
        bool wrote = false;
        if (t.coeff != 1 || constant) {
            out += std::to_string(t.coeff);
            wrote = true;
        }
        for (int v = 0; v < ctx.nvars(); ++v) {
            if (t.mon[v] == 0) continue;
            if (wrote) out += "*";
            out += var_names[v];
            if (t.mon[v] > 1) out += "^" + std::to_string(t.mon[v]);
            wrote = true;
        }
    }
    return out;
}

FreeElement fe_zero(int rank) {
    FreeElement a;
    a.entries.resize(rank);
    return a;
}

FreeElement fe_unit(const PolyContext& ctx, int rank, int pos) {
    FreeElement a = fe_zero(rank);
    a.entries[pos] = poly_constant(ctx, 1);
    return a;
}

FreeElement fe_add(const PolyContext& ctx, const FreeElement& a, const FreeElement& b) {
    FreeElement r = fe_zero(static_cast<int>(a.entries.size()));
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        r.entries[i] = poly_add(ctx, a.entries[i], b.entries[i]);
    return r;
}

FreeElement fe_sub(const PolyContext& ctx, const FreeElement& a, const FreeElement& b) {
    FreeElement r = fe_zero(static_cast<int>(a.entries.size()));
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        r.entries[i] = poly_sub(ctx, a.entries[i], b.entries[i]);
    return r;
}

FreeElement fe_term_mul(const PolyContext& ctx, Fp c, const Monomial& m, const FreeElement& a) {
    FreeElement r = fe_zero(static_cast<int>(a.entries.size()));
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        r.entries[i] = poly_term_mul(ctx, c, m, a.entries[i]);
    return r;
}

FreeElement fe_scale(const PolyContext& ctx, Fp c, const FreeElement& a) {
    FreeElement r = fe_zero(static_cast<int>(a.entries.size()));
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        r.entries[i] = poly_scale(ctx, c, a.entries[i]);
    return r;
}

bool fe_equal(const FreeElement& a, const FreeElement& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (!poly_equal(a.entries[i], b.entries[i])) return false;
    return true;
}

std::optional<long long> fe_degree_if_homogeneous(const PolyContext& ctx, const FreeModule& mod,
                                                  const FreeElement& a) {
    std::optional<long long> deg;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].is_zero()) continue;
        auto d = poly_degree_if_homogeneous(ctx, a.entries[i]);
        long long col = *d + mod.gen_degrees[i];
        if (deg && *deg != col) throw input_error("free-module column is not homogeneous");
        deg = col;
    }
    return deg;
}

}  // namespace grakit
