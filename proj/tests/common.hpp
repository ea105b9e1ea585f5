#pragma once

#include <random>
#include <string>

#include "grakit/session.hpp"

namespace testutil {

using namespace grakit;

inline GradedRingPresentation fixture_ring(const std::string& decl) {
    return parse_session(decl).rings[0].second;
}

// The four rings exercised across the suite.
inline GradedRingPresentation ring_x2() {
    return fixture_ring("ring R { char=32003; vars=[x:1]; ideal=[x^2]; }");
}
inline GradedRingPresentation ring_x3() {
    return fixture_ring("ring R { char=32003; vars=[x:1]; ideal=[x^3]; }");
}
inline GradedRingPresentation ring_x2y2() {
    return fixture_ring("ring R { char=32003; vars=[x:1,y:1]; ideal=[x^2,y^2]; }");
}
inline GradedRingPresentation ring_xy_z() {
    return fixture_ring("ring R { char=32003; vars=[x:1,y:1,z:2]; ideal=[x*y]; }");
}

// Tiny polynomial builder: signed sums of INT? ("*" var ("^" INT)?)* terms.
inline Polynomial pp(const PolyContext& ctx, const std::vector<std::string>& vars,
                     const std::string& text) {
    std::vector<Term> terms;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip();
    bool first = true;
    while (pos < text.size()) {
        long long sign = 1;
        if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (text[pos] == '+') {
            ++pos;
        } else if (!first) {
            throw std::runtime_error("pp: expected sign in " + text);
        }
        skip();
        long long coeff = 1;
        Monomial mon(ctx.nvars(), 0);
        bool any = false;
        while (pos < text.size()) {
            if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::size_t used = 0;
                coeff = coeff * std::stoll(text.substr(pos), &used);
                pos += used;
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
                std::size_t start = pos;
                while (pos < text.size() &&
                       std::isalnum(static_cast<unsigned char>(text[pos])))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                std::size_t v = 0;
                while (v < vars.size() && vars[v] != name) ++v;
                if (v == vars.size()) throw std::runtime_error("pp: unknown variable " + name);
                long long e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    std::size_t used = 0;
                    e = std::stoll(text.substr(pos + 1), &used);
                    pos += used + 1;
                }
                mon[v] += static_cast<std::uint32_t>(e);
                any = true;
            } else if (text[pos] == '*') {
                ++pos;
            } else {
                break;
            }
        }
        if (!any) throw std::runtime_error("pp: empty term in " + text);
        terms.push_back(Term{ctx.field.from_int(sign * coeff), std::move(mon)});
        skip();
        first = false;
    }
    return poly_from_terms(ctx, std::move(terms));
}

inline Polynomial random_poly(const PolyContext& ctx, std::mt19937& rng, int max_terms = 4,
                              int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long long> coeff(-10, 10);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(ctx.nvars());
        for (int v = 0; v < ctx.nvars(); ++v) m[v] = static_cast<std::uint32_t>(exp(rng));
        terms.push_back(Term{ctx.field.from_int(coeff(rng)), std::move(m)});
    }
    return poly_from_terms(ctx, std::move(terms));
}

}  // namespace testutil
