#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grakit/field.hpp"
#include "grakit/monomial.hpp"

namespace grakit {

// Ambient polynomial ring data: coefficient field and variable weights.
struct PolyContext {
    PrimeField field;
    std::vector<int> weights;

    PolyContext(std::uint32_t p, std::vector<int> w) : field(p), weights(std::move(w)) {
        for (int d : weights)
            if (d < 1) throw input_error("variable weight must be >= 1");
    }
    int nvars() const { return static_cast<int>(weights.size()); }
    bool operator==(const PolyContext&) const = default;
};

struct Term {
    Fp coeff;
    Monomial mon;
};

// Terms strictly descending in the term order, no zero coefficients.
struct Polynomial {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
};

Polynomial poly_zero();
Polynomial poly_constant(const PolyContext& ctx, Fp c);
Polynomial poly_variable(const PolyContext& ctx, int var);
// Build from arbitrary (coeff, monomial) pairs; sorts and combines.
Polynomial poly_from_terms(const PolyContext& ctx, std::vector<Term> terms);

Polynomial poly_add(const PolyContext& ctx, const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const PolyContext& ctx, const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const PolyContext& ctx, const Polynomial& f);
Polynomial poly_scale(const PolyContext& ctx, Fp c, const Polynomial& f);
Polynomial poly_term_mul(const PolyContext& ctx, Fp c, const Monomial& m, const Polynomial& f);
Polynomial poly_mul(const PolyContext& ctx, const Polynomial& f, const Polynomial& g);

bool poly_equal(const Polynomial& f, const Polynomial& g);
// Lexicographic comparison on the (descending) term lists; a deterministic
// total order used for canonical sorting of generator lists.
int poly_compare(const PolyContext& ctx, const Polynomial& f, const Polynomial& g);

// Weighted degree of a homogeneous polynomial; nullopt for 0.
std::optional<long long> poly_degree_if_homogeneous(const PolyContext& ctx, const Polynomial& f);
std::map<long long, Polynomial> homogeneous_components(const PolyContext& ctx, const Polynomial& f);

std::string poly_to_string(const PolyContext& ctx, const Polynomial& f,
                           const std::vector<std::string>& var_names);

// Element of a graded free module: one polynomial per generator position.
struct FreeElement {
    std::vector<Polynomial> entries;

    bool is_zero() const {
        for (const auto& p : entries)
            if (!p.is_zero()) return false;
        return true;
    }
};

// Generator degrees of a graded free module.
struct FreeModule {
    std::vector<int> gen_degrees;
    int rank() const { return static_cast<int>(gen_degrees.size()); }
};

FreeElement fe_zero(int rank);
FreeElement fe_unit(const PolyContext& ctx, int rank, int pos);
FreeElement fe_add(const PolyContext& ctx, const FreeElement& a, const FreeElement& b);
FreeElement fe_sub(const PolyContext& ctx, const FreeElement& a, const FreeElement& b);
FreeElement fe_term_mul(const PolyContext& ctx, Fp c, const Monomial& m, const FreeElement& a);
FreeElement fe_scale(const PolyContext& ctx, Fp c, const FreeElement& a);
bool fe_equal(const FreeElement& a, const FreeElement& b);

// Column degree: entry degree + generator degree, constant over nonzero
// entries. nullopt for the zero element; throws on inhomogeneity.
std::optional<long long> fe_degree_if_homogeneous(const PolyContext& ctx, const FreeModule& mod,
                                                  const FreeElement& a);

}  // namespace grakit
