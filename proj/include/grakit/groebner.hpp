#pragma once

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "grakit/budget.hpp"
#include "grakit/polynomial.hpp"

namespace grakit {

// Module monomial order on a graded free module: an optional elimination
// block (positions < elim_split dominate), then column degree, then grevlex
// on the monomial, then position. Degree-compatible within each block, which
// is all degree-truncated completion needs for homogeneous input.
struct ModuleOrder {
    const PolyContext* ctx;
    const FreeModule* mod;
    int elim_split = 0;  // 0 means no elimination block

    int compare(int pos_a, const Monomial& a, int pos_b, const Monomial& b) const;
};

struct GBElem {
    FreeElement value;
    int lead_pos;
    Monomial lead_mon;
    long long degree;  // column degree
};

// Incremental Buchberger over the ambient polynomial ring, for homogeneous
// submodules of graded free modules. Normal selection strategy: pending
// S-pairs are processed in increasing degree, so a basis completed through
// degree d decides membership in all degrees <= d.
class GBEngine {
public:
    GBEngine(const PolyContext& ctx, FreeModule mod, int elim_split = 0,
             const Budget* budget = nullptr);

    // Reduces f against the current basis; if nonzero, appends (monic) and
    // queues its S-pairs. Returns true when f enlarged the basis.
    bool add(const FreeElement& f);

    // Process all pending S-pairs of degree <= cap (unbounded if nullopt).
    void complete(std::optional<long long> cap = std::nullopt);

    FreeElement normal_form(const FreeElement& f) const;

    // Sorted, self-reduced, monic basis. Requires full completion.
    std::vector<GBElem> reduced_basis();

    const std::vector<GBElem>& basis() const { return basis_; }
    long long completed_through() const { return completed_through_; }
    bool fully_completed() const { return pairs_.empty(); }

    const FreeModule& module() const { return mod_; }

private:
    void queue_pairs(std::size_t n);

    const PolyContext& ctx_;
    FreeModule mod_;
    ModuleOrder order_;
    const Budget* budget_;
    std::vector<GBElem> basis_;
    std::multimap<long long, std::pair<std::size_t, std::size_t>> pairs_;
    long long completed_through_ = -1;
};

// Spec-facing wrapper: a finished (reduced or degree-capped) basis.
struct GroebnerBasis {
    FreeModule mod;
    std::vector<GBElem> elems;
    bool reduced = false;
    std::optional<long long> degree_cap;
};

GroebnerBasis groebner_basis(const PolyContext& ctx, const FreeModule& mod,
                             const std::vector<FreeElement>& gens,
                             std::optional<long long> degree_cap = std::nullopt,
                             const Budget* budget = nullptr);

// Ideal (rank-1) convenience forms.
GroebnerBasis ideal_groebner_basis(const PolyContext& ctx, const std::vector<Polynomial>& gens,
                                   std::optional<long long> degree_cap = std::nullopt,
                                   const Budget* budget = nullptr);

FreeElement normal_form(const PolyContext& ctx, const FreeElement& f, const GroebnerBasis& G);
Polynomial normal_form(const PolyContext& ctx, const Polynomial& f, const GroebnerBasis& G);

// A graded quotient ring R = S/I with its ideal basis precomputed.
struct GradedRingPresentation {
    PolyContext ctx;
    std::vector<std::string> var_names;
    std::vector<Polynomial> ideal_gens;
    GroebnerBasis ideal_gb;  // reduced
};

GradedRingPresentation make_ring(PolyContext ctx, std::vector<std::string> var_names,
                                 std::vector<Polynomial> ideal_gens);

// Presentation of a graded R-module: generator degrees plus homogeneous
// relation columns inside the free cover.
struct GradedModulePresentation {
    FreeModule cover;
    std::vector<FreeElement> relations;
};

// Generators of the R-module { c in R^m : sum_j c_j gens[j] lies in the
// R-span of `background` inside F }, where m = gens.size(). Entries are
// returned in normal form modulo the ideal basis. With empty background this
// is the syzygy module of `gens` over R.
std::vector<FreeElement> kernel_gens(const GradedRingPresentation& R, const FreeModule& mod,
                                     const std::vector<FreeElement>& gens,
                                     const std::vector<FreeElement>& background,
                                     const Budget* budget = nullptr);

// module_syzygies of the spec: syzygies over R of the given homogeneous
// elements, as a presentation-shaped generating set.
std::vector<FreeElement> module_syzygies(const GradedRingPresentation& R, const FreeModule& mod,
                                         const std::vector<FreeElement>& gens,
                                         const Budget* budget = nullptr);

// Indices of a minimal generating subset, scanned degree-by-degree; each
// candidate is reduced against accepted predecessors (and `background`).
std::vector<std::size_t> minimal_generator_indices(const GradedRingPresentation& R,
                                                   const FreeModule& mod,
                                                   const std::vector<FreeElement>& candidates,
                                                   const std::vector<FreeElement>& background,
                                                   const Budget* budget = nullptr);

std::vector<Polynomial> minimal_ideal_generators(const GradedRingPresentation& S_like,
                                                 const std::vector<Polynomial>& gens,
                                                 const Budget* budget = nullptr);

// Reduce all polynomial entries modulo the ideal basis.
FreeElement reduce_entries(const GradedRingPresentation& R, const FreeElement& f);

// Membership of f in the R-span of gens inside F.
bool in_span(const GradedRingPresentation& R, const FreeModule& mod,
             const std::vector<FreeElement>& gens, const FreeElement& f,
             const Budget* budget = nullptr);

}  // namespace grakit
