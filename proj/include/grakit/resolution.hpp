#pragma once

#include <optional>
#include <variant>

#include "grakit/groebner.hpp"

namespace grakit {

// Minimal graded free resolution over R, truncated at homological degree
// `bound`. frees[i] is F_i; diffs[i] holds the columns of the differential
// F_{i+1} -> F_i as elements of F_i. Every entry of every column lies in the
// maximal ideal, every column is homogeneous.
struct Resolution {
    std::vector<FreeModule> frees;
    std::vector<std::vector<FreeElement>> diffs;
    int bound = 0;
    // The resolution reached zero syzygies before the bound.
    bool finite = false;
    // The budget ran out; only the prefix up to `bound` is present.
    bool truncated_by_budget = false;
};

struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    int bound = 0;
    bool finite = false;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

GradedModulePresentation residue_field_presentation(const GradedRingPresentation& R);
GradedModulePresentation maximal_ideal_presentation(const GradedRingPresentation& R,
                                                    const Budget* budget = nullptr);

// Cancel unit entries in the relation matrix and drop redundant relations;
// afterwards the presentation is minimal.
GradedModulePresentation minimalize_presentation(const GradedRingPresentation& R,
                                                 GradedModulePresentation pres,
                                                 const Budget* budget = nullptr);

Resolution minimal_resolution(const GradedRingPresentation& R,
                              const GradedModulePresentation& M, int bound,
                              const Budget* budget = nullptr);

BettiTable betti_of(const Resolution& res);

GradedModulePresentation syzygy_module(const GradedRingPresentation& R,
                                       const GradedModulePresentation& M, int n,
                                       const Budget* budget = nullptr);

// max { j - i : beta_{i,j} != 0, i <= bound }; nullopt for the zero module.
std::optional<long long> regularity_window(const BettiTable& B);

struct NotKoszul {
    int i, j;
};
struct KoszulUpTo {
    int bound;
};
using KoszulVerdict = std::variant<KoszulUpTo, NotKoszul>;

// Sum of (d_i - 1): the regularity of k whenever it is finite.
long long koszul_regularity_bound(const GradedRingPresentation& R);

KoszulVerdict koszul_probe(const GradedRingPresentation& R, int bound,
                           const Budget* budget = nullptr);
KoszulVerdict koszul_verdict_from(const GradedRingPresentation& R, const BettiTable& betti_k);

}  // namespace grakit
