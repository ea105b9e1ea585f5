#pragma once

#include "grakit/invariants.hpp"

namespace grakit {

struct SubmoduleData {
    GradedModulePresentation pres;
    // Minimal generators of the submodule as elements of the ambient cover.
    std::vector<FreeElement> gens_in_ambient;
};

SubmoduleData submodule_presentation(const GradedRingPresentation& R,
                                     const GradedModulePresentation& L,
                                     const std::vector<FreeElement>& gens,
                                     const Budget* budget = nullptr);

// Hilbert function of cover / (relations + I*cover) in degrees 0..max_degree,
// by standard-monomial counting on the module basis lead terms.
std::vector<long long> module_hilbert_function(const GradedRingPresentation& R,
                                               const FreeModule& cover,
                                               const std::vector<FreeElement>& relations,
                                               int max_degree,
                                               const Budget* budget = nullptr);

// The embedding m^i L <= m^{i-1} L with V = m^i L / m^{i+1} L.
struct TightEmbedding {
    int power = 1;                    // the i of the chain
    GradedModulePresentation ambient;  // m^{i-1} L
    GradedModulePresentation sub;      // M = m^i L
    std::vector<FreeElement> sub_gens_in_L;      // gens of M inside L's cover
    std::vector<FreeElement> ambient_gens_in_L;  // gens of m^{i-1} L inside L's cover
    LaurentPoly hv;                    // H_V = generator degrees of M
};

TightEmbedding tight_chain(const GradedRingPresentation& R, const GradedModulePresentation& L,
                           int power, const Budget* budget = nullptr);

// The two sides of the main tight-embedding inequality, re-checkable from
// series data alone.
LeqVerdict main1_compare(const TruncatedBiseries& poincare_k, const LaurentPoly& hv,
                         const TruncatedBiseries& poincare_m, const std::vector<int>& weights);

struct Main1Report {
    bool holds = false;
    LeqVerdict verdict;
    int t_bound = 0;
    LaurentPoly hv;
    TruncatedBiseries poincare_k;
    TruncatedBiseries poincare_m;
    TruncatedBiseries lhs, rhs;
    KoszulVerdict koszul;
    // Growth evidence for the corollary when the ring is not Koszul:
    // regularity windows of M at bound/2 and at bound.
    std::optional<long long> window_half, window_full;
};

Main1Report verify_main1(const GradedRingPresentation& R, const TightEmbedding& E, int t_bound,
                         const Budget* budget = nullptr);

// All admissible shifts b with s^b P_k <= P_{N'} * prod(1+s^{d_i}t),
// searched over the finite support-derived window.
std::vector<int> main2_admissible(const TruncatedBiseries& poincare_k,
                                  const TruncatedBiseries& poincare_syzygy,
                                  const std::vector<int>& weights);

struct Main2Report {
    bool holds = false;
    std::vector<int> admissible_b;
    int m = 0, n = 0, t_bound = 0;
    TruncatedBiseries poincare_k;
    TruncatedBiseries poincare_syzygy;  // P of Omega^n N, N = Omega^m k
    TruncatedBiseries rhs;
};

Main2Report verify_main2(const GradedRingPresentation& R, int m, int n, int t_bound,
                         const Budget* budget = nullptr);

struct RegGrowthReport {
    int n = 0;
    std::vector<std::pair<int, std::optional<long long>>> windows;  // (sample bound, window)
    bool growth_evidence = false;
};

RegGrowthReport syzygy_reg_growth(const GradedRingPresentation& R, int n,
                                  const std::vector<int>& samples,
                                  const Budget* budget = nullptr);

}  // namespace grakit
