#pragma once

#include "grakit/series.hpp"

namespace grakit {

// H_R(s) = numerator / prod_i (1 - s^{d_i}); the numerator comes from the
// finite minimal resolution of R over the ambient polynomial ring.
struct RationalHilbert {
    LaurentPoly numerator;
    std::vector<int> weights;
};

RationalHilbert hilbert_series_rational(const GradedRingPresentation& R,
                                        const Budget* budget = nullptr);

// Power-series expansion coefficients for degrees 0..max_degree.
std::vector<BigInt> expand_hilbert(const RationalHilbert& H, int max_degree);

// Hilbert function of R by standard-monomial counting against the lead
// terms of the ideal basis.
std::vector<long long> hilbert_function(const GradedRingPresentation& R, int max_degree);

int krull_dimension(const GradedRingPresentation& R);
bool is_complete_intersection(const GradedRingPresentation& R, const Budget* budget = nullptr);

struct DeviationTable {
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> eps
    int bound = 0;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

// Graded deviations extracted from the product factorization of the
// Poincare series of the residue field.
DeviationTable deviations(const GradedRingPresentation& R, int bound,
                          const Budget* budget = nullptr);
DeviationTable deviations_from_poincare(const TruncatedBiseries& poincare_k);

// Expand the deviation factor product back into a biseries; must reproduce
// the Poincare series of k through the bound.
TruncatedBiseries deviation_factor_product(const DeviationTable& D);

struct DeviationReport {
    int bound = 0;
    std::vector<std::tuple<int, int, long long>> off_diagonal;  // (i, j, eps)
    // Even d in [4, bound] whose window-verified hypothesis holds but the
    // conclusion at d-1 fails; truncation artifacts until rechecked higher.
    std::vector<int> proposition_violations;
    bool complete_intersection = false;
    bool ci_consistent = true;          // CI implies eps = 0 for 3 <= i <= bound
    bool off_diagonal_vanishes_from_3 = false;  // question-probe tag
};

DeviationReport deviation_report(const DeviationTable& D, const GradedRingPresentation& R,
                                 const Budget* budget = nullptr);

}  // namespace grakit
