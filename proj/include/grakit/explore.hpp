#pragma once

#include <nlohmann/json.hpp>

#include "grakit/cache.hpp"
#include "grakit/invariants.hpp"

namespace grakit {

// A family of monomial quotient rings: every ideal minimally generated by
// monomials of total degree >= 2 and weighted degree <= max_gen_deg.
struct ExploreParams {
    std::uint32_t characteristic = 32003;
    int vars = 2;
    int max_gen_deg = 3;
    std::vector<int> weights;  // size == vars
    int t_bound = 6;
    std::optional<long long> count_cap;
};

// Deterministic enumeration of the family (antichains of monomials, one
// representative per weight-preserving variable permutation class), with
// deviations, window report and Koszul probe per ring. Resumable through
// the cache; budget exhaustion yields a partial corpus with a marker.
nlohmann::json explore_batch(const ExploreParams& params, const Cache* cache,
                             const Budget* budget, int jobs);

}  // namespace grakit
