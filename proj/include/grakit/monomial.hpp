#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "grakit/errors.hpp"

namespace grakit {

// Exponent vector; the variable count and weights live in the ring context.
using Monomial = std::vector<std::uint32_t>;

long long weighted_degree(const Monomial& m, const std::vector<int>& weights);

// Total order: weighted degree first, then graded-reverse-lexicographic
// tiebreak on exponents. Returns <0, 0, >0 like a three-way comparison,
// positive when a > b.
int term_order_compare(const Monomial& a, const Monomial& b, const std::vector<int>& weights);

bool divides(const Monomial& a, const Monomial& b);
Monomial mon_mul(const Monomial& a, const Monomial& b);
// Requires divides(a, b).
Monomial mon_quot(const Monomial& b, const Monomial& a);
Monomial mon_lcm(const Monomial& a, const Monomial& b);
long long total_degree(const Monomial& m);

}  // namespace grakit
