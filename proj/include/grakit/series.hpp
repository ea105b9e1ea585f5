#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <variant>

#include "grakit/resolution.hpp"

namespace grakit {

using BigInt = boost::multiprecision::cpp_int;

// Finitely supported Laurent polynomial in s.
struct LaurentPoly {
    std::map<int, BigInt> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    BigInt at(int j) const {
        auto it = coeffs.find(j);
        return it == coeffs.end() ? BigInt(0) : it->second;
    }
};

// Element of Z[s^{+-1}][[t]] known exactly for all t-degrees i <= t_bound.
// Truncation happens in t only; the s-support of each slice is exact.
struct TruncatedBiseries {
    int t_bound = 0;
    std::map<std::pair<int, int>, BigInt> coeffs;  // (i, j) -> c, c != 0

    BigInt at(int i, int j) const {
        auto it = coeffs.find({i, j});
        return it == coeffs.end() ? BigInt(0) : it->second;
    }
    void set(int i, int j, BigInt v) {
        if (v == 0)
            coeffs.erase({i, j});
        else
            coeffs[{i, j}] = std::move(v);
    }
};

TruncatedBiseries biseries_one(int t_bound);
TruncatedBiseries from_betti(const BettiTable& B);
LaurentPoly hilbert_of_graded_vs(const std::map<int, long long>& dims);

TruncatedBiseries add(const TruncatedBiseries& A, const TruncatedBiseries& B);
TruncatedBiseries sub(const TruncatedBiseries& A, const TruncatedBiseries& B);
TruncatedBiseries mul_truncated(const TruncatedBiseries& A, const TruncatedBiseries& B);
TruncatedBiseries mul_truncated(const TruncatedBiseries& A, const LaurentPoly& h);
// Multiply by s^b.
TruncatedBiseries s_shift(const TruncatedBiseries& A, int b);
TruncatedBiseries truncate(const TruncatedBiseries& A, int t_bound);

// prod_{i=1}^{e} (1 + s^{d_i} t), expanded exactly.
TruncatedBiseries koszul_factor(const std::vector<int>& weights, int t_bound);

struct LeqHolds {};
struct LeqFails {
    int i, j;
    BigInt lhs, rhs;
};
using LeqVerdict = std::variant<LeqHolds, LeqFails>;

// Coefficient-wise A <= B; on failure reports the lexicographically first
// violating (i, j). Requires equal t-bounds.
LeqVerdict leq_witness(const TruncatedBiseries& A, const TruncatedBiseries& B);
bool leq_holds(const TruncatedBiseries& A, const TruncatedBiseries& B);

// max { j - i : c_{i,j} != 0 } inside the window; nullopt for 0.
std::optional<long long> diag_support_bound(const TruncatedBiseries& A);

int end_degree(const LaurentPoly& h);

bool operator==(const TruncatedBiseries& A, const TruncatedBiseries& B);
bool operator==(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace grakit
