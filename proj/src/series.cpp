#include "grakit/series.hpp"

namespace grakit {

TruncatedBiseries biseries_one(int t_bound) {
    TruncatedBiseries r;
    r.t_bound = t_bound;
    r.set(0, 0, 1);
    return r;
}

TruncatedBiseries from_betti(const BettiTable& B) {
    TruncatedBiseries r;
    r.t_bound = B.bound;
    for (const auto& [ij, v] : B.entries)
        if (v != 0 && ij.first <= B.bound) r.set(ij.first, ij.second, v);
    return r;
}

LaurentPoly hilbert_of_graded_vs(const std::map<int, long long>& dims) {
    LaurentPoly h;
    for (const auto& [j, d] : dims)
        if (d != 0) h.coeffs[j] = d;
    return h;
}

TruncatedBiseries add(const TruncatedBiseries& A, const TruncatedBiseries& B) {
    TruncatedBiseries r;
    r.t_bound = std::min(A.t_bound, B.t_bound);
    for (const auto& [ij, c] : A.coeffs)
        if (ij.first <= r.t_bound) r.set(ij.first, ij.second, c);
    for (const auto& [ij, c] : B.coeffs)
        if (ij.first <= r.t_bound) r.set(ij.first, ij.second, r.at(ij.first, ij.second) + c);
    return r;
}

TruncatedBiseries sub(const TruncatedBiseries& A, const TruncatedBiseries& B) {
    TruncatedBiseries r;
    r.t_bound = std::min(A.t_bound, B.t_bound);
    for (const auto& [ij, c] : A.coeffs)
        if (ij.first <= r.t_bound) r.set(ij.first, ij.second, c);
    for (const auto& [ij, c] : B.coeffs)
        if (ij.first <= r.t_bound) r.set(ij.first, ij.second, r.at(ij.first, ij.second) - c);
    return r;
}

TruncatedBiseries mul_truncated(const TruncatedBiseries& A, const TruncatedBiseries& B) {
    TruncatedBiseries r;
    r.t_bound = std::min(A.t_bound, B.t_bound);
    for (const auto& [pq, a] : A.coeffs) {
        if (pq.first > r.t_bound) continue;
        for (const auto& [uv, b] : B.coeffs) {
            int i = pq.first + uv.first;
            if (i > r.t_bound) continue;
            int j = pq.second + uv.second;
            r.set(i, j, r.at(i, j) + a * b);
        }
    }
    return r;
}

TruncatedBiseries mul_truncated(const TruncatedBiseries& A, const LaurentPoly& h) {
    TruncatedBiseries r;
    r.t_bound = A.t_bound;
    for (const auto& [pq, a] : A.coeffs)
        for (const auto& [j, b] : h.coeffs) r.set(pq.first, pq.second + j, r.at(pq.first, pq.second + j) + a * b);
    return r;
}

TruncatedBiseries s_shift(const TruncatedBiseries& A, int b) {
    TruncatedBiseries r;
    r.t_bound = A.t_bound;
    for (const auto& [ij, c] : A.coeffs) r.set(ij.first, ij.second + b, c);
    return r;
}

TruncatedBiseries truncate(const TruncatedBiseries& A, int t_bound) {
    TruncatedBiseries r;
    r.t_bound = t_bound;
    for (const auto& [ij, c] : A.coeffs)
        if (ij.first <= t_bound) r.set(ij.first, ij.second, c);
    return r;
}

TruncatedBiseries koszul_factor(const std::vector<int>& weights, int t_bound) {
    TruncatedBiseries r = biseries_one(t_bound);
    for (int d : weights) {
        TruncatedBiseries f = biseries_one(t_bound);
        if (t_bound >= 1) f.set(1, d, 1);
        r = mul_truncated(r, f);
    }
    return r;
}

LeqVerdict leq_witness(const TruncatedBiseries& A, const TruncatedBiseries& B) {
    if (A.t_bound != B.t_bound)
        throw input_error("leq_witness requires equal t-bounds; truncate first");
    // merged key scan in (i, j) order
    std::map<std::pair<int, int>, char> keys;
    for (const auto& [ij, c] : A.coeffs) keys[ij] = 1;
    for (const auto& [ij, c] : B.coeffs) keys[ij] = 1;
    for (const auto& [ij, unused] : keys) {
        BigInt a = A.at(ij.first, ij.second);
        BigInt b = B.at(ij.first, ij.second);
        if (a > b) return LeqFails{ij.first, ij.second, a, b};
    }
    return LeqHolds{};
}

bool leq_holds(const TruncatedBiseries& A, const TruncatedBiseries& B) {
    return std::holds_alternative<LeqHolds>(leq_witness(A, B));
}

std::optional<long long> diag_support_bound(const TruncatedBiseries& A) {
    std::optional<long long> best;
    for (const auto& [ij, c] : A.coeffs) {
        long long w = static_cast<long long>(ij.second) - ij.first;
        if (!best || w > *best) best = w;
    }
    return best;
}

int end_degree(const LaurentPoly& h) {
    if (h.is_zero()) throw input_error("end degree of the zero space is undefined");
    return h.coeffs.rbegin()->first;
}

bool operator==(const TruncatedBiseries& A, const TruncatedBiseries& B) {
    return A.t_bound == B.t_bound && A.coeffs == B.coeffs;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs == b.coeffs; }

}  // namespace grakit
