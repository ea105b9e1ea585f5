#include "grakit/monomial.hpp"

namespace grakit {

long long weighted_degree(const Monomial& m, const std::vector<int>& weights) {
    if (m.size() != weights.size())
        throw input_error("monomial/weight length mismatch");
    long long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long long>(m[i]) * weights[i];
    return d;
}

int term_order_compare(const Monomial& a, const Monomial& b, const std::vector<int>& weights) {
    if (a.size() != b.size())
        throw input_error("monomial length mismatch in comparison");
    long long da = weighted_degree(a, weights);
    long long db = weighted_degree(b, weights);
    if (da != db) return da < db ? -1 : 1;
    // grevlex: the last differing exponent decides, smaller exponent wins.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mon_quot(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Monomial mon_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

long long total_degree(const Monomial& m) {
    long long d = 0;
    for (auto e : m) d += e;
    return d;
}

}  // namespace grakit
