#include "grakit/field.hpp"

namespace grakit {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw input_error("characteristic " + std::to_string(p) + " is not prime");
    if (p == 2) throw input_error("characteristic 2 is not supported; use an odd prime");
}

Fp PrimeField::pow(Fp a, std::uint64_t n) const {
    Fp r = 1 % p_;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

Fp PrimeField::inv(Fp a) const {
    if (a == 0) throw internal_error("inverse of zero");
    return pow(a, p_ - 2);
}

}  // namespace grakit
