#pragma once

#include <cstdint>

#include "grakit/errors.hpp"

namespace grakit {

// Field element, always normalized to [0, p).
using Fp = std::uint32_t;

// Arithmetic in Z/p for an odd prime p.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Fp add(Fp a, Fp b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
    Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
    Fp mul(Fp a, Fp b) const {
        return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Fp pow(Fp a, std::uint64_t n) const;
    Fp inv(Fp a) const;

    // Reduce an arbitrary signed integer literal into [0, p).
    Fp from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Fp>(r);
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace grakit
