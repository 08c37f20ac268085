#pragma once

#include "fuchs/bigfloat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fuchs {

/// Rational reconstruction: the unique p/q with |p|, q <= bound and
/// p = residue * q (mod modulus), if it exists. Requires 2*bound^2 <= modulus
/// so that the answer is unique.
std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus,
                                        const Int& bound);

/// Word-size prime field; p must fit in 63 bits.
struct PrimeField {
    uint64_t p;
    explicit PrimeField(uint64_t prime) : p(prime) {}
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;
    uint64_t from_int(const Int& z) const;
    uint64_t from_rat(const Rat& q) const;  // throws if denominator divisible by p
};

bool is_prime_u64(uint64_t n);
/// Deterministic sequence of primes >= 2^61 for modular images.
std::vector<uint64_t> modular_primes(size_t count);

/// Chinese remainder combination of residues mod pairwise coprime moduli.
Int crt_combine(const std::vector<uint64_t>& residues,
                const std::vector<uint64_t>& moduli, Int* modulus_out = nullptr);

}  // namespace fuchs
