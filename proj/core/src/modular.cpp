#include "fuchs/modular.hpp"

#include <stdexcept>

namespace fuchs {

std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus,
                                        const Int& bound) {
    if (residue < 0 || residue >= modulus)
        throw std::invalid_argument("rational_reconstruct: residue out of range");
    if (bound <= 0 || 2 * bound * bound > modulus)
        throw std::invalid_argument("rational_reconstruct: bound too large for modulus");

    // half-extended Euclid on (modulus, residue); stop when remainder <= bound
    Int r0 = modulus, r1 = residue;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    Int p = r1, q = t1;
    if (q < 0) { p = -p; q = -q; }
    if (q == 0 || q > bound || abs(p) > bound) return std::nullopt;
    if (gcd(p, q) != 1) return std::nullopt;
    // check p == residue*q mod modulus
    Int chk = (residue * q - p) % modulus;
    if (chk != 0) return std::nullopt;
    Rat out(p, q);
    out.canonicalize();
    return out;
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
    uint64_t acc = 1 % p, base = a % p;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

uint64_t PrimeField::inv(uint64_t a) const {
    if (a % p == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p - 2);
}

uint64_t PrimeField::from_int(const Int& z) const {
    Int m = z % Int(static_cast<unsigned long>(p));
    if (m < 0) m += Int(static_cast<unsigned long>(p));
    return m.get_ui();
}

uint64_t PrimeField::from_rat(const Rat& q) const {
    uint64_t den = from_int(Int(q.get_den()));
    if (den == 0) throw std::domain_error("PrimeField: denominator divisible by p");
    return mul(from_int(Int(q.get_num())), inv(den));
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    PrimeField F(n);
    // deterministic Miller-Rabin bases for 64-bit range
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = F.pow(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = F.mul(x, x);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint64_t> modular_primes(size_t count) {
    std::vector<uint64_t> out;
    uint64_t n = (1ull << 61) + 1;
    while (out.size() < count) {
        if (is_prime_u64(n)) out.push_back(n);
        n += 2;
    }
    return out;
}

Int crt_combine(const std::vector<uint64_t>& residues,
                const std::vector<uint64_t>& moduli, Int* modulus_out) {
    if (residues.size() != moduli.size() || residues.empty())
        throw std::invalid_argument("crt_combine: size mismatch");
    Int x(static_cast<unsigned long>(residues[0]));
    Int M(static_cast<unsigned long>(moduli[0]));
    for (size_t i = 1; i < residues.size(); ++i) {
        Int p(static_cast<unsigned long>(moduli[i]));
        Int r(static_cast<unsigned long>(residues[i]));
        // x' = x + M * ((r - x) / M mod p)
        Int Minv;
        if (mpz_invert(Minv.get_mpz_t(), M.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("crt_combine: moduli not coprime");
        Int delta = ((r - x) % p) * Minv % p;
        if (delta < 0) delta += p;
        x += M * delta;
        M *= p;
    }
    if (modulus_out) *modulus_out = M;
    return x;
}

}  // namespace fuchs
