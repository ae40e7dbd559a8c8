#pragma once

// Prime-field arithmetic for word-size primes p <= 2^31 - 1 and the seeded
// deterministic random stream (SplitMix64, fixed across platforms).

#include <cstdint>

namespace genform {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// SplitMix64: 64-bit state, fixed constants. Identical seeds yield
// identical streams on every platform and build.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// One SplitMix64 output from state x; the seed-derivation primitive.
inline std::uint64_t splitmix_once(std::uint64_t x) { return SplitMix64(x).next(); }

inline constexpr std::uint32_t kDefaultPrime = 2147483647u; // 2^31 - 1
inline constexpr std::uint32_t kMaxPrime = 2147483647u;

// F_p context. Validates primality (and the p <= 2^31 - 1 envelope, which
// keeps every product inside a 64-bit double-width intermediate) at
// construction. Elements are plain uint32_t values, always fully reduced.
class FpField {
public:
    explicit FpField(std::uint32_t p); // throws std::invalid_argument

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b; // p < 2^31 so no u32 overflow
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    // Double-width product, Barrett-reduced.
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t x = static_cast<std::uint64_t>(a) * b;
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(x) * mu_) >> 64);
        std::uint64_t r = x - q * p_;
        if (r >= p_) r -= p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Multiplicative inverse; throws std::domain_error for 0.
    std::uint32_t inv(std::uint32_t a) const;

    // Uniform draw in [0, p) by rejection sampling: 64-bit draws at or
    // above p * floor(2^64 / p) are discarded, the rest reduced mod p.
    std::uint32_t uniform(SplitMix64& rng) const {
        std::uint64_t u;
        do {
            u = rng.next();
        } while (u >= reject_bound_);
        return static_cast<std::uint32_t>(u % p_);
    }

    bool is_mersenne31() const { return p_ == kDefaultPrime; }
    std::uint64_t barrett_mu() const { return mu_; }

private:
    std::uint32_t p_;
    std::uint64_t mu_;           // floor(2^64 / p)
    std::uint64_t reject_bound_; // p * floor(2^64 / p)
};

} // namespace genform
