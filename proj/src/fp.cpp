#include "genform/fp.hpp"

#include <stdexcept>
#include <string>

namespace genform {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a deterministic witness set for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FpField::FpField(std::uint32_t p) : p_(p) {
    if (p > kMaxPrime) {
        throw std::invalid_argument("modulus " + std::to_string(p) +
                                    " exceeds the 2^31 - 1 envelope");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) +
                                    " is not prime");
    }
    // For odd p, floor(2^64 / p) = floor((2^64 - 1) / p); for p = 2 this
    // undercounts by one group of p, which only makes rejection sampling
    // marginally more conservative.
    mu_ = ~0ull / p;
    reject_bound_ = mu_ * p;
}

std::uint32_t FpField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FpField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of 0 in F_p");
    return pow(a, p_ - 2);
}

} // namespace genform
