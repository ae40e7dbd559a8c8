#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "genform/fp.hpp"
#include "genform/matrix.hpp"
#include "genform/parallel.hpp"

using namespace genform;

namespace {

FpMatrix random_matrix(std::size_t rows, std::size_t cols, const FpField& f,
                       SplitMix64& rng) {
    FpMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.uniform(rng);
    }
    return m;
}

// rank <= inner by construction
FpMatrix random_product(std::size_t rows, std::size_t cols, std::size_t inner,
                        const FpField& f, SplitMix64& rng) {
    FpMatrix a = random_matrix(rows, inner, f, rng);
    FpMatrix b = random_matrix(inner, cols, f, rng);
    FpMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint32_t s = 0;
            for (std::size_t k = 0; k < inner; ++k) {
                s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
            }
            m.at(i, j) = s;
        }
    }
    return m;
}

} // namespace

TEST_CASE("field operations") {
    FpField f7(7);
    CHECK(f7.mul(2, 3) == 6);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.add(6, 1) == 0);
    CHECK(f7.sub(2, 5) == 4);
    CHECK(f7.neg(3) == 4);
    CHECK(f7.pow(3, 6) == 1);

    FpField big(kDefaultPrime);
    CHECK(big.add(kDefaultPrime - 1, 1) == 0);
    CHECK(big.mul(kDefaultPrime - 1, kDefaultPrime - 1) == 1); // (-1)^2

    CHECK_THROWS_AS(f7.inv(0), std::domain_error);
    CHECK_THROWS_AS(FpField(4), std::invalid_argument);
    CHECK_THROWS_AS(FpField(0), std::invalid_argument);
}

TEST_CASE("exhaustive inverses for every prime up to 257") {
    for (std::uint32_t p = 2; p <= 257; ++p) {
        if (!is_prime(p)) continue;
        FpField f(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("primality checking") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK(is_prime(2147483647ull));
    CHECK(is_prime(2147483629ull));
    CHECK(is_prime(1000000007ull));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));           // Carmichael
    CHECK_FALSE(is_prime(3215031751ull)); // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime(2147483647ull * 2147483629ull));
}

TEST_CASE("splitmix64 golden stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 16294208416658607535ull);
    CHECK(rng.next() == 7960286522194355700ull);
    CHECK(rng.next() == 487617019471545679ull);
    CHECK(splitmix_once(42) == 13679457532755275413ull);
}

TEST_CASE("uniform draws: golden value, determinism, mean") {
    FpField f(kDefaultPrime);
    SplitMix64 rng(0);
    // SplitMix64(0) first output, reduced modulo 2^31 - 1; the rejection
    // bound p * floor(2^64 / p) = 2^64 - 4 does not discard it.
    CHECK(f.uniform(rng) == 1063198245u);

    SplitMix64 a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(f.uniform(a) == f.uniform(b));

    SplitMix64 c(99);
    double acc = 0.0;
    const int draws = 1000000;
    for (int i = 0; i < draws; ++i) {
        acc += static_cast<double>(f.uniform(c)) / f.modulus();
    }
    double mean = acc / draws;
    CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("rank basics") {
    FpField f(101);
    FpMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    CHECK(rank(id, f) == 3);

    FpMatrix zero(4, 5);
    CHECK(rank(zero, f) == 0);

    FpMatrix prop(2, 2);
    prop.at(0, 0) = 1;
    prop.at(0, 1) = 2;
    prop.at(1, 0) = 2;
    prop.at(1, 1) = 4;
    CHECK(rank(prop, f) == 1);
}

TEST_CASE("rank equals the minor-expansion oracle") {
    FpField f(101);
    SplitMix64 rng(321);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t rows = 1 + rng.next() % 6;
        std::size_t cols = 1 + rng.next() % 6;
        FpMatrix m = (trial % 2 == 0)
                         ? random_matrix(rows, cols, f, rng)
                         : random_product(rows, cols, 1 + rng.next() % 3, f, rng);
        std::size_t expected = rank_oracle(m, f);
        CHECK(rank(m, f) == expected);
    }
}

TEST_CASE("rank oracle basics and guard") {
    FpField f(101);
    FpMatrix id(2, 2);
    id.at(0, 0) = 1;
    id.at(1, 1) = 1;
    CHECK(rank_oracle(id, f) == 2);

    FpMatrix tall(3, 2);
    tall.at(0, 0) = 1;
    tall.at(0, 1) = 1;
    tall.at(1, 0) = 2;
    tall.at(1, 1) = 2;
    tall.at(2, 0) = 3;
    tall.at(2, 1) = 3;
    CHECK(rank_oracle(tall, f) == 1);

    FpMatrix toobig(13, 13);
    CHECK_THROWS_AS(rank_oracle(toobig, f), std::invalid_argument);
}

TEST_CASE("rank invariances") {
    FpField f(kDefaultPrime);
    SplitMix64 rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 2 + rng.next() % 10;
        std::size_t cols = 2 + rng.next() % 10;
        std::size_t inner = 1 + rng.next() % std::min(rows, cols);
        FpMatrix m = random_product(rows, cols, inner, f, rng);

        FpMatrix copy = m;
        std::size_t rk = rank(copy, f);
        CHECK(rk <= std::min(rows, cols));

        // row permutation (reverse) keeps the rank
        FpMatrix perm(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                perm.at(i, j) = m.at(rows - 1 - i, j);
            }
        }
        CHECK(rank(perm, f) == rk);

        // scaling a row by a nonzero element keeps the rank
        FpMatrix scaled = m;
        std::uint32_t factor = 1 + f.uniform(rng) % (f.modulus() - 1);
        std::size_t target = rng.next() % rows;
        for (std::size_t j = 0; j < cols; ++j) {
            scaled.at(target, j) = f.mul(scaled.at(target, j), factor);
        }
        CHECK(rank(scaled, f) == rk);

        // duplicated column block: rank([M | M]) = rank(M)
        FpMatrix doubled(rows, 2 * cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                doubled.at(i, j) = m.at(i, j);
                doubled.at(i, cols + j) = m.at(i, j);
            }
        }
        CHECK(rank(doubled, f) == rk);
    }
}

TEST_CASE("rank is schedule-independent and prime-generic") {
    ThreadPool pool(4);
    SplitMix64 rng(777);
    for (std::uint32_t p : {101u, 2147483629u, kDefaultPrime}) {
        FpField f(p);
        for (int trial = 0; trial < 5; ++trial) {
            std::size_t inner = 5 + rng.next() % 40;
            FpMatrix m = random_product(60, 80, inner, f, rng);
            FpMatrix copy = m;
            std::size_t serial = rank(copy, f, nullptr);
            std::size_t pooled = rank(m, f, &pool);
            CHECK(serial == pooled);
            CHECK(serial == inner); // generic product attains the inner dim
        }
    }
}

TEST_CASE("chunk bounds partition the range") {
    for (std::size_t n : {0u, 1u, 7u, 100u}) {
        for (unsigned lanes : {1u, 2u, 3u, 8u}) {
            auto b = chunk_bounds(n, lanes);
            REQUIRE(b.size() == lanes + 1);
            CHECK(b.front() == 0);
            CHECK(b.back() == n);
            for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i] <= b[i + 1]);
        }
    }
}
