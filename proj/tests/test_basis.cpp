#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "genform/basis.hpp"
#include "genform/fp.hpp"

using namespace genform;

TEST_CASE("exponent vector basics") {
    auto v = ExponentVector::of({2, 0, 1});
    CHECK(v.vars() == 3);
    CHECK(v.degree() == 3);
    CHECK(v.str() == "x1^2*x3");
    CHECK(ExponentVector(4).str() == "1");
    CHECK(ExponentVector::of({0, 1}).str() == "x2");

    v.set(1, 3);
    CHECK(v.degree() == 6);
    CHECK_THROWS_AS(v.set(0, 256), std::overflow_error);
}

TEST_CASE("enumerate_basis examples and order") {
    auto b22 = enumerate_basis(2, 2, 2);
    REQUIRE(b22.size() == 1);
    CHECK(b22[0] == ExponentVector::of({1, 1}));

    auto b32 = enumerate_basis(3, 2, 2);
    REQUIRE(b32.size() == 3);
    CHECK(b32[0] == ExponentVector::of({1, 1, 0}));
    CHECK(b32[1] == ExponentVector::of({1, 0, 1}));
    CHECK(b32[2] == ExponentVector::of({0, 1, 1}));

    CHECK(enumerate_basis(13, 2, 6).size() == 1716); // C(13, 6)
    CHECK(enumerate_basis(2, 2, 3).empty());         // beyond the socle
}

TEST_CASE("dim_bounded formula") {
    CHECK(dim_bounded(2, 2, 1) == 2);
    CHECK(dim_bounded(13, 2, 6) == 1716);
    CHECK(dim_bounded(2, 2, 3) == 0);
    CHECK(dim_bounded(9, 3, 12) == 1554);
    CHECK(dim_bounded(9, 3, 9) == 3139);
}

TEST_CASE("formula equals enumeration, n <= 6, d <= 4, D <= 12") {
    for (int n = 1; n <= 6; ++n) {
        for (int d = 2; d <= 4; ++d) {
            for (int D = 0; D <= 12; ++D) {
                CHECK(dim_bounded(n, d, D) ==
                      static_cast<std::int64_t>(enumerate_basis(n, d, D).size()));
            }
        }
    }
}

TEST_CASE("total basis size is d^n") {
    for (int n = 1; n <= 5; ++n) {
        for (int d = 2; d <= 4; ++d) {
            std::int64_t total = 0;
            std::int64_t expected = 1;
            for (int i = 0; i < n; ++i) expected *= d;
            for (int D = 0; D <= n * (d - 1); ++D) total += dim_bounded(n, d, D);
            CHECK(total == expected);
        }
    }
}

TEST_CASE("multiply_reduce") {
    auto r1 = multiply_reduce(ExponentVector::of({1, 0}),
                              ExponentVector::of({0, 1}), 2);
    REQUIRE(r1.has_value());
    CHECK(*r1 == ExponentVector::of({1, 1}));

    CHECK_FALSE(multiply_reduce(ExponentVector::of({1, 0}),
                                ExponentVector::of({1, 1}), 2)
                    .has_value());

    auto r3 = multiply_reduce(ExponentVector::of({2, 1, 0}),
                              ExponentVector::of({0, 1, 2}), 3);
    REQUIRE(r3.has_value());
    CHECK(*r3 == ExponentVector::of({2, 2, 2}));

    // identity and commutativity
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 6);
        int d = 2 + static_cast<int>(rng.next() % 3);
        ExponentVector a(n), b(n), zero(n);
        for (int i = 0; i < n; ++i) {
            a.set(i, static_cast<int>(rng.next() % static_cast<std::uint64_t>(d)));
            b.set(i, static_cast<int>(rng.next() % static_cast<std::uint64_t>(d)));
        }
        auto am = multiply_reduce(a, zero, d);
        REQUIRE(am.has_value());
        CHECK(*am == a);
        CHECK(multiply_reduce(a, b, d) == multiply_reduce(b, a, d));
    }
}

TEST_CASE("full ring dimensions and order") {
    CHECK(dim_full(2, 3) == 4);
    CHECK(dim_full(12, 2) == 78);
    CHECK(dim_full(1, 5) == 1);

    auto f23 = enumerate_full(2, 3);
    REQUIRE(f23.size() == 4);
    CHECK(f23[0] == ExponentVector::of({3, 0}));
    CHECK(f23[1] == ExponentVector::of({2, 1}));
    CHECK(f23[2] == ExponentVector::of({1, 2}));
    CHECK(f23[3] == ExponentVector::of({0, 3}));

    for (int n = 1; n <= 5; ++n) {
        for (int D = 0; D <= 8; ++D) {
            CHECK(dim_full(n, D) ==
                  static_cast<std::int64_t>(enumerate_full(n, D).size()));
        }
    }
}

TEST_CASE("graded basis index round-trip") {
    auto basis = GradedBasis::bounded(4, 3, 9);
    CHECK(basis.max_degree() == 9);
    for (int D = 0; D <= 9; ++D) {
        const auto& list = basis.at(D);
        CHECK(basis.dim(D) == dim_bounded(4, 3, D));
        for (std::uint32_t i = 0; i < list.size(); ++i) {
            auto found = basis.index_of(D, list[i]);
            REQUIRE(found.has_value());
            CHECK(*found == i);
        }
    }
    // a monomial killed in A is absent from the bounded index
    CHECK_FALSE(basis.index_of(3, ExponentVector::of({3, 0, 0, 0})).has_value());

    auto full = GradedBasis::full(3, 6);
    CHECK_FALSE(full.is_bounded());
    for (int D = 0; D <= 6; ++D) {
        CHECK(full.dim(D) == dim_full(3, D));
        const auto& list = full.at(D);
        for (std::uint32_t i = 0; i < list.size(); ++i) {
            CHECK(full.index_of(D, list[i]) == i);
        }
    }
}

TEST_CASE("desk-scale guard refuses runaway bases") {
    CHECK_THROWS_AS(GradedBasis::full(16, 30), std::invalid_argument);
}
