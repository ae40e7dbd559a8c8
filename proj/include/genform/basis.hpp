#pragma once

// Monomials with bounded exponents and the graded monomial basis of
// A = k[x_1..x_n]/(x_1^d,..,x_n^d), plus the full polynomial ring bases
// used by direct mode. The canonical order everywhere is graded-lex with
// x_1 > x_2 > ... > x_n (within a degree: descending lex on exponents).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "genform/series.hpp"

namespace genform {

inline constexpr int kMaxVars = 16;

// Exponent vector of a monomial in n <= 16 variables; entries are 8-bit.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(int n);

    // Convenience constructor, mostly for tests: of({1,0,2}) = x1*x3^2.
    static ExponentVector of(std::initializer_list<int> exps);

    int vars() const { return n_; }
    int degree() const { return deg_; }

    std::uint8_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    void set(int i, int value);

    bool operator==(const ExponentVector&) const = default;

    // "x1^2*x3" style; the degree-0 monomial prints as "1".
    std::string str() const;

    // Packed little-endian key for hashing (16 bytes).
    std::pair<std::uint64_t, std::uint64_t> key() const;

private:
    std::array<std::uint8_t, kMaxVars> e_{};
    std::int16_t n_ = 0;
    std::int16_t deg_ = 0;
};

// Entrywise product of two monomials of the same length (no bound).
ExponentVector multiply(const ExponentVector& a, const ExponentVector& b);

// Product reduced modulo the pure powers x_i^d: absent when any entry of
// the sum reaches d (the product is annihilated in A).
std::optional<ExponentVector> multiply_reduce(const ExponentVector& a,
                                              const ExponentVector& b, int d);

// All degree-D exponent vectors with every entry <= d-1, descending lex.
std::vector<ExponentVector> enumerate_basis(int n, int d, int D);

// All degree-D exponent vectors of the full polynomial ring, descending lex.
std::vector<ExponentVector> enumerate_full(int n, int D);

// dim A_D = sum_j (-1)^j C(n, j) C(n - 1 + D - j*d, n - 1); equals the
// length of enumerate_basis(n, d, D).
std::int64_t dim_bounded(int n, int d, int D);

// C(n - 1 + D, n - 1), the full monomial count in degree D.
std::int64_t dim_full(int n, int D);

// Per-degree monomial lists with an index map, for either the bounded
// quotient A (entries <= d-1) or the full ring. Immutable after
// construction; safe for concurrent shared reads.
class GradedBasis {
public:
    static GradedBasis bounded(int n, int d, int up_to_degree);
    static GradedBasis full(int n, int up_to_degree);

    bool is_bounded() const { return d_ > 0; }
    int vars() const { return n_; }
    int bound_degree() const { return d_; } // 0 in full mode
    int max_degree() const { return static_cast<int>(per_degree_.size()) - 1; }

    const std::vector<ExponentVector>& at(int degree) const;
    std::int64_t dim(int degree) const;

    // Position of the monomial within its degree-D list, if present.
    std::optional<std::uint32_t> index_of(int degree, const ExponentVector& m) const;

private:
    GradedBasis(int n, int d, int up_to_degree);

    struct KeyHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
            return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
        }
    };

    int n_;
    int d_;
    std::vector<std::vector<ExponentVector>> per_degree_;
    std::vector<std::unordered_map<std::pair<std::uint64_t, std::uint64_t>,
                                   std::uint32_t, KeyHash>>
        index_;
};

} // namespace genform
