#pragma once

// Exact integer power series / polynomial arithmetic, the bracket truncation
// operator, and the closed-form conjectured series for generic-form quotients.
//
// All coefficients are signed 64-bit integers with mandatory overflow
// detection: any operation that would wrap throws std::overflow_error
// instead of producing a silently reduced value.

#include <cstdint>
#include <string>
#include <vector>

namespace genform {

// Checked 64-bit arithmetic. Throws std::overflow_error on wraparound.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Binomial coefficient C(n, k), exact, overflow-checked. Zero for k < 0 or
// k > n; n must be nonnegative.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// A power series with finitely many nonzero coefficients, conceptually
// extended by zeros. Canonical form: no trailing zero entries (the zero
// series stores an empty list).
class IntSeries {
public:
    IntSeries() = default;
    explicit IntSeries(std::vector<std::int64_t> coeffs);

    static IntSeries zero() { return IntSeries{}; }
    static IntSeries one() { return IntSeries{{1}}; }

    const std::vector<std::int64_t>& coeffs() const { return c_; }

    // Coefficient of t^i; zero beyond the stored range.
    std::int64_t operator[](std::size_t i) const {
        return i < c_.size() ? c_[i] : 0;
    }

    // Number of stored coefficients (degree + 1, or 0 for the zero series).
    std::size_t length() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }

    // Degree of the underlying polynomial, -1 for the zero series.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    bool operator==(const IntSeries&) const = default;

    // Human-readable form: "1 + 12t + 64t^2", zero terms omitted, "t^1"
    // printed as "t". The zero series prints "0".
    std::string str() const;

private:
    std::vector<std::int64_t> c_;
};

IntSeries series_add(const IntSeries& a, const IntSeries& b);
IntSeries series_sub(const IntSeries& a, const IntSeries& b);
IntSeries series_mul(const IntSeries& a, const IntSeries& b);
IntSeries series_pow(const IntSeries& a, int k);

// Equality in canonical form (IntSeries is always canonical, so this is
// plain comparison; provided as the named operation).
bool series_eq(const IntSeries& a, const IntSeries& b);

// Lexicographic comparison of the coefficient sequences a_0..a_max_degree:
// true if a equals b on that range or the first differing coefficient is
// larger in a.
bool lex_geq(const IntSeries& a, const IntSeries& b, int max_degree);

// Coefficientwise minimum of the two sequences (zero-extended).
IntSeries coefficientwise_min(const IntSeries& a, const IntSeries& b);

// True if a_i >= b_i for all i (zero-extended).
bool coefficientwise_geq(const IntSeries& a, const IntSeries& b);

// The bracket operator: keep a_i while every earlier coefficient is
// strictly positive, zero from the first index with a_i <= 0 onward.
IntSeries truncate_positive(const IntSeries& s);

// Coefficients of (1 - t^d)^r / (1 - t)^n for degrees 0..max_degree, as a
// plain vector (trailing zeros preserved; length max_degree + 1).
// Coefficient of t^D is sum_j (-1)^j C(r, j) C(n - 1 + D - j*d, n - 1).
std::vector<std::int64_t> quotient_coeffs(int n, int r, int d, int max_degree);

// Same expansion as an IntSeries (canonical form).
IntSeries expand_quotient(int n, int r, int d, int max_degree);

// ((1 - t^d) / (1 - t))^n = (1 + t + ... + t^{d-1})^n, the Hilbert series
// of the monomial complete intersection quotient.
IntSeries complete_intersection_series(int n, int d);

// The conjectured series F_{n,r,d} = [ (1 - t^d)^r / (1 - t)^n ] for
// r >= n. For r = n this is the complete-intersection polynomial; for
// r > n the expansion bound is grown until the cut index is found.
// Requires n >= 1, r >= n, d >= 2.
IntSeries conjectured_series(int n, int r, int d);

// Bracket of the expansion up to an explicit degree cap; valid for any
// r >= 0. For r < n the untruncated series stays positive forever, so the
// result is an initial segment, not a completed polynomial.
IntSeries conjectured_series_capped(int n, int r, int d, int cap);

} // namespace genform
