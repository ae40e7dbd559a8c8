#include "genform/series.hpp"

#include <sstream>
#include <stdexcept>

namespace genform {

namespace {

[[noreturn]] void overflow() {
    throw std::overflow_error("64-bit integer overflow in series arithmetic");
}

void trim(std::vector<std::int64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow();
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // The running value after step j is C(n-k+j, j) <= C(n, k), so only the
    // pre-division product needs headroom; a 128-bit accumulator gives it
    // while each partial result is still range-checked.
    unsigned __int128 c = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        c = c * static_cast<unsigned __int128>(n - k + j) /
            static_cast<unsigned __int128>(j);
        if (c > static_cast<unsigned __int128>(INT64_MAX)) overflow();
    }
    return static_cast<std::int64_t>(c);
}

IntSeries::IntSeries(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
    trim(c_);
}

std::string IntSeries::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::int64_t a = c_[i];
        if (a == 0) continue;
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        std::uint64_t mag = a < 0 ? -static_cast<std::uint64_t>(a)
                                  : static_cast<std::uint64_t>(a);
        if (i == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag;
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

IntSeries series_add(const IntSeries& a, const IntSeries& b) {
    std::vector<std::int64_t> c(std::max(a.length(), b.length()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a[i], b[i]);
    return IntSeries(std::move(c));
}

IntSeries series_sub(const IntSeries& a, const IntSeries& b) {
    std::vector<std::int64_t> c(std::max(a.length(), b.length()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(a[i], b[i]);
    return IntSeries(std::move(c));
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    if (a.is_zero() || b.is_zero()) return IntSeries::zero();
    std::vector<std::int64_t> c(a.length() + b.length() - 1, 0);
    for (std::size_t i = 0; i < a.length(); ++i) {
        for (std::size_t j = 0; j < b.length(); ++j) {
            c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
        }
    }
    return IntSeries(std::move(c));
}

IntSeries series_pow(const IntSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("series_pow: negative exponent");
    IntSeries result = IntSeries::one();
    for (int i = 0; i < k; ++i) result = series_mul(result, a);
    return result;
}

bool series_eq(const IntSeries& a, const IntSeries& b) { return a == b; }

bool lex_geq(const IntSeries& a, const IntSeries& b, int max_degree) {
    for (int i = 0; i <= max_degree; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        if (a[k] != b[k]) return a[k] > b[k];
    }
    return true;
}

IntSeries coefficientwise_min(const IntSeries& a, const IntSeries& b) {
    std::vector<std::int64_t> c(std::max(a.length(), b.length()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(a[i], b[i]);
    return IntSeries(std::move(c));
}

bool coefficientwise_geq(const IntSeries& a, const IntSeries& b) {
    std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i] < b[i]) return false;
    }
    return true;
}

IntSeries truncate_positive(const IntSeries& s) {
    const auto& c = s.coeffs();
    std::size_t cut = c.size();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] <= 0) {
            cut = i;
            break;
        }
    }
    return IntSeries(std::vector<std::int64_t>(c.begin(), c.begin() + cut));
}

std::vector<std::int64_t> quotient_coeffs(int n, int r, int d, int max_degree) {
    if (n < 1) throw std::invalid_argument("quotient_coeffs: n must be >= 1");
    if (r < 0) throw std::invalid_argument("quotient_coeffs: r must be >= 0");
    if (d < 2) throw std::invalid_argument("quotient_coeffs: d must be >= 2");
    if (max_degree < 0) throw std::invalid_argument("quotient_coeffs: negative degree cap");
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int D = 0; D <= max_degree; ++D) {
        std::int64_t a = 0;
        int j_max = std::min(r, D / d);
        for (int j = 0; j <= j_max; ++j) {
            std::int64_t term =
                checked_mul(binomial(r, j), binomial(n - 1 + D - j * d, n - 1));
            a = (j % 2 == 0) ? checked_add(a, term) : checked_sub(a, term);
        }
        out[static_cast<std::size_t>(D)] = a;
    }
    return out;
}

IntSeries expand_quotient(int n, int r, int d, int max_degree) {
    return IntSeries(quotient_coeffs(n, r, d, max_degree));
}

IntSeries complete_intersection_series(int n, int d) {
    return series_pow(IntSeries(std::vector<std::int64_t>(d, 1)), n);
}

IntSeries conjectured_series(int n, int r, int d) {
    if (r < n) {
        throw std::invalid_argument(
            "conjectured_series: r < n never truncates; call the capped variant");
    }
    if (r == n) return complete_intersection_series(n, d);
    // Grow the expansion bound until a nonpositive coefficient appears.
    // For r > n the rational function is a polynomial whose coefficients
    // sum to zero, so a cut index always exists.
    int bound = n * (d - 1) + 1;
    for (;;) {
        std::vector<std::int64_t> q = quotient_coeffs(n, r, d, bound);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] <= 0) {
                q.resize(i);
                return IntSeries(std::move(q));
            }
        }
        bound *= 2;
    }
}

IntSeries conjectured_series_capped(int n, int r, int d, int cap) {
    if (r >= n) return conjectured_series(n, r, d);
    return truncate_positive(expand_quotient(n, r, d, cap));
}

} // namespace genform
