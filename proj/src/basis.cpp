#include "genform/basis.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace genform {

namespace {

void check_vars(int n) {
    if (n < 1 || n > kMaxVars) {
        throw std::invalid_argument("number of variables must be in [1, 16]");
    }
}

// Descending-lex enumeration of degree-D vectors with entries <= bound.
// Entry 0 is chosen largest-first, so the lex-largest vector comes first.
void enumerate_rec(int n, int bound, int remaining, int pos,
                   ExponentVector& scratch, std::vector<ExponentVector>& out) {
    if (pos == n - 1) {
        if (remaining <= bound) {
            scratch.set(pos, remaining);
            out.push_back(scratch);
        }
        return;
    }
    int hi = std::min(bound, remaining);
    for (int e = hi; e >= 0; --e) {
        // Entries after pos can absorb at most (n - 1 - pos) * bound, and
        // the deficit only grows as e shrinks.
        if (static_cast<std::int64_t>(remaining - e) >
            static_cast<std::int64_t>(n - 1 - pos) * bound)
            break;
        scratch.set(pos, e);
        enumerate_rec(n, bound, remaining - e, pos + 1, scratch, out);
    }
    scratch.set(pos, 0);
}

std::vector<ExponentVector> enumerate_with_bound(int n, int bound, int D) {
    check_vars(n);
    if (D < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<ExponentVector> out;
    if (static_cast<std::int64_t>(D) > static_cast<std::int64_t>(n) * bound) {
        return out;
    }
    ExponentVector scratch(n);
    enumerate_rec(n, bound, D, 0, scratch, out);
    return out;
}

} // namespace

ExponentVector::ExponentVector(int n) {
    check_vars(n);
    n_ = static_cast<std::int16_t>(n);
}

ExponentVector ExponentVector::of(std::initializer_list<int> exps) {
    ExponentVector v(static_cast<int>(exps.size()));
    int i = 0;
    for (int e : exps) v.set(i++, e);
    return v;
}

void ExponentVector::set(int i, int value) {
    assert(i >= 0 && i < n_);
    if (value < 0 || value > 255) {
        throw std::overflow_error("monomial exponent outside 8-bit storage");
    }
    auto idx = static_cast<std::size_t>(i);
    deg_ = static_cast<std::int16_t>(deg_ - e_[idx] + value);
    e_[idx] = static_cast<std::uint8_t>(value);
}

std::string ExponentVector::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        int e = e_[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!first) out << "*";
        first = false;
        out << "x" << (i + 1);
        if (e > 1) out << "^" << e;
    }
    return first ? "1" : out.str();
}

std::pair<std::uint64_t, std::uint64_t> ExponentVector::key() const {
    std::uint64_t lo = 0, hi = 0;
    for (int i = 0; i < 8; ++i) {
        lo |= static_cast<std::uint64_t>(e_[static_cast<std::size_t>(i)]) << (8 * i);
        hi |= static_cast<std::uint64_t>(e_[static_cast<std::size_t>(i + 8)]) << (8 * i);
    }
    return {lo, hi};
}

ExponentVector multiply(const ExponentVector& a, const ExponentVector& b) {
    assert(a.vars() == b.vars());
    ExponentVector out(a.vars());
    for (int i = 0; i < a.vars(); ++i) out.set(i, a[i] + b[i]);
    return out;
}

std::optional<ExponentVector> multiply_reduce(const ExponentVector& a,
                                              const ExponentVector& b, int d) {
    assert(a.vars() == b.vars());
    ExponentVector out(a.vars());
    for (int i = 0; i < a.vars(); ++i) {
        int e = a[i] + b[i];
        if (e >= d) return std::nullopt; // annihilated by x_i^d
        out.set(i, e);
    }
    return out;
}

std::vector<ExponentVector> enumerate_basis(int n, int d, int D) {
    if (d < 2) throw std::invalid_argument("enumerate_basis: d must be >= 2");
    return enumerate_with_bound(n, d - 1, D);
}

std::vector<ExponentVector> enumerate_full(int n, int D) {
    return enumerate_with_bound(n, D, D);
}

std::int64_t dim_bounded(int n, int d, int D) {
    check_vars(n);
    if (d < 2) throw std::invalid_argument("dim_bounded: d must be >= 2");
    if (D < 0) throw std::invalid_argument("dim_bounded: D must be >= 0");
    std::int64_t a = 0;
    for (int j = 0; j <= std::min(n, D / d); ++j) {
        std::int64_t term = checked_mul(binomial(n, j), binomial(n - 1 + D - j * d, n - 1));
        a = (j % 2 == 0) ? checked_add(a, term) : checked_sub(a, term);
    }
    return a;
}

std::int64_t dim_full(int n, int D) {
    check_vars(n);
    if (D < 0) throw std::invalid_argument("dim_full: D must be >= 0");
    return binomial(n - 1 + D, n - 1);
}

GradedBasis::GradedBasis(int n, int d, int up_to_degree) : n_(n), d_(d) {
    check_vars(n);
    if (up_to_degree < 0) throw std::invalid_argument("GradedBasis: negative degree");
    // Refuse degrees whose monomial count is far beyond desk scale instead
    // of exhausting memory during enumeration.
    constexpr std::int64_t kMaxDegreeDim = 1 << 24;
    per_degree_.reserve(static_cast<std::size_t>(up_to_degree) + 1);
    index_.resize(static_cast<std::size_t>(up_to_degree) + 1);
    for (int D = 0; D <= up_to_degree; ++D) {
        std::int64_t expected = d > 0 ? dim_bounded(n, d, D) : dim_full(n, D);
        if (expected > kMaxDegreeDim) {
            throw std::invalid_argument(
                "graded basis at degree " + std::to_string(D) + " has " +
                std::to_string(expected) + " monomials; parameters exceed desk scale");
        }
        auto list = d > 0 ? enumerate_basis(n, d, D) : enumerate_full(n, D);
        auto& map = index_[static_cast<std::size_t>(D)];
        map.reserve(list.size());
        for (std::uint32_t i = 0; i < list.size(); ++i) {
            map.emplace(list[i].key(), i);
        }
        per_degree_.push_back(std::move(list));
    }
}

GradedBasis GradedBasis::bounded(int n, int d, int up_to_degree) {
    if (d < 2) throw std::invalid_argument("GradedBasis: d must be >= 2");
    return GradedBasis(n, d, up_to_degree);
}

GradedBasis GradedBasis::full(int n, int up_to_degree) {
    return GradedBasis(n, 0, up_to_degree);
}

const std::vector<ExponentVector>& GradedBasis::at(int degree) const {
    static const std::vector<ExponentVector> kEmpty;
    if (degree < 0 || degree > max_degree()) return kEmpty;
    return per_degree_[static_cast<std::size_t>(degree)];
}

std::int64_t GradedBasis::dim(int degree) const {
    return static_cast<std::int64_t>(at(degree).size());
}

std::optional<std::uint32_t> GradedBasis::index_of(int degree,
                                                   const ExponentVector& m) const {
    if (degree < 0 || degree > max_degree()) return std::nullopt;
    const auto& map = index_[static_cast<std::size_t>(degree)];
    auto it = map.find(m.key());
    if (it == map.end()) return std::nullopt;
    return it->second;
}

} // namespace genform
