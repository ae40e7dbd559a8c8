#include "genform/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace genform {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Row update a[k] -= f * b[k] (mod p) for the default prime 2^31 - 1:
// Mersenne folding keeps the whole loop in plain 64-bit ops, which the
// compiler can vectorize.
__attribute__((target_clones("default", "avx2")))
void row_submul_m31(u32* __restrict a, const u32* __restrict b, std::size_t len,
                    u32 f) {
    constexpr u64 P = 0x7FFFFFFFull;
    const u64 F = f;
    for (std::size_t k = 0; k < len; ++k) {
        u64 x = F * b[k];                // < 2^62
        u64 s = (x & P) + (x >> 31);     // < 2^32
        u64 t = (s & P) + (s >> 31);     // <= 2^31
        t = t >= P ? t - P : t;
        u64 r = a[k] + P - t;            // < 2P
        a[k] = static_cast<u32>(r >= P ? r - P : r);
    }
}

// Same update for a general word-size prime, Barrett-reduced.
void row_submul_barrett(u32* __restrict a, const u32* __restrict b,
                        std::size_t len, u32 f, u32 p, u64 mu) {
    const u64 F = f;
    const u64 P = p;
    for (std::size_t k = 0; k < len; ++k) {
        u64 x = F * b[k];
        u64 q = static_cast<u64>((static_cast<__uint128_t>(x) * mu) >> 64);
        u64 t = x - q * P;
        t = t >= P ? t - P : t;
        u64 r = a[k] + P - t;
        a[k] = static_cast<u32>(r >= P ? r - P : r);
    }
}

void row_scale(u32* a, std::size_t len, u32 f, const FpField& field) {
    for (std::size_t k = 0; k < len; ++k) a[k] = field.mul(a[k], f);
}

} // namespace

std::size_t rank(FpMatrix& m, const FpField& field, ThreadPool* pool) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    const u32 p = field.modulus();
    const u64 mu = field.barrett_mu();
    const bool m31 = field.is_mersenne31();

    // pivot_at[c] = normalized echelon row whose leading 1 sits in column c.
    std::vector<const u32*> pivot_at(cols, nullptr);
    std::size_t rk = 0;

    // Reduces v against the current echelon; returns the column of its
    // leading nonzero entry afterwards, or cols when v vanished. Leading
    // columns strictly increase across iterations, so every pivot is used
    // at most once per row.
    auto reduce_row = [&](u32* v) -> std::size_t {
        std::size_t L = 0;
        for (;;) {
            while (L < cols && v[L] == 0) ++L;
            if (L == cols) return L;
            const u32* pr = pivot_at[L];
            if (pr == nullptr) return L;
            u32 f = v[L];
            if (m31) {
                row_submul_m31(v + L, pr + L, cols - L, f);
            } else {
                row_submul_barrett(v + L, pr + L, cols - L, f, p, mu);
            }
            v[L] = 0;
            ++L;
        }
    };

    // Rows are fed to the echelon in blocks: first every block row is
    // reduced against the existing pivots (rows are independent, so this
    // part runs on the pool), then survivors are inserted in row order.
    // Once the rank saturates at cols the remaining rows cannot matter.
    constexpr std::size_t kBlock = 256;
    for (std::size_t row0 = 0; row0 < rows && rk < cols; row0 += kBlock) {
        const std::size_t count = std::min(kBlock, rows - row0);
        if (rk > 0) {
            auto phase1 = [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) reduce_row(m.row(row0 + i));
            };
            if (pool != nullptr) {
                pool->run(count, phase1);
            } else {
                phase1(0, count);
            }
        }
        for (std::size_t i = row0; i < row0 + count && rk < cols; ++i) {
            u32* v = m.row(i);
            std::size_t L = reduce_row(v);
            if (L == cols) continue;
            u32 lead_inv = field.inv(v[L]);
            if (lead_inv != 1) row_scale(v + L, cols - L, lead_inv, field);
            pivot_at[L] = v;
            ++rk;
        }
    }
    return rk;
}

namespace {

// Determinant of the k x k submatrix selected by rows[] and cols[], by
// Laplace expansion along the first remaining row, memoized on the set of
// unused columns. Counts minors the classical way, no row reduction.
u32 minor_det(const FpMatrix& m, const FpField& field,
              const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    std::vector<u32> memo(static_cast<std::size_t>(1) << k, 0);
    std::vector<bool> known(static_cast<std::size_t>(1) << k, false);
    // f(mask): det over the last popcount(mask) rows and the columns in mask.
    auto rec = [&](auto&& self, std::uint32_t mask) -> u32 {
        if (mask == 0) return 1;
        if (known[mask]) return memo[mask];
        int used = k - __builtin_popcount(mask);
        std::size_t row = rows[static_cast<std::size_t>(used)];
        u32 det = 0;
        bool negate = false;
        for (std::size_t j = 0; j < k; ++j) {
            if (!(mask & (1u << j))) continue;
            u32 a = m.at(row, cols[j]);
            if (a != 0) {
                u32 sub = self(self, mask & ~(1u << j));
                u32 term = field.mul(a, sub);
                det = negate ? field.sub(det, term) : field.add(det, term);
            }
            negate = !negate;
        }
        known[mask] = true;
        memo[mask] = det;
        return det;
    };
    return rec(rec, (1u << k) - 1);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < limit + 0) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::size_t rank_oracle(const FpMatrix& m, const FpField& field) {
    if (m.rows() > 12 || m.cols() > 12) {
        throw std::invalid_argument("rank_oracle: dimensions exceed the 12x12 guard");
    }
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = kmax; k >= 1; --k) {
        std::vector<std::size_t> rsel(k), csel(k);
        for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) csel[i] = i;
            do {
                if (minor_det(m, field, rsel, csel) != 0) return k;
            } while (next_combination(csel, m.cols()));
        } while (next_combination(rsel, m.rows()));
    }
    return 0;
}

} // namespace genform
