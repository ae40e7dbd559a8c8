#pragma once

// Dense matrices over F_p and exact rank by in-place row reduction.
// rank() is the engine's workhorse; rank_oracle() is an independent
// minor-expansion check for small matrices, used by the test suites.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "genform/fp.hpp"
#include "genform/parallel.hpp"

namespace genform {

class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint32_t* row(std::size_t i) const { return a_.data() + i * cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> a_;
};

// Rank of m over F_p by forward elimination with first-nonzero pivoting,
// overwriting m. Rows are fed to the echelon in order; reduction of
// distinct rows runs on the pool when one is given (the result is
// schedule-independent). Stops early once the rank saturates at cols.
std::size_t rank(FpMatrix& m, const FpField& field, ThreadPool* pool = nullptr);

// Rank as the size of the largest nonvanishing minor, determinants by
// Laplace expansion. Independent of the elimination path; requires
// max(rows, cols) <= 12.
std::size_t rank_oracle(const FpMatrix& m, const FpField& field);

} // namespace genform
