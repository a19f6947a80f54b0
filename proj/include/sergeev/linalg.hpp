#pragma once

#include <cstddef>
#include <vector>

#include "sergeev/parallel.hpp"
#include "sergeev/scalar.hpp"

namespace sergeev {

// Dense row-major matrix over the scalar field.
class ScalarMatrix {
  public:
    ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ScalarMatrix identity(std::size_t k);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ScalarMatrix multiply(const ScalarMatrix& o) const;
    bool operator==(const ScalarMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

// Exact Gaussian elimination; pivots are the first nonzero entry of each
// column in row order. The matrix is consumed. Row updates below the pivot
// run through parallel_for.
std::size_t rank_destructive(ScalarMatrix& m, Exec exec = Exec::Serial);

inline std::size_t rank_of(ScalarMatrix m, Exec exec = Exec::Serial) { return rank_destructive(m, exec); }

// Solve a·x = b for square invertible a by full Gauss-Jordan elimination.
// Throws ZeroDivision when a is singular.
ScalarMatrix solve(ScalarMatrix a, ScalarMatrix b, Exec exec = Exec::Serial);

ScalarMatrix matrix_add(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix matrix_sub(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix matrix_scaled(const ScalarMatrix& a, const Scalar& s);

// The unique x with w·x = b for a full-column-rank w, by Gauss-Jordan on the
// augmented matrix. Throws InternalError when w is rank-deficient or some
// column of b leaves the column span of w.
ScalarMatrix restrict_to_span(ScalarMatrix w, ScalarMatrix b, Exec exec = Exec::Serial);

} // namespace sergeev
