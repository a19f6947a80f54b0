#include "sergeev/linalg.hpp"

#include "sergeev/errors.hpp"

namespace sergeev {

ScalarMatrix ScalarMatrix::identity(std::size_t k) {
    ScalarMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = Scalar(Rational(1));
    return m;
}

ScalarMatrix ScalarMatrix::multiply(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw SizeMismatch("matrix product shape");
    ScalarMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j).acc_mul(aik, o.at(k, j), 1);
            }
        }
    return out;
}

std::size_t rank_destructive(ScalarMatrix& m, Exec exec) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const Scalar pinv = m.at(rank, c).inverse();
        parallel_for(exec, rows - rank - 1, [&](std::size_t k) {
            const std::size_t r = rank + 1 + k;
            if (m.at(r, c).is_zero()) return;
            const Scalar factor = -(m.at(r, c) * pinv);
            m.at(r, c) = Scalar();
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (m.at(rank, j).is_zero()) continue;
                m.at(r, j).acc_mul(factor, m.at(rank, j), 1);
            }
        });
        ++rank;
    }
    return rank;
}

ScalarMatrix solve(ScalarMatrix a, ScalarMatrix b, Exec exec) {
    const std::size_t k = a.rows();
    if (a.cols() != k || b.rows() != k) throw SizeMismatch("solve needs a square system");
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = k;
        for (std::size_t r = c; r < k; ++r) {
            if (!a.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == k) throw ZeroDivision("singular system");
        if (pivot != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(a.at(pivot, j), a.at(c, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b.at(pivot, j), b.at(c, j));
        }
        const Scalar pinv = a.at(c, c).inverse();
        for (std::size_t j = 0; j < k; ++j) a.at(c, j) = a.at(c, j) * pinv;
        for (std::size_t j = 0; j < b.cols(); ++j) b.at(c, j) = b.at(c, j) * pinv;
        parallel_for(exec, k, [&](std::size_t r) {
            if (r == c || a.at(r, c).is_zero()) return;
            const Scalar factor = -a.at(r, c);
            a.at(r, c) = Scalar();
            for (std::size_t j = c + 1; j < k; ++j) {
                if (a.at(c, j).is_zero()) continue;
                a.at(r, j).acc_mul(factor, a.at(c, j), 1);
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(c, j).is_zero()) continue;
                b.at(r, j).acc_mul(factor, b.at(c, j), 1);
            }
        });
    }
    return b;
}

ScalarMatrix matrix_add(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatch("matrix sum shape");
    ScalarMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
    return out;
}

ScalarMatrix matrix_sub(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatch("matrix difference shape");
    ScalarMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) -= b.at(i, j);
    return out;
}

ScalarMatrix matrix_scaled(const ScalarMatrix& a, const Scalar& s) {
    ScalarMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            out.at(i, j).acc_mul(a.at(i, j), s, 1);
        }
    return out;
}

ScalarMatrix restrict_to_span(ScalarMatrix w, ScalarMatrix b, Exec exec) {
    const std::size_t rows = w.rows(), k = w.cols();
    if (b.rows() != rows) throw SizeMismatch("span restriction shape");
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = c; r < rows; ++r) {
            if (!w.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) throw InternalError("span matrix is rank-deficient");
        if (pivot != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(w.at(pivot, j), w.at(c, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b.at(pivot, j), b.at(c, j));
        }
        const Scalar pinv = w.at(c, c).inverse();
        for (std::size_t j = 0; j < k; ++j) w.at(c, j) = w.at(c, j) * pinv;
        for (std::size_t j = 0; j < b.cols(); ++j) b.at(c, j) = b.at(c, j) * pinv;
        parallel_for(exec, rows, [&](std::size_t r) {
            if (r == c || w.at(r, c).is_zero()) return;
            const Scalar factor = -w.at(r, c);
            w.at(r, c) = Scalar();
            for (std::size_t j = c + 1; j < k; ++j) {
                if (w.at(c, j).is_zero()) continue;
                w.at(r, j).acc_mul(factor, w.at(c, j), 1);
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(c, j).is_zero()) continue;
                b.at(r, j).acc_mul(factor, b.at(c, j), 1);
            }
        });
    }
    for (std::size_t r = k; r < rows; ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!b.at(r, j).is_zero()) throw InternalError("vector leaves the span");
    ScalarMatrix x(k, b.cols());
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(r, j) = b.at(r, j);
    return x;
}

} // namespace sergeev
