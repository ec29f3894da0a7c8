#include "torrig/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <stdexcept>

#include "torrig/errors.hpp"

namespace torrig {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::transposed() const {
    QMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QVec QMat::row_times(const QVec& v) const {
    if (static_cast<int>(v.size()) != rows_)
        throw structure_error("row_times: vector length does not match row count");
    QVec out(static_cast<std::size_t>(cols_), Rat(0));
    for (int i = 0; i < rows_; ++i) {
        if (v[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(i)] * (*this)(i, j);
    }
    return out;
}

namespace {

// Clear denominators row by row: returns an integer matrix with the same row
// space (each row scaled by the lcm of its denominators).
std::vector<std::vector<Int>> to_integer_rows(const QMat& m) {
    std::vector<std::vector<Int>> z(static_cast<std::size_t>(m.rows()),
                                    std::vector<Int>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            Rat scaled = m(i, j) * Rat(l);
            // exact by construction: l is a multiple of every denominator
            z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = scaled.get_num();
        }
    }
    return z;
}

// Fraction-free elimination core.  Reduces z in place, returns the rank; when
// det_out is non-null the matrix must be square and *det_out receives det.
int bareiss(std::vector<std::vector<Int>>& z, int rows, int cols, Int* det_out) {
    Int prev(1);         // divisor from the previous step (Bareiss invariant)
    int sign = 1;        // row-swap parity, only needed for determinants
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (z[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;  // column already clear below the pivot rows
        if (pivot != rank) {
            std::swap(z[static_cast<std::size_t>(pivot)], z[static_cast<std::size_t>(rank)]);
            sign = -sign;
        }
        const Int& p = z[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                Int t = z[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * p -
                        z[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                            z[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
                // exact division: guaranteed by the Sylvester identity
                mpz_divexact(z[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                                 .get_mpz_t(),
                             t.get_mpz_t(), prev.get_mpz_t());
            }
            z[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
        }
        prev = p;
        ++rank;
    }
    if (det_out) {
        if (rank < rows)
            *det_out = 0;
        else
            // after full elimination the last pivot is det up to swap parity
            *det_out = sign > 0 ? prev : Int(-prev);
    }
    return rank;
}

}  // namespace

int rank_bareiss(const QMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto z = to_integer_rows(m);
    return bareiss(z, m.rows(), m.cols(), nullptr);
}

Rat determinant(const QMat& m) {
    if (m.rows() != m.cols()) throw structure_error("determinant: matrix not square");
    if (m.rows() == 0) return Rat(1);
    // Track the row scalings so the integer determinant can be undone.
    Rat scale(1);
    QMat copy = m;
    auto z = to_integer_rows(copy);
    for (int i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= Rat(l);
    }
    Int det_z;
    bareiss(z, m.rows(), m.cols(), &det_z);
    Rat det = Rat(det_z) / scale;
    det.canonicalize();
    return det;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        Rat inv = 1 / m(row, col);
        for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rat f = m(r, col);
            for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<QVec> right_kernel(const QMat& m) {
    QMat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<QVec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVec v(static_cast<std::size_t>(m.cols()), Rat(0));
        v[static_cast<std::size_t>(free)] = 1;
        // back-substitute: pivot variable = -coefficient of the free column
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<std::size_t>(pivots[k])] = -r(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVec> left_kernel(const QMat& m) { return right_kernel(m.transposed()); }

int rank_float(const QMat& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).get_d();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > rel_tol * sv(0)) ++rank;
    return rank;
}

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw structure_error("dot: length mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace torrig
