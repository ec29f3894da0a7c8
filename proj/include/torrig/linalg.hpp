#ifndef TORRIG_LINALG_HPP
#define TORRIG_LINALG_HPP

/*
 * Exact dense linear algebra over the rationals.
 *
 * Two independent rank routes are kept deliberately separate:
 *
 *   - rank_bareiss: fraction-free Bareiss elimination on an integer matrix
 *     obtained by clearing row denominators.  Intermediate values stay
 *     integral and each step performs one exact division; this is the
 *     production rank algorithm.
 *
 *   - rref / rank via Gauss-Jordan over mpq: the pivot count of the reduced
 *     row echelon form, also the source of right/left kernel bases.
 *
 * The test suite cross-checks the two on every kind of matrix we build; the
 * library never substitutes one for the other.  Float-mode rank (singular
 * values of a double-precision copy) lives here too.
 *
 * All entries must be in canonical form (GMP's standing requirement for
 * mpq_t).  Values produced by arithmetic or parsing are; a caller building a
 * Rat through the raw two-argument constructor must canonicalize() it before
 * handing it in, or comparisons against it are undefined.
 */

#include <vector>

#include "torrig/rational.hpp"

namespace torrig {

// Dense row-major rational matrix.  Deliberately minimal: the library only
// needs construction, element access, and the solvers below.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0)) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return data_[idx(i, j)]; }
    const Rat& operator()(int i, int j) const { return data_[idx(i, j)]; }

    QMat transposed() const;

    // Row-vector times matrix: (1 x rows) * (rows x cols) -> length cols.
    QVec row_times(const QVec& v) const;

    bool operator==(const QMat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    int rows_, cols_;
    std::vector<Rat> data_;
};

// Exact rank by fraction-free Bareiss elimination (production route).
int rank_bareiss(const QMat& m);

// In-place reduction to reduced row echelon form; returns the pivot columns
// in increasing order (so rank = pivots.size()).  Oracle route for rank and
// the workhorse for kernel extraction.
std::vector<int> rref(QMat& m);

// Basis of the right kernel { x : M x = 0 }, one vector per free column of
// the RREF.  Empty when M has full column rank.
std::vector<QVec> right_kernel(const QMat& m);

// Basis of the left kernel { w : w M = 0 } = right kernel of the transpose.
std::vector<QVec> left_kernel(const QMat& m);

// Exact determinant (Bareiss); matrix must be square.
Rat determinant(const QMat& m);

// Numerical rank of a double-precision copy: singular values above
// rel_tol * sigma_max count.  The float-mode alternative to rank_bareiss.
int rank_float(const QMat& m, double rel_tol = 1e-9);

// Dot product of equal-length rational vectors.
Rat dot(const QVec& a, const QVec& b);

}  // namespace torrig

#endif  // TORRIG_LINALG_HPP
