#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "srtop/errors.hpp"

namespace srtop {

// Dense row-major matrix over a field F (RationalField or PrimeField).
// Values are immutable by convention once handed out of the kernels below.
template <class F>
struct Matrix {
    using Elem = typename F::Elem;

    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(const F& f, std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, f.zero()) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Matrix identity(const F& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    std::vector<Elem> column(std::size_t c) const {
        std::vector<Elem> v(rows);
        for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
        return v;
    }

    void set_column(std::size_t c, const std::vector<Elem>& v) {
        for (std::size_t r = 0; r < rows; ++r) at(r, c) = v[r];
    }
};

template <class F>
struct ColumnReduction {
    std::size_t rank = 0;
    Matrix<F> kernel;                       // columns span ker(A); rank + kernel.cols == A.cols
    std::vector<std::size_t> pivot_columns; // original column index per pivot, in pivot-row order
    Matrix<F> reduced;                      // column echelon form of A
};

// Column-style Gaussian elimination over a field, tracking the transformation
// to recover a kernel basis. Deterministic: pivots scan rows top to bottom and
// take the leftmost usable column.
template <class F>
ColumnReduction<F> column_reduce(const F& f, const Matrix<F>& A) {
    Matrix<F> R = A;
    Matrix<F> T = Matrix<F>::identity(f, A.cols);
    std::vector<bool> used(A.cols, false);
    ColumnReduction<F> out;

    for (std::size_t r = 0; r < A.rows; ++r) {
        std::size_t pc = A.cols;
        for (std::size_t c = 0; c < A.cols; ++c)
            if (!used[c] && !f.is_zero(R.at(r, c))) { pc = c; break; }
        if (pc == A.cols) continue;
        used[pc] = true;
        out.pivot_columns.push_back(pc);
        auto s = f.inv(R.at(r, pc));
        for (std::size_t i = r; i < A.rows; ++i) R.at(i, pc) = f.mul(R.at(i, pc), s);
        for (std::size_t i = 0; i < A.cols; ++i) T.at(i, pc) = f.mul(T.at(i, pc), s);
        for (std::size_t c = 0; c < A.cols; ++c) {
            if (c == pc || f.is_zero(R.at(r, c))) continue;
            auto coef = R.at(r, c);
            for (std::size_t i = r; i < A.rows; ++i)
                R.at(i, c) = f.sub(R.at(i, c), f.mul(coef, R.at(i, pc)));
            for (std::size_t i = 0; i < A.cols; ++i)
                T.at(i, c) = f.sub(T.at(i, c), f.mul(coef, T.at(i, pc)));
        }
    }

    out.rank = out.pivot_columns.size();
    out.reduced = std::move(R);
    out.kernel = Matrix<F>(f, A.cols, A.cols - out.rank);
    std::size_t k = 0;
    for (std::size_t c = 0; c < A.cols; ++c) {
        if (used[c]) continue;
        for (std::size_t i = 0; i < A.cols; ++i) out.kernel.at(i, k) = T.at(i, c);
        ++k;
    }
    return out;
}

template <class F>
std::size_t matrix_rank(const F& f, const Matrix<F>& A) {
    return column_reduce(f, A).rank;
}

// Expresses target in the column span of basis; the basis columns must be
// linearly independent (else the coordinates would not be unique).
template <class F>
std::optional<std::vector<typename F::Elem>> solve_in_span(
    const F& f, const Matrix<F>& basis, const std::vector<typename F::Elem>& target) {
    if (basis.rows != target.size())
        throw UsageError("solve_in_span: dimension mismatch");

    // Row-reduce the augmented system [basis | target].
    Matrix<F> M(f, basis.rows, basis.cols + 1);
    for (std::size_t r = 0; r < basis.rows; ++r) {
        for (std::size_t c = 0; c < basis.cols; ++c) M.at(r, c) = basis.at(r, c);
        M.at(r, basis.cols) = target[r];
    }

    std::vector<std::size_t> pivot_row_of_col(basis.cols, M.rows);
    std::size_t row = 0, pivots = 0;
    for (std::size_t c = 0; c < basis.cols && row < M.rows; ++c) {
        std::size_t pr = M.rows;
        for (std::size_t r = row; r < M.rows; ++r)
            if (!f.is_zero(M.at(r, c))) { pr = r; break; }
        if (pr == M.rows) continue;
        if (pr != row)
            for (std::size_t j = 0; j <= basis.cols; ++j) std::swap(M.at(pr, j), M.at(row, j));
        auto s = f.inv(M.at(row, c));
        for (std::size_t j = c; j <= basis.cols; ++j) M.at(row, j) = f.mul(M.at(row, j), s);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == row || f.is_zero(M.at(r, c))) continue;
            auto coef = M.at(r, c);
            for (std::size_t j = c; j <= basis.cols; ++j)
                M.at(r, j) = f.sub(M.at(r, j), f.mul(coef, M.at(row, j)));
        }
        pivot_row_of_col[c] = row;
        ++row;
        ++pivots;
    }
    if (pivots != basis.cols)
        throw InvariantViolation("solve_in_span: basis columns are linearly dependent");

    // Any leftover nonzero entry in the target column marks inconsistency.
    for (std::size_t r = pivots; r < M.rows; ++r)
        if (!f.is_zero(M.at(r, basis.cols))) return std::nullopt;

    std::vector<typename F::Elem> x(basis.cols, f.zero());
    for (std::size_t c = 0; c < basis.cols; ++c)
        x[c] = M.at(pivot_row_of_col[c], basis.cols);
    return x;
}

// Matrix-vector and matrix-matrix products used by the homology engine.
template <class F>
std::vector<typename F::Elem> mat_vec(const F& f, const Matrix<F>& A,
                                      const std::vector<typename F::Elem>& v) {
    std::vector<typename F::Elem> out(A.rows, f.zero());
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t c = 0; c < A.cols; ++c)
            if (!f.is_zero(A.at(r, c)) && !f.is_zero(v[c]))
                out[r] = f.add(out[r], f.mul(A.at(r, c), v[c]));
    return out;
}

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
    Matrix<F> C(f, A.rows, B.cols);
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t k = 0; k < A.cols; ++k) {
            if (f.is_zero(A.at(r, k))) continue;
            for (std::size_t c = 0; c < B.cols; ++c)
                C.at(r, c) = f.add(C.at(r, c), f.mul(A.at(r, k), B.at(k, c)));
        }
    return C;
}

// Incrementally maintained reduced column echelon basis of a subspace.
// Used for strand subspaces: canonical dimension, cheap membership.
template <class F>
class EchelonBasis {
  public:
    explicit EchelonBasis(const F& f, std::size_t ambient) : f_(f), ambient_(ambient) {}

    std::size_t dim() const { return cols_.size(); }
    std::size_t ambient() const { return ambient_; }

    // Reduces v against the basis; if independent, inserts it and returns true.
    bool insert(std::vector<typename F::Elem> v) {
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            auto& c = v[pivots_[i]];
            if (!f_.is_zero(c)) {
                auto coef = c;
                for (std::size_t r = 0; r < ambient_; ++r)
                    v[r] = f_.sub(v[r], f_.mul(coef, cols_[i][r]));
            }
        }
        std::size_t piv = ambient_;
        for (std::size_t r = 0; r < ambient_; ++r)
            if (!f_.is_zero(v[r])) { piv = r; break; }
        if (piv == ambient_) return false;
        auto s = f_.inv(v[piv]);
        for (std::size_t r = 0; r < ambient_; ++r) v[r] = f_.mul(v[r], s);
        // back-reduce existing columns
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            auto coef = cols_[i][piv];
            if (f_.is_zero(coef)) continue;
            for (std::size_t r = 0; r < ambient_; ++r)
                cols_[i][r] = f_.sub(cols_[i][r], f_.mul(coef, v[r]));
        }
        cols_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    bool contains(std::vector<typename F::Elem> v) const {
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            auto& c = v[pivots_[i]];
            if (!f_.is_zero(c)) {
                auto coef = c;
                for (std::size_t r = 0; r < ambient_; ++r)
                    v[r] = f_.sub(v[r], f_.mul(coef, cols_[i][r]));
            }
        }
        for (std::size_t r = 0; r < ambient_; ++r)
            if (!f_.is_zero(v[r])) return false;
        return true;
    }

    const std::vector<std::vector<typename F::Elem>>& columns() const { return cols_; }

  private:
    F f_;
    std::size_t ambient_;
    std::vector<std::vector<typename F::Elem>> cols_;
    std::vector<std::size_t> pivots_;
};

}  // namespace srtop
