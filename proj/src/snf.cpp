#include "srtop/snf.hpp"

#include <algorithm>

#include "srtop/errors.hpp"

namespace srtop {

MatZ MatZ::identity(std::size_t n) {
    MatZ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ matz_mul(const MatZ& A, const MatZ& B) {
    MatZ C(A.rows, B.cols);
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t k = 0; k < A.cols; ++k) {
            if (A.at(r, k) == 0) continue;
            for (std::size_t c = 0; c < B.cols; ++c)
                C.at(r, c) += A.at(r, k) * B.at(k, c);
        }
    return C;
}

namespace {

void swap_rows(MatZ& M, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
}

void swap_cols(MatZ& M, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
}

// row i -= q * row j
void row_axpy(MatZ& M, std::size_t i, std::size_t j, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < M.cols; ++c) M.at(i, c) -= q * M.at(j, c);
}

void col_axpy(MatZ& M, std::size_t i, std::size_t j, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < M.rows; ++r) M.at(r, i) -= q * M.at(r, j);
}

void negate_row(MatZ& M, std::size_t i) {
    for (std::size_t c = 0; c < M.cols; ++c) M.at(i, c) = -M.at(i, c);
}

}  // namespace

SnfResult smith_normal_form(const MatZ& A) {
    MatZ D = A;
    MatZ L = MatZ::identity(A.rows);
    MatZ R = MatZ::identity(A.cols);
    std::size_t t = 0;
    const std::size_t tmax = std::min(A.rows, A.cols);

    while (t < tmax) {
        // pivot: minimal absolute value among nonzero entries of the trailing block
        std::size_t pr = A.rows, pc = A.cols;
        mpz_class best;
        for (std::size_t r = t; r < A.rows; ++r)
            for (std::size_t c = t; c < A.cols; ++c) {
                const mpz_class& v = D.at(r, c);
                if (v == 0) continue;
                mpz_class av = abs(v);
                if (pr == A.rows || av < best) { best = av; pr = r; pc = c; }
            }
        if (pr == A.rows) break;  // trailing block is zero

        swap_rows(D, t, pr); swap_rows(L, t, pr);
        swap_cols(D, t, pc); swap_cols(R, t, pc);

        bool clean = true;
        for (std::size_t r = t + 1; r < A.rows; ++r) {
            if (D.at(r, t) == 0) continue;
            mpz_class q = D.at(r, t) / D.at(t, t);  // truncated division is fine: we re-loop
            row_axpy(D, r, t, q); row_axpy(L, r, t, q);
            if (D.at(r, t) != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < A.cols; ++c) {
            if (D.at(t, c) == 0) continue;
            mpz_class q = D.at(t, c) / D.at(t, t);
            col_axpy(D, c, t, q); col_axpy(R, c, t, q);
            if (D.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; pick a smaller pivot next round

        // enforce the divisibility chain: fold any non-divisible entry into row t
        std::size_t br = A.rows, bc = A.cols;
        for (std::size_t r = t + 1; r < A.rows && br == A.rows; ++r)
            for (std::size_t c = t + 1; c < A.cols; ++c)
                if (D.at(r, c) % D.at(t, t) != 0) { br = r; bc = c; break; }
        if (br != A.rows) {
            (void)bc;
            row_axpy(D, t, br, mpz_class(-1)); row_axpy(L, t, br, mpz_class(-1));
            continue;
        }

        if (D.at(t, t) < 0) { negate_row(D, t); negate_row(L, t); }
        ++t;
    }

    SnfResult out;
    out.left = std::move(L);
    out.right = std::move(R);
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(D.at(i, i));
    return out;
}

std::size_t matz_rank_over_q(const MatZ& A) {
    // fraction-free Gaussian elimination (Bareiss would be fancier; plain
    // elimination with gcd normalization is fine at desk scale)
    MatZ M = A;
    std::size_t rank = 0, row = 0;
    for (std::size_t c = 0; c < M.cols && row < M.rows; ++c) {
        std::size_t pr = M.rows;
        for (std::size_t r = row; r < M.rows; ++r)
            if (M.at(r, c) != 0) { pr = r; break; }
        if (pr == M.rows) continue;
        swap_rows(M, row, pr);
        for (std::size_t r = row + 1; r < M.rows; ++r) {
            if (M.at(r, c) == 0) continue;
            mpz_class g = gcd(M.at(r, c), M.at(row, c));
            mpz_class fr = M.at(row, c) / g, fp = M.at(r, c) / g;
            for (std::size_t j = c; j < M.cols; ++j)
                M.at(r, j) = M.at(r, j) * fr - M.at(row, j) * fp;
        }
        ++row; ++rank;
    }
    return rank;
}

}  // namespace srtop
