#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <vector>

namespace srtop {

// Dense integer matrix (arbitrary precision), row-major.
struct MatZ {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    MatZ() = default;
    MatZ(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static MatZ identity(std::size_t n);
};

struct SnfResult {
    std::vector<mpz_class> invariant_factors;  // d_1 | d_2 | ..., all > 0
    MatZ left;   // unimodular, rows x rows
    MatZ right;  // unimodular, cols x cols
};

// left * A * right = diag(invariant_factors). Pivot selection by minimal
// absolute value to limit coefficient growth.
SnfResult smith_normal_form(const MatZ& A);

MatZ matz_mul(const MatZ& A, const MatZ& B);
std::size_t matz_rank_over_q(const MatZ& A);

}  // namespace srtop
