#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "srtop/fields.hpp"
#include "srtop/matrix.hpp"
#include "srtop/snf.hpp"

using namespace srtop;

namespace {

// slow reference rank over a field: fresh row elimination, no pivot tricks
template <class F>
std::size_t naive_rank(const F& f, Matrix<F> A) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < A.cols && rank < A.rows; ++c) {
        std::size_t p = rank;
        while (p < A.rows && f.is_zero(A.at(p, c))) ++p;
        if (p == A.rows) continue;
        for (std::size_t k = 0; k < A.cols; ++k) std::swap(A.at(rank, k), A.at(p, k));
        auto inv = f.inv(A.at(rank, c));
        for (std::size_t r = 0; r < A.rows; ++r) {
            if (r == rank || f.is_zero(A.at(r, c))) continue;
            auto factor = f.mul(A.at(r, c), inv);
            for (std::size_t k = 0; k < A.cols; ++k)
                A.at(r, k) = f.sub(A.at(r, k), f.mul(factor, A.at(rank, k)));
        }
        ++rank;
    }
    return rank;
}

mpz_class det(const MatZ& A) {
    REQUIRE(A.rows == A.cols);
    const std::size_t n = A.rows;
    // Bareiss fraction-free elimination
    MatZ M = A;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(M.at(k, c), M.at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_class q = num / prev;
                M.at(i, j) = q;
            }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

MatZ random_matz(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    MatZ A(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            A.at(i, j) = static_cast<long>(rng() % 21) - 10;
    return A;
}

template <class F>
Matrix<F> to_field(const F& f, const MatZ& A) {
    Matrix<F> M(f, A.rows, A.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            M.at(i, j) = f.from_int(A.at(i, j).get_si());
    return M;
}

}  // namespace

TEST_CASE("column reduction on a pinned example") {
    RationalField f;
    // rank-2 matrix with a known kernel vector (1, 1, -1)
    Matrix<RationalField> A(f, 3, 3);
    long rows[3][3] = {{1, 2, 3}, {0, 1, 1}, {2, 5, 7}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A.at(i, j) = f.from_int(rows[i][j]);

    auto red = column_reduce(f, A);
    CHECK(red.rank == 2);
    CHECK(red.kernel.cols == 1);
    auto Av = mat_vec(f, A, red.kernel.column(0));
    for (const auto& x : Av) CHECK(f.is_zero(x));
}

TEST_CASE("solve_in_span distinguishes consistent from inconsistent systems") {
    RationalField f;
    Matrix<RationalField> B(f, 3, 2);
    B.at(0, 0) = f.from_int(1);
    B.at(1, 1) = f.from_int(1);

    auto x = solve_in_span(f, B, {f.from_int(3), f.from_int(-2), f.zero()});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == f.from_int(3));
    CHECK((*x)[1] == f.from_int(-2));

    CHECK_FALSE(solve_in_span(f, B, {f.zero(), f.zero(), f.one()}).has_value());
}

TEST_CASE("echelon basis insertion and membership") {
    PrimeField f(7);
    EchelonBasis<PrimeField> E(f, 3);
    CHECK(E.insert({f.from_int(1), f.from_int(2), f.from_int(0)}));
    CHECK(E.insert({f.from_int(0), f.from_int(1), f.from_int(5)}));
    // dependent on the first two
    CHECK_FALSE(E.insert({f.from_int(2), f.from_int(5), f.from_int(5)}));
    CHECK(E.dim() == 2);
    CHECK(E.contains({f.from_int(1), f.from_int(3), f.from_int(5)}));
    CHECK_FALSE(E.contains({f.zero(), f.zero(), f.one()}));
}

TEST_CASE("smith normal form of a pinned matrix") {
    // diag(2,6) up to unimodular moves: SNF should be (2, 6)
    MatZ A(2, 2);
    A.at(0, 0) = 2;
    A.at(0, 1) = 4;
    A.at(1, 0) = 2;
    A.at(1, 1) = 10;
    auto s = smith_normal_form(A);
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 2);
    CHECK(s.invariant_factors[1] == 6);
}

TEST_CASE("randomized kernel checks: SNF, rank-nullity, characteristic drop") {
    std::mt19937_64 rng(20240817);
    RationalField q;
    PrimeField f2(2), f3(3), f5(5);

    int checked = 0;
    while (checked < 500) {
        std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        MatZ A = random_matz(rng, r, c);
        ++checked;

        auto s = smith_normal_form(A);

        // left * A * right reconstructs the diagonal
        MatZ D = matz_mul(matz_mul(s.left, A), s.right);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                mpz_class expect = (i == j && i < s.invariant_factors.size())
                                       ? s.invariant_factors[i]
                                       : mpz_class(0);
                CHECK(D.at(i, j) == expect);
            }

        // transforms are unimodular; factors form a divisibility chain
        mpz_class dl = det(s.left), dr = det(s.right);
        CHECK((dl == 1 || dl == -1));
        CHECK((dr == 1 || dr == -1));
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }

        // rank over Q agrees between SNF, elimination, and the naive oracle
        std::size_t rank_q = s.invariant_factors.size();
        CHECK(matz_rank_over_q(A) == rank_q);
        auto Aq = to_field(q, A);
        auto red = column_reduce(q, Aq);
        CHECK(red.rank == rank_q);
        CHECK(naive_rank(q, Aq) == rank_q);

        // rank-nullity, and kernel columns really lie in the kernel
        CHECK(red.rank + red.kernel.cols == c);
        for (std::size_t k = 0; k < red.kernel.cols; ++k) {
            auto Av = mat_vec(q, Aq, red.kernel.column(k));
            for (const auto& x : Av) CHECK(q.is_zero(x));
        }

        // universal coefficients at the matrix level: the rank over F_p drops
        // from the rank over Q by the number of invariant factors p divides
        for (auto* fp : {&f2, &f3, &f5}) {
            std::size_t divisible = 0;
            for (const auto& d : s.invariant_factors)
                if (d % static_cast<long>(fp->p) == 0) ++divisible;
            auto Ap = to_field(*fp, A);
            CHECK(naive_rank(*fp, Ap) == rank_q - divisible);
            CHECK(matrix_rank(*fp, Ap) == rank_q - divisible);
        }
    }
    CHECK(checked == 500);
}
