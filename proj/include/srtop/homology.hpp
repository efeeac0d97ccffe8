#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "srtop/complex.hpp"
#include "srtop/matrix.hpp"
#include "srtop/snf.hpp"

namespace srtop {

// Basis data for the augmented (reduced) simplicial chain complex of K.
// Chain degree n is spanned by the faces of cardinality n+1; degree -1 is
// spanned by the empty face. Faces keep their global vertex labels, so
// boundary signs agree across full subcomplexes of the same ambient [m].
struct ChainComplexData {
    int top_degree = -2;                          // dim(K); -2 when void
    std::vector<std::vector<VertexMask>> faces;   // faces[q] = faces of size q, lex sorted
    std::vector<std::unordered_map<VertexMask, std::size_t>> index;

    static ChainComplexData build(const SimplicialComplex& K);

    std::size_t count(int degree) const {
        int q = degree + 1;
        if (q < 0 || q >= static_cast<int>(faces.size())) return 0;
        return faces[q].size();
    }
};

// Boundary faces of sigma with simplicial signs: dropping the k-th smallest
// vertex carries (-1)^k.
inline void for_each_boundary_face(VertexMask sigma, auto&& fn) {
    int k = 0;
    VertexMask rest = sigma;
    while (rest) {
        VertexMask v = rest & (~rest + 1);
        fn(sigma & ~v, k % 2 == 0 ? 1 : -1);
        rest &= rest - 1;
        ++k;
    }
}

// Matrix of the boundary map C_n -> C_{n-1} (degree -1 maps to zero).
template <class F>
Matrix<F> boundary_matrix(const F& f, const ChainComplexData& C, int n) {
    Matrix<F> M(f, C.count(n - 1), C.count(n));
    if (n < 0 || C.count(n) == 0 || C.count(n - 1) == 0) return M;
    const auto& cols = C.faces[n + 1];
    const auto& rowindex = C.index[n];
    for (std::size_t c = 0; c < cols.size(); ++c)
        for_each_boundary_face(cols[c], [&](VertexMask tau, int sign) {
            M.at(rowindex.at(tau), c) = sign > 0 ? f.one() : f.neg(f.one());
        });
    return M;
}

MatZ boundary_matrix_z(const ChainComplexData& C, int n);

// Reduced homology with tracked bases, one entry per degree n in [-1, dim]
// at index n+1.
template <class F>
struct HomologyBasis {
    std::vector<std::size_t> rank;
    std::vector<Matrix<F>> representatives;  // cycle columns, one per class
    std::vector<Matrix<F>> boundary_image;   // echelon basis of im d_{n+1}

    std::size_t betti(int degree) const {
        int q = degree + 1;
        if (q < 0 || q >= static_cast<int>(rank.size())) return 0;
        return rank[q];
    }
};

template <class F>
HomologyBasis<F> reduced_homology(const F& f, const ChainComplexData& C) {
    HomologyBasis<F> H;
    const int top = C.top_degree;
    for (int n = -1; n <= top; ++n) {
        auto dn = column_reduce(f, boundary_matrix(f, C, n));
        auto dnext = column_reduce(f, boundary_matrix(f, C, n + 1));

        // image basis: the pivot columns of the echelon form of d_{n+1}
        Matrix<F> image(f, C.count(n), dnext.rank);
        {
            std::size_t k = 0;
            for (std::size_t pc : dnext.pivot_columns)
                image.set_column(k++, dnext.reduced.column(pc));
        }

        // extend the image to a basis of the cycles; new columns represent classes
        EchelonBasis<F> span(f, C.count(n));
        for (std::size_t c = 0; c < image.cols; ++c) span.insert(image.column(c));
        std::vector<std::size_t> rep_cols;
        for (std::size_t c = 0; c < dn.kernel.cols; ++c)
            if (span.insert(dn.kernel.column(c))) rep_cols.push_back(c);

        Matrix<F> reps(f, C.count(n), rep_cols.size());
        for (std::size_t k = 0; k < rep_cols.size(); ++k)
            reps.set_column(k, dn.kernel.column(rep_cols[k]));

        if (dn.kernel.cols != dnext.rank + rep_cols.size())
            throw InvariantViolation("homology: cycle space dimension mismatch");

        H.rank.push_back(rep_cols.size());
        H.representatives.push_back(std::move(reps));
        H.boundary_image.push_back(std::move(image));
    }
    return H;
}

// Coordinates of a cycle's class in the representative basis of H_n.
// Throws InvariantViolation when the chain is not a cycle of the complex.
template <class F>
std::vector<typename F::Elem> homology_coordinates(const F& f, const ChainComplexData& C,
                                                   const HomologyBasis<F>& H, int n,
                                                   const std::vector<typename F::Elem>& cycle) {
    const auto& image = H.boundary_image[n + 1];
    const auto& reps = H.representatives[n + 1];
    Matrix<F> basis(f, C.count(n), image.cols + reps.cols);
    for (std::size_t c = 0; c < image.cols; ++c) basis.set_column(c, image.column(c));
    for (std::size_t c = 0; c < reps.cols; ++c) basis.set_column(image.cols + c, reps.column(c));
    auto x = solve_in_span(f, basis, cycle);
    if (!x) throw InvariantViolation("homology_coordinates: chain is not a cycle");
    return std::vector<typename F::Elem>(x->begin() + image.cols, x->end());
}

template <class F>
std::vector<std::size_t> reduced_betti_numbers(const F& f, const SimplicialComplex& K) {
    auto C = ChainComplexData::build(K);
    std::vector<std::size_t> out;
    for (int n = -1; n <= C.top_degree; ++n) {
        auto dn = column_reduce(f, boundary_matrix(f, C, n));
        auto rnext = matrix_rank(f, boundary_matrix(f, C, n + 1));
        out.push_back(dn.kernel.cols - rnext);
    }
    return out;
}

template <class F>
std::size_t reduced_betti_number(const F& f, const SimplicialComplex& K, int degree) {
    auto C = ChainComplexData::build(K);
    if (degree < -1 || degree > C.top_degree) return 0;
    auto dn = column_reduce(f, boundary_matrix(f, C, degree));
    auto rnext = matrix_rank(f, boundary_matrix(f, C, degree + 1));
    return dn.kernel.cols - rnext;
}

// H~_n(K; Z) as free rank plus invariant factors > 1, index n+1 as above.
struct IntegralHomology {
    struct Group {
        std::size_t free_rank = 0;
        std::vector<mpz_class> torsion;  // divisibility chain, each > 1
    };
    std::vector<Group> groups;

    const Group* group(int degree) const {
        int q = degree + 1;
        if (q < 0 || q >= static_cast<int>(groups.size())) return nullptr;
        return &groups[q];
    }
};

IntegralHomology integral_reduced_homology(const SimplicialComplex& K);

// Primes dividing any torsion coefficient in any degree.
std::vector<std::uint32_t> torsion_primes(const IntegralHomology& H);

// Gorenstein* over a field: K is not a cone and the link of every face
// (including lk ∅ = K) is a homology sphere of its dimension.
template <class F>
bool gorenstein_star_over(const F& f, const SimplicialComplex& K);

// All reduced homology vanishes except rank one in the top degree dim(K).
// ({∅} counts: it is the (-1)-sphere.)
template <class F>
bool is_homology_sphere(const F& f, const SimplicialComplex& K) {
    if (K.is_void()) return false;
    auto b = reduced_betti_numbers(f, K);
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (b[i] != 0) return false;
    return b.back() == 1;
}

bool is_homology_sphere_z(const SimplicialComplex& K);

template <class F>
bool gorenstein_star_over(const F& f, const SimplicialComplex& K) {
    if (K.is_void() || combinatorial_predicates(K).is_cone) return false;
    for (int q = 0; q <= K.dim() + 1; ++q)
        for (VertexMask sigma : K.faces_of_size(q))
            if (!is_homology_sphere(f, link(K, sigma))) return false;
    return true;
}

bool gorenstein_star_over_z(const SimplicialComplex& K);

}  // namespace srtop
