#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "srtop/coeff.hpp"
#include "srtop/fields.hpp"
#include "srtop/homology.hpp"

namespace srtop {

// Exponent vector in N^m; squarefree multidegrees are 0/1 vectors.
using Multidegree = std::vector<std::uint32_t>;

Multidegree mask_to_multidegree(VertexMask U, int m);
VertexMask multidegree_to_mask(const Multidegree& b);  // requires 0/1 entries
int multidegree_total(const Multidegree& b);

// Graded Betti numbers of a module, multigraded and coarse.
struct GradedBettiTable {
    std::string module;  // "quotient" | "ideal" | "monomial"
    CoefficientSpec coeff = CoefficientSpec::rationals();

    std::map<std::pair<int, Multidegree>, std::uint64_t> multigraded;  // (i, b) -> beta
    std::map<std::pair<int, int>, std::uint64_t> coarse;               // (i, j) -> beta

    int projdim = 0;     // max i with a nonzero entry
    int regularity = 0;  // max j - i over nonzero entries

    std::uint64_t coarse_at(int i, int j) const {
        auto it = coarse.find({i, j});
        return it == coarse.end() ? 0 : it->second;
    }
    std::uint64_t multigraded_at(int i, const Multidegree& b) const {
        auto it = multigraded.find({i, b});
        return it == multigraded.end() ? 0 : it->second;
    }
    std::uint64_t squarefree_at(int i, VertexMask U, int m) const {
        return multigraded_at(i, mask_to_multidegree(U, m));
    }

    // recompute coarse, projdim, regularity from the multigraded entries
    void finalize();
};

inline constexpr int kDefaultHochsterCap = 24;
inline constexpr int kDefaultCokoszulCap = 16;

// beta_{i,U}(k[K]) = rank H~_{|U|-i-1}(K_U; k), over all U subseteq [m].
template <class F>
GradedBettiTable multigraded_betti(const F& f, const SimplicialComplex& K,
                                   int max_m = kDefaultHochsterCap) {
    if (K.m() > max_m)
        throw CapExceeded("Hochster enumeration capped at m <= " + std::to_string(max_m) +
                          " (got m = " + std::to_string(K.m()) + "); raise --max-m to override");
    GradedBettiTable T;
    T.module = "quotient";
    T.coeff = f.spec();
    const VertexMask full = full_mask(K.m());
    for (VertexMask U = 0;; ++U) {
        auto b = reduced_betti_numbers(f, full_subcomplex(K, U));
        for (int q = -1; q < static_cast<int>(b.size()) - 1; ++q) {
            if (b[q + 1] == 0) continue;
            int i = popcount(U) - q - 1;
            T.multigraded[{i, mask_to_multidegree(U, K.m())}] += b[q + 1];
        }
        if (U == full) break;
    }
    T.finalize();
    return T;
}

enum class ModuleView { Quotient, Ideal };

// Coarse table; the ideal view applies beta_{i,j}(I_K) = beta_{i+1,j}(k[K]).
template <class F>
GradedBettiTable betti_table(const F& f, const SimplicialComplex& K, ModuleView view,
                             int max_m = kDefaultHochsterCap) {
    GradedBettiTable T = multigraded_betti(f, K, max_m);
    if (view == ModuleView::Quotient) return T;
    GradedBettiTable I;
    I.module = "ideal";
    I.coeff = T.coeff;
    for (const auto& [key, v] : T.multigraded) {
        auto [i, b] = key;
        if (i == 0) continue;
        I.multigraded[{i - 1, b}] = v;
    }
    I.finalize();
    return I;
}

// Homology ranks of the co-Koszul complex R_*(K), an independent computation
// of H_*(Z_K; k). Basis v_I lambda_J over faces I and J subseteq [m] setminus I,
// graded by 2|I| + |J|; the differential moves a vertex of I into the wedge.
template <class F>
std::vector<std::size_t> cokoszul_homology_ranks(const F& f, const SimplicialComplex& K,
                                                 int max_m = kDefaultCokoszulCap) {
    if (K.m() > max_m)
        throw CapExceeded("co-Koszul computation capped at m <= " + std::to_string(max_m) +
                          " (got m = " + std::to_string(K.m()) + ")");
    const int m = K.m();
    const VertexMask full = full_mask(m);

    // basis per degree: (I, J) pairs with 2|I| + |J| = d
    std::vector<std::vector<std::pair<VertexMask, VertexMask>>> basis(2 * m + 1);
    std::vector<std::map<std::pair<VertexMask, VertexMask>, std::size_t>> index(2 * m + 1);
    for (int q = 0; q <= K.dim() + 1; ++q)
        for (VertexMask I : K.faces_of_size(q)) {
            VertexMask comp = full & ~I;
            VertexMask J = 0;
            while (true) {
                int d = 2 * popcount(I) + popcount(J);
                index[d][{I, J}] = basis[d].size();
                basis[d].push_back({I, J});
                if (J == comp) break;
                J = (J - comp) & comp;  // next submask of comp
            }
        }

    auto boundary = [&](int d) {
        Matrix<F> M(f, d >= 1 ? basis[d - 1].size() : 0, basis[d].size());
        if (d < 1) return M;
        for (std::size_t c = 0; c < basis[d].size(); ++c) {
            auto [I, J] = basis[d][c];
            VertexMask rest = I;
            while (rest) {
                VertexMask v = rest & (~rest + 1);
                rest &= rest - 1;
                int i = std::countr_zero(v) + 1;
                // lambda_i wedge lambda_J, reordered into ascending order
                int below = popcount(J & (v - 1));
                auto sign = below % 2 == 0 ? f.one() : f.neg(f.one());
                M.at(index[d - 1].at({I & ~v, J | v}), c) =
                    f.add(M.at(index[d - 1].at({I & ~v, J | v}), c), sign);
            }
        }
        return M;
    };

    std::vector<std::size_t> drank(2 * m + 2, 0);
    for (int d = 1; d <= 2 * m; ++d) drank[d] = matrix_rank(f, boundary(d));
    std::vector<std::size_t> ranks(2 * m + 1, 0);
    for (int d = 0; d <= 2 * m; ++d) ranks[d] = basis[d].size() - drank[d] - drank[d + 1];
    return ranks;
}

struct HomologicalInvariants {
    int projdim_quotient = 0;
    int projdim_ideal = -1;
    int regularity = 0;
    std::vector<std::pair<int, int>> top_betti_degrees;  // (i, j) entries at i = projdim
};

template <class F>
HomologicalInvariants homological_invariants(const F& f, const SimplicialComplex& K,
                                             int max_m = kDefaultHochsterCap) {
    return homological_invariants_of(betti_table(f, K, ModuleView::Quotient, max_m));
}

HomologicalInvariants homological_invariants_of(const GradedBettiTable& quotient_table);

struct PoincarePairs {
    std::vector<std::pair<int, int>> pairs;  // sphere-dimension pairs with multiplicity, sorted
    std::uint64_t genus = 0;
};

// Sphere-dimension pairs of the connected-sum decomposition of Z_K for
// Gorenstein* K != boundary of a simplex: each below-top class of topological
// degree d = 2j - i pairs with one of degree (m+n) - d.
PoincarePairs poincare_sum_pairs(const GradedBettiTable& quotient_table, int m, int n);

template <class F>
PoincarePairs poincare_sum_pairs(const F& f, const SimplicialComplex& K,
                                 int max_m = kDefaultHochsterCap) {
    if (!gorenstein_star_over(f, K))
        throw UsageError("poincare_sum_pairs requires a Gorenstein* complex over " +
                         f.spec().name());
    if (K.minimal_nonfaces().size() == 1 && K.minimal_nonfaces()[0] == full_mask(K.m()))
        throw UsageError("poincare_sum_pairs: the boundary of a simplex is excluded "
                         "(Z_K is a single sphere)");
    return poincare_sum_pairs(multigraded_betti(f, K, max_m), K.m(), K.dim() + 1);
}

// shared field dispatch: runs fn with RationalField or PrimeField
template <class Fn>
auto with_field(const CoefficientSpec& c, Fn&& fn) {
    if (c.kind == CoeffKind::Rationals) return fn(RationalField{});
    if (c.kind == CoeffKind::PrimeField) return fn(PrimeField{c.p});
    throw UsageError("expected a field coefficient spec, got " + c.name());
}

}  // namespace srtop
