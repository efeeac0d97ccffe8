#pragma once

#include <map>

#include "srtop/hochster.hpp"

namespace srtop {

// epsilon(j, U) = #{u in U : u < j}
inline int sweep_epsilon(int j, VertexMask U) { return popcount(U & (vertex_bit(j) - 1)); }

template <class F>
struct SubcomplexHomology {
    ChainComplexData chain;
    HomologyBasis<F> H;
};

template <class F>
SubcomplexHomology<F> subcomplex_homology(const F& f, const SimplicialComplex& K, VertexMask U) {
    SubcomplexHomology<F> s;
    s.chain = ChainComplexData::build(full_subcomplex(K, U));
    s.H = reduced_homology(f, s.chain);
    return s;
}

// Re-expresses a chain of K_U in the chain basis of K_V (U subseteq V); faces
// keep their global labels, so this is pure re-indexing.
template <class F>
std::vector<typename F::Elem> push_chain(const F& f, const ChainComplexData& src,
                                         const ChainComplexData& dst, int n,
                                         const std::vector<typename F::Elem>& chain) {
    std::vector<typename F::Elem> out(dst.count(n), f.zero());
    if (src.count(n) == 0) return out;
    const auto& faces = src.faces[n + 1];
    const auto& idx = dst.index[n + 1];
    for (std::size_t k = 0; k < faces.size(); ++k)
        if (!f.is_zero(chain[k])) out[idx.at(faces[k])] = chain[k];
    return out;
}

// Matrix of lambda_j: H~_q(K_U) -> H~_q(K_{U ∪ j}), chains mapped identically
// up to the sign (-1)^{epsilon(j,U)+q+1}. Zero when j in U.
template <class F>
Matrix<F> sweep_map(const F& f, const SimplicialComplex& K, VertexMask U, int j, int q) {
    auto src = subcomplex_homology(f, K, U);
    auto dst = subcomplex_homology(f, K, U | vertex_bit(j));
    Matrix<F> M(f, dst.H.betti(q), src.H.betti(q));
    if (M.cols == 0 || subset(vertex_bit(j), U)) return M;

    auto sign = (sweep_epsilon(j, U) + q + 1) % 2 == 0 ? f.one() : f.neg(f.one());
    const auto& reps = src.H.representatives[q + 1];
    for (std::size_t c = 0; c < reps.cols; ++c) {
        auto chain = push_chain(f, src.chain, dst.chain, q, reps.column(c));
        for (auto& x : chain) x = f.mul(x, sign);
        auto coords = homology_coordinates(f, dst.chain, dst.H, q, chain);
        for (std::size_t r = 0; r < coords.size(); ++r) M.at(r, c) = coords[r];
    }
    return M;
}

// Strand dimension against the ambient Betti number, keyed by homological
// degree i of k[K] and multidegree U.
struct StrandTable {
    int m = 0;
    int projdim_quotient = 0;  // max i with a nonzero ambient entry
    std::map<std::pair<int, VertexMask>, std::pair<std::size_t, std::size_t>>
        entries;  // (i, U) -> (strand_dim, beta)

    bool full_where(auto&& pred) const {
        for (const auto& [key, v] : entries)
            if (key.first >= 1 && pred(key.first, key.second) && v.first != v.second)
                return false;
        return true;
    }
    bool full() const {
        return full_where([](int, VertexMask) { return true; });
    }
    bool full_below(int p) const {
        return full_where([p](int i, VertexMask) { return i < p; });
    }
    bool full_proper() const {
        VertexMask top = full_mask(m);
        return full_where([top](int, VertexMask U) { return U != top; });
    }
};

// Quasi-linear strand by monotone propagation: seed the missing-face class at
// each minimal non-face I, then push along lambda_j in increasing |U|.
template <class F>
StrandTable quasi_linear_strand(const F& f, const SimplicialComplex& K,
                                int max_m = kDefaultHochsterCap) {
    if (K.m() > max_m)
        throw CapExceeded("strand enumeration capped at m <= " + std::to_string(max_m) +
                          " (got m = " + std::to_string(K.m()) + "); raise --max-m to override");
    const int m = K.m();
    const VertexMask full = full_mask(m);

    StrandTable T;
    T.m = m;
    T.projdim_quotient = -1;
    for (VertexMask U = 0;; ++U) {
        auto b = reduced_betti_numbers(f, full_subcomplex(K, U));
        for (int q = -1; q < static_cast<int>(b.size()) - 1; ++q) {
            if (b[q + 1] == 0) continue;
            int i = popcount(U) - q - 1;
            T.entries[{i, U}] = {0, b[q + 1]};
            T.projdim_quotient = std::max(T.projdim_quotient, i);
        }
        if (U == full) break;
    }

    std::map<VertexMask, SubcomplexHomology<F>> hom;
    auto ensure = [&](VertexMask U) -> SubcomplexHomology<F>& {
        auto it = hom.find(U);
        if (it == hom.end()) it = hom.emplace(U, subcomplex_homology(f, K, U)).first;
        return it->second;
    };

    std::map<VertexMask, std::map<int, EchelonBasis<F>>> strand;
    std::vector<std::vector<VertexMask>> seeds_by_size(m + 1);
    for (VertexMask I : K.minimal_nonfaces()) seeds_by_size[popcount(I)].push_back(I);

    // visit the subset lattice level by level; seeds enter at their own level
    std::vector<std::vector<VertexMask>> level(m + 2);
    for (int c = 2; c <= m; ++c)
        for (VertexMask I : seeds_by_size[c]) {
            auto& S = ensure(I);
            int q = c - 2;
            if (S.H.betti(q) != 1)
                throw InvariantViolation("missing-face class is not one-dimensional at " +
                                         mask_to_string(I));
            auto [it, fresh] = strand[I].try_emplace(q, f, 1);
            (void)fresh;
            it->second.insert({f.one()});
            level[c].push_back(I);
        }

    for (int c = 2; c <= m; ++c) {
        std::sort(level[c].begin(), level[c].end());
        level[c].erase(std::unique(level[c].begin(), level[c].end()), level[c].end());
        for (VertexMask U : level[c]) {
            auto& src = ensure(U);
            for (auto& [q, basis] : strand[U]) {
                if (basis.dim() == 0) continue;
                const auto& reps = src.H.representatives[q + 1];
                for (int j = 1; j <= m; ++j) {
                    if (subset(vertex_bit(j), U)) continue;
                    VertexMask V = U | vertex_bit(j);
                    auto& dst = ensure(V);
                    auto sign = (sweep_epsilon(j, U) + q + 1) % 2 == 0 ? f.one() : f.neg(f.one());
                    for (const auto& col : basis.columns()) {
                        auto chain = mat_vec(f, reps, col);
                        auto pushed = push_chain(f, src.chain, dst.chain, q, chain);
                        for (auto& x : pushed) x = f.mul(x, sign);
                        auto coords = homology_coordinates(f, dst.chain, dst.H, q, pushed);
                        auto [it, fresh] = strand[V].try_emplace(q, f, dst.H.betti(q));
                        (void)fresh;
                        it->second.insert(std::move(coords));
                    }
                    if (strand[V].at(q).dim() > 0) level[c + 1].push_back(V);
                }
            }
        }
    }

    for (const auto& [U, per_q] : strand)
        for (const auto& [q, basis] : per_q) {
            if (basis.dim() == 0) continue;
            int i = popcount(U) - q - 1;
            auto it = T.entries.find({i, U});
            if (it == T.entries.end() || basis.dim() > it->second.second)
                throw InvariantViolation("strand exceeds ambient homology at " +
                                         mask_to_string(U));
            it->second.first = basis.dim();
        }
    return T;
}

template <class F>
bool is_quasi_koszul(const F& f, const SimplicialComplex& K, int max_m = kDefaultHochsterCap) {
    return quasi_linear_strand(f, K, max_m).full();
}

template <class F>
bool is_almost_quasi_koszul(const F& f, const SimplicialComplex& K,
                            int max_m = kDefaultHochsterCap) {
    auto T = quasi_linear_strand(f, K, max_m);
    return T.full_below(T.projdim_quotient);
}

// Torsion primes of the integral homology of every full subcomplex, plus the
// floor set {2, 3}: the only characteristics where field ranks can move.
std::vector<std::uint32_t> strand_prime_set(const SimplicialComplex& K,
                                            int max_m = kDefaultHochsterCap);

// Over Z: over Q and over F_p for every prime in strand_prime_set.
bool is_quasi_koszul_z(const SimplicialComplex& K, int max_m = kDefaultHochsterCap);
bool is_almost_quasi_koszul_z(const SimplicialComplex& K, int max_m = kDefaultHochsterCap);

// I_{K minus i} quasi-Koszul for every vertex i.
template <class F>
bool deletion_criterion(const F& f, const SimplicialComplex& K, int max_m = kDefaultHochsterCap) {
    for (int v = 1; v <= K.m(); ++v)
        if (!is_quasi_koszul(f, delete_vertex(K, v), max_m)) return false;
    return true;
}

}  // namespace srtop
