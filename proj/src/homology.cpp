#include "srtop/homology.hpp"

#include <algorithm>
#include <set>

namespace srtop {

ChainComplexData ChainComplexData::build(const SimplicialComplex& K) {
    ChainComplexData C;
    C.top_degree = K.dim();
    if (K.is_void()) return C;
    for (int q = 0; q <= K.dim() + 1; ++q) {
        C.faces.push_back(K.faces_of_size(q));
        C.index.emplace_back();
        auto& idx = C.index.back();
        for (std::size_t i = 0; i < C.faces[q].size(); ++i) idx[C.faces[q][i]] = i;
    }
    return C;
}

MatZ boundary_matrix_z(const ChainComplexData& C, int n) {
    MatZ M(C.count(n - 1), C.count(n));
    if (n < 0 || C.count(n) == 0 || C.count(n - 1) == 0) return M;
    const auto& cols = C.faces[n + 1];
    const auto& rowindex = C.index[n];
    for (std::size_t c = 0; c < cols.size(); ++c)
        for_each_boundary_face(cols[c], [&](VertexMask tau, int sign) {
            M.at(rowindex.at(tau), c) = sign;
        });
    return M;
}

IntegralHomology integral_reduced_homology(const SimplicialComplex& K) {
    IntegralHomology H;
    auto C = ChainComplexData::build(K);
    std::size_t rank_prev = 0;  // rank of d_n over Q, carried to the next degree
    for (int n = -1; n <= C.top_degree; ++n) {
        if (n == -1) rank_prev = 0;  // d_{-1} = 0
        auto snf = smith_normal_form(boundary_matrix_z(C, n + 1));
        IntegralHomology::Group g;
        std::size_t rank_next = snf.invariant_factors.size();
        g.free_rank = C.count(n) - rank_prev - rank_next;
        for (const auto& d : snf.invariant_factors)
            if (d > 1) g.torsion.push_back(d);
        H.groups.push_back(std::move(g));
        rank_prev = rank_next;
    }
    return H;
}

bool is_homology_sphere_z(const SimplicialComplex& K) {
    if (K.is_void()) return false;
    auto H = integral_reduced_homology(K);
    for (std::size_t i = 0; i < H.groups.size(); ++i) {
        if (!H.groups[i].torsion.empty()) return false;
        std::size_t expect = i + 1 == H.groups.size() ? 1 : 0;
        if (H.groups[i].free_rank != expect) return false;
    }
    return true;
}

bool gorenstein_star_over_z(const SimplicialComplex& K) {
    if (K.is_void() || combinatorial_predicates(K).is_cone) return false;
    for (int q = 0; q <= K.dim() + 1; ++q)
        for (VertexMask sigma : K.faces_of_size(q))
            if (!is_homology_sphere_z(link(K, sigma))) return false;
    return true;
}

std::vector<std::uint32_t> torsion_primes(const IntegralHomology& H) {
    std::set<std::uint32_t> primes;
    for (const auto& g : H.groups)
        for (mpz_class d : g.torsion) {
            mpz_class p = 2;
            while (d > 1) {
                if (d % p == 0) {
                    primes.insert(static_cast<std::uint32_t>(p.get_ui()));
                    while (d % p == 0) d /= p;
                } else {
                    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
                }
            }
        }
    return {primes.begin(), primes.end()};
}

}  // namespace srtop
