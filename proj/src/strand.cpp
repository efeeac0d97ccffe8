#include "srtop/strand.hpp"

#include <set>

namespace srtop {

std::vector<std::uint32_t> strand_prime_set(const SimplicialComplex& K, int max_m) {
    if (K.m() > max_m)
        throw CapExceeded("strand enumeration capped at m <= " + std::to_string(max_m) +
                          " (got m = " + std::to_string(K.m()) + "); raise --max-m to override");
    std::set<std::uint32_t> primes = {2, 3};
    const VertexMask full = full_mask(K.m());
    for (VertexMask U = 0;; ++U) {
        // torsion needs a 2-face, so H~_* of tiny subcomplexes is free
        if (popcount(U) >= 4) {
            auto H = integral_reduced_homology(full_subcomplex(K, U));
            for (std::uint32_t p : torsion_primes(H)) primes.insert(p);
        }
        if (U == full) break;
    }
    return {primes.begin(), primes.end()};
}

bool is_quasi_koszul_z(const SimplicialComplex& K, int max_m) {
    if (!is_quasi_koszul(RationalField{}, K, max_m)) return false;
    for (std::uint32_t p : strand_prime_set(K, max_m))
        if (!is_quasi_koszul(PrimeField{p}, K, max_m)) return false;
    return true;
}

bool is_almost_quasi_koszul_z(const SimplicialComplex& K, int max_m) {
    if (!is_almost_quasi_koszul(RationalField{}, K, max_m)) return false;
    for (std::uint32_t p : strand_prime_set(K, max_m))
        if (!is_almost_quasi_koszul(PrimeField{p}, K, max_m)) return false;
    return true;
}

}  // namespace srtop
