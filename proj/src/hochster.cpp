#include "srtop/hochster.hpp"

#include <algorithm>
#include <numeric>

namespace srtop {

Multidegree mask_to_multidegree(VertexMask U, int m) {
    Multidegree b(m, 0);
    for (int v : mask_to_vertices(U)) b[v - 1] = 1;
    return b;
}

VertexMask multidegree_to_mask(const Multidegree& b) {
    VertexMask U = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] > 1) throw UsageError("multidegree is not squarefree");
        if (b[i] == 1) U |= vertex_bit(static_cast<int>(i) + 1);
    }
    return U;
}

int multidegree_total(const Multidegree& b) {
    return std::accumulate(b.begin(), b.end(), 0);
}

void GradedBettiTable::finalize() {
    coarse.clear();
    projdim = -1;
    regularity = -1;
    for (const auto& [key, v] : multigraded) {
        if (v == 0) continue;
        auto [i, b] = key;
        int j = multidegree_total(b);
        coarse[{i, j}] += v;
        projdim = std::max(projdim, i);
        regularity = std::max(regularity, j - i);
    }
}

HomologicalInvariants homological_invariants_of(const GradedBettiTable& quotient_table) {
    HomologicalInvariants inv;
    inv.projdim_quotient = quotient_table.projdim;
    inv.projdim_ideal = quotient_table.projdim - 1;
    inv.regularity = quotient_table.regularity;
    for (const auto& [key, v] : quotient_table.coarse)
        if (v > 0 && key.first == quotient_table.projdim)
            inv.top_betti_degrees.push_back(key);
    return inv;
}

PoincarePairs poincare_sum_pairs(const GradedBettiTable& quotient_table, int m, int n) {
    // count below-top classes by topological degree d = 2j - i
    std::map<int, std::uint64_t> by_degree;
    std::uint64_t total = 0;
    for (const auto& [key, v] : quotient_table.coarse) {
        if (v == 0) continue;
        auto [i, j] = key;
        if (i == 0) continue;                       // beta_{0,0}
        if (i == quotient_table.projdim) continue;  // the single top class
        by_degree[2 * j - i] += v;
        total += v;
    }
    if (total % 2 != 0)
        throw InvariantViolation("poincare_sum_pairs: odd class count violates duality");

    PoincarePairs out;
    out.genus = total / 2;
    const int span = m + n;
    for (const auto& [d, count] : by_degree) {
        int dual = span - d;
        if (d > dual) continue;
        if (d == dual) {
            if (count % 2 != 0)
                throw InvariantViolation("poincare_sum_pairs: unpaired self-dual class");
            for (std::uint64_t k = 0; k < count / 2; ++k) out.pairs.push_back({d, d});
            continue;
        }
        auto it = by_degree.find(dual);
        std::uint64_t dual_count = it == by_degree.end() ? 0 : it->second;
        if (dual_count != count)
            throw InvariantViolation("poincare_sum_pairs: duality mismatch between degrees " +
                                     std::to_string(d) + " and " + std::to_string(dual));
        for (std::uint64_t k = 0; k < count; ++k) out.pairs.push_back({d, dual});
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

}  // namespace srtop
