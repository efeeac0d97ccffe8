#pragma once

#include <map>

#include "srtop/hochster.hpp"

namespace srtop {

struct MonomialIdeal {
    int m = 0;
    std::vector<Multidegree> generators;  // minimal, sorted

    // validates lengths and nonnegativity, removes divisible generators
    static MonomialIdeal from_generators(int m, std::vector<Multidegree> gens);

    bool is_zero() const { return generators.empty(); }
    bool contains_monomial(const Multidegree& b) const;  // some generator divides b
    std::vector<int> generator_degrees() const;          // distinct, ascending
    bool is_equigenerated() const;
};

// x_a | x_b
bool divides(const Multidegree& a, const Multidegree& b);
Multidegree lcm_of(const Multidegree& a, const Multidegree& b);

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& K);

// (I)_{<d>}: the ideal generated by every degree-d monomial of I.
MonomialIdeal component_ideal(const MonomialIdeal& I, int d);

// K^b(I) = {squarefree tau <= b : x^{b-tau} in I}; facets are the maximal
// masks {i : b_i - g_i >= 1} over generators g dividing x^b. Void when
// x^b is not in I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Multidegree& b);

// All joins of nonempty generator subsets, deduplicated.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& I);

inline constexpr int kDefaultGeneratorCap = 25;
inline constexpr int kDefaultTaylorCap = 16;

// beta_{i,b}(I) = dim H~_{i-1}(K^b(I); k) over the lcm lattice, i <= max_i.
// Module convention is the ideal itself (beta_0 counts generators).
template <class F>
GradedBettiTable monomial_betti_table(const F& f, const MonomialIdeal& I, int max_i,
                                      int gen_cap = kDefaultGeneratorCap) {
    if (static_cast<int>(I.generators.size()) > gen_cap)
        throw CapExceeded("monomial Betti computation capped at " + std::to_string(gen_cap) +
                          " generators (got " + std::to_string(I.generators.size()) + ")");
    GradedBettiTable T;
    T.module = "monomial";
    T.coeff = f.spec();
    for (const auto& b : lcm_lattice(I)) {
        auto Kb = upper_koszul_complex(I, b);
        auto betti = reduced_betti_numbers(f, Kb);
        for (int q = -1; q < static_cast<int>(betti.size()) - 1; ++q) {
            if (betti[q + 1] == 0) continue;
            int i = q + 1;
            if (i > max_i) continue;
            T.multigraded[{i, b}] += betti[q + 1];
        }
    }
    T.finalize();
    return T;
}

// Independent oracle: the Taylor complex on the generators, reduced modulo
// the maximal ideal (only differential entries with lcm ratio 1 survive),
// split by multidegree. Same module convention as monomial_betti_table.
template <class F>
GradedBettiTable taylor_betti_oracle(const F& f, const MonomialIdeal& I,
                                     int gen_cap = kDefaultTaylorCap) {
    const int r = static_cast<int>(I.generators.size());
    if (r > gen_cap)
        throw CapExceeded("Taylor oracle capped at " + std::to_string(gen_cap) +
                          " generators (got " + std::to_string(r) + ")");
    GradedBettiTable T;
    T.module = "monomial";
    T.coeff = f.spec();
    if (r == 0) return T;

    // group subsets by their lcm
    std::map<Multidegree, std::vector<std::uint32_t>> groups;
    for (std::uint32_t S = 1; S < (1u << r); ++S) {
        Multidegree b(I.m, 0);
        for (int g = 0; g < r; ++g)
            if (S & (1u << g)) b = lcm_of(b, I.generators[g]);
        groups[b].push_back(S);
    }

    for (const auto& [b, subsets] : groups) {
        // chain group in homological degree i spanned by subsets of size i+1
        std::map<std::uint32_t, std::size_t> index;
        std::vector<std::vector<std::uint32_t>> by_size(r + 1);
        for (std::uint32_t S : subsets) by_size[std::popcount(S)].push_back(S);
        for (auto& v : by_size)
            for (std::size_t k = 0; k < v.size(); ++k) index[v[k]] = k;

        auto boundary = [&](int size) {  // from subsets of `size` to size-1
            Matrix<F> M(f, size >= 2 ? by_size[size - 1].size() : 0, by_size[size].size());
            if (size < 2) return M;
            for (std::size_t c = 0; c < by_size[size].size(); ++c) {
                std::uint32_t S = by_size[size][c];
                int pos = 0;
                for (int g = 0; g < r; ++g) {
                    if (!(S & (1u << g))) continue;
                    std::uint32_t Sg = S & ~(1u << g);
                    Multidegree lb(I.m, 0);
                    for (int h = 0; h < r; ++h)
                        if (Sg & (1u << h)) lb = lcm_of(lb, I.generators[h]);
                    if (lb == b) {  // unit coefficient survives mod the maximal ideal
                        auto sign = pos % 2 == 0 ? f.one() : f.neg(f.one());
                        M.at(index.at(Sg), c) = sign;
                    }
                    ++pos;
                }
            }
            return M;
        };

        std::vector<std::size_t> drank(r + 2, 0);
        for (int s = 2; s <= r; ++s)
            if (!by_size[s].empty()) drank[s] = matrix_rank(f, boundary(s));
        for (int s = 1; s <= r; ++s) {
            std::size_t h = by_size[s].size() - drank[s] - drank[s + 1];
            if (h > 0) T.multigraded[{s - 1, b}] += h;
        }
    }
    T.finalize();
    return T;
}

// Shift an ideal-convention table to the quotient S/I (adds beta_{0,0} = 1).
GradedBettiTable quotient_of(const GradedBettiTable& ideal_table, int m);

struct ComponentwiseProfile {
    int r = 0;                      // number of linear steps demanded
    std::map<int, bool> per_degree; // d -> (I_K)_{<d>} satisfies N_{d,r}
    bool linear_first_r = false;    // all evaluated degrees pass
};

// Checks N_{d,r} for (I_K)_{<d>} with d over the generator degrees of I_K
// (all degrees from min to max when all_degrees is set). Stops at the first
// failing degree.
template <class F>
ComponentwiseProfile componentwise_profile(const F& f, const SimplicialComplex& K, int r,
                                           int gen_cap = kDefaultGeneratorCap,
                                           bool all_degrees = false) {
    MonomialIdeal I = stanley_reisner_ideal(K);
    ComponentwiseProfile P;
    P.r = r;
    P.linear_first_r = true;
    if (I.is_zero()) return P;

    std::vector<int> degrees = I.generator_degrees();
    if (all_degrees) {
        degrees.clear();
        auto gd = I.generator_degrees();
        for (int d = gd.front(); d <= gd.back(); ++d) degrees.push_back(d);
    }
    for (int d : degrees) {
        MonomialIdeal J = component_ideal(I, d);
        auto T = monomial_betti_table(f, J, r, gen_cap);
        bool ok = true;
        for (const auto& [key, v] : T.coarse) {
            auto [i, j] = key;
            if (v > 0 && i < r && j != i + d) { ok = false; break; }
        }
        P.per_degree[d] = ok;
        if (!ok) { P.linear_first_r = false; break; }
    }
    return P;
}

}  // namespace srtop
