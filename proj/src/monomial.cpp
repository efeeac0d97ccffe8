#include "srtop/monomial.hpp"

#include <algorithm>
#include <set>

namespace srtop {

bool divides(const Multidegree& a, const Multidegree& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Multidegree lcm_of(const Multidegree& a, const Multidegree& b) {
    Multidegree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

MonomialIdeal MonomialIdeal::from_generators(int m, std::vector<Multidegree> gens) {
    if (m < 1) throw ValidationError("monomial ideal needs at least one variable");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != m)
            throw ValidationError("generator exponent vector has wrong length");
        if (multidegree_total(g) == 0)
            throw ValidationError("the unit monomial cannot be a generator");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Multidegree> minimal;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (h != g && divides(h, g)) { redundant = true; break; }
        if (!redundant) minimal.push_back(g);
    }
    MonomialIdeal I;
    I.m = m;
    I.generators = std::move(minimal);
    return I;
}

bool MonomialIdeal::contains_monomial(const Multidegree& b) const {
    for (const auto& g : generators)
        if (divides(g, b)) return true;
    return false;
}

std::vector<int> MonomialIdeal::generator_degrees() const {
    std::set<int> degs;
    for (const auto& g : generators) degs.insert(multidegree_total(g));
    return {degs.begin(), degs.end()};
}

bool MonomialIdeal::is_equigenerated() const { return generator_degrees().size() == 1; }

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& K) {
    std::vector<Multidegree> gens;
    for (VertexMask n : K.minimal_nonfaces()) gens.push_back(mask_to_multidegree(n, K.m()));
    return MonomialIdeal::from_generators(K.m(), std::move(gens));
}

MonomialIdeal component_ideal(const MonomialIdeal& I, int d) {
    if (d < 0) throw UsageError("component degree must be nonnegative");
    std::set<Multidegree> out;
    for (const auto& g : I.generators) {
        int deficit = d - multidegree_total(g);
        if (deficit < 0) continue;
        // multiply g by every monomial of degree `deficit` (nondecreasing
        // variable order avoids revisiting the same product)
        struct Item { Multidegree mono; int rem; int minvar; };
        std::vector<Item> stack = {{g, deficit, 0}};
        while (!stack.empty()) {
            auto [mono, rem, minvar] = stack.back();
            stack.pop_back();
            if (rem == 0) {
                out.insert(mono);
                continue;
            }
            for (int v = minvar; v < I.m; ++v) {
                Multidegree next = mono;
                ++next[v];
                stack.push_back({std::move(next), rem - 1, v});
            }
        }
    }
    MonomialIdeal J;
    J.m = I.m;
    J.generators.assign(out.begin(), out.end());
    return J;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Multidegree& b) {
    if (static_cast<int>(b.size()) != I.m)
        throw UsageError("multidegree length does not match the ideal's variable count");
    std::vector<VertexMask> facets;
    for (const auto& g : I.generators) {
        if (!divides(g, b)) continue;
        VertexMask tau = 0;
        for (int v = 0; v < I.m; ++v)
            if (b[v] - g[v] >= 1) tau |= vertex_bit(v + 1);
        facets.push_back(tau);
    }
    if (facets.empty()) return SimplicialComplex::void_complex(I.m);
    return SimplicialComplex::unchecked(I.m, std::move(facets));
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& I) {
    std::set<Multidegree> lattice(I.generators.begin(), I.generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Multidegree> current(lattice.begin(), lattice.end());
        for (const auto& b : current)
            for (const auto& g : I.generators)
                if (lattice.insert(lcm_of(b, g)).second) grew = true;
    }
    return {lattice.begin(), lattice.end()};
}

GradedBettiTable quotient_of(const GradedBettiTable& ideal_table, int m) {
    GradedBettiTable T;
    T.module = "quotient";
    T.coeff = ideal_table.coeff;
    T.multigraded[{0, Multidegree(m, 0)}] = 1;
    for (const auto& [key, v] : ideal_table.multigraded) {
        auto [i, b] = key;
        T.multigraded[{i + 1, b}] = v;
    }
    T.finalize();
    return T;
}

}  // namespace srtop
