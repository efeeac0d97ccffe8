#pragma once

#include <optional>

#include "srtop/monomial.hpp"
#include "srtop/strand.hpp"

namespace srtop {

// Reisner's criterion: every link (including lk ∅ = K) has vanishing reduced
// homology below its dimension.
template <class F>
bool is_cohen_macaulay(const F& f, const SimplicialComplex& K) {
    if (K.is_void()) return false;
    for (int s = 0; s <= K.dim() + 1; ++s)
        for (VertexMask sigma : K.faces_of_size(s)) {
            auto L = link(K, sigma);
            auto b = reduced_betti_numbers(f, L);
            for (int q = -1; q < L.dim(); ++q)
                if (b[q + 1] != 0) return false;
        }
    return true;
}

// Over Z (equivalently over every field): links have vanishing integral
// homology below their dimension; top integral homology is always free.
bool is_cohen_macaulay_z(const SimplicialComplex& K);

template <class F>
bool is_sequentially_cm(const F& f, const SimplicialComplex& K) {
    if (K.is_void()) return false;
    for (int q = 1; q <= K.dim() + 1; ++q)
        if (!is_cohen_macaulay(f, generated_by_faces_of_size(K, q))) return false;
    return true;
}

bool is_sequentially_cm_z(const SimplicialComplex& K);

struct GlIndexResult {
    enum class Kind { NotEquigenerated, Finite, Infinite } kind = Kind::Infinite;
    int value = 0;  // meaningful for Finite

    bool at_least(int p) const { return kind == Kind::Infinite || (kind == Kind::Finite && value >= p); }
    std::string to_string() const;
};

// index(I_K) from an ideal-convention Betti table. The zero ideal counts as
// (vacuously) linear.
GlIndexResult green_lazarsfeld_index_of(const GradedBettiTable& ideal_table);

template <class F>
GlIndexResult green_lazarsfeld_index(const F& f, const SimplicialComplex& K,
                                     int max_m = kDefaultHochsterCap) {
    return green_lazarsfeld_index_of(betti_table(f, K, ModuleView::Ideal, max_m));
}

bool is_boundary_of_simplex(const SimplicialComplex& K);

// index(I_K) >= projdim(I_K) with I_K equigenerated. For Gorenstein* K other
// than the boundary of a simplex this must agree with the combinatorial
// criterion "odd-dimensional and neighbourly"; disagreement is a bug.
template <class F>
bool has_almost_linear_resolution(const F& f, const SimplicialComplex& K,
                                  int max_m = kDefaultHochsterCap) {
    auto ideal = betti_table(f, K, ModuleView::Ideal, max_m);
    auto gl = green_lazarsfeld_index_of(ideal);
    bool verdict = gl.kind != GlIndexResult::Kind::NotEquigenerated && gl.at_least(ideal.projdim);
    if (!is_boundary_of_simplex(K) && !ideal.multigraded.empty() && gorenstein_star_over(f, K)) {
        auto p = combinatorial_predicates(K);
        bool shortcut = K.dim() % 2 == 1 && p.is_neighbourly;
        if (shortcut != verdict)
            throw InvariantViolation(
                "almost-linear verdict disagrees with the odd-dimensional+neighbourly criterion");
    }
    return verdict;
}

struct FieldClassification {
    CoefficientSpec coeff = CoefficientSpec::rationals();
    bool is_cm = false;
    bool is_sequentially_cm_dual = false;
    bool is_gorenstein_star = false;
    GlIndexResult gl_index;
    bool has_linear_resolution = false;
    bool has_almost_linear_resolution = false;
    std::optional<bool> is_componentwise_linear;  // nullopt: generator cap hit
    std::optional<bool> is_cal;
    bool is_quasi_koszul = false;
    bool is_aqk = false;
    HomologicalInvariants invariants;
};

struct DerivedLabel {
    std::string name;
    std::string value;
    std::string provenance;  // the criterion that produced the label
};

struct ClassificationReport {
    int m = 0;
    int dim = -1;
    CombinatorialPredicates predicates{};
    std::optional<int> chordless_threshold;  // nullopt: chordal 1-skeleton
    bool chordless_known = true;             // false when the search was capped
    std::vector<FieldClassification> fields;
    std::vector<DerivedLabel> labels;
    std::optional<PoincarePairs> connected_sum_pairs;  // rational, when certified
};

struct ClassifyOptions {
    std::vector<CoefficientSpec> coeffs = {CoefficientSpec::rationals()};
    int max_m = kDefaultHochsterCap;
    int gen_cap = kDefaultGeneratorCap;
};

ClassificationReport classify(const SimplicialComplex& K, const ClassifyOptions& opt);

}  // namespace srtop
