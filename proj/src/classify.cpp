#include "srtop/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace srtop {

bool is_cohen_macaulay_z(const SimplicialComplex& K) {
    if (K.is_void()) return false;
    for (int s = 0; s <= K.dim() + 1; ++s)
        for (VertexMask sigma : K.faces_of_size(s)) {
            auto L = link(K, sigma);
            auto H = integral_reduced_homology(L);
            for (int q = -1; q < L.dim(); ++q) {
                const auto* g = H.group(q);
                if (g && (g->free_rank != 0 || !g->torsion.empty())) return false;
            }
        }
    return true;
}

bool is_sequentially_cm_z(const SimplicialComplex& K) {
    if (K.is_void()) return false;
    for (int q = 1; q <= K.dim() + 1; ++q)
        if (!is_cohen_macaulay_z(generated_by_faces_of_size(K, q))) return false;
    return true;
}

std::string GlIndexResult::to_string() const {
    switch (kind) {
        case Kind::NotEquigenerated: return "not-equigenerated";
        case Kind::Infinite: return "infinity";
        case Kind::Finite: return std::to_string(value);
    }
    return "?";
}

GlIndexResult green_lazarsfeld_index_of(const GradedBettiTable& ideal_table) {
    GlIndexResult r;
    if (ideal_table.multigraded.empty()) return r;  // zero ideal: vacuously linear

    std::set<int> gen_degrees;
    for (const auto& [key, v] : ideal_table.coarse)
        if (key.first == 0 && v > 0) gen_degrees.insert(key.second);
    if (gen_degrees.size() != 1) {
        r.kind = GlIndexResult::Kind::NotEquigenerated;
        return r;
    }
    const int d = *gen_degrees.begin();
    for (const auto& [key, v] : ideal_table.coarse) {
        auto [i, j] = key;
        if (v > 0 && j != i + d) {
            if (r.kind == GlIndexResult::Kind::Infinite || i < r.value) {
                r.kind = GlIndexResult::Kind::Finite;
                r.value = i;
            }
        }
    }
    return r;
}

bool is_boundary_of_simplex(const SimplicialComplex& K) {
    return K.minimal_nonfaces().size() == 1 && K.minimal_nonfaces()[0] == full_mask(K.m());
}

namespace {

// three-valued conjunction: false dominates, then unknown
std::optional<bool> and_optional(std::optional<bool> a, std::optional<bool> b) {
    if ((a && !*a) || (b && !*b)) return false;
    if (!a || !b) return std::nullopt;
    return true;
}

GradedBettiTable ideal_view(const GradedBettiTable& quotient) {
    GradedBettiTable I;
    I.module = "ideal";
    I.coeff = quotient.coeff;
    for (const auto& [key, v] : quotient.multigraded) {
        auto [i, b] = key;
        if (i > 0) I.multigraded[{i - 1, b}] = v;
    }
    I.finalize();
    return I;
}

template <class F>
bool almost_linear_from(const F& f, const SimplicialComplex& K, const GradedBettiTable& ideal) {
    auto gl = green_lazarsfeld_index_of(ideal);
    bool verdict =
        gl.kind != GlIndexResult::Kind::NotEquigenerated && gl.at_least(ideal.projdim);
    if (!is_boundary_of_simplex(K) && !ideal.multigraded.empty() && gorenstein_star_over(f, K)) {
        auto p = combinatorial_predicates(K);
        bool shortcut = K.dim() % 2 == 1 && p.is_neighbourly;
        if (shortcut != verdict)
            throw InvariantViolation(
                "almost-linear verdict disagrees with the odd-dimensional+neighbourly criterion");
    }
    return verdict;
}

template <class F>
FieldClassification classify_field(const F& f, const SimplicialComplex& K,
                                   const ClassifyOptions& opt) {
    FieldClassification r;
    r.coeff = f.spec();

    auto T = multigraded_betti(f, K, opt.max_m);
    r.invariants = homological_invariants_of(T);
    auto ideal = ideal_view(T);
    r.gl_index = green_lazarsfeld_index_of(ideal);
    r.has_linear_resolution = r.gl_index.kind == GlIndexResult::Kind::Infinite;
    r.has_almost_linear_resolution = almost_linear_from(f, K, ideal);

    r.is_cm = is_cohen_macaulay(f, K);
    r.is_gorenstein_star = gorenstein_star_over(f, K);
    r.is_sequentially_cm_dual =
        K.contains(full_mask(K.m())) ? true : is_sequentially_cm(f, alexander_dual(K));

    auto strand = quasi_linear_strand(f, K, opt.max_m);
    r.is_quasi_koszul = strand.full();
    r.is_aqk = strand.full_below(strand.projdim_quotient);

    try {
        r.is_componentwise_linear =
            componentwise_profile(f, K, K.m(), opt.gen_cap).linear_first_r;
    } catch (const CapExceeded&) {
        r.is_componentwise_linear = std::nullopt;
    }
    try {
        int steps = std::max(0, r.invariants.projdim_ideal);
        r.is_cal = componentwise_profile(f, K, steps, opt.gen_cap).linear_first_r;
    } catch (const CapExceeded&) {
        r.is_cal = std::nullopt;
    }
    return r;
}

FieldClassification classify_integers(const SimplicialComplex& K, const ClassifyOptions& opt) {
    std::vector<CoefficientSpec> specs = {CoefficientSpec::rationals()};
    for (std::uint32_t p : strand_prime_set(K, opt.max_m))
        specs.push_back(CoefficientSpec::prime_field(p));

    FieldClassification agg;
    agg.coeff = CoefficientSpec::integers();
    agg.is_cm = is_cohen_macaulay_z(K);
    agg.is_gorenstein_star = gorenstein_star_over_z(K);
    agg.is_sequentially_cm_dual =
        K.contains(full_mask(K.m())) ? true : is_sequentially_cm_z(alexander_dual(K));

    bool first = true;
    for (const auto& spec : specs) {
        auto r = with_field(spec, [&](auto f) { return classify_field(f, K, opt); });
        if (first) {
            agg.gl_index = r.gl_index;
            agg.has_linear_resolution = r.has_linear_resolution;
            agg.has_almost_linear_resolution = r.has_almost_linear_resolution;
            agg.is_componentwise_linear = r.is_componentwise_linear;
            agg.is_cal = r.is_cal;
            agg.is_quasi_koszul = r.is_quasi_koszul;
            agg.is_aqk = r.is_aqk;
            agg.invariants = r.invariants;
            first = false;
            continue;
        }
        // booleans: conjunction; numeric invariants: worst case over fields
        if (r.gl_index.kind == GlIndexResult::Kind::Finite &&
            (agg.gl_index.kind == GlIndexResult::Kind::Infinite ||
             (agg.gl_index.kind == GlIndexResult::Kind::Finite &&
              r.gl_index.value < agg.gl_index.value)))
            agg.gl_index = r.gl_index;
        agg.has_linear_resolution &= r.has_linear_resolution;
        agg.has_almost_linear_resolution &= r.has_almost_linear_resolution;
        agg.is_componentwise_linear =
            and_optional(agg.is_componentwise_linear, r.is_componentwise_linear);
        agg.is_cal = and_optional(agg.is_cal, r.is_cal);
        agg.is_quasi_koszul &= r.is_quasi_koszul;
        agg.is_aqk &= r.is_aqk;
        agg.invariants.projdim_quotient =
            std::max(agg.invariants.projdim_quotient, r.invariants.projdim_quotient);
        agg.invariants.projdim_ideal =
            std::max(agg.invariants.projdim_ideal, r.invariants.projdim_ideal);
        agg.invariants.regularity = std::max(agg.invariants.regularity, r.invariants.regularity);
    }
    return agg;
}

std::string render_pairs(const PoincarePairs& P) {
    std::map<std::pair<int, int>, std::uint64_t> mult;
    for (auto pr : P.pairs) ++mult[pr];
    std::string out;
    for (const auto& [pr, k] : mult) {
        if (!out.empty()) out += " ";
        out += std::to_string(k) + "x(S^" + std::to_string(pr.first) + " x S^" +
               std::to_string(pr.second) + ")";
    }
    out += " g=" + std::to_string(P.genus);
    return out;
}

}  // namespace

ClassificationReport classify(const SimplicialComplex& K, const ClassifyOptions& opt) {
    ClassificationReport rep;
    rep.m = K.m();
    rep.dim = K.dim();
    rep.predicates = combinatorial_predicates(K);
    try {
        rep.chordless_threshold = chordless_cycle_threshold(K);
    } catch (const CapExceeded&) {
        rep.chordless_known = false;
    }

    for (const auto& spec : opt.coeffs) {
        if (spec.kind == CoeffKind::Integers)
            rep.fields.push_back(classify_integers(K, opt));
        else
            rep.fields.push_back(with_field(spec, [&](auto f) { return classify_field(f, K, opt); }));
    }

    if (is_boundary_of_simplex(K)) {
        rep.labels.push_back({"moment_angle_complex", "S^" + std::to_string(2 * K.m() - 1),
                              "boundary of a simplex"});
        return rep;
    }

    bool all_qk = !rep.fields.empty();
    bool all_aqk = !rep.fields.empty();
    bool all_gstar = !rep.fields.empty();
    for (const auto& r : rep.fields) {
        all_qk &= r.is_quasi_koszul;
        all_aqk &= r.is_aqk;
        all_gstar &= r.is_gorenstein_star;
    }

    if (all_qk)
        rep.labels.push_back({"wedge_of_spheres", "true",
                              "quasi-Koszul over all requested coefficients"});

    // skeletal wedge bound from the linearity index
    {
        int d = 0;
        for (VertexMask n : K.minimal_nonfaces())
            d = d == 0 ? popcount(n) : std::min(d, popcount(n));
        bool usable = !rep.fields.empty() && d > 0;
        int r_min = -1;
        for (const auto& r : rep.fields) {
            if (r.gl_index.kind == GlIndexResult::Kind::NotEquigenerated) usable = false;
            if (r.gl_index.kind == GlIndexResult::Kind::Finite)
                r_min = r_min < 0 ? r.gl_index.value : std::min(r_min, r.gl_index.value);
        }
        if (usable && r_min > 0) {
            rep.labels.push_back({"skeleton_wedge_bound",
                                  "sk_" + std::to_string(2 * d + r_min) + " is a wedge of spheres",
                                  "linearity in the first " + std::to_string(r_min) + " steps"});
            rep.labels.push_back({"partial_formality_degree",
                                  std::to_string(2 * d + r_min - 1),
                                  "skeletal wedge bound minus one"});
        }
    }

    if (rep.predicates.is_flag && rep.chordless_known && rep.chordless_threshold) {
        int t = *rep.chordless_threshold;
        rep.labels.push_back({"flag_skeleton_wedge_bound",
                              "sk_" + std::to_string(t + 1) + " is a wedge of spheres",
                              "flag complex with no chordless cycle of length < " +
                                  std::to_string(t)});
    }

    for (const auto& r : rep.fields)
        if (r.is_componentwise_linear && *r.is_componentwise_linear)
            rep.labels.push_back({"golod", "true over " + r.coeff.name(),
                                  "componentwise linear Stanley-Reisner ideal"});

    if (all_gstar && all_aqk && !rep.predicates.is_cone) {
        int n = K.dim() + 1;
        try {
            auto P = poincare_sum_pairs(RationalField{}, K, opt.max_m);
            rep.connected_sum_pairs = P;
            rep.labels.push_back({"rational_connected_sum", render_pairs(P),
                                  "Gorenstein* and almost quasi-Koszul"});
        } catch (const UsageError&) {
            // not Gorenstein* rationally; skip the rational labels
        }
        rep.labels.push_back({"loop_space_product",
                              "loops on Z_K decompose as a product of spheres and loop spaces "
                              "of spheres",
                              "Gorenstein* and almost quasi-Koszul"});
        rep.labels.push_back({"minimally_non_golod", "true",
                              "Gorenstein* and almost quasi-Koszul"});
        rep.labels.push_back({"manifold_skeleton_wedge",
                              "sk_" + std::to_string(K.m() + n - 1) + " is a wedge of spheres",
                              "Gorenstein* and almost quasi-Koszul"});
    }
    return rep;
}

}  // namespace srtop
