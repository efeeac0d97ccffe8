#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "srtop/classify.hpp"

using namespace srtop;
using fixtures::face;
using fixtures::from_lists;

namespace {

// clique (flag) complex of a graph given by its edge set
SimplicialComplex flag_complex(int m, const std::vector<std::pair<int, int>>& edges) {
    std::vector<VertexMask> non_edges;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            bool found = false;
            for (auto [x, y] : edges)
                if ((x == a && y == b) || (x == b && y == a)) found = true;
            if (!found) non_edges.push_back(vertex_bit(a) | vertex_bit(b));
        }
    if (non_edges.empty())
        return SimplicialComplex::from_facets(m, {full_mask(m)});
    return SimplicialComplex::from_facets(m, std::move(non_edges),
                                          SimplicialComplex::Mode::Nonfaces);
}

SimplicialComplex random_flag(std::mt19937_64& rng, int m) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            if (rng() % 2) edges.push_back({a, b});
    return flag_complex(m, edges);
}

}  // namespace

TEST_CASE("cohen-macaulay") {
    RationalField q;
    PrimeField f2(2);

    CHECK(is_cohen_macaulay(q, fixtures::simplex_boundary(3)));
    CHECK(is_cohen_macaulay_z(fixtures::simplex_boundary(3)));

    auto two_edges = from_lists(4, {{1, 3}, {2, 4}});
    CHECK_FALSE(is_cohen_macaulay(q, two_edges));
    CHECK_FALSE(is_cohen_macaulay_z(two_edges));

    CHECK(is_cohen_macaulay(q, fixtures::rp2()));
    CHECK_FALSE(is_cohen_macaulay(f2, fixtures::rp2()));
    CHECK_FALSE(is_cohen_macaulay_z(fixtures::rp2()));
}

TEST_CASE("sequentially cohen-macaulay") {
    RationalField q;
    CHECK(is_sequentially_cm(q, fixtures::simplex_boundary(3)));
    CHECK(is_sequentially_cm(q, fixtures::cycle(5)));

    auto two_edges = from_lists(4, {{1, 3}, {2, 4}});
    CHECK_FALSE(is_sequentially_cm(q, two_edges));
    CHECK_FALSE(is_sequentially_cm_z(two_edges));

    // a non-pure complex can still be sequentially CM: an edge with a point
    auto mixed = from_lists(3, {{1, 2}, {3}});
    CHECK(is_sequentially_cm(q, mixed));
}

TEST_CASE("green-lazarsfeld index") {
    RationalField f;
    CHECK(green_lazarsfeld_index(f, fixtures::cycle(5)).value == 2);
    CHECK(green_lazarsfeld_index(f, fixtures::cycle(4)).value == 1);
    CHECK(green_lazarsfeld_index(f, fixtures::cycle(4)).kind == GlIndexResult::Kind::Finite);

    // full simplex: zero ideal, vacuously linear
    auto full = from_lists(3, {{1, 2, 3}});
    CHECK(green_lazarsfeld_index(f, full).kind == GlIndexResult::Kind::Infinite);

    // a path is chordal and flag, so its ideal is linear
    auto path = from_lists(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(green_lazarsfeld_index(f, path).kind == GlIndexResult::Kind::Infinite);

    // boundary of an odd-dimensional cyclic polytope on many vertices is not
    // equigenerated (minimal non-faces of two sizes)
    auto odd = generate_family({FamilySpec::Kind::Cyclic, 5, 9});
    CHECK(green_lazarsfeld_index(f, odd).kind == GlIndexResult::Kind::NotEquigenerated);

    CHECK(GlIndexResult{GlIndexResult::Kind::NotEquigenerated}.to_string() == "not-equigenerated");
    CHECK(GlIndexResult{GlIndexResult::Kind::Infinite}.to_string() == "infinity");
    CHECK(GlIndexResult{GlIndexResult::Kind::Finite, 2}.to_string() == "2");
}

TEST_CASE("almost linear resolutions") {
    RationalField f;
    for (int m = 4; m <= 7; ++m) CHECK(has_almost_linear_resolution(f, fixtures::cycle(m)));
    CHECK(has_almost_linear_resolution(f, fixtures::bg_sphere()));
    CHECK_FALSE(has_almost_linear_resolution(f, fixtures::mixed_sphere()));
    CHECK(has_almost_linear_resolution(f, fixtures::simplex_boundary(3)));

    auto cyc46 = generate_family({FamilySpec::Kind::Cyclic, 4, 6});  // odd-dim (3), neighbourly
    CHECK(has_almost_linear_resolution(f, cyc46));

    // an even-dimensional sphere that is not neighbourly enough fails
    auto st = stellar_subdivide_facet(fixtures::simplex_boundary(3), face({1, 2, 3}, 4));
    CHECK_FALSE(has_almost_linear_resolution(f, st));
}

TEST_CASE("eagon-reiner duality") {
    std::mt19937_64 rng(113);
    RationalField f;
    int done = 0;
    for (int t = 0; done < 25; ++t) {
        auto K = fixtures::random_complex(rng, 5 + t % 2);
        if (K.contains(full_mask(K.m()))) continue;
        ++done;
        bool linear = green_lazarsfeld_index(f, K).kind == GlIndexResult::Kind::Infinite;
        CHECK(linear == is_cohen_macaulay(f, alexander_dual(K)));
    }
}

TEST_CASE("herzog-hibi duality") {
    std::mt19937_64 rng(127);
    RationalField f;
    int done = 0;
    for (int t = 0; done < 12; ++t) {
        auto K = fixtures::random_complex(rng, 5);
        if (K.contains(full_mask(K.m()))) continue;
        ++done;
        bool cwl = componentwise_profile(f, K, K.m()).linear_first_r;
        CHECK(cwl == is_sequentially_cm(f, alexander_dual(K)));
    }
}

TEST_CASE("froberg and the chordless threshold on flag complexes") {
    std::mt19937_64 rng(131);
    RationalField f;
    for (int t = 0; t < 20; ++t) {
        auto K = random_flag(rng, 5 + t % 2);
        auto gl = green_lazarsfeld_index(f, K);
        auto threshold = chordless_cycle_threshold(K);
        if (!threshold) {
            // chordal flag complexes have linear ideals (or no ideal at all)
            CHECK(gl.kind == GlIndexResult::Kind::Infinite);
        } else {
            REQUIRE(gl.kind == GlIndexResult::Kind::Finite);
            CHECK(gl.value == *threshold - 3);
        }
    }
}

TEST_CASE("implication lattice") {
    std::mt19937_64 rng(137);
    ClassifyOptions opt;
    int done = 0;
    for (int t = 0; done < 15; ++t) {
        auto K = fixtures::random_complex(rng, 5 + t % 2);
        ++done;
        auto rep = classify(K, opt);
        REQUIRE(rep.fields.size() == 1);
        const auto& r = rep.fields[0];
        REQUIRE(r.is_componentwise_linear.has_value());
        REQUIRE(r.is_cal.has_value());

        if (r.has_linear_resolution) {
            CHECK(*r.is_componentwise_linear);
            CHECK(r.has_almost_linear_resolution);
        }
        if (*r.is_componentwise_linear) CHECK(r.is_quasi_koszul);
        if (r.has_almost_linear_resolution) CHECK(*r.is_cal);
        if (*r.is_cal) CHECK(r.is_aqk);
        if (r.is_quasi_koszul) CHECK(r.is_aqk);
    }
}

TEST_CASE("classification of the boundary of a simplex") {
    auto rep = classify(fixtures::simplex_boundary(3), {});
    REQUIRE(rep.labels.size() == 1);
    CHECK(rep.labels[0].name == "moment_angle_complex");
    CHECK(rep.labels[0].value == "S^7");
    CHECK(rep.fields[0].is_gorenstein_star);
    CHECK(rep.fields[0].is_quasi_koszul);
}

TEST_CASE("classification of the 5-cycle") {
    ClassifyOptions opt;
    opt.coeffs = {CoefficientSpec::rationals(), CoefficientSpec::prime_field(2)};
    auto rep = classify(fixtures::cycle(5), opt);
    REQUIRE(rep.fields.size() == 2);
    for (const auto& r : rep.fields) {
        CHECK(r.is_gorenstein_star);
        CHECK(r.is_aqk);
        CHECK_FALSE(r.is_quasi_koszul);
        CHECK(r.has_almost_linear_resolution);
        CHECK(r.gl_index.value == 2);
        CHECK(r.invariants.projdim_quotient == 3);
    }
    REQUIRE(rep.connected_sum_pairs.has_value());
    CHECK(rep.connected_sum_pairs->genus == 5);
    CHECK(rep.connected_sum_pairs->pairs == std::vector<std::pair<int, int>>(5, {3, 4}));

    auto has_label = [&](const std::string& name) {
        for (const auto& l : rep.labels)
            if (l.name == name) return true;
        return false;
    };
    CHECK(has_label("rational_connected_sum"));
    CHECK(has_label("loop_space_product"));
    CHECK(has_label("minimally_non_golod"));
    CHECK(has_label("manifold_skeleton_wedge"));
    CHECK(has_label("skeleton_wedge_bound"));
    CHECK(has_label("flag_skeleton_wedge_bound"));
    CHECK_FALSE(has_label("wedge_of_spheres"));
    CHECK_FALSE(has_label("golod"));
}

TEST_CASE("classification over Z") {
    ClassifyOptions opt;
    opt.coeffs = {CoefficientSpec::integers()};

    auto rep = classify(fixtures::rp2(), opt);
    REQUIRE(rep.fields.size() == 1);
    const auto& r = rep.fields[0];
    CHECK(r.coeff.kind == CoeffKind::Integers);
    CHECK_FALSE(r.is_cm);                 // fails over F_2
    CHECK_FALSE(r.is_gorenstein_star);
    CHECK_FALSE(r.is_quasi_koszul);       // QK over Q only
    CHECK_FALSE(r.has_linear_resolution);
    CHECK(r.invariants.projdim_quotient == 4);  // worst case over the prime set

    auto rep2 = classify(fixtures::cycle(5), opt);
    CHECK(rep2.fields[0].is_cm);
    CHECK(rep2.fields[0].is_gorenstein_star);
    CHECK(rep2.fields[0].is_aqk);
}

TEST_CASE("golod label from componentwise linear ideals") {
    auto path = from_lists(4, {{1, 2}, {2, 3}, {3, 4}});
    auto rep = classify(path, {});
    bool golod = false;
    for (const auto& l : rep.labels)
        if (l.name == "golod") golod = true;
    CHECK(golod);
    CHECK(rep.fields[0].has_linear_resolution);
    bool wedge = false;
    for (const auto& l : rep.labels)
        if (l.name == "wedge_of_spheres") wedge = true;
    CHECK(wedge);
}

TEST_CASE("gorenstein* closure under sums and subdivisions") {
    RationalField f;
    auto C4 = fixtures::cycle(4);
    auto sum = connected_sum(C4, face({1, 2}, 4), C4, face({3, 4}, 4), {{3, 1}, {4, 2}});
    CHECK(gorenstein_star_over(f, sum.complex));
    CHECK(gorenstein_star_over(f, stellar_subdivide_facet(C4, face({1, 2}, 4))));
    CHECK(gorenstein_star_over_z(stellar_subdivide_facet(fixtures::bg_sphere(),
                                                         fixtures::bg_sphere().facets()[0])));
}
