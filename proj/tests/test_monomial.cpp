#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "srtop/monomial.hpp"

using namespace srtop;
using fixtures::face;
using fixtures::from_lists;

namespace {

Multidegree mono(std::vector<std::uint32_t> e) { return e; }

MonomialIdeal random_ideal(std::mt19937_64& rng, int m, int gens, std::uint32_t max_exp) {
    std::vector<Multidegree> g;
    for (int k = 0; k < gens; ++k) {
        Multidegree b(m, 0);
        for (int v = 0; v < m; ++v) b[v] = rng() % (max_exp + 1);
        if (multidegree_total(b) == 0) b[rng() % m] = 1;
        g.push_back(b);
    }
    return MonomialIdeal::from_generators(m, std::move(g));
}

}  // namespace

TEST_CASE("ideal construction and minimization") {
    auto I = MonomialIdeal::from_generators(3, {mono({1, 0, 1}), mono({1, 1, 1}), mono({0, 2, 0})});
    REQUIRE(I.generators.size() == 2);  // (1,1,1) is divisible by (1,0,1)
    CHECK(I.contains_monomial(mono({1, 1, 1})));
    CHECK(I.contains_monomial(mono({0, 3, 0})));
    CHECK_FALSE(I.contains_monomial(mono({0, 1, 0})));
    CHECK(I.generator_degrees() == std::vector<int>{2});
    CHECK(I.is_equigenerated());

    CHECK_THROWS_AS(MonomialIdeal::from_generators(3, {mono({0, 0, 0})}), ValidationError);
    CHECK_THROWS_AS(MonomialIdeal::from_generators(3, {mono({1, 0})}), ValidationError);

    CHECK(MonomialIdeal::from_generators(3, {}).is_zero());
}

TEST_CASE("stanley-reisner ideals") {
    auto I4 = stanley_reisner_ideal(fixtures::cycle(4));
    CHECK(I4.generators == std::vector<Multidegree>{mono({0, 1, 0, 1}), mono({1, 0, 1, 0})});

    auto Ibg = stanley_reisner_ideal(fixtures::bg_sphere());
    CHECK(Ibg.generators.size() == 16);
    CHECK(Ibg.generator_degrees() == std::vector<int>{3});

    auto I6 = stanley_reisner_ideal(fixtures::mixed_sphere());
    CHECK(I6.generators.size() == 5);
    CHECK(I6.generator_degrees() == std::vector<int>{2, 3, 4});
    CHECK_FALSE(I6.is_equigenerated());
}

TEST_CASE("component ideals") {
    auto I = MonomialIdeal::from_generators(4, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})});
    CHECK(component_ideal(I, 1).is_zero());
    CHECK(component_ideal(I, 2).generators == I.generators);

    auto I3 = component_ideal(I, 3);
    // each quadric times each variable, deduplicated and minimal
    CHECK(I3.generator_degrees() == std::vector<int>{3});
    CHECK(I3.generators.size() == 8);
    CHECK(I3.contains_monomial(mono({2, 0, 1, 0})));
    CHECK_FALSE(I3.contains_monomial(mono({1, 1, 0, 0})));

    auto c3 = component_ideal(stanley_reisner_ideal(fixtures::mixed_sphere()), 3);
    CHECK(c3.generators.size() == 15);
    // v_3^2 v_7 and v_6^2 v_7 appear among the generators
    CHECK(std::find(c3.generators.begin(), c3.generators.end(),
                    mono({0, 0, 2, 0, 0, 0, 1})) != c3.generators.end());
    CHECK(std::find(c3.generators.begin(), c3.generators.end(),
                    mono({0, 0, 0, 0, 0, 2, 1})) != c3.generators.end());
}

TEST_CASE("component ideal identity") {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 20; ++t) {
        auto I = random_ideal(rng, 3, 3, 2);
        int dmax = I.generator_degrees().back();
        for (int e = dmax; e <= dmax + 2; ++e) {
            auto lhs = component_ideal(component_ideal(I, dmax), e);
            auto rhs = component_ideal(I, e);
            // both are generated in degree e; equality as monomial sets
            CHECK(lhs.generators == rhs.generators);
        }
    }
}

TEST_CASE("upper-Koszul complexes") {
    auto I = MonomialIdeal::from_generators(4, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})});

    auto K1 = upper_koszul_complex(I, mono({1, 0, 1, 0}));
    CHECK(K1.dim() == -1);  // just {∅}

    auto K2 = upper_koszul_complex(I, mono({1, 1, 1, 1}));
    CHECK(K2.facets() == std::vector<VertexMask>{face({1, 3}, 4), face({2, 4}, 4)});

    auto Kout = upper_koszul_complex(I, mono({1, 1, 0, 0}));
    CHECK(Kout.is_void());  // multidegree outside the ideal
}

TEST_CASE("monomial betti of pinned ideals") {
    RationalField f;

    CHECK(monomial_betti_table(f, MonomialIdeal::from_generators(4, {}), 4).multigraded.empty());

    auto P = MonomialIdeal::from_generators(3, {mono({2, 1, 0})});
    auto TP = monomial_betti_table(f, P, 3);
    CHECK(TP.multigraded.size() == 1);
    CHECK(TP.multigraded_at(0, mono({2, 1, 0})) == 1);

    auto I = MonomialIdeal::from_generators(4, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})});
    auto T = monomial_betti_table(f, I, 4);
    CHECK(T.multigraded_at(0, mono({1, 0, 1, 0})) == 1);
    CHECK(T.multigraded_at(0, mono({0, 1, 0, 1})) == 1);
    CHECK(T.multigraded_at(1, mono({1, 1, 1, 1})) == 1);
    CHECK(T.projdim == 1);
}

TEST_CASE("taylor oracle agrees with upper-Koszul tables") {
    std::mt19937_64 rng(101);
    RationalField q;
    PrimeField f2(2);
    for (int t = 0; t < 25; ++t) {
        auto I = random_ideal(rng, 4, 4, 2);
        auto a = monomial_betti_table(q, I, I.m + 4);
        auto b = taylor_betti_oracle(q, I);
        CHECK(a.multigraded == b.multigraded);
        auto a2 = monomial_betti_table(f2, I, I.m + 4);
        auto b2 = taylor_betti_oracle(f2, I);
        CHECK(a2.multigraded == b2.multigraded);
    }
}

TEST_CASE("squarefree tables match the Hochster engine") {
    RationalField f;
    for (auto K : {fixtures::cycle(4), fixtures::cycle(5), fixtures::rp2(),
                   fixtures::mixed_sphere(), fixtures::stacked_fixture()}) {
        auto hoch = betti_table(f, K, ModuleView::Ideal);
        auto mono_t = monomial_betti_table(f, stanley_reisner_ideal(K), K.m());
        CHECK(hoch.coarse == mono_t.coarse);
        for (const auto& [key, v] : hoch.multigraded)
            CHECK(mono_t.multigraded_at(key.first, key.second) == v);
    }
}

TEST_CASE("betti vanishes off the lcm lattice") {
    std::mt19937_64 rng(103);
    RationalField f;
    for (int t = 0; t < 15; ++t) {
        auto I = random_ideal(rng, 3, 3, 2);
        auto lattice = lcm_lattice(I);
        Multidegree b(3, 0);
        for (int v = 0; v < 3; ++v) b[v] = rng() % 4;
        if (std::find(lattice.begin(), lattice.end(), b) != lattice.end()) continue;
        auto Kb = upper_koszul_complex(I, b);
        if (Kb.is_void()) continue;
        auto betti = reduced_betti_numbers(f, Kb);
        for (auto x : betti) CHECK(x == 0);
    }
}

TEST_CASE("quotient table of the degree-3 component") {
    RationalField f;
    auto c3 = component_ideal(stanley_reisner_ideal(fixtures::mixed_sphere()), 3);
    auto T = quotient_of(monomial_betti_table(f, c3, 8), 7);

    std::vector<std::uint64_t> row2 = {15, 44, 70, 70, 42, 14, 2};
    for (int i = 1; i <= 7; ++i) CHECK(T.coarse_at(i, i + 2) == row2[i - 1]);
    CHECK(T.coarse_at(2, 6) == 1);
    CHECK(T.coarse_at(3, 7) == 1);
    CHECK(T.coarse_at(0, 0) == 1);

    // no other rows
    for (const auto& [key, v] : T.coarse) {
        auto [i, j] = key;
        if (i == 0) continue;
        CHECK((j - i == 2 || j - i == 4));
        (void)v;
    }
}

TEST_CASE("componentwise profiles") {
    RationalField f;

    // joins of simplex boundaries are componentwise almost linear
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {2, 3}, {3, 3}}) {
        auto K = generate_family({FamilySpec::Kind::JoinOfBoundaries, a, b});
        int pd = betti_table(f, K, ModuleView::Ideal).projdim;
        CHECK(componentwise_profile(f, K, pd).linear_first_r);
    }

    // the mixed sphere fails CAL at d = 3 through the beta_{2,6} obstruction
    auto K6 = fixtures::mixed_sphere();
    int pd6 = betti_table(f, K6, ModuleView::Ideal).projdim;
    auto P = componentwise_profile(f, K6, pd6);
    CHECK_FALSE(P.linear_first_r);
    REQUIRE(P.per_degree.count(3));
    CHECK_FALSE(P.per_degree.at(3));

    // stacked-polytope fixture is CAL
    auto St = fixtures::stacked_fixture();
    int pds = betti_table(f, St, ModuleView::Ideal).projdim;
    CHECK(componentwise_profile(f, St, pds).linear_first_r);

    // zero ideal (full simplex) is vacuously linear
    auto full = from_lists(3, {{1, 2, 3}});
    CHECK(componentwise_profile(f, full, 3).linear_first_r);
}

TEST_CASE("generator cap refusal") {
    RationalField f;
    auto c3 = component_ideal(stanley_reisner_ideal(fixtures::mixed_sphere()), 4);
    CHECK_THROWS_AS(monomial_betti_table(f, c3, 8, 10), CapExceeded);
    auto I = MonomialIdeal::from_generators(2, {mono({1, 1})});
    CHECK_THROWS_AS(taylor_betti_oracle(f, I, 0), CapExceeded);
}
