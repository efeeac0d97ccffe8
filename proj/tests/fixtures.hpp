#pragma once

#include <random>
#include <vector>

#include "srtop/complex.hpp"

namespace fixtures {

using srtop::SimplicialComplex;
using srtop::VertexMask;
using srtop::vertices_to_mask;

inline VertexMask face(std::vector<int> vs, int m) { return vertices_to_mask(vs, m); }

inline SimplicialComplex from_lists(int m, const std::vector<std::vector<int>>& lists,
                                    SimplicialComplex::Mode mode = SimplicialComplex::Mode::Facets) {
    std::vector<VertexMask> sets;
    for (const auto& vs : lists) sets.push_back(vertices_to_mask(vs, m));
    return SimplicialComplex::from_facets(m, std::move(sets), mode);
}

inline SimplicialComplex cycle(int m) {
    std::vector<std::vector<int>> edges;
    for (int v = 1; v < m; ++v) edges.push_back({v, v + 1});
    edges.push_back({m, 1});
    return from_lists(m, edges);
}

inline SimplicialComplex simplex_boundary(int n) {
    std::vector<std::vector<int>> facets;
    for (int skip = 1; skip <= n + 1; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= n + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return from_lists(n + 1, facets);
}

// 8-vertex non-polytopal 3-sphere; its ideal is generated by 16 cubics
inline SimplicialComplex bg_sphere() {
    return from_lists(8,
                      {{1, 2, 5},
                       {1, 3, 5},
                       {1, 3, 6},
                       {1, 3, 8},
                       {1, 4, 5},
                       {1, 4, 6},
                       {2, 4, 6},
                       {2, 4, 7},
                       {2, 5, 6},
                       {2, 5, 7},
                       {2, 7, 8},
                       {3, 4, 8},
                       {3, 5, 7},
                       {3, 7, 8},
                       {4, 6, 8},
                       {6, 7, 8}},
                      SimplicialComplex::Mode::Nonfaces);
}

// stellar subdivision of the join of two triangle boundaries at a facet;
// ideal (1245, 123, 456, 37, 67)
inline SimplicialComplex mixed_sphere() {
    return from_lists(7, {{1, 2, 4, 5}, {1, 2, 3}, {4, 5, 6}, {3, 7}, {6, 7}},
                      SimplicialComplex::Mode::Nonfaces);
}

// 6-vertex triangulation of the real projective plane
inline SimplicialComplex rp2() {
    return from_lists(6, {{1, 2, 5},
                          {1, 2, 6},
                          {1, 3, 4},
                          {1, 3, 6},
                          {1, 4, 5},
                          {2, 3, 4},
                          {2, 3, 5},
                          {2, 4, 6},
                          {3, 5, 6},
                          {4, 5, 6}});
}

// stacked 2-sphere with ideal (123, 124, 36, 45, 56)
inline SimplicialComplex stacked_fixture() {
    return from_lists(6, {{1, 2, 3}, {1, 2, 4}, {3, 6}, {4, 5}, {5, 6}},
                      SimplicialComplex::Mode::Nonfaces);
}

// random complex on [m]: each k-set is a generator with the given density
inline SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
    std::vector<VertexMask> faces;
    const VertexMask full = srtop::full_mask(m);
    for (VertexMask s = 1; s <= full; ++s)
        if (srtop::popcount(s) >= 1 && rng() % 4 == 0) faces.push_back(s);
    if (faces.empty()) faces.push_back(1 + rng() % full);
    // cover every vertex so the complex validates
    for (int v = 1; v <= m; ++v) faces.push_back(srtop::vertex_bit(v));
    return SimplicialComplex::from_facets(m, std::move(faces));
}

}  // namespace fixtures
