#include <algorithm>
#include <random>

#include "srtop/complex.hpp"

namespace srtop {

ConnectedSumResult connected_sum(const SimplicialComplex& K, VertexMask sigma_K,
                                 const SimplicialComplex& L, VertexMask sigma_L,
                                 const std::vector<std::pair<int, int>>& glue) {
    auto is_facet = [](const SimplicialComplex& C, VertexMask s) {
        return std::find(C.facets().begin(), C.facets().end(), s) != C.facets().end();
    };
    if (!is_facet(K, sigma_K))
        throw ValidationError("connected_sum: " + mask_to_string(sigma_K) + " is not a facet of K");
    if (!is_facet(L, sigma_L))
        throw ValidationError("connected_sum: " + mask_to_string(sigma_L) + " is not a facet of L");
    if (popcount(sigma_K) != popcount(sigma_L))
        throw ValidationError("connected_sum: glued facets have different sizes");
    if (K.dim() != L.dim() || K.dim() != popcount(sigma_K) - 1)
        throw ValidationError("connected_sum: summands must be pure of the glued facet's dimension");

    std::vector<int> relabel(L.m() + 1, 0);
    VertexMask seen_l = 0, seen_k = 0;
    for (auto [lv, kv] : glue) {
        if (lv < 1 || lv > L.m() || !subset(vertex_bit(lv), sigma_L))
            throw ValidationError("connected_sum: glue source " + std::to_string(lv) +
                                  " not a vertex of the L facet");
        if (kv < 1 || kv > K.m() || !subset(vertex_bit(kv), sigma_K))
            throw ValidationError("connected_sum: glue target " + std::to_string(kv) +
                                  " not a vertex of the K facet");
        if ((seen_l & vertex_bit(lv)) || (seen_k & vertex_bit(kv)))
            throw ValidationError("connected_sum: glue map is not a bijection");
        seen_l |= vertex_bit(lv);
        seen_k |= vertex_bit(kv);
        relabel[lv] = kv;
    }
    if (seen_l != sigma_L || seen_k != sigma_K)
        throw ValidationError("connected_sum: glue map must pair the two facets exactly");

    int next = K.m();
    for (int v = 1; v <= L.m(); ++v)
        if (relabel[v] == 0) relabel[v] = ++next;
    if (next > kVertexCap)
        throw CapExceeded("connected_sum: result needs " + std::to_string(next) +
                          " vertices (cap " + std::to_string(kVertexCap) + ")");

    std::vector<VertexMask> facets;
    for (VertexMask f : K.facets())
        if (f != sigma_K) facets.push_back(f);
    for (VertexMask f : L.facets()) {
        if (f == sigma_L) continue;
        VertexMask g = 0;
        for (int v : mask_to_vertices(f)) g |= vertex_bit(relabel[v]);
        facets.push_back(g);
    }

    ConnectedSumResult out{SimplicialComplex::from_facets(next, std::move(facets)),
                           std::vector<int>(relabel.begin() + 1, relabel.end())};
    return out;
}

SimplicialComplex stellar_subdivide_facet(const SimplicialComplex& K, VertexMask sigma) {
    if (std::find(K.facets().begin(), K.facets().end(), sigma) == K.facets().end())
        throw ValidationError("stellar subdivision target " + mask_to_string(sigma) +
                              " is not a facet");
    if (K.m() + 1 > kVertexCap)
        throw CapExceeded("stellar subdivision exceeds the vertex cap");
    const VertexMask apex = vertex_bit(K.m() + 1);
    std::vector<VertexMask> facets;
    for (VertexMask f : K.facets())
        if (f != sigma) facets.push_back(f);
    for (int v : mask_to_vertices(sigma))
        facets.push_back((sigma & ~vertex_bit(v)) | apex);
    return SimplicialComplex::from_facets(K.m() + 1, std::move(facets));
}

namespace {

SimplicialComplex simplex_boundary(int n) {
    if (n < 1) throw ValidationError("simplex_boundary: n must be >= 1");
    if (n + 1 > kVertexCap) throw CapExceeded("simplex_boundary exceeds the vertex cap");
    std::vector<VertexMask> facets;
    const VertexMask full = full_mask(n + 1);
    for (int v = 1; v <= n + 1; ++v) facets.push_back(full & ~vertex_bit(v));
    return SimplicialComplex::from_facets(n + 1, std::move(facets));
}

SimplicialComplex cycle_complex(int m) {
    if (m < 3) throw ValidationError("cycle: m must be >= 3");
    if (m > kVertexCap) throw CapExceeded("cycle exceeds the vertex cap");
    std::vector<VertexMask> facets;
    for (int v = 1; v < m; ++v) facets.push_back(vertex_bit(v) | vertex_bit(v + 1));
    facets.push_back(vertex_bit(m) | vertex_bit(1));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

// boundary of the cyclic polytope C_n(m) via Gale's evenness condition
SimplicialComplex cyclic_polytope_boundary(int n, int m) {
    if (n < 2) throw ValidationError("cyclic: dimension n must be >= 2");
    if (m < n + 2) throw ValidationError("cyclic: need m >= n + 2 vertices");
    if (m > kVertexCap) throw CapExceeded("cyclic exceeds the vertex cap");

    std::vector<VertexMask> facets;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i + 1;
    while (true) {
        VertexMask s = 0;
        for (int v : idx) s |= vertex_bit(v);
        bool gale = true;
        for (int i = 1; i <= m && gale; ++i) {
            if (s & vertex_bit(i)) continue;
            for (int j = i + 1; j <= m && gale; ++j) {
                if (s & vertex_bit(j)) continue;
                int between = 0;
                for (int v = i + 1; v < j; ++v)
                    if (s & vertex_bit(v)) ++between;
                if (between % 2 != 0) gale = false;
            }
        }
        if (gale) facets.push_back(s);
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex join_of_boundaries(int n1, int n2) {
    SimplicialComplex A = simplex_boundary(n1);
    SimplicialComplex B = simplex_boundary(n2);
    int m = A.m() + B.m();
    if (m > kVertexCap) throw CapExceeded("join_of_boundaries exceeds the vertex cap");
    std::vector<VertexMask> facets;
    for (VertexMask fa : A.facets())
        for (VertexMask fb : B.facets())
            facets.push_back(fa | (fb << A.m()));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex stacked_sphere(const FamilySpec& spec) {
    SimplicialComplex K = simplex_boundary(spec.a);
    if (!spec.facet_sequence.empty()) {
        for (VertexMask sigma : spec.facet_sequence)
            K = stellar_subdivide_facet(K, sigma);
        return K;
    }
    std::mt19937_64 rng(spec.seed);
    for (int step = 0; step < spec.subdivisions; ++step) {
        // rng() % size instead of uniform_int_distribution keeps the stream
        // identical across standard library implementations
        std::size_t pick = static_cast<std::size_t>(rng() % K.facets().size());
        K = stellar_subdivide_facet(K, K.facets()[pick]);
    }
    return K;
}

}  // namespace

SimplicialComplex generate_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Cycle: return cycle_complex(spec.a);
        case FamilySpec::Kind::SimplexBoundary: return simplex_boundary(spec.a);
        case FamilySpec::Kind::Cyclic: return cyclic_polytope_boundary(spec.a, spec.b);
        case FamilySpec::Kind::Stacked: return stacked_sphere(spec);
        case FamilySpec::Kind::JoinOfBoundaries: return join_of_boundaries(spec.a, spec.b);
    }
    throw UsageError("unknown family kind");
}

}  // namespace srtop
