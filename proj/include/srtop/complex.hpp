#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "srtop/errors.hpp"

namespace srtop {

// Vertices are labelled 1..m; vertex v occupies bit (v-1).
using VertexMask = std::uint64_t;

constexpr int kVertexCap = 64;

inline int popcount(VertexMask s) { return std::popcount(s); }
inline VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }
inline bool subset(VertexMask a, VertexMask b) { return (a & ~b) == 0; }
inline VertexMask full_mask(int m) { return m == 64 ? ~VertexMask{0} : (VertexMask{1} << m) - 1; }

std::vector<int> mask_to_vertices(VertexMask s);
VertexMask vertices_to_mask(const std::vector<int>& vs, int m);
std::string mask_to_string(VertexMask s);  // "{1,3,5}"

// Lexicographic order on the sorted vertex lists (used for chain bases and
// canonical output; note this differs from numeric order on masks).
bool lex_less(VertexMask a, VertexMask b);

// Immutable simplicial complex on [m], stored by its facets.
// Always contains the empty face unless void (void occurs only internally,
// e.g. upper-Koszul complexes at multidegrees outside the ideal).
class SimplicialComplex {
  public:
    enum class Mode { Facets, Nonfaces };

    // Validating constructor for user-facing input.
    static SimplicialComplex from_facets(int m, std::vector<VertexMask> sets,
                                         Mode mode = Mode::Facets);

    // No ghost-vertex/antichain validation; facets are still maximalized.
    static SimplicialComplex unchecked(int m, std::vector<VertexMask> faces);

    static SimplicialComplex empty_complex(int m);  // {∅}
    static SimplicialComplex void_complex(int m);   // no faces at all

    int m() const { return m_; }
    bool is_void() const { return is_void_; }
    const std::vector<VertexMask>& facets() const { return facets_; }

    int dim() const;                 // -1 for {∅}; -2 for void
    VertexMask support() const;      // union of facets
    std::vector<int> ghost_vertices() const;

    bool contains(VertexMask face) const;

    // The antichain of minimal non-faces MF(K), in lex order.
    const std::vector<VertexMask>& minimal_nonfaces() const;

    // All faces of cardinality exactly q, lex sorted.
    std::vector<VertexMask> faces_of_size(int q) const;
    std::vector<std::uint64_t> f_vector() const;  // f_{-1}..f_{dim}

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && is_void_ == o.is_void_ && facets_ == o.facets_;
    }

  private:
    SimplicialComplex() = default;

    int m_ = 0;
    bool is_void_ = false;
    std::vector<VertexMask> facets_;  // antichain, lex sorted

    struct Cache {
        std::once_flag once;
        std::vector<VertexMask> min_nonfaces;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// --- combinatorial operations -------------------------------------------

SimplicialComplex full_subcomplex(const SimplicialComplex& K, VertexMask U);
SimplicialComplex link(const SimplicialComplex& K, VertexMask sigma);
SimplicialComplex alexander_dual(const SimplicialComplex& K);
SimplicialComplex generated_by_faces_of_size(const SimplicialComplex& K, int q);

// K minus v as a complex on m-1 vertices; labels above v shift down by one.
SimplicialComplex delete_vertex(const SimplicialComplex& K, int v);

struct CombinatorialPredicates {
    int dimension;
    std::vector<std::uint64_t> f_vector;
    bool is_flag;
    bool is_neighbourly;
    bool is_cone;
    bool is_pure;
};
CombinatorialPredicates combinatorial_predicates(const SimplicialComplex& K);

// Minimum length of a chordless cycle (length >= 4) in the 1-skeleton,
// or nullopt when the graph is chordal.
std::optional<int> chordless_cycle_threshold(const SimplicialComplex& K);

// --- constructions (§ families) ------------------------------------------

// glue maps each vertex of sigma_L (in L's labels) to a vertex of sigma_K.
// L's remaining vertices are appended after K's, in ascending original order.
struct ConnectedSumResult {
    SimplicialComplex complex;
    std::vector<int> l_vertex_relabel;  // 1-based: new label of each L vertex
};
ConnectedSumResult connected_sum(const SimplicialComplex& K, VertexMask sigma_K,
                                 const SimplicialComplex& L, VertexMask sigma_L,
                                 const std::vector<std::pair<int, int>>& glue);

SimplicialComplex stellar_subdivide_facet(const SimplicialComplex& K, VertexMask sigma);

struct FamilySpec {
    enum class Kind { Cycle, SimplexBoundary, Cyclic, Stacked, JoinOfBoundaries } kind;
    int a = 0, b = 0;                    // cycle(m) / simplex_boundary(n) / cyclic(n,m) / join(n1,n2)
    int subdivisions = 0;                // stacked
    std::uint64_t seed = 0;              // stacked (ignored when facet_sequence given)
    std::vector<VertexMask> facet_sequence;  // explicit stacked subdivision targets
};
SimplicialComplex generate_family(const FamilySpec& spec);

}  // namespace srtop
