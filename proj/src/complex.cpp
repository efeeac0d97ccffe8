#include "srtop/complex.hpp"

#include <algorithm>
#include <map>

namespace srtop {

std::vector<int> mask_to_vertices(VertexMask s) {
    std::vector<int> out;
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

VertexMask vertices_to_mask(const std::vector<int>& vs, int m) {
    VertexMask s = 0;
    for (int v : vs) {
        if (v < 1 || v > m)
            throw ValidationError("vertex " + std::to_string(v) + " out of range [1," +
                                  std::to_string(m) + "]");
        s |= vertex_bit(v);
    }
    return s;
}

std::string mask_to_string(VertexMask s) {
    std::string out = "{";
    bool first = true;
    for (int v : mask_to_vertices(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

bool lex_less(VertexMask a, VertexMask b) {
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

namespace {

void sort_lex(std::vector<VertexMask>& v) { std::sort(v.begin(), v.end(), lex_less); }

// keep only inclusion-maximal sets
std::vector<VertexMask> maximalize(std::vector<VertexMask> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexMask> out;
    for (VertexMask s : sets) {
        bool maximal = true;
        for (VertexMask t : sets)
            if (t != s && subset(s, t)) { maximal = false; break; }
        if (maximal) out.push_back(s);
    }
    sort_lex(out);
    return out;
}

// enumerate all popcount-k submasks of `universe` in ascending numeric order
template <class Fn>
void for_each_k_subset(VertexMask universe, int k, Fn&& fn) {
    std::vector<int> verts = mask_to_vertices(universe);
    int n = static_cast<int>(verts.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexMask s = 0;
        for (int i : idx) s |= vertex_bit(verts[i]);
        fn(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// minimal transversals of a family of sets (Berge's incremental algorithm);
// used to recover facets from minimal non-faces
std::vector<VertexMask> minimal_hitting_sets(const std::vector<VertexMask>& family) {
    std::vector<VertexMask> trans = {0};
    for (VertexMask n : family) {
        std::vector<VertexMask> next;
        for (VertexMask t : trans) {
            if (t & n) {
                next.push_back(t);
            } else {
                VertexMask rest = n;
                while (rest) {
                    VertexMask v = rest & (~rest + 1);
                    next.push_back(t | v);
                    rest &= rest - 1;
                }
            }
        }
        // minimalize
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<VertexMask> min;
        for (VertexMask s : next) {
            bool minimal = true;
            for (VertexMask t : next)
                if (t != s && subset(t, s)) { minimal = false; break; }
            if (minimal) min.push_back(s);
        }
        trans = std::move(min);
    }
    return trans;
}

}  // namespace

SimplicialComplex SimplicialComplex::unchecked(int m, std::vector<VertexMask> faces) {
    SimplicialComplex K;
    K.m_ = m;
    if (faces.empty()) {
        K.is_void_ = true;
    } else {
        K.facets_ = maximalize(std::move(faces));
    }
    return K;
}

SimplicialComplex SimplicialComplex::empty_complex(int m) { return unchecked(m, {0}); }

SimplicialComplex SimplicialComplex::void_complex(int m) { return unchecked(m, {}); }

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<VertexMask> sets, Mode mode) {
    if (m < 1 || m > kVertexCap)
        throw ValidationError("vertex count m must be in [1," + std::to_string(kVertexCap) + "]");
    for (VertexMask s : sets)
        if (!subset(s, full_mask(m)))
            throw ValidationError("face " + mask_to_string(s) + " not contained in [1," +
                                  std::to_string(m) + "]");

    if (mode == Mode::Facets) {
        if (sets.empty())
            throw ValidationError("empty facet list with m > 0");
        SimplicialComplex K = unchecked(m, std::move(sets));
        auto ghosts = K.ghost_vertices();
        if (!ghosts.empty())
            throw ValidationError("ghost vertex " + std::to_string(ghosts.front()) +
                                  " (not covered by any facet)");
        return K;
    }

    // nonfaces mode: the given sets become the minimal non-faces
    for (VertexMask s : sets) {
        if (popcount(s) < 2)
            throw ValidationError("non-face " + mask_to_string(s) +
                                  " has fewer than two vertices (would be a ghost vertex)");
        for (VertexMask t : sets)
            if (t != s && subset(t, s))
                throw ValidationError("non-faces are not an antichain: " + mask_to_string(t) +
                                      " ⊆ " + mask_to_string(s));
    }
    if (sets.empty()) return unchecked(m, {full_mask(m)});  // the full simplex

    // facets = complements of minimal hitting sets of the non-face family
    std::vector<VertexMask> facets;
    for (VertexMask t : minimal_hitting_sets(sets))
        facets.push_back(full_mask(m) & ~t);
    SimplicialComplex K = unchecked(m, std::move(facets));
    K.cache_->min_nonfaces = sets;
    sort_lex(K.cache_->min_nonfaces);
    std::call_once(K.cache_->once, [] {});  // mark the cache as filled
    return K;
}

int SimplicialComplex::dim() const {
    if (is_void_) return -2;
    int d = -1;
    for (VertexMask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
}

VertexMask SimplicialComplex::support() const {
    VertexMask s = 0;
    for (VertexMask f : facets_) s |= f;
    return s;
}

std::vector<int> SimplicialComplex::ghost_vertices() const {
    return mask_to_vertices(full_mask(m_) & ~support());
}

bool SimplicialComplex::contains(VertexMask face) const {
    if (is_void_) return false;
    for (VertexMask f : facets_)
        if (subset(face, f)) return true;
    return false;
}

const std::vector<VertexMask>& SimplicialComplex::minimal_nonfaces() const {
    std::call_once(cache_->once, [this] {
        std::vector<VertexMask> out;
        if (is_void_) {
            out.push_back(0);
        } else {
            // minimal non-faces have at most dim+2 vertices
            int smax = std::min(dim() + 2, m_);
            for (int s = 1; s <= smax; ++s) {
                for_each_k_subset(full_mask(m_), s, [&](VertexMask cand) {
                    if (contains(cand)) return;
                    VertexMask rest = cand;
                    while (rest) {
                        VertexMask v = rest & (~rest + 1);
                        if (!contains(cand & ~v)) return;  // some proper subset missing too
                        rest &= rest - 1;
                    }
                    out.push_back(cand);
                });
            }
            sort_lex(out);
        }
        cache_->min_nonfaces = std::move(out);
    });
    return cache_->min_nonfaces;
}

std::vector<VertexMask> SimplicialComplex::faces_of_size(int q) const {
    std::vector<VertexMask> out;
    if (is_void_) return out;
    if (q == 0) return {0};
    for (VertexMask f : facets_)
        for_each_k_subset(f, q, [&](VertexMask s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    sort_lex(out);
    return out;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
    std::vector<std::uint64_t> f;
    for (int q = 0; q <= dim() + 1; ++q) f.push_back(faces_of_size(q).size());
    return f;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, VertexMask U) {
    if (!subset(U, full_mask(K.m())))
        throw ValidationError("full_subcomplex: U not contained in [m]");
    if (K.is_void()) return SimplicialComplex::void_complex(K.m());
    std::vector<VertexMask> facets;
    for (VertexMask f : K.facets()) facets.push_back(f & U);
    return SimplicialComplex::unchecked(K.m(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& K, VertexMask sigma) {
    if (!K.contains(sigma))
        throw ValidationError("link: " + mask_to_string(sigma) + " is not a face");
    std::vector<VertexMask> facets;
    for (VertexMask f : K.facets())
        if (subset(sigma, f)) facets.push_back(f & ~sigma);
    return SimplicialComplex::unchecked(K.m(), std::move(facets));
}

SimplicialComplex alexander_dual(const SimplicialComplex& K) {
    const VertexMask full = full_mask(K.m());
    if (!K.is_void() && K.contains(full))
        throw ValidationError("alexander_dual: K is the full simplex; its dual is void");
    if (K.is_void()) return SimplicialComplex::unchecked(K.m(), {full});
    std::vector<VertexMask> facets;
    for (VertexMask n : K.minimal_nonfaces()) facets.push_back(full & ~n);
    return SimplicialComplex::unchecked(K.m(), std::move(facets));
}

SimplicialComplex delete_vertex(const SimplicialComplex& K, int v) {
    if (v < 1 || v > K.m()) throw ValidationError("delete_vertex: vertex out of range");
    if (K.m() == 1) throw ValidationError("delete_vertex: cannot delete the last vertex");
    const VertexMask low = vertex_bit(v) - 1;
    std::vector<VertexMask> facets;
    for (VertexMask f : K.facets()) {
        VertexMask g = f & ~vertex_bit(v);
        facets.push_back((g & low) | ((g & ~low) >> 1));
    }
    return SimplicialComplex::unchecked(K.m() - 1, std::move(facets));
}

SimplicialComplex generated_by_faces_of_size(const SimplicialComplex& K, int q) {
    auto faces = K.faces_of_size(q);
    if (faces.empty()) return SimplicialComplex::empty_complex(K.m());
    return SimplicialComplex::unchecked(K.m(), std::move(faces));
}

CombinatorialPredicates combinatorial_predicates(const SimplicialComplex& K) {
    CombinatorialPredicates p{};
    p.dimension = K.dim();
    p.f_vector = K.f_vector();

    p.is_flag = true;
    for (VertexMask n : K.minimal_nonfaces())
        if (popcount(n) != 2) { p.is_flag = false; break; }

    int half = (K.dim() + 1) / 2;
    p.is_neighbourly = true;
    for (VertexMask n : K.minimal_nonfaces())
        if (popcount(n) <= half) { p.is_neighbourly = false; break; }

    VertexMask apex = full_mask(K.m());
    for (VertexMask f : K.facets()) apex &= f;
    p.is_cone = apex != 0;

    p.is_pure = true;
    for (VertexMask f : K.facets())
        if (popcount(f) != K.dim() + 1) { p.is_pure = false; break; }
    return p;
}

namespace {

// maximum cardinality search + perfect elimination ordering check
bool is_chordal(const std::vector<VertexMask>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order;
    std::vector<int> weight(n, 0);
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best == -1 || weight[v] > weight[best])) best = v;
        done[best] = true;
        order.push_back(best);
        for (int v = 0; v < n; ++v)
            if (!done[v] && (adj[best] & (VertexMask{1} << v))) ++weight[v];
    }
    std::reverse(order.begin(), order.end());  // elimination order
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        VertexMask later = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && (adj[v] & (VertexMask{1} << u)) && pos[u] > i)
                later |= VertexMask{1} << u;
        if (!later) continue;
        int first = -1;
        for (int u = 0; u < n; ++u)
            if ((later & (VertexMask{1} << u)) && (first == -1 || pos[u] < pos[first])) first = u;
        if ((later & ~(VertexMask{1} << first) & ~adj[first]) != 0) return false;
    }
    return true;
}

}  // namespace

std::optional<int> chordless_cycle_threshold(const SimplicialComplex& K) {
    const int n = K.m();
    if (n > 28)
        throw CapExceeded("chordless-cycle search capped at m <= 28 (got m = " +
                          std::to_string(n) + ")");
    std::vector<VertexMask> adj(n, 0);
    for (VertexMask e : K.faces_of_size(2)) {
        auto vs = mask_to_vertices(e);
        adj[vs[0] - 1] |= VertexMask{1} << (vs[1] - 1);
        adj[vs[1] - 1] |= VertexMask{1} << (vs[0] - 1);
    }
    if (is_chordal(adj)) return std::nullopt;

    // shortest induced cycle: scan vertex subsets by increasing size;
    // induced 2-regular + connected <=> induced cycle
    for (int len = 4; len <= n; ++len) {
        bool found = false;
        for_each_k_subset(full_mask(n), len, [&](VertexMask s) {
            if (found) return;
            VertexMask sv = s;
            while (sv) {
                int v = std::countr_zero(sv);
                if (popcount(adj[v] & s) != 2) return;
                sv &= sv - 1;
            }
            // connectivity within s
            VertexMask comp = s & (~s + 1);
            while (true) {
                VertexMask grown = comp;
                VertexMask cv = comp;
                while (cv) {
                    grown |= adj[std::countr_zero(cv)] & s;
                    cv &= cv - 1;
                }
                if (grown == comp) break;
                comp = grown;
            }
            if (comp == s) found = true;
        });
        if (found) return len;
    }
    throw InvariantViolation("non-chordal graph with no induced cycle found");
}

}  // namespace srtop
