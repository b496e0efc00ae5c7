#ifndef RZK_FIXTURES_HPP
#define RZK_FIXTURES_HPP

#include "rzk/complex.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rzk::fixtures {

// The boundary of an n-gon on [n]: edges {i, i+1} and {1, n}.
inline SimplicialComplex polygon(std::size_t n)
{
    std::vector<VertexSet> edges;
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back(VertexSet::of({static_cast<int>(i), static_cast<int>(i % n + 1)}));
    }
    return SimplicialComplex::from_facets(n, edges);
}

inline SimplicialComplex pentagon() { return polygon(5); }

inline SimplicialComplex full_simplex(std::size_t m)
{
    const VertexSet all = VertexSet::full(m);
    return SimplicialComplex::from_facets(m, {all});
}

// ∂Δ^{m-1}: all proper subsets of [m].
inline SimplicialComplex simplex_boundary(std::size_t m)
{
    std::vector<VertexSet> facets;
    for (std::size_t i = 0; i < m; ++i) facets.push_back(VertexSet::full(m) - VertexSet(1u << i));
    return SimplicialComplex::from_facets(m, facets);
}

// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2_6()
{
    return SimplicialComplex::from_facets(
        6, {VertexSet::of({1, 2, 3}), VertexSet::of({1, 3, 4}), VertexSet::of({1, 4, 5}), VertexSet::of({1, 5, 6}),
            VertexSet::of({1, 2, 6}), VertexSet::of({2, 3, 5}), VertexSet::of({3, 4, 6}), VertexSet::of({2, 4, 5}),
            VertexSet::of({3, 5, 6}), VertexSet::of({2, 4, 6})});
}

// Bundled fixtures by file stem.
inline std::vector<std::pair<std::string, SimplicialComplex>> all()
{
    std::vector<std::pair<std::string, SimplicialComplex>> out{
        {"pentagon", pentagon()},
        {"square", polygon(4)},
        {"hexagon", polygon(6)},
        {"boundary2", simplex_boundary(3)},
        {"boundary3", simplex_boundary(4)},
        {"rp2_6", rp2_6()},
    };
    for (std::size_t m = 1; m <= 5; ++m) out.emplace_back("full" + std::to_string(m), full_simplex(m));
    return out;
}

} // namespace rzk::fixtures

#endif // RZK_FIXTURES_HPP
