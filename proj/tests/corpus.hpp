#ifndef RZK_TESTS_CORPUS_HPP
#define RZK_TESTS_CORPUS_HPP

#include "rzk/complex.hpp"

#include <cstdint>
#include <vector>

namespace rzk::corpus {

// Every simplicial complex on the ground set [m] (ghost vertices allowed),
// found by testing each family of subsets for downward closure.
inline std::vector<SimplicialComplex> all_complexes(std::size_t m)
{
    const std::uint32_t subsets = 1u << m;
    std::vector<SimplicialComplex> out;
    // bit s of `family` says whether subset s is in; ∅ is always in
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets); family += 2) {
        bool closed = true;
        for (std::uint32_t s = 1; s < subsets && closed; ++s) {
            if (!((family >> s) & 1u)) continue;
            for (std::uint32_t b = s; b; b &= b - 1) {
                if (!((family >> (s & ~(b & -b))) & 1u)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;
        std::vector<VertexSet> simplices;
        for (std::uint32_t s = 0; s < subsets; ++s) {
            if ((family >> s) & 1u) simplices.emplace_back(s);
        }
        out.push_back(SimplicialComplex::from_simplices(m, simplices));
    }
    return out;
}

inline std::vector<SimplicialComplex> exhaustive_corpus(std::size_t max_m = 4)
{
    std::vector<SimplicialComplex> out;
    for (std::size_t m = 1; m <= max_m; ++m) {
        for (auto& k : all_complexes(m)) out.push_back(std::move(k));
    }
    return out;
}

struct RandomCase {
    std::uint64_t seed;
    std::size_t m;
    double density;
};

// m cycles through 5, 6, 7; density through 0.35 .. 0.8.
inline RandomCase random_case(std::uint64_t seed)
{
    static constexpr double densities[] = {0.35, 0.5, 0.6, 0.7, 0.8};
    return {seed, 5 + seed % 3, densities[(seed / 3) % 5]};
}

inline std::vector<SimplicialComplex> random_corpus(std::size_t count = 200)
{
    std::vector<SimplicialComplex> out;
    for (std::uint64_t s = 0; s < count; ++s) {
        const auto c = random_case(s);
        out.push_back(random_complex(c.m, c.density, c.seed));
    }
    return out;
}

} // namespace rzk::corpus

#endif // RZK_TESTS_CORPUS_HPP
