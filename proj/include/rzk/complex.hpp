#ifndef RZK_COMPLEX_HPP
#define RZK_COMPLEX_HPP

#include "rzk/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace rzk {

/// A subset of the vertex set [m], stored as a bit mask. Vertex i (1-based,
/// as in all external I/O) lives in bit i-1.
struct VertexSet {
    std::uint32_t mask = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : mask(bits) {}

    static VertexSet of(std::initializer_list<int> labels)
    {
        VertexSet s;
        for (int v : labels) s.mask |= 1u << (v - 1);
        return s;
    }
    static VertexSet from_labels(std::span<const int> labels)
    {
        VertexSet s;
        for (int v : labels) s.mask |= 1u << (v - 1);
        return s;
    }
    static constexpr VertexSet full(std::size_t m) { return VertexSet(m >= 32 ? ~0u : (1u << m) - 1u); }

    [[nodiscard]] constexpr int size() const { return std::popcount(mask); }
    [[nodiscard]] constexpr bool empty() const { return mask == 0; }
    // 0-based bit position.
    [[nodiscard]] constexpr bool contains(int bit) const { return (mask >> bit) & 1u; }
    [[nodiscard]] constexpr bool subset_of(VertexSet o) const { return (mask & ~o.mask) == 0; }
    [[nodiscard]] constexpr bool disjoint(VertexSet o) const { return (mask & o.mask) == 0; }
    // Number of members with bit position strictly below / above `bit`.
    [[nodiscard]] constexpr int count_below(int bit) const { return std::popcount(mask & ((1u << bit) - 1u)); }
    [[nodiscard]] constexpr int count_above(int bit) const
    {
        return bit >= 31 ? 0 : std::popcount(mask & ~((2u << bit) - 1u));
    }

    [[nodiscard]] std::vector<int> labels() const
    {
        std::vector<int> out;
        for (std::uint32_t b = mask; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask | b.mask); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask & b.mask); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask & ~b.mask); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;
};

inline std::string to_string(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (int v : s.labels()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

// Orders subsets by (cardinality, mask). Used for every deterministic sweep.
inline bool graded_less(VertexSet a, VertexSet b)
{
    return a.size() != b.size() ? a.size() < b.size() : a.mask < b.mask;
}

struct Limits {
    std::size_t max_vertices = 24;
    std::size_t max_cells = 1'000'000;
    static constexpr std::size_t hard_max_vertices = 30;
};

/// A finite simplicial complex on the vertex set [m], possibly restricted to a
/// ground set ω ⊆ [m] (full subcomplexes keep the original labels).
///
/// Simplices are enumerated explicitly in graded order; membership is an O(1)
/// bitmap lookup shared between a complex and all of its full subcomplexes.
/// Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(0) {}

    // The complex {∅} on [m].
    explicit SimplicialComplex(std::size_t m)
        : m_(m), ground_(VertexSet::full(m)), bitmap_(empty_bitmap(m))
    {
        simplices_.push_back(VertexSet{});
    }

    static SimplicialComplex from_facets(std::size_t m, std::span<const VertexSet> facets, const Limits& limits = {})
    {
        check_vertex_count(m, limits);
        const VertexSet all = VertexSet::full(m);
        for (VertexSet f : facets) {
            if (!f.subset_of(all)) {
                throw InvalidInput("facet " + to_string(f) + " uses a vertex outside [" + std::to_string(m) + "]");
            }
        }
        auto bits = std::make_shared<std::vector<std::uint64_t>>(words_for(m), 0);
        auto& b = *bits;
        b[0] |= 1;
        for (VertexSet f : facets) {
            if (test(b, f.mask)) continue;
            // every submask of the facet, including the facet and ∅
            for (std::uint32_t s = f.mask;; s = (s - 1) & f.mask) {
                b[s >> 6] |= std::uint64_t{1} << (s & 63);
                if (s == 0) break;
            }
        }
        return SimplicialComplex(m, all, std::move(bits));
    }

    static SimplicialComplex from_facets(std::size_t m, std::initializer_list<VertexSet> facets, const Limits& limits = {})
    {
        return from_facets(m, std::span<const VertexSet>(facets.begin(), facets.size()), limits);
    }

    // Accepts an explicit simplex list; rejects families that are not downward closed.
    static SimplicialComplex from_simplices(std::size_t m, std::span<const VertexSet> simplices, const Limits& limits = {})
    {
        SimplicialComplex k = from_facets(m, simplices, limits);
        std::vector<VertexSet> given(simplices.begin(), simplices.end());
        given.push_back(VertexSet{});
        std::sort(given.begin(), given.end(), graded_less);
        given.erase(std::unique(given.begin(), given.end()), given.end());
        if (given != k.simplices_) throw InvalidInput("simplex list is not downward closed");
        return k;
    }

    [[nodiscard]] std::size_t vertex_count() const { return m_; }
    [[nodiscard]] VertexSet ground() const { return ground_; }
    [[nodiscard]] const std::vector<VertexSet>& simplices() const { return simplices_; }
    [[nodiscard]] std::size_t size() const { return simplices_.size(); }

    [[nodiscard]] bool is_simplex(VertexSet s) const { return s.subset_of(ground_) && test(*bitmap_, s.mask); }

    [[nodiscard]] VertexSet vertices() const
    {
        VertexSet v;
        for (VertexSet s : simplices_) {
            if (s.size() == 1) v = v | s;
        }
        return v;
    }
    // Elements of the ground set that are not vertices of any simplex.
    [[nodiscard]] VertexSet ghost_vertices() const { return ground_ - vertices(); }

    [[nodiscard]] int dimension() const { return simplices_.back().size() - 1; }

    // f_vector()[k] = number of simplices with k vertices (k = 0 counts ∅).
    [[nodiscard]] std::vector<std::size_t> f_vector() const
    {
        std::vector<std::size_t> f(static_cast<std::size_t>(simplices_.back().size()) + 1, 0);
        for (VertexSet s : simplices_) ++f[static_cast<std::size_t>(s.size())];
        return f;
    }

    [[nodiscard]] std::vector<VertexSet> facets() const
    {
        std::vector<VertexSet> out;
        for (VertexSet s : simplices_) {
            bool maximal = true;
            for (std::uint32_t rest = ground_.mask & ~s.mask; rest; rest &= rest - 1) {
                if (is_simplex(VertexSet(s.mask | (rest & -rest)))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal && !(s.empty() && simplices_.size() > 1)) out.push_back(s);
        }
        return out;
    }

    // True when some vertex v of the ground set makes the complex a cone with
    // apex v (σ ∪ {v} ∈ K for all σ ∈ K). Cones are acyclic.
    [[nodiscard]] bool is_cone() const
    {
        for (std::uint32_t rest = vertices().mask; rest; rest &= rest - 1) {
            const std::uint32_t v = rest & -rest;
            bool apex = true;
            for (VertexSet s : simplices_) {
                if (!test(*bitmap_, s.mask | v)) {
                    apex = false;
                    break;
                }
            }
            if (apex) return true;
        }
        return false;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.m_ == b.m_ && a.ground_ == b.ground_ && a.simplices_ == b.simplices_;
    }

    friend SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet omega);

private:
    SimplicialComplex(std::size_t m, VertexSet ground, std::shared_ptr<const std::vector<std::uint64_t>> bits)
        : m_(m), ground_(ground), bitmap_(std::move(bits))
    {
        if (ground_.size() <= 20 || ground_ == VertexSet::full(m_)) {
            // enumerate submasks of the ground set (cheap when the ground set is small)
            if (ground_ == VertexSet::full(m_)) {
                const std::uint64_t total = std::uint64_t{1} << m_;
                for (std::uint64_t s = 0; s < total; ++s) {
                    if (test(*bitmap_, static_cast<std::uint32_t>(s))) simplices_.emplace_back(static_cast<std::uint32_t>(s));
                }
            } else {
                for (std::uint32_t s = ground_.mask;; s = (s - 1) & ground_.mask) {
                    if (test(*bitmap_, s)) simplices_.emplace_back(s);
                    if (s == 0) break;
                }
            }
        }
        std::sort(simplices_.begin(), simplices_.end(), graded_less);
    }

    static std::size_t words_for(std::size_t m) { return std::max<std::size_t>(1, (std::size_t{1} << m) / 64); }
    static std::shared_ptr<const std::vector<std::uint64_t>> empty_bitmap(std::size_t m)
    {
        auto bits = std::make_shared<std::vector<std::uint64_t>>(words_for(m), 0);
        (*bits)[0] = 1;
        return bits;
    }
    static bool test(const std::vector<std::uint64_t>& b, std::uint32_t s) { return (b[s >> 6] >> (s & 63)) & 1u; }

    static void check_vertex_count(std::size_t m, const Limits& limits)
    {
        if (m > limits.max_vertices || m > Limits::hard_max_vertices) {
            throw SizeLimit("vertex count " + std::to_string(m) + " exceeds cap " +
                            std::to_string(std::min(limits.max_vertices, Limits::hard_max_vertices)));
        }
    }

    std::size_t m_;
    VertexSet ground_;
    std::shared_ptr<const std::vector<std::uint64_t>> bitmap_;
    std::vector<VertexSet> simplices_;
};

/// K_ω = {σ ∩ ω | σ ∈ K}. Keeps the original vertex labels and shares the
/// membership bitmap with K.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet omega)
{
    const VertexSet ground = omega & k.ground_;
    if (ground == k.ground_) return k;
    SimplicialComplex sub(k.m_, ground, k.bitmap_);
    if (sub.simplices_.empty()) {
        // large ground set: filter the parent's simplices instead
        for (VertexSet s : k.simplices_) {
            if (s.subset_of(ground)) sub.simplices_.push_back(s);
        }
    }
    return sub;
}

/// χ(ℝZ_K) = Σ_{σ∈K} (−1)^{|σ|} 2^{n−|σ|}, with n the size of the ground set.
inline std::int64_t euler_char_rz(const SimplicialComplex& k)
{
    const int n = k.ground().size();
    std::int64_t chi = 0;
    for (VertexSet s : k.simplices()) {
        const std::int64_t cells = std::int64_t{1} << (n - s.size());
        chi += (s.size() % 2 == 0) ? cells : -cells;
    }
    return chi;
}

/// Random complex for fuzzing: each nonempty subset s ⊆ [m] becomes a candidate
/// facet with probability density^|s|, and the candidates are closed
/// downward. Deterministic in (m, density, seed) across platforms.
inline SimplicialComplex random_complex(std::size_t m, double density, std::uint64_t seed, const Limits& limits = {})
{
    if (density < 0.0 || density > 1.0) throw InvalidInput("density must lie in [0,1]");
    if (m > limits.max_vertices || m > Limits::hard_max_vertices) {
        throw SizeLimit("vertex count " + std::to_string(m) + " exceeds cap");
    }
    std::mt19937_64 rng(seed);
    const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<VertexSet> facets;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t s = 1; s < total; ++s) {
        const VertexSet cand(static_cast<std::uint32_t>(s));
        double p = 1.0;
        for (int i = 0; i < cand.size(); ++i) p *= density;
        const double draw = uniform();
        if (draw < p) facets.push_back(cand);
    }
    return SimplicialComplex::from_facets(m, facets, limits);
}

inline std::vector<std::string> warnings(const SimplicialComplex& k)
{
    std::vector<std::string> out;
    for (int v : k.ghost_vertices().labels()) {
        out.push_back("ghost vertex " + std::to_string(v) + ": {" + std::to_string(v) + "} is not a simplex");
    }
    return out;
}

} // namespace rzk

#endif // RZK_COMPLEX_HPP
