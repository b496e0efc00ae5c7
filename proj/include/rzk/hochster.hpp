#ifndef RZK_HOCHSTER_HPP
#define RZK_HOCHSTER_HPP

#include "rzk/complex.hpp"
#include "rzk/intlinalg.hpp"
#include "rzk/parallel.hpp"
#include "rzk/zalgebra.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace rzk {

// R/I_K splits as ⊕_ω R/I_K|_ω, and λ_ω: u_σ t_τ ↦ σ* identifies each
// component with the augmented simplicial cochains of the full subcomplex
// K_ω, shifting degree by one: H^p(R/I_K|_ω) ≅ H̃^{p-1}(K_ω).
//
// Degrees below are always the algebra degree p = |σ|; the simplicial
// (reduced) degree is p - 1.

/// Augmented cochain complex of K_ω. bases[p] lists the simplices with p
/// vertices (∅ in bases[0]), ascending by mask; the coboundary is
///   δ(σ*) = Σ_{v∉σ, σ∪v∈K_ω} (−1)^{|{j∈σ : j<v}|} (σ∪v)*.
struct ReducedCochainComplex {
    VertexSet omega;
    std::vector<std::vector<VertexSet>> bases;
    IntegerCochainComplex cochains;

    [[nodiscard]] std::optional<std::size_t> index_of(VertexSet s) const
    {
        const auto p = static_cast<std::size_t>(s.size());
        if (p >= bases.size()) return std::nullopt;
        const auto& b = bases[p];
        auto it = std::lower_bound(b.begin(), b.end(), s);
        if (it == b.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - b.begin());
    }
};

inline ReducedCochainComplex reduced_cochain_complex(const SimplicialComplex& k, VertexSet omega)
{
    const SimplicialComplex sub = full_subcomplex(k, omega);
    ReducedCochainComplex rc;
    rc.omega = omega;
    for (VertexSet s : sub.simplices()) {
        const auto p = static_cast<std::size_t>(s.size());
        if (rc.bases.size() <= p) rc.bases.resize(p + 1);
        rc.bases[p].push_back(s);
    }
    for (auto& b : rc.bases) std::sort(b.begin(), b.end());
    for (const auto& b : rc.bases) rc.cochains.dims.push_back(b.size());
    for (std::size_t p = 0; p + 1 < rc.bases.size(); ++p) {
        IntegerMatrix d(rc.bases[p + 1].size(), rc.bases[p].size());
        for (std::size_t c = 0; c < rc.bases[p].size(); ++c) {
            const VertexSet s = rc.bases[p][c];
            for (std::uint32_t rest = omega.mask & ~s.mask; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const VertexSet face = s | VertexSet(1u << v);
                if (auto row = rc.index_of(face); row && sub.is_simplex(face)) {
                    d(*row, c) = (s.count_below(v) & 1) ? -1 : 1;
                }
            }
        }
        rc.cochains.coboundaries.push_back(std::move(d));
    }
    return rc;
}

/// λ_ω applied to one monomial: the dual simplex σ* with the monomial's
/// coefficient.
struct SignedSimplex {
    VertexSet simplex;
    Integer coeff;

    friend bool operator==(const SignedSimplex&, const SignedSimplex&) = default;
};

inline SignedSimplex lambda(const Monomial& mon, VertexSet omega)
{
    if (!mon.sigma.disjoint(mon.tau) || (mon.sigma | mon.tau) != omega) {
        throw DomainError("monomial " + to_string(mon) + " is not in the component " + to_string(omega));
    }
    return {mon.sigma, mon.coeff};
}

// λ_ω^{-1}(σ*) = u_σ t_{ω∖σ}.
inline Monomial lambda_inverse(const SignedSimplex& s, VertexSet omega)
{
    if (!s.simplex.subset_of(omega)) throw DomainError("simplex outside ω");
    return {s.simplex, omega - s.simplex, s.coeff};
}

// λ_ω on an ω-homogeneous cochain, as a coordinate vector over bases[p].
inline IntVector lambda_vector(const Cochain& c, const ReducedCochainComplex& rc, int p)
{
    IntVector out(rc.cochains.dim(p));
    for (const auto& [key, coeff] : c.terms()) {
        const SignedSimplex s = lambda(Monomial{key.sigma, key.tau, coeff}, rc.omega);
        const auto idx = rc.index_of(s.simplex);
        if (!idx || s.simplex.size() != p) throw DomainError("monomial outside the degree-" + std::to_string(p) + " basis");
        out[*idx] += s.coeff;
    }
    return out;
}

inline Cochain lambda_inverse_vector(std::span<const Integer> v, const ReducedCochainComplex& rc, int p)
{
    Cochain out;
    const auto& basis = rc.bases.at(static_cast<std::size_t>(p));
    for (std::size_t i = 0; i < v.size(); ++i) out.add(lambda_inverse({basis[i], v[i]}, rc.omega));
    return out;
}

/// H̃^{p−1}(K_ω; Z) with dual-simplex representatives.
inline CohomologyGroup reduced_cohomology(const SimplicialComplex& k, VertexSet omega, int p)
{
    return cohomology(reduced_cochain_complex(k, omega).cochains, p);
}

struct HochsterEntry {
    VertexSet omega;
    int p = 0;
    CohomologyGroup group;
    std::vector<VertexSet> basis;      // dual simplices indexing the group's cochain vectors
    std::vector<Cochain> generators;   // λ^{-1} of the representatives, in R/I_K|_ω

    // Coordinates of an ω-homogeneous degree-p cocycle of R/I_K.
    [[nodiscard]] IntVector coordinates(const Cochain& cocycle) const
    {
        IntVector v(basis.size());
        for (const auto& [key, coeff] : cocycle.terms()) {
            if ((key.sigma | key.tau) != omega || key.sigma.size() != p) {
                throw DomainError("cochain not homogeneous in (ω, p)");
            }
            auto it = std::lower_bound(basis.begin(), basis.end(), key.sigma);
            if (it == basis.end() || *it != key.sigma) throw DomainError("monomial outside R/I_K");
            v[static_cast<std::size_t>(it - basis.begin())] += coeff;
        }
        return group.coordinates(v);
    }
};

/// Nonzero H̃^{p−1}(K_ω), ordered by degree p and then by ω in graded order.
struct HochsterTable {
    std::size_t m = 0;
    std::vector<HochsterEntry> entries;

    [[nodiscard]] const HochsterEntry* find(VertexSet omega, int p) const
    {
        for (const auto& e : entries) {
            if (e.omega == omega && e.p == p) return &e;
        }
        return nullptr;
    }
};

struct SweepOptions {
    unsigned workers = 1;
    Limits limits{};
};

inline HochsterTable hochster_table(const SimplicialComplex& k, const SweepOptions& opts = {})
{
    const std::size_t m = k.vertex_count();
    if (m > opts.limits.max_vertices || m > Limits::hard_max_vertices) {
        throw SizeLimit("vertex count " + std::to_string(m) + " exceeds cap " + std::to_string(opts.limits.max_vertices));
    }
    std::vector<VertexSet> omegas;
    omegas.reserve(std::size_t{1} << m);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) omegas.emplace_back(static_cast<std::uint32_t>(w));
    std::sort(omegas.begin(), omegas.end(), graded_less);

    std::vector<std::vector<HochsterEntry>> slots(omegas.size());
    parallel_for(omegas.size(), opts.workers, [&](std::size_t i) {
        const VertexSet omega = omegas[i];
        const SimplicialComplex sub = full_subcomplex(k, omega);
        if (!omega.empty() && sub.is_cone()) return;
        const ReducedCochainComplex rc = reduced_cochain_complex(k, omega);
        for (int p = 0; p < static_cast<int>(rc.bases.size()); ++p) {
            CohomologyGroup h = cohomology(rc.cochains, p);
            if (h.is_zero()) continue;
            HochsterEntry e{omega, p, std::move(h), rc.bases[static_cast<std::size_t>(p)], {}};
            for (const auto& g : e.group.generators) e.generators.push_back(lambda_inverse_vector(g.representative, rc, p));
            slots[i].push_back(std::move(e));
        }
    });

    HochsterTable table;
    table.m = m;
    for (auto& s : slots) {
        for (auto& e : s) table.entries.push_back(std::move(e));
    }
    std::stable_sort(table.entries.begin(), table.entries.end(),
                     [](const HochsterEntry& a, const HochsterEntry& b) { return a.p < b.p; });
    return table;
}

struct DegreeSummary {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors

    friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

/// Degreewise direct sum of the table: H^p(ℝZ_K) ≅ ⊕_ω H̃^{p−1}(K_ω).
inline std::vector<DegreeSummary> betti_and_torsion(const HochsterTable& table)
{
    int top = 0;
    for (const auto& e : table.entries) top = std::max(top, e.p);
    std::vector<DegreeSummary> out(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<Integer>> orders(out.size());
    for (const auto& e : table.entries) {
        auto& d = out[static_cast<std::size_t>(e.p)];
        d.free_rank += e.group.free_rank;
        for (const auto& t : e.group.torsion) orders[static_cast<std::size_t>(e.p)].push_back(t);
    }
    for (std::size_t p = 0; p < out.size(); ++p) out[p].torsion = canonical_torsion(orders[p]);
    return out;
}

inline nlohmann::json integers_to_json(const std::vector<Integer>& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) {
        if (x.is_small()) {
            out.push_back(x.to_int64());
        } else {
            out.push_back(x.str());
        }
    }
    return out;
}

inline nlohmann::json to_json(const HochsterTable& table)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : table.entries) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : e.generators) gens.push_back(to_string(g));
        out.push_back({{"omega", e.omega.labels()},
                       {"p", e.p},
                       {"rank", e.group.free_rank},
                       {"torsion", integers_to_json(e.group.torsion)},
                       {"generators", gens}});
    }
    return out;
}

} // namespace rzk

#endif // RZK_HOCHSTER_HPP
