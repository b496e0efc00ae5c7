#ifndef RZK_CELLULAR_HPP
#define RZK_CELLULAR_HPP

#include "rzk/complex.hpp"
#include "rzk/intlinalg.hpp"
#include "rzk/zalgebra.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rzk {

// Cellular model of ℝZ_K inside the cube (D¹)^m. Each interval factor has the
// cells 0, 1 and the segment 01; a product cell e_1 × ... × e_m lies in ℝZ_K
// iff {i : e_i = 01} is a simplex of K. Cochains are written in the dual-cell
// basis (e_1 × ... × e_m)*. This module deliberately does not go through the
// monomial algebra; it is the independent route.

enum class Letter : std::uint8_t { zero = 0, one = 1, seg = 2 };

/// A product cell, stored as the positions carrying the segment and the
/// positions carrying the vertex 1 (all other positions carry 0).
struct Cell {
    VertexSet seg;
    VertexSet ones;

    [[nodiscard]] int dimension() const { return seg.size(); }

    [[nodiscard]] Letter letter(int bit) const
    {
        return seg.contains(bit) ? Letter::seg : ones.contains(bit) ? Letter::one : Letter::zero;
    }

    // Base-3 word Σ letter_i 3^i.
    [[nodiscard]] std::uint64_t code(std::size_t m) const
    {
        std::uint64_t c = 0;
        for (int i = static_cast<int>(m) - 1; i >= 0; --i) c = c * 3 + static_cast<std::uint64_t>(letter(i));
        return c;
    }

    static Cell from_code(std::uint64_t code, std::size_t m)
    {
        Cell c;
        for (std::size_t i = 0; i < m; ++i, code /= 3) {
            const auto l = code % 3;
            if (l == 2) c.seg.mask |= 1u << i;
            if (l == 1) c.ones.mask |= 1u << i;
        }
        return c;
    }

    static Cell from_letters(std::span<const Letter> letters)
    {
        Cell c;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (letters[i] == Letter::seg) c.seg.mask |= 1u << i;
            if (letters[i] == Letter::one) c.ones.mask |= 1u << i;
        }
        return c;
    }

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Σ_{σ∈K} 2^{m−|σ|}.
inline std::uint64_t cell_count(const SimplicialComplex& k)
{
    std::uint64_t total = 0;
    const int m = static_cast<int>(k.vertex_count());
    for (VertexSet s : k.simplices()) total += std::uint64_t{1} << (m - s.size());
    return total;
}

/// Cells of ℝZ_K grouped by dimension, each group sorted by base-3 code.
inline std::vector<std::vector<Cell>> enumerate_cells(const SimplicialComplex& k, const Limits& limits = {})
{
    const std::size_t m = k.vertex_count();
    if (const auto n = cell_count(k); n > limits.max_cells) {
        throw SizeLimit("cellular model has " + std::to_string(n) + " cells, cap is " + std::to_string(limits.max_cells));
    }
    const VertexSet all = VertexSet::full(m);
    std::vector<std::vector<Cell>> out(static_cast<std::size_t>(k.dimension() + 2));
    for (VertexSet s : k.simplices()) {
        const VertexSet free = all - s;
        for (std::uint32_t ones = free.mask;; ones = (ones - 1) & free.mask) {
            out[static_cast<std::size_t>(s.size())].push_back({s, VertexSet(ones)});
            if (ones == 0) break;
        }
    }
    for (auto& group : out) {
        std::sort(group.begin(), group.end(), [m](const Cell& a, const Cell& b) { return a.code(m) < b.code(m); });
    }
    return out;
}

/// The cellular cochain complex C_e^*(ℝZ_K) with its dual-cell bases.
struct CellularComplex {
    std::size_t m = 0;
    std::vector<std::vector<Cell>> cells;             // cells[p] = basis of C^p
    std::vector<std::vector<std::uint64_t>> codes;    // parallel to cells, sorted
    IntegerCochainComplex cochains;

    [[nodiscard]] std::optional<std::size_t> index_of(const Cell& c) const
    {
        const auto p = static_cast<std::size_t>(c.dimension());
        if (p >= codes.size()) return std::nullopt;
        const std::uint64_t code = c.code(m);
        auto it = std::lower_bound(codes[p].begin(), codes[p].end(), code);
        if (it == codes[p].end() || *it != code) return std::nullopt;
        return static_cast<std::size_t>(it - codes[p].begin());
    }

    [[nodiscard]] std::size_t dim(int p) const { return cochains.dim(p); }
};

// d(0*) = −01*, d(1*) = 01*, d(01*) = 0 in each factor, combined with the
// sign (−1)^{number of segment letters before position i}.
inline CellularComplex cellular_coboundary(const SimplicialComplex& k, const Limits& limits = {})
{
    CellularComplex cx;
    cx.m = k.vertex_count();
    cx.cells = enumerate_cells(k, limits);
    for (const auto& group : cx.cells) {
        std::vector<std::uint64_t> codes;
        codes.reserve(group.size());
        for (const auto& c : group) codes.push_back(c.code(cx.m));
        cx.codes.push_back(std::move(codes));
        cx.cochains.dims.push_back(group.size());
    }
    for (std::size_t p = 0; p + 1 < cx.cells.size(); ++p) {
        IntegerMatrix d(cx.cells[p + 1].size(), cx.cells[p].size());
        for (std::size_t col = 0; col < cx.cells[p].size(); ++col) {
            const Cell& e = cx.cells[p][col];
            for (int i = 0; i < static_cast<int>(cx.m); ++i) {
                if (e.seg.contains(i)) continue;
                const Cell f{e.seg | VertexSet(1u << i), e.ones - VertexSet(1u << i)};
                if (!k.is_simplex(f.seg)) continue;  // dual cell outside ℝZ_K
                const int before = e.seg.count_below(i);
                const int face_sign = e.ones.contains(i) ? 1 : -1;
                d(*cx.index_of(f), col) = (before & 1) ? -face_sign : face_sign;
            }
        }
        cx.cochains.coboundaries.push_back(std::move(d));
    }
    return cx;
}

inline CohomologyGroup oracle_cohomology(const CellularComplex& cx, int p) { return cohomology(cx.cochains, p); }

inline CohomologyGroup oracle_cohomology(const SimplicialComplex& k, int p, const Limits& limits = {})
{
    return oracle_cohomology(cellular_coboundary(k, limits), p);
}

/// A cochain on the interval [0,1] in the basis {0*, 1*, 01*}.
struct IntervalCochain {
    Integer zero, one, seg;

    friend bool operator==(const IntervalCochain&, const IntervalCochain&) = default;
};

// Front-face/back-face cup product on the 1-simplex with vertex order 0 < 1:
// 0*∪0* = 0*, 1*∪1* = 1*, 0*∪01* = 01*, 01*∪1* = 01*, all others vanish.
inline IntervalCochain interval_cup(const IntervalCochain& a, const IntervalCochain& b)
{
    IntervalCochain out;
    out.zero = a.zero * b.zero;
    out.one = a.one * b.one;
    out.seg = a.zero * b.seg + a.seg * b.one;
    return out;
}

/// Parity of Σ_i degrees_b[i] · Σ_{j>i} degrees_a[j].
inline bool epsilon(std::span<const int> degrees_a, std::span<const int> degrees_b)
{
    if (degrees_a.size() != degrees_b.size()) throw std::invalid_argument("epsilon: length mismatch");
    long long acc = 0;
    long long suffix = 0;
    for (std::size_t i = degrees_a.size(); i-- > 0;) {
        acc += static_cast<long long>(degrees_b[i]) * suffix;
        suffix += degrees_a[i];
    }
    return acc & 1;
}

namespace detail {

inline std::vector<int> cell_degrees(const Cell& c, std::size_t m)
{
    std::vector<int> d(m);
    for (std::size_t i = 0; i < m; ++i) d[i] = c.seg.contains(static_cast<int>(i)) ? 1 : 0;
    return d;
}

inline IntervalCochain dual_letter(Letter l)
{
    IntervalCochain c;
    (l == Letter::zero ? c.zero : l == Letter::one ? c.one : c.seg) = 1;
    return c;
}

} // namespace detail

/// Product of two dual cells: (−1)^ε ⊗_i interval_cup(x_i*, y_i*). Returns
/// nullopt when some factor vanishes.
inline std::optional<std::pair<Cell, int>> cup_cells(const Cell& x, const Cell& y, std::size_t m)
{
    Cell out;
    for (int i = 0; i < static_cast<int>(m); ++i) {
        const IntervalCochain c = interval_cup(detail::dual_letter(x.letter(i)), detail::dual_letter(y.letter(i)));
        if (!c.seg.is_zero()) {
            out.seg.mask |= 1u << i;
        } else if (!c.one.is_zero()) {
            out.ones.mask |= 1u << i;
        } else if (c.zero.is_zero()) {
            return std::nullopt;
        }
    }
    const bool sign = epsilon(detail::cell_degrees(x, m), detail::cell_degrees(y, m));
    return std::pair{out, sign ? -1 : 1};
}

/// A cellular cochain: coefficients over the degree-p dual-cell basis.
struct CellularCochain {
    int degree = 0;
    IntVector coeffs;

    friend bool operator==(const CellularCochain&, const CellularCochain&) = default;
};

/// Bilinear extension of cup_cells over the nonzero terms of a and b.
inline CellularCochain oracle_cup_naive(const CellularComplex& cx, const CellularCochain& a, const CellularCochain& b)
{
    CellularCochain out{a.degree + b.degree, IntVector(cx.dim(a.degree + b.degree))};
    const auto& ca = cx.cells.at(static_cast<std::size_t>(a.degree));
    const auto& cb = cx.cells.at(static_cast<std::size_t>(b.degree));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            auto prod = cup_cells(ca[i], cb[j], cx.m);
            if (!prod) continue;
            const auto idx = cx.index_of(prod->first);
            if (!idx) continue;  // restricted away from ℝZ_K
            Integer c = a.coeffs[i] * b.coeffs[j];
            if (prod->second < 0) c = -c;
            out.coeffs[*idx] += c;
        }
    }
    return out;
}

/// Cup product on C_e^*(ℝZ_K), evaluated cell by cell: for a target cell e
/// with segment set σ_e, (a∪b)(e) sums over the ways of splitting σ_e into
/// the segments S carried by a (|S| = deg a) and T carried by b.
inline CellularCochain oracle_cup(const CellularComplex& cx, const CellularCochain& a, const CellularCochain& b)
{
    const int p = a.degree;
    const int q = b.degree;
    CellularCochain out{p + q, IntVector(cx.dim(p + q))};
    if (out.coeffs.empty()) return out;
    const auto& targets = cx.cells[static_cast<std::size_t>(p + q)];
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Cell& e = targets[t];
        Integer value;
        for (std::uint32_t s = e.seg.mask;; s = (s - 1) & e.seg.mask) {
            const VertexSet front(s);
            if (front.size() == p) {
                const VertexSet back = e.seg - front;
                const auto ia = cx.index_of(Cell{front, e.ones});
                const auto ib = cx.index_of(Cell{back, e.ones | front});
                if (ia && ib && !a.coeffs[*ia].is_zero() && !b.coeffs[*ib].is_zero()) {
                    // ε = #{(i, j) : i ∈ back, j ∈ front, j > i}
                    int inversions = 0;
                    for (std::uint32_t r = back.mask; r; r &= r - 1) inversions += front.count_above(std::countr_zero(r));
                    if (inversions & 1) {
                        value -= a.coeffs[*ia] * b.coeffs[*ib];
                    } else {
                        value.add_mul(a.coeffs[*ia], b.coeffs[*ib]);
                    }
                }
            }
            if (s == 0) break;
        }
        out.coeffs[t] = std::move(value);
    }
    return out;
}

/// θ followed by f: u_σ t_τ ↦ ⊗_i e_i*, with 01* on σ, 1* on τ and 0* + 1*
/// elsewhere, expanded into dual cells.
inline CellularCochain theta_transport(const Cochain& c, const CellularComplex& cx, const SimplicialComplex& k)
{
    const auto deg = c.degree();
    if (c.is_zero()) return {0, IntVector(cx.dim(0))};
    if (!deg) throw DomainError("theta_transport needs a homogeneous cochain");
    CellularCochain out{*deg, IntVector(cx.dim(*deg))};
    const VertexSet all = VertexSet::full(cx.m);
    for (const auto& [key, coeff] : c.terms()) {
        if (!k.is_simplex(key.sigma)) throw DomainError("monomial " + to_string(Monomial{key.sigma, key.tau, coeff}) + " lies in I_K");
        const VertexSet free = all - key.sigma - key.tau;
        for (std::uint32_t extra = free.mask;; extra = (extra - 1) & free.mask) {
            const auto idx = cx.index_of(Cell{key.sigma, key.tau | VertexSet(extra)});
            out.coeffs[*idx] += coeff;
            if (extra == 0) break;
        }
    }
    return out;
}

// Inverse of θ on a single dual cell, using 0* = 𝟙 − t, 1* = t, 01* = u.
inline Cochain theta_inverse(const Cell& e, std::size_t m)
{
    Cochain out;
    const VertexSet zeros = VertexSet::full(m) - e.seg - e.ones;
    for (std::uint32_t a = zeros.mask;; a = (a - 1) & zeros.mask) {
        const VertexSet extra(a);
        out.add(MonomialKey{e.seg, e.ones | extra}, (extra.size() & 1) ? -1 : 1);
        if (a == 0) break;
    }
    return out;
}

// {"dims":[...], "coboundaries":[[[row], ...], ...]}
inline nlohmann::json to_json(const IntegerCochainComplex& c)
{
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& d : c.coboundaries) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& v : d.row(r)) row.push_back(v.to_int64());
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    return {{"dims", c.dims}, {"coboundaries", mats}};
}

} // namespace rzk

#endif // RZK_CELLULAR_HPP
