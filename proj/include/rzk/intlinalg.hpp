#ifndef RZK_INTLINALG_HPP
#define RZK_INTLINALG_HPP

#include "rzk/error.hpp"
#include "rzk/matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rzk {

enum class Transforms : unsigned { none = 0, left = 1, right = 2, both = 3 };

constexpr bool has(Transforms t, Transforms bit) { return (static_cast<unsigned>(t) & static_cast<unsigned>(bit)) != 0; }

/// A = U · D · V with U, V unimodular and D diagonal, d_1 | d_2 | ... ≥ 0.
/// U/U_inv are filled when left transforms were requested, V/V_inv when right
/// transforms were requested; otherwise they are left empty.
struct SmithDecomposition {
    IntegerMatrix U, D, V;
    IntegerMatrix U_inv, V_inv;
    std::size_t rank = 0;

    [[nodiscard]] Integer diagonal(std::size_t i) const
    {
        return i < std::min(D.rows(), D.cols()) ? D(i, i) : Integer{};
    }
    // Nonzero diagonal entries, in divisibility order.
    [[nodiscard]] std::vector<Integer> invariant_factors() const
    {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
        return out;
    }
};

namespace detail {

// row_i(dst) += c · row_j(src), skipping zero entries of the source row.
inline void add_scaled_row(std::span<Integer> dst, std::span<const Integer> src, const Integer& c)
{
    for (std::size_t k = 0; k < src.size(); ++k) {
        if (!src[k].is_zero()) dst[k].add_mul(c, src[k]);
    }
}

inline void swap_rows(IntegerMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j) return;
    auto a = m.row(i);
    auto b = m.row(j);
    for (std::size_t k = 0; k < a.size(); ++k) std::swap(a[k], b[k]);
}

inline void negate_row(IntegerMatrix& m, std::size_t i)
{
    for (auto& v : m.row(i)) v = -v;
}

// Elimination state. The invariant A_orig = L · A · R is maintained with L
// and R_inv stored transposed, so that every update is a row operation.
class SmithEngine {
public:
    SmithEngine(const IntegerMatrix& a, Transforms t)
        : a_(a), left_(has(t, Transforms::left)), right_(has(t, Transforms::right))
    {
        if (left_) {
            lt_ = IntegerMatrix::identity(a.rows());
            l_inv_ = IntegerMatrix::identity(a.rows());
        }
        if (right_) {
            r_ = IntegerMatrix::identity(a.cols());
            r_inv_t_ = IntegerMatrix::identity(a.cols());
        }
    }

    SmithDecomposition run()
    {
        const std::size_t n = a_.rows();
        const std::size_t k = a_.cols();
        std::size_t t = 0;
        for (; t < std::min(n, k); ++t) {
            auto pivot = find_min(t);
            if (!pivot) break;
            row_swap(t, pivot->first);
            col_swap(t, pivot->second);
            while (true) {
                bool clean = true;
                for (std::size_t i = t + 1; i < n; ++i) {
                    if (a_(i, t).is_zero()) continue;
                    row_add(i, t, -(a_(i, t) / a_(t, t)));
                    if (!a_(i, t).is_zero()) clean = false;
                }
                for (std::size_t j = t + 1; j < k; ++j) {
                    if (a_(t, j).is_zero()) continue;
                    col_add(j, t, -(a_(t, j) / a_(t, t)));
                    if (!a_(t, j).is_zero()) clean = false;
                }
                if (!clean) {
                    bring_smaller_remainder(t);
                    continue;
                }
                if (!a_(t, t).is_unit()) {
                    if (auto bad = find_non_multiple(t)) {
                        row_add(t, *bad, Integer{1});
                        continue;
                    }
                }
                break;
            }
            if (a_(t, t).sign() < 0) row_neg(t);
        }

        SmithDecomposition out;
        out.rank = t;
        if (left_) {
            out.U = lt_.transpose();
            out.U_inv = std::move(l_inv_);
        }
        if (right_) {
            out.V = std::move(r_);
            out.V_inv = r_inv_t_.transpose();
        }
        out.D = std::move(a_);
        return out;
    }

private:
    // Smallest |a_ij| over the trailing submatrix, ties broken by lowest (row, col).
    std::optional<std::pair<std::size_t, std::size_t>> find_min(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = t; i < a_.rows(); ++i) {
            auto row = a_.row(i);
            for (std::size_t j = t; j < a_.cols(); ++j) {
                if (row[j].is_zero()) continue;
                if (row[j].is_unit()) return std::pair{i, j};
                Integer v = abs(row[j]);
                if (!best || v < best_abs) {
                    best = {i, j};
                    best_abs = std::move(v);
                }
            }
        }
        return best;
    }

    void bring_smaller_remainder(std::size_t t)
    {
        std::optional<std::size_t> best_row, best_col;
        Integer best_abs = abs(a_(t, t));
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
            if (!a_(i, t).is_zero() && abs(a_(i, t)) < best_abs) {
                best_abs = abs(a_(i, t));
                best_row = i;
            }
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
            if (!a_(t, j).is_zero() && abs(a_(t, j)) < best_abs) {
                best_abs = abs(a_(t, j));
                best_col = j;
                best_row.reset();
            }
        }
        if (best_col) {
            col_swap(t, *best_col);
        } else if (best_row) {
            row_swap(t, *best_row);
        }
    }

    std::optional<std::size_t> find_non_multiple(std::size_t t) const
    {
        const Integer& p = a_(t, t);
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
            auto row = a_.row(i);
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (!row[j].is_zero() && !(row[j] % p).is_zero()) return i;
            }
        }
        return std::nullopt;
    }

    void row_add(std::size_t i, std::size_t j, const Integer& c)
    {
        if (c.is_zero()) return;
        add_scaled_row(a_.row(i), a_.row(j), c);
        if (left_) {
            add_scaled_row(l_inv_.row(i), l_inv_.row(j), c);
            add_scaled_row(lt_.row(j), lt_.row(i), -c);
        }
    }
    void row_swap(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        swap_rows(a_, i, j);
        if (left_) {
            swap_rows(l_inv_, i, j);
            swap_rows(lt_, i, j);
        }
    }
    void row_neg(std::size_t i)
    {
        negate_row(a_, i);
        if (left_) {
            negate_row(l_inv_, i);
            negate_row(lt_, i);
        }
    }
    // column i += c · column j
    void col_add(std::size_t i, std::size_t j, const Integer& c)
    {
        if (c.is_zero()) return;
        for (std::size_t r = 0; r < a_.rows(); ++r) {
            if (!a_(r, j).is_zero()) a_(r, i).add_mul(c, a_(r, j));
        }
        if (right_) {
            add_scaled_row(r_.row(j), r_.row(i), -c);
            add_scaled_row(r_inv_t_.row(i), r_inv_t_.row(j), c);
        }
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
        if (right_) {
            swap_rows(r_, i, j);
            swap_rows(r_inv_t_, i, j);
        }
    }

    IntegerMatrix a_;
    bool left_;
    bool right_;
    IntegerMatrix lt_, l_inv_, r_, r_inv_t_;
};

} // namespace detail

/// Smith normal form by minimal-absolute-value pivoting with lowest-index
/// tie-break; deterministic for a fixed input.
inline SmithDecomposition smith_normal_form(const IntegerMatrix& a, Transforms t = Transforms::both)
{
    return detail::SmithEngine(a, t).run();
}

/// Invariant-factor form (entries > 1, d_i | d_{i+1}) of ⊕ Z/o_i.
inline std::vector<Integer> canonical_torsion(const std::vector<Integer>& orders)
{
    IntegerMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    std::vector<Integer> out;
    for (auto& f : smith_normal_form(diag, Transforms::none).invariant_factors()) {
        if (!f.is_one()) out.push_back(f);
    }
    return out;
}

/// Cochain complex of free abelian groups: coboundaries[p] maps C^p to
/// C^{p+1} and has shape dims[p+1] × dims[p]. Degrees outside the stored
/// range are zero groups.
struct IntegerCochainComplex {
    std::vector<std::size_t> dims;
    std::vector<IntegerMatrix> coboundaries;

    [[nodiscard]] std::size_t dim(int p) const
    {
        return (p < 0 || static_cast<std::size_t>(p) >= dims.size()) ? 0 : dims[static_cast<std::size_t>(p)];
    }

    // Coboundary C^p → C^{p+1}, materialising zero maps at the ends.
    [[nodiscard]] IntegerMatrix coboundary(int p) const
    {
        if (p >= 0 && static_cast<std::size_t>(p) < coboundaries.size()) return coboundaries[static_cast<std::size_t>(p)];
        return IntegerMatrix(dim(p + 1), dim(p));
    }

    // d^p x, without copying the matrix.
    [[nodiscard]] IntVector apply(int p, std::span<const Integer> x) const
    {
        if (x.size() != dim(p)) throw std::invalid_argument("cochain length does not match the degree");
        if (p >= 0 && static_cast<std::size_t>(p) < coboundaries.size()) return coboundaries[static_cast<std::size_t>(p)] * x;
        return IntVector(dim(p + 1));
    }

    void check_shapes() const
    {
        for (std::size_t p = 0; p < coboundaries.size(); ++p) {
            const auto& d = coboundaries[p];
            if (d.cols() != dim(static_cast<int>(p)) || d.rows() != dim(static_cast<int>(p) + 1)) {
                throw ComplexInconsistency("coboundary " + std::to_string(p) + " has the wrong shape");
            }
        }
    }
};

struct CohomologyGenerator {
    Integer order;              // 0 for a free generator
    IntVector representative;   // a cocycle in the cochain basis
};

/// H^p as Z^free_rank ⊕ ⊕ Z/torsion_i, with explicit cocycle representatives
/// (free generators first, then torsion in divisibility order) and the linear
/// map that reads off the class of any cocycle in those coordinates.
struct CohomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    std::vector<CohomologyGenerator> generators;
    IntegerMatrix coordinate_map;  // generators.size() × dim C^p

    [[nodiscard]] bool is_zero() const { return generators.empty(); }
    [[nodiscard]] std::size_t size() const { return generators.size(); }

    // Coordinates of the class of `cocycle`; torsion coordinates are reduced
    // to [0, order). The caller guarantees that `cocycle` is a cocycle.
    [[nodiscard]] IntVector coordinates(std::span<const Integer> cocycle) const
    {
        IntVector out(generators.size());
        for (std::size_t g = 0; g < generators.size(); ++g) {
            auto row = coordinate_map.row(g);
            for (std::size_t k = 0; k < cocycle.size(); ++k) {
                if (!cocycle[k].is_zero() && !row[k].is_zero()) out[g].add_mul(row[k], cocycle[k]);
            }
            if (!generators[g].order.is_zero()) out[g] = mod_floor(out[g], generators[g].order);
        }
        return out;
    }
};

namespace detail {

// ker(out) / im(in) for the maps in: C^{p-1} → C^p and out: C^p → C^{p+1}.
inline CohomologyGroup cohomology_of(const IntegerMatrix& in, const IntegerMatrix& out)
{
    const std::size_t n = in.rows();
    if (!(out * in).is_zero()) throw ComplexInconsistency("d∘d ≠ 0");

    // Kernel of `out`: the last n - r columns of V^{-1}.
    SmithDecomposition z = smith_normal_form(out, Transforms::right);
    const std::size_t r = z.rank;
    const std::size_t k = n - r;
    const IntegerMatrix v = std::move(z.V);
    const IntegerMatrix v_inv = std::move(z.V_inv);

    // Coordinates of im(in) in the kernel basis: rows r.. of V · in.
    const IntegerMatrix v_tail = v.row_block(r, k);
    const IntegerMatrix rel = v_tail * in;
    SmithDecomposition q = smith_normal_form(rel, Transforms::left);
    const IntegerMatrix u = std::move(q.U);
    const IntegerMatrix u_inv = std::move(q.U_inv);

    CohomologyGroup h;
    std::vector<std::size_t> free_idx, tors_idx;
    for (std::size_t i = 0; i < k; ++i) {
        const Integer d = q.diagonal(i);
        if (i >= q.rank) {
            free_idx.push_back(i);
        } else if (!d.is_one()) {
            tors_idx.push_back(i);
        }
    }
    h.free_rank = free_idx.size();
    std::vector<std::size_t> order = free_idx;
    order.insert(order.end(), tors_idx.begin(), tors_idx.end());

    const IntegerMatrix kernel = v_inv.col_block(r, k);
    h.coordinate_map = IntegerMatrix(order.size(), n);
    for (std::size_t g = 0; g < order.size(); ++g) {
        const std::size_t i = order[g];
        CohomologyGenerator gen;
        gen.order = i >= q.rank ? Integer{} : q.diagonal(i);
        gen.representative = kernel * u.column(i);
        if (!gen.order.is_zero()) h.torsion.push_back(gen.order);
        h.generators.push_back(std::move(gen));
        // coordinate g = (U^{-1})_i · (V_tail · x)
        auto dst = h.coordinate_map.row(g);
        auto ui = u_inv.row(i);
        for (std::size_t j = 0; j < k; ++j) {
            if (!ui[j].is_zero()) add_scaled_row(dst, v_tail.row(j), ui[j]);
        }
    }
    return h;
}

} // namespace detail

inline CohomologyGroup cohomology(const IntegerCochainComplex& c, int p)
{
    c.check_shapes();
    return detail::cohomology_of(c.coboundary(p - 1), c.coboundary(p));
}

/// Solves target ≡ Σ c_i · basis_i (mod im coboundary) over Z. Coordinates
/// with a positive entry in `orders` are reduced modulo it. Returns nullopt
/// when no integer solution exists.
inline std::optional<IntVector> express_in_quotient(std::span<const Integer> target,
                                                    const std::vector<IntVector>& cocycle_basis,
                                                    const IntegerMatrix& coboundary,
                                                    std::span<const Integer> orders = {})
{
    const std::size_t n = target.size();
    const std::size_t g = cocycle_basis.size();
    if (coboundary.rows() != n) throw std::invalid_argument("coboundary rows must match target length");
    IntegerMatrix a(n, g + coboundary.cols());
    for (std::size_t j = 0; j < g; ++j) {
        if (cocycle_basis[j].size() != n) throw std::invalid_argument("basis vector length mismatch");
        for (std::size_t i = 0; i < n; ++i) a(i, j) = cocycle_basis[j][i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < coboundary.cols(); ++j) a(i, g + j) = coboundary(i, j);
    }
    const SmithDecomposition s = smith_normal_form(a, Transforms::both);
    const IntVector z = n ? s.U_inv * target : IntVector{};
    IntVector y(a.cols());
    for (std::size_t i = 0; i < n; ++i) {
        if (i < s.rank) {
            if (!(z[i] % s.D(i, i)).is_zero()) return std::nullopt;
            y[i] = z[i] / s.D(i, i);
        } else if (!z[i].is_zero()) {
            return std::nullopt;
        }
    }
    const IntVector x = a.cols() ? s.V_inv * y : IntVector{};
    IntVector coords(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(g));
    for (std::size_t i = 0; i < g && i < orders.size(); ++i) {
        if (orders[i].sign() > 0) coords[i] = mod_floor(coords[i], orders[i]);
    }
    return coords;
}

} // namespace rzk

#endif // RZK_INTLINALG_HPP
