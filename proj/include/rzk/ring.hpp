#ifndef RZK_RING_HPP
#define RZK_RING_HPP

#include "rzk/cellular.hpp"
#include "rzk/hochster.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace rzk {

enum class Route { hochster, oracle };

inline std::string to_string(Route r) { return r == Route::hochster ? "hochster" : "oracle"; }

/// A cocycle representative: a cochain of R/I_K (Hochster route) or a
/// cellular cochain on ℝZ_K (oracle route).
using Representative = std::variant<Cochain, CellularCochain>;

struct RingGenerator {
    std::string name;
    int degree = 0;
    std::optional<VertexSet> omega;  // multidegree, Hochster route only
    Integer order;                   // 0 for free generators
    Representative representative;
};

namespace detail {

/// Route-specific arithmetic on representatives.
class RingContext {
public:
    virtual ~RingContext() = default;
    [[nodiscard]] virtual Route route() const = 0;
    [[nodiscard]] virtual const SimplicialComplex& complex() const = 0;
    [[nodiscard]] virtual Representative multiply(const Representative& a, const Representative& b) const = 0;
    [[nodiscard]] virtual Representative add(const Representative& a, const Representative& b) const = 0;
    // Class of a degree-p cocycle in the coordinates of all degree-p generators.
    [[nodiscard]] virtual IntVector coordinates(int p, const Representative& r) const = 0;
    [[nodiscard]] virtual bool is_cocycle(const Representative& r) const = 0;
    // A random coboundary in the same degree (and multidegree) as g.
    [[nodiscard]] virtual Representative random_coboundary(const RingGenerator& g, std::mt19937_64& rng) const = 0;
    // Moves a representative of the other route into this route's cochains.
    [[nodiscard]] virtual Representative transport(const Representative& r) const = 0;
};

} // namespace detail

/// Generators of H*(ℝZ_K; Z) by degree, with the product of every pair of
/// generators expressed in the coordinates of the target degree.
struct RingPresentation {
    Route route = Route::hochster;
    std::size_t m = 0;
    std::vector<RingGenerator> generators;
    std::vector<std::size_t> degree_offset;  // generators of degree p: [degree_offset[p], degree_offset[p+1])
    // (i, j) ↦ coordinates of g_i · g_j over the generators of degree deg g_i + deg g_j.
    // Pairs whose product is zero are not stored.
    std::map<std::pair<std::size_t, std::size_t>, IntVector> products;
    IntVector unit;  // class of 1 in degree-0 coordinates
    std::shared_ptr<const detail::RingContext> context;

    [[nodiscard]] int top_degree() const { return static_cast<int>(degree_offset.size()) - 2; }

    [[nodiscard]] std::size_t count(int p) const
    {
        if (p < 0 || p > top_degree()) return 0;
        return degree_offset[static_cast<std::size_t>(p) + 1] - degree_offset[static_cast<std::size_t>(p)];
    }
    [[nodiscard]] std::size_t offset(int p) const { return degree_offset[static_cast<std::size_t>(p)]; }

    [[nodiscard]] IntVector product(std::size_t i, std::size_t j) const
    {
        if (auto it = products.find({i, j}); it != products.end()) return it->second;
        return IntVector(count(generators[i].degree + generators[j].degree));
    }

    [[nodiscard]] std::vector<Integer> orders(int p) const
    {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < count(p); ++i) out.push_back(generators[offset(p) + i].order);
        return out;
    }

    [[nodiscard]] DegreeSummary summary(int p) const
    {
        DegreeSummary s;
        std::vector<Integer> tors;
        for (const auto& o : orders(p)) {
            if (o.is_zero()) {
                ++s.free_rank;
            } else {
                tors.push_back(o);
            }
        }
        s.torsion = canonical_torsion(tors);
        return s;
    }
};

namespace detail {

inline void reduce_mod_orders(IntVector& v, const std::vector<Integer>& orders)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!orders[i].is_zero()) v[i] = mod_floor(v[i], orders[i]);
    }
}

inline Cochain random_combination(const std::vector<Monomial>& basis, std::mt19937_64& rng)
{
    Cochain c;
    for (const auto& mon : basis) {
        const auto coeff = static_cast<std::int64_t>(rng() % 7) - 3;
        c.add(mon.key(), coeff);
    }
    return c;
}

class HochsterContext final : public RingContext {
public:
    HochsterContext(SimplicialComplex k, HochsterTable table) : k_(std::move(k)), table_(std::move(table))
    {
        for (std::size_t i = 0; i < table_.entries.size(); ++i) {
            const auto& e = table_.entries[i];
            index_[{e.omega.mask, e.p}] = {i, degree_size_[e.p]};
            degree_size_[e.p] += e.group.size();
        }
        cells_ = std::make_shared<CellularComplex>();
        cells_once_ = std::make_shared<std::once_flag>();
    }

    [[nodiscard]] Route route() const override { return Route::hochster; }
    [[nodiscard]] const SimplicialComplex& complex() const override { return k_; }
    [[nodiscard]] const HochsterTable& table() const { return table_; }

    [[nodiscard]] Representative multiply(const Representative& a, const Representative& b) const override
    {
        return mul(std::get<Cochain>(a), std::get<Cochain>(b), &k_);
    }
    [[nodiscard]] Representative add(const Representative& a, const Representative& b) const override
    {
        return std::get<Cochain>(a) + std::get<Cochain>(b);
    }

    [[nodiscard]] IntVector coordinates(int p, const Representative& r) const override
    {
        const auto sz = degree_size_.find(p);
        IntVector out(sz == degree_size_.end() ? 0 : sz->second);
        // split by multidegree ω; components with no entry are zero groups
        std::map<std::uint32_t, Cochain> parts;
        for (const auto& [key, coeff] : std::get<Cochain>(r).terms()) {
            if (key.degree() != p) throw DomainError("cochain is not of degree " + std::to_string(p));
            parts[key.omega().mask].add(key, coeff);
        }
        for (const auto& [omega, part] : parts) {
            const auto it = index_.find({omega, p});
            if (it == index_.end()) continue;
            const IntVector local = table_.entries[it->second.first].coordinates(part);
            const std::size_t base = it->second.second;
            for (std::size_t i = 0; i < local.size(); ++i) out[base + i] = local[i];
        }
        return out;
    }

    [[nodiscard]] bool is_cocycle(const Representative& r) const override
    {
        return differential(std::get<Cochain>(r), &k_).is_zero();
    }

    [[nodiscard]] Representative random_coboundary(const RingGenerator& g, std::mt19937_64& rng) const override
    {
        std::vector<Monomial> lower;
        for (auto& mon : omega_basis(k_, *g.omega)) {
            if (mon.degree() == g.degree - 1) lower.push_back(mon);
        }
        return differential(random_combination(lower, rng), &k_);
    }

    [[nodiscard]] Representative transport(const Representative& r) const override
    {
        if (std::holds_alternative<Cochain>(r)) return r;
        // cellular → algebra through θ^{-1}
        const auto& cc = std::get<CellularCochain>(r);
        std::call_once(*cells_once_, [this] { *cells_ = cellular_coboundary(k_); });
        Cochain out;
        for (std::size_t i = 0; i < cc.coeffs.size(); ++i) {
            if (!cc.coeffs[i].is_zero()) out += cc.coeffs[i] * theta_inverse(cells_->cells[static_cast<std::size_t>(cc.degree)][i], k_.vertex_count());
        }
        return out;
    }

private:
    SimplicialComplex k_;
    HochsterTable table_;
    // (ω, p) ↦ (entry index, offset within the degree-p generators)
    std::map<std::pair<std::uint32_t, int>, std::pair<std::size_t, std::size_t>> index_;
    std::map<int, std::size_t> degree_size_;
    std::shared_ptr<CellularComplex> cells_;  // built lazily for transport
    std::shared_ptr<std::once_flag> cells_once_;
};

class OracleContext final : public RingContext {
public:
    OracleContext(SimplicialComplex k, CellularComplex cx, std::vector<CohomologyGroup> groups)
        : k_(std::move(k)), cx_(std::move(cx)), groups_(std::move(groups))
    {
    }

    [[nodiscard]] Route route() const override { return Route::oracle; }
    [[nodiscard]] const SimplicialComplex& complex() const override { return k_; }
    [[nodiscard]] const CellularComplex& cells() const { return cx_; }
    [[nodiscard]] const std::vector<CohomologyGroup>& groups() const { return groups_; }

    [[nodiscard]] Representative multiply(const Representative& a, const Representative& b) const override
    {
        return oracle_cup(cx_, std::get<CellularCochain>(a), std::get<CellularCochain>(b));
    }
    [[nodiscard]] Representative add(const Representative& a, const Representative& b) const override
    {
        CellularCochain out = std::get<CellularCochain>(a);
        const auto& rhs = std::get<CellularCochain>(b);
        for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += rhs.coeffs[i];
        return out;
    }
    [[nodiscard]] IntVector coordinates(int p, const Representative& r) const override
    {
        if (p < 0 || static_cast<std::size_t>(p) >= groups_.size()) return {};
        return groups_[static_cast<std::size_t>(p)].coordinates(std::get<CellularCochain>(r).coeffs);
    }
    [[nodiscard]] bool is_cocycle(const Representative& r) const override
    {
        const auto& c = std::get<CellularCochain>(r);
        return is_zero(cx_.cochains.apply(c.degree, c.coeffs));
    }
    [[nodiscard]] Representative random_coboundary(const RingGenerator& g, std::mt19937_64& rng) const override
    {
        IntVector x(cx_.dim(g.degree - 1));
        for (auto& v : x) v = static_cast<std::int64_t>(rng() % 7) - 3;
        CellularCochain out{g.degree, IntVector(cx_.dim(g.degree))};
        if (g.degree > 0) out.coeffs = cx_.cochains.apply(g.degree - 1, x);
        return out;
    }
    [[nodiscard]] Representative transport(const Representative& r) const override
    {
        if (std::holds_alternative<CellularCochain>(r)) return r;
        const auto& c = std::get<Cochain>(r);
        if (c.is_zero()) return CellularCochain{};
        return theta_transport(c, cx_, k_);
    }

private:
    SimplicialComplex k_;
    CellularComplex cx_;
    std::vector<CohomologyGroup> groups_;
};

inline std::string generator_name(int p, std::size_t index) { return "g" + std::to_string(p) + "_" + std::to_string(index + 1); }

inline void fill_products(RingPresentation& pres, unsigned workers)
{
    const auto& ctx = *pres.context;
    const std::size_t n = pres.generators.size();
    std::vector<std::vector<std::pair<std::size_t, IntVector>>> rows(n);
    parallel_for(n, workers, [&](std::size_t i) {
        const auto& gi = pres.generators[i];
        for (std::size_t j = 0; j < n; ++j) {
            const auto& gj = pres.generators[j];
            const int p = gi.degree + gj.degree;
            if (pres.count(p) == 0) continue;
            const Representative prod = ctx.multiply(gi.representative, gj.representative);
            IntVector coords = ctx.coordinates(p, prod);
            if (!is_zero(coords)) rows[i].emplace_back(j, std::move(coords));
        }
    });
    pres.products.clear();
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& [j, coords] : rows[i]) pres.products.emplace(std::pair{i, j}, std::move(coords));
    }
}

inline void finish_offsets(RingPresentation& pres)
{
    int top = 0;
    for (const auto& g : pres.generators) top = std::max(top, g.degree);
    pres.degree_offset.assign(static_cast<std::size_t>(top) + 2, 0);
    for (const auto& g : pres.generators) ++pres.degree_offset[static_cast<std::size_t>(g.degree) + 1];
    for (std::size_t p = 1; p < pres.degree_offset.size(); ++p) pres.degree_offset[p] += pres.degree_offset[p - 1];
}

} // namespace detail

struct RingOptions {
    unsigned workers = 1;
    Limits limits{};
};

inline RingPresentation build_ring(const SimplicialComplex& k, Route route, const RingOptions& opts = {})
{
    RingPresentation pres;
    pres.route = route;
    pres.m = k.vertex_count();
    if (route == Route::hochster) {
        HochsterTable table = hochster_table(k, {opts.workers, opts.limits});
        std::map<int, std::size_t> index;
        for (const auto& e : table.entries) {
            for (std::size_t g = 0; g < e.generators.size(); ++g) {
                RingGenerator gen;
                gen.degree = e.p;
                gen.omega = e.omega;
                gen.order = e.group.generators[g].order;
                gen.representative = e.generators[g];
                gen.name = (e.p == 0 && e.omega.empty()) ? "1" : detail::generator_name(e.p, index[e.p]);
                ++index[e.p];
                pres.generators.push_back(std::move(gen));
            }
        }
        pres.context = std::make_shared<detail::HochsterContext>(k, std::move(table));
    } else {
        CellularComplex cx = cellular_coboundary(k, opts.limits);
        std::vector<CohomologyGroup> groups(cx.cells.size());
        parallel_for(groups.size(), opts.workers, [&](std::size_t p) { groups[p] = oracle_cohomology(cx, static_cast<int>(p)); });
        for (std::size_t p = 0; p < groups.size(); ++p) {
            for (std::size_t g = 0; g < groups[p].size(); ++g) {
                RingGenerator gen;
                gen.degree = static_cast<int>(p);
                gen.order = groups[p].generators[g].order;
                gen.representative = CellularCochain{static_cast<int>(p), groups[p].generators[g].representative};
                gen.name = detail::generator_name(static_cast<int>(p), g);
                pres.generators.push_back(std::move(gen));
            }
        }
        pres.context = std::make_shared<detail::OracleContext>(k, std::move(cx), std::move(groups));
    }
    detail::finish_offsets(pres);
    detail::fill_products(pres, opts.workers);
    Cochain one;
    one.add(MonomialKey{}, 1);
    pres.unit = pres.context->coordinates(0, pres.context->transport(one));
    return pres;
}

/// Replaces the representative of generator `index` by rep + delta and
/// rebuilds the product table. delta must be a coboundary.
inline RingPresentation apply_perturbation(const RingPresentation& pres, std::size_t index, const Representative& delta,
                                           unsigned workers = 1)
{
    const auto& ctx = *pres.context;
    const auto& g = pres.generators.at(index);
    if (!ctx.is_cocycle(delta) || !is_zero(ctx.coordinates(g.degree, delta))) {
        throw DomainError("perturbation of " + g.name + " is not a coboundary");
    }
    RingPresentation out = pres;
    out.generators[index].representative = ctx.add(g.representative, delta);
    detail::fill_products(out, workers);
    return out;
}

struct IndependenceReport {
    std::size_t trials = 0;
    std::size_t mismatches = 0;
    [[nodiscard]] bool ok() const { return mismatches == 0; }
};

/// Perturbs every generator by a random coboundary, rebuilds the product
/// table and compares it with the original, `trials` times.
inline IndependenceReport representative_independence_check(const RingPresentation& pres, std::size_t trials,
                                                             std::uint64_t seed, unsigned workers = 1)
{
    std::mt19937_64 rng(seed);
    IndependenceReport report;
    for (std::size_t t = 0; t < trials; ++t) {
        RingPresentation trial = pres;
        for (auto& g : trial.generators) {
            if (g.degree == 0) continue;
            g.representative = pres.context->add(g.representative, pres.context->random_coboundary(g, rng));
        }
        detail::fill_products(trial, workers);
        ++report.trials;
        if (trial.products != pres.products) ++report.mismatches;
    }
    return report;
}

struct DegreeComparison {
    int p = 0;
    DegreeSummary a, b;
    bool groups_match = false;
    bool isomorphism = false;  // the transported basis change is an isomorphism
};

struct RingComparison {
    std::vector<DegreeComparison> degrees;
    std::size_t products_checked = 0;
    std::size_t product_mismatches = 0;
    std::vector<std::string> messages;

    [[nodiscard]] bool match() const
    {
        if (product_mismatches) return false;
        for (const auto& d : degrees) {
            if (!d.groups_match || !d.isomorphism) return false;
        }
        return true;
    }
};

/// Compares two presentations of the same complex. Each generator of `a` is
/// transported into `b`'s cochains (through θ when the routes differ) and
/// expressed in `b`'s coordinates; this basis change P must be an
/// isomorphism, and the structure constants must satisfy
/// P(c^a_ij) = Σ_kl P_ki P_lj c^b_kl.
inline RingComparison compare_rings(const RingPresentation& a, const RingPresentation& b)
{
    RingComparison report;
    const auto& bctx = *b.context;
    const int top = std::max(a.top_degree(), b.top_degree());

    // columns of P, per generator of a
    std::vector<IntVector> image(a.generators.size());
    for (int p = 0; p <= top; ++p) {
        DegreeComparison d;
        d.p = p;
        d.a = a.summary(p);
        d.b = b.summary(p);
        d.groups_match = d.a == d.b;
        const std::size_t na = a.count(p);
        const std::size_t nb = b.count(p);
        for (std::size_t i = 0; i < na; ++i) {
            const std::size_t gi = (na ? a.offset(p) : 0) + i;
            image[gi] = bctx.coordinates(p, bctx.transport(a.generators[gi].representative));
        }
        // surjectivity of [P | relations of b]; with equal invariants this is an isomorphism
        const auto orders = b.orders(p);
        IntegerMatrix sys(nb, na + nb);
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t r = 0; r < nb; ++r) sys(r, i) = image[a.offset(p) + i][r];
        }
        for (std::size_t r = 0; r < nb; ++r) sys(r, na + r) = orders[r];
        const auto snf = smith_normal_form(sys, Transforms::none);
        bool onto = snf.rank == nb;
        for (std::size_t r = 0; r < snf.rank && onto; ++r) onto = snf.D(r, r).is_one();
        d.isomorphism = d.groups_match && onto;
        if (!d.groups_match) report.messages.push_back("degree " + std::to_string(p) + ": groups differ");
        else if (!onto) report.messages.push_back("degree " + std::to_string(p) + ": transported basis is not onto");
        report.degrees.push_back(std::move(d));
    }
    for (const auto& d : report.degrees) {
        if (!d.groups_match || !d.isomorphism) return report;
    }

    for (std::size_t i = 0; i < a.generators.size(); ++i) {
        for (std::size_t j = 0; j < a.generators.size(); ++j) {
            const int p = a.generators[i].degree + a.generators[j].degree;
            const std::size_t nb = b.count(p);
            if (nb == 0) continue;
            ++report.products_checked;
            const auto orders = b.orders(p);
            // P · c^a_ij
            IntVector lhs(nb);
            const IntVector ca = a.product(i, j);
            for (std::size_t k = 0; k < ca.size(); ++k) {
                if (ca[k].is_zero()) continue;
                const auto& col = image[a.offset(p) + k];
                for (std::size_t r = 0; r < nb; ++r) lhs[r].add_mul(ca[k], col[r]);
            }
            // Σ_kl P_ki P_lj c^b_kl
            IntVector rhs(nb);
            const int pi = a.generators[i].degree;
            const int pj = a.generators[j].degree;
            const auto& coli = image[i];
            const auto& colj = image[j];
            for (std::size_t k = 0; k < coli.size(); ++k) {
                if (coli[k].is_zero()) continue;
                for (std::size_t l = 0; l < colj.size(); ++l) {
                    if (colj[l].is_zero()) continue;
                    auto it = b.products.find({b.offset(pi) + k, b.offset(pj) + l});
                    if (it == b.products.end()) continue;
                    const Integer w = coli[k] * colj[l];
                    for (std::size_t r = 0; r < nb; ++r) rhs[r].add_mul(w, it->second[r]);
                }
            }
            detail::reduce_mod_orders(lhs, orders);
            detail::reduce_mod_orders(rhs, orders);
            if (lhs != rhs) {
                ++report.product_mismatches;
                if (report.messages.size() < 20) {
                    report.messages.push_back("product " + a.generators[i].name + "·" + a.generators[j].name + " differs");
                }
            }
        }
    }
    return report;
}

inline std::string representative_string(const RingGenerator& g)
{
    if (const auto* c = std::get_if<Cochain>(&g.representative)) return to_string(*c);
    return {};
}

inline nlohmann::json to_json(const RingPresentation& pres)
{
    nlohmann::json gens = nlohmann::json::array();
    const auto* oracle = dynamic_cast<const detail::OracleContext*>(pres.context.get());
    for (const auto& g : pres.generators) {
        nlohmann::json j = {{"name", g.name}, {"degree", g.degree}, {"order", g.order.is_small() ? nlohmann::json(g.order.to_int64()) : nlohmann::json(g.order.str())}};
        if (g.omega) j["omega"] = g.omega->labels();
        if (const auto* c = std::get_if<Cochain>(&g.representative)) {
            j["representative"] = to_string(*c);
        } else if (oracle) {
            // dual cells as base-3 words, written letter by letter (0, 1, 2 = segment)
            const auto& cc = std::get<CellularCochain>(g.representative);
            nlohmann::json terms = nlohmann::json::array();
            for (std::size_t i = 0; i < cc.coeffs.size(); ++i) {
                if (cc.coeffs[i].is_zero()) continue;
                const Cell& cell = oracle->cells().cells[static_cast<std::size_t>(cc.degree)][i];
                std::string word;
                for (std::size_t b = 0; b < pres.m; ++b) word += static_cast<char>('0' + static_cast<int>(cell.letter(static_cast<int>(b))));
                const Integer& c = cc.coeffs[i];
                terms.push_back({word, c.is_small() ? nlohmann::json(c.to_int64()) : nlohmann::json(c.str())});
            }
            j["representative"] = terms;
        }
        gens.push_back(std::move(j));
    }
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [key, coords] : pres.products) {
        table.push_back({pres.generators[key.first].name, pres.generators[key.second].name, integers_to_json(coords)});
    }
    return {{"route", to_string(pres.route)}, {"m", pres.m}, {"generators", gens}, {"products", table}};
}

inline nlohmann::json to_json(const RingComparison& r)
{
    nlohmann::json degs = nlohmann::json::array();
    for (const auto& d : r.degrees) {
        degs.push_back({{"degree", d.p},
                        {"rank_a", d.a.free_rank},
                        {"torsion_a", integers_to_json(d.a.torsion)},
                        {"rank_b", d.b.free_rank},
                        {"torsion_b", integers_to_json(d.b.torsion)},
                        {"groups_match", d.groups_match},
                        {"isomorphism", d.isomorphism}});
    }
    return {{"match", r.match()},
            {"degrees", degs},
            {"products_checked", r.products_checked},
            {"product_mismatches", r.product_mismatches},
            {"messages", r.messages}};
}

} // namespace rzk

#endif // RZK_RING_HPP
