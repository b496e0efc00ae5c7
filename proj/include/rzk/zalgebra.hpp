#ifndef RZK_ZALGEBRA_HPP
#define RZK_ZALGEBRA_HPP

#include "rzk/complex.hpp"
#include "rzk/matrix.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rzk {

// The differential graded algebra R = Z[u_1..u_m; t_1..t_m] / (relations),
// optionally reduced modulo the Stanley–Reisner ideal I_K.
//
//   deg u_i = 1, deg t_i = 0, d u_i = 0, d t_i = u_i
//   u_i t_i = u_i, t_i u_i = 0, t_i t_i = t_i, u_i u_i = 0,
//   u_i u_j = -u_j u_i, u_i t_j = t_j u_i, t_i t_j = t_j t_i   (i != j)
//
// Every element is a combination of square-free monomials u_σ t_τ with
// σ ∩ τ = ∅, written u-block first (ascending) then t-block (ascending).
// Passing a complex K reduces modulo I_K: u_σ t_τ = 0 unless σ ∈ K.

struct MonomialKey {
    VertexSet sigma;
    VertexSet tau;

    [[nodiscard]] int degree() const { return sigma.size(); }
    [[nodiscard]] VertexSet omega() const { return sigma | tau; }

    friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
    friend bool operator<(const MonomialKey& a, const MonomialKey& b)
    {
        if (a.sigma.size() != b.sigma.size()) return a.sigma.size() < b.sigma.size();
        if (a.sigma.mask != b.sigma.mask) return a.sigma.mask < b.sigma.mask;
        return a.tau.mask < b.tau.mask;
    }
};

struct Monomial {
    VertexSet sigma;
    VertexSet tau;
    Integer coeff{1};

    [[nodiscard]] int degree() const { return sigma.size(); }
    [[nodiscard]] VertexSet omega() const { return sigma | tau; }
    [[nodiscard]] MonomialKey key() const { return {sigma, tau}; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Finite integer combination of normal-form monomials. Zero coefficients are
/// never stored.
class Cochain {
public:
    Cochain() = default;
    Cochain(const Monomial& m) { add(m); }  // NOLINT(google-explicit-constructor)

    void add(MonomialKey key, const Integer& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(const Monomial& m) { add(m.key(), m.coeff); }

    Cochain& operator+=(const Cochain& o)
    {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Cochain& operator-=(const Cochain& o)
    {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Cochain& operator*=(const Integer& s)
    {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Integer& s, Cochain a) { return a *= s; }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const std::map<MonomialKey, Integer>& terms() const { return terms_; }

    [[nodiscard]] Integer coefficient(MonomialKey k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Integer{} : it->second;
    }

    [[nodiscard]] std::vector<Monomial> monomials() const
    {
        std::vector<Monomial> out;
        out.reserve(terms_.size());
        for (const auto& [k, c] : terms_) out.push_back({k.sigma, k.tau, c});
        return out;
    }

    // Common degree of all terms, or nullopt for zero / mixed-degree sums.
    [[nodiscard]] std::optional<int> degree() const
    {
        if (terms_.empty()) return std::nullopt;
        const int d = terms_.begin()->first.degree();
        for (const auto& [k, c] : terms_) {
            if (k.degree() != d) return std::nullopt;
        }
        return d;
    }

    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    std::map<MonomialKey, Integer> terms_;
};

/// Normal form of coeff · u_σ t_τ: drops t_i for i ∈ σ (u_i t_i = u_i) and
/// returns nullopt when the result is zero (zero coefficient, or σ ∉ K).
inline std::optional<Monomial> normalize(VertexSet sigma, VertexSet tau, Integer coeff,
                                         const SimplicialComplex* k = nullptr)
{
    if (coeff.is_zero()) return std::nullopt;
    if (k && !k->is_simplex(sigma)) return std::nullopt;
    return Monomial{sigma, tau - sigma, std::move(coeff)};
}

// Parity of |{(i, j) : i ∈ right, j ∈ left, j > i}|, the Koszul sign for
// merging two ascending u-blocks.
inline bool merge_sign(VertexSet left, VertexSet right)
{
    int inversions = 0;
    for (std::uint32_t b = right.mask; b; b &= b - 1) inversions += left.count_above(std::countr_zero(b));
    return inversions & 1;
}

inline std::optional<Monomial> mul(const Monomial& a, const Monomial& b, const SimplicialComplex* k = nullptr)
{
    if (!a.tau.disjoint(b.sigma)) return std::nullopt;   // t_i u_i = 0
    if (!a.sigma.disjoint(b.sigma)) return std::nullopt; // u_i u_i = 0
    const VertexSet sigma = a.sigma | b.sigma;
    if (k && !k->is_simplex(sigma)) return std::nullopt;
    Integer c = a.coeff * b.coeff;
    if (merge_sign(a.sigma, b.sigma)) c = -c;
    return Monomial{sigma, (a.tau | b.tau) - sigma, std::move(c)};
}

inline Cochain mul(const Cochain& a, const Cochain& b, const SimplicialComplex* k = nullptr)
{
    Cochain out;
    for (const auto& [ka, ca] : a.terms()) {
        const Monomial ma{ka.sigma, ka.tau, ca};
        for (const auto& [kb, cb] : b.terms()) {
            if (auto p = mul(ma, Monomial{kb.sigma, kb.tau, cb}, k)) out.add(*p);
        }
    }
    return out;
}

/// d(u_σ t_τ) = Σ_{i∈τ} (−1)^{|{j∈σ : j<i}|} u_{σ∪i} t_{τ∖i}.
inline Cochain differential(const Monomial& a, const SimplicialComplex* k = nullptr)
{
    Cochain out;
    for (std::uint32_t b = a.tau.mask; b; b &= b - 1) {
        const int i = std::countr_zero(b);
        const VertexSet vi(1u << i);
        const VertexSet sigma = a.sigma | vi;
        if (k && !k->is_simplex(sigma)) continue;
        out.add(MonomialKey{sigma, a.tau - vi}, (a.sigma.count_below(i) & 1) ? -a.coeff : a.coeff);
    }
    return out;
}

inline Cochain differential(const Cochain& a, const SimplicialComplex* k = nullptr)
{
    Cochain out;
    for (const auto& [key, c] : a.terms()) out += differential(Monomial{key.sigma, key.tau, c}, k);
    return out;
}

/// Additive basis of the ω-component R/I_K|_ω: all u_σ t_{ω∖σ} with σ ⊆ ω,
/// σ ∈ K, ordered by (degree, σ mask).
inline std::vector<Monomial> omega_basis(const SimplicialComplex& k, VertexSet omega)
{
    std::vector<VertexSet> sigmas;
    for (std::uint32_t s = omega.mask;; s = (s - 1) & omega.mask) {
        if (k.is_simplex(VertexSet(s))) sigmas.emplace_back(s);
        if (s == 0) break;
    }
    std::sort(sigmas.begin(), sigmas.end(), graded_less);
    std::vector<Monomial> out;
    out.reserve(sigmas.size());
    for (VertexSet s : sigmas) out.push_back({s, omega - s, Integer{1}});
    return out;
}

/// Matrix of d from the degree-p to the degree-(p+1) part of R/I_K|_ω in the
/// omega_basis ordering; columns index the source basis.
inline IntegerMatrix coboundary_matrix(const SimplicialComplex& k, VertexSet omega, int p)
{
    std::vector<Monomial> source, target;
    for (auto& mon : omega_basis(k, omega)) {
        if (mon.degree() == p) source.push_back(mon);
        if (mon.degree() == p + 1) target.push_back(mon);
    }
    IntegerMatrix d(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
        const Cochain image = differential(source[c], &k);
        for (const auto& [key, coeff] : image.terms()) {
            const auto it = std::lower_bound(target.begin(), target.end(), key,
                                             [](const Monomial& m, const MonomialKey& x) { return m.key() < x; });
            d(static_cast<std::size_t>(it - target.begin()), c) = coeff;
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Text form: "u{1,2}t{3,4,5}", "-t{1}", "3u{2}", "1". Sums join terms with
// " + " / " - ".

inline std::string to_string(const Monomial& m)
{
    std::string out;
    Integer c = m.coeff;
    if (c.sign() < 0) {
        out += '-';
        c = -c;
    }
    const bool bare = m.sigma.empty() && m.tau.empty();
    if (!c.is_one() || bare) out += c.str();
    if (!m.sigma.empty()) out += "u" + to_string(m.sigma);
    if (!m.tau.empty()) out += "t" + to_string(m.tau);
    return out;
}

inline std::string to_string(const Cochain& c)
{
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& mon : c.monomials()) {
        if (first) {
            out = to_string(mon);
            first = false;
        } else if (mon.coeff.sign() < 0) {
            out += " - " + to_string(Monomial{mon.sigma, mon.tau, -mon.coeff});
        } else {
            out += " + " + to_string(mon);
        }
    }
    return out;
}

namespace detail {

class MonomialParser {
public:
    explicit MonomialParser(std::string_view text) : s_(text) {}

    Cochain parse_sum()
    {
        Cochain out;
        skip_ws();
        if (at_end()) throw InvalidInput("empty monomial expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = next() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Monomial m = parse_term();
            if (sign < 0) m.coeff = -m.coeff;
            if (m.sigma.mask & m.tau.mask) {
                m.tau = m.tau - m.sigma;
            }
            out.add(m);
            first = false;
            skip_ws();
        }
        return out;
    }

private:
    Monomial parse_term()
    {
        Monomial m;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string digits;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += next();
            m.coeff = Integer(digits);
            any = true;
        }
        if (!at_end() && peek() == 'u') {
            ++pos_;
            m.sigma = parse_set();
            any = true;
        }
        if (!at_end() && peek() == 't') {
            ++pos_;
            m.tau = parse_set();
            any = true;
        }
        if (!any) fail("expected a monomial");
        return m;
    }

    VertexSet parse_set()
    {
        if (at_end() || next() != '{') fail("expected '{'");
        VertexSet s;
        skip_ws();
        if (!at_end() && peek() == '}') {
            ++pos_;
            return s;
        }
        while (true) {
            skip_ws();
            int v = 0;
            bool digit = false;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                v = v * 10 + (next() - '0');
                digit = true;
                if (v > static_cast<int>(Limits::hard_max_vertices)) fail("vertex label too large");
            }
            if (!digit || v < 1) fail("expected a vertex label");
            s.mask |= 1u << (v - 1);
            skip_ws();
            if (at_end()) fail("unterminated set");
            const char c = next();
            if (c == '}') return s;
            if (c != ',') fail("expected ',' or '}'");
        }
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InvalidInput("monomial syntax error at offset " + std::to_string(pos_) + ": " + what);
    }
    [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return s_[pos_]; }
    char next() { return s_[pos_++]; }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Cochain parse_cochain(std::string_view text) { return detail::MonomialParser(text).parse_sum(); }

inline Monomial parse_monomial(std::string_view text)
{
    const Cochain c = parse_cochain(text);
    if (c.size() != 1) throw InvalidInput("expected a single monomial: '" + std::string(text) + "'");
    return c.monomials().front();
}

} // namespace rzk

#endif // RZK_ZALGEBRA_HPP
