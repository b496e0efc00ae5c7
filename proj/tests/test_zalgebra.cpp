#include "rzk/fixtures.hpp"
#include "rzk/zalgebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rzk;

namespace {

Monomial mono(std::initializer_list<int> sigma, std::initializer_list<int> tau, long long c = 1)
{
    return {VertexSet::of(sigma), VertexSet::of(tau), Integer(c)};
}

// Word model: a product of letters u_i / t_i reduced by the defining
// relations alone, one adjacent pair at a time.
struct Letter {
    bool u;
    int i;
};
using Word = std::vector<Letter>;

std::optional<Monomial> reduce_word(Word w, long long coeff = 1)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            Letter a = w[k], b = w[k + 1];
            if (a.i == b.i) {
                if (a.u && b.u) return std::nullopt;    // u_i u_i = 0
                if (!a.u && b.u) return std::nullopt;   // t_i u_i = 0
                w.erase(w.begin() + static_cast<long>(k) + 1);  // u_i t_i = u_i, t_i t_i = t_i
                changed = true;
                break;
            }
            const bool out_of_order = (!a.u && b.u) || (a.u == b.u && a.i > b.i);
            if (out_of_order) {
                if (a.u && b.u) coeff = -coeff;
                std::swap(w[k], w[k + 1]);
                changed = true;
                break;
            }
        }
    }
    // sorted u-block then t-block; t_i travels left to its u_i for free
    Monomial m{VertexSet{}, VertexSet{}, Integer(coeff)};
    for (const auto& l : w) {
        if (l.u) m.sigma = m.sigma | VertexSet(1u << l.i);
    }
    for (const auto& l : w) {
        if (!l.u && !m.sigma.contains(l.i)) m.tau = m.tau | VertexSet(1u << l.i);
    }
    return m;
}

Word word_of(const Monomial& m)
{
    Word w;
    for (int i : m.sigma.labels()) w.push_back({true, i - 1});
    for (int i : m.tau.labels()) w.push_back({false, i - 1});
    return w;
}

Cochain word_mul(const Monomial& a, const Monomial& b)
{
    Word w = word_of(a);
    for (const auto& l : word_of(b)) w.push_back(l);
    Cochain out;
    if (auto r = reduce_word(w, (a.coeff * b.coeff).to_int64())) out.add(*r);
    return out;
}

// Leibniz expansion letter by letter: d t_i = u_i, d u_i = 0.
Cochain word_differential(const Monomial& a)
{
    const Word w = word_of(a);
    Cochain out;
    int degree_before = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!w[k].u) {
            Word v = w;
            v[k].u = true;
            const long long sign = (degree_before & 1) ? -1 : 1;
            if (auto r = reduce_word(v, sign * a.coeff.to_int64())) out.add(*r);
        } else {
            ++degree_before;
        }
    }
    return out;
}

Monomial random_monomial(std::mt19937_64& rng, int m)
{
    Monomial out{VertexSet{}, VertexSet{}, Integer(static_cast<long long>(rng() % 5) - 2)};
    if (out.coeff.is_zero()) out.coeff = Integer(1);
    for (int i = 0; i < m; ++i) {
        switch (rng() % 3) {
        case 0: out.sigma = out.sigma | VertexSet(1u << i); break;
        case 1: out.tau = out.tau | VertexSet(1u << i); break;
        default: break;
        }
    }
    return out;
}

Cochain as_cochain(const std::optional<Monomial>& m)
{
    Cochain c;
    if (m) c.add(*m);
    return c;
}

} // namespace

TEST(Normalize, Examples)
{
    EXPECT_EQ(normalize(VertexSet::of({1}), VertexSet::of({1, 3}), 1), mono({1}, {3}));
    const auto k = fixtures::pentagon();
    EXPECT_FALSE(normalize(VertexSet::of({1, 3}), VertexSet{}, 1, &k));
    EXPECT_EQ(normalize(VertexSet::of({2, 4}), VertexSet::of({3, 5, 6}), 1), mono({2, 4}, {3, 5, 6}));
    EXPECT_FALSE(normalize(VertexSet::of({2}), VertexSet{}, 0));
}

TEST(Mul, Examples)
{
    EXPECT_EQ(mul(mono({1}, {3}), mono({2}, {4, 5})), mono({1, 2}, {3, 4, 5}));
    EXPECT_FALSE(mul(mono({}, {1}), mono({1}, {})));
    EXPECT_EQ(mul(mono({2}, {}), mono({1}, {})), mono({1, 2}, {}, -1));
    EXPECT_FALSE(mul(mono({1}, {3}), mono({1}, {4})));
    EXPECT_EQ(mul(mono({1}, {}), mono({}, {1})), mono({1}, {}));  // u_i t_i = u_i
    EXPECT_EQ(mul(mono({}, {1}), mono({}, {1})), mono({}, {1}));   // t_i t_i = t_i
    const auto k = fixtures::pentagon();
    EXPECT_FALSE(mul(mono({1}, {}), mono({3}, {}), &k));
}

TEST(Differential, Examples)
{
    const auto k = fixtures::pentagon();
    const Cochain d = differential(mono({1}, {2, 3, 4, 5}), &k);
    EXPECT_EQ(d, Cochain(mono({1, 2}, {3, 4, 5}, -1)) + Cochain(mono({1, 5}, {2, 3, 4}, -1)));

    const Cochain aug = differential(mono({}, {1, 2, 3, 4}));
    Cochain expected;
    for (int i = 1; i <= 4; ++i) expected.add(Monomial{VertexSet::of({i}), VertexSet::full(4) - VertexSet::of({i}), 1});
    EXPECT_EQ(aug, expected);

    EXPECT_TRUE(differential(mono({1, 3}, {})).is_zero());
}

TEST(Text, RoundTrip)
{
    EXPECT_EQ(to_string(mono({1, 2}, {3})), "u{1,2}t{3}");
    EXPECT_EQ(to_string(mono({}, {1}, -1)), "-t{1}");
    EXPECT_EQ(to_string(mono({2}, {}, 3)), "3u{2}");
    EXPECT_EQ(to_string(mono({}, {})), "1");
    EXPECT_EQ(to_string(Cochain{}), "0");
    const Cochain c = Cochain(mono({3}, {1, 4})) + Cochain(mono({4}, {1, 3})) - Cochain(mono({1}, {3, 4}));
    EXPECT_EQ(to_string(c), "-u{1}t{3,4} + u{3}t{1,4} + u{4}t{1,3}");
    EXPECT_EQ(parse_cochain(to_string(c)), c);
    EXPECT_EQ(parse_monomial("u{2,4}t{3,5,6}"), mono({2, 4}, {3, 5, 6}));
    EXPECT_EQ(parse_monomial("-2t{1}"), mono({}, {1}, -2));
    EXPECT_EQ(parse_monomial("1"), mono({}, {}));
    EXPECT_THROW(parse_monomial("u{1,"), InvalidInput);
}

TEST(OmegaBasis, Examples)
{
    const auto k = fixtures::pentagon();
    EXPECT_EQ(omega_basis(k, VertexSet::of({1, 3})),
              (std::vector<Monomial>{mono({}, {1, 3}), mono({1}, {3}), mono({3}, {1})}));
    EXPECT_EQ(omega_basis(k, VertexSet{}), (std::vector<Monomial>{mono({}, {})}));
    EXPECT_EQ(omega_basis(k, VertexSet::of({1, 2})),
              (std::vector<Monomial>{mono({}, {1, 2}), mono({1}, {2}), mono({2}, {1}), mono({1, 2}, {})}));
}

TEST(CoboundaryMatrix, Examples)
{
    const auto k = fixtures::pentagon();
    const IntegerMatrix d = coboundary_matrix(k, VertexSet::of({1, 3}), 0);
    ASSERT_EQ(d.rows(), 2u);
    ASSERT_EQ(d.cols(), 1u);
    EXPECT_EQ(d(0, 0), Integer(1));
    EXPECT_EQ(d(1, 0), Integer(1));
    EXPECT_EQ(coboundary_matrix(k, VertexSet{}, 0).rows(), 0u);
    const IntegerMatrix top = coboundary_matrix(k, VertexSet::full(5), 2);
    EXPECT_EQ(top.rows(), 0u);
    EXPECT_EQ(top.cols(), 5u);
}

TEST(WordModel, AgreesWithMul)
{
    std::mt19937_64 rng(11);
    for (int n = 0; n < 20000; ++n) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const Monomial a = random_monomial(rng, m);
        const Monomial b = random_monomial(rng, m);
        ASSERT_EQ(as_cochain(mul(a, b)), word_mul(a, b)) << to_string(a) << " * " << to_string(b);
    }
}

TEST(WordModel, AgreesWithDifferential)
{
    std::mt19937_64 rng(12);
    for (int n = 0; n < 20000; ++n) {
        const Monomial a = random_monomial(rng, 1 + static_cast<int>(rng() % 8));
        ASSERT_EQ(differential(a), word_differential(a)) << to_string(a);
    }
}

TEST(Properties, SignCommutativityAndClash)
{
    std::mt19937_64 rng(13);
    for (int n = 0; n < 20000; ++n) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const Monomial a = random_monomial(rng, m);
        const Monomial b = random_monomial(rng, m);
        const auto ab = mul(a, b);
        const auto ba = mul(b, a);
        if (!a.sigma.disjoint(b.sigma)) {
            EXPECT_FALSE(ab);
            EXPECT_FALSE(ba);
        } else if (a.tau.disjoint(b.sigma) && b.tau.disjoint(a.sigma)) {
            ASSERT_TRUE(ab && ba);
            const bool odd = (a.degree() * b.degree()) & 1;
            EXPECT_EQ(ab->coeff, odd ? -ba->coeff : ba->coeff);
            EXPECT_EQ(ab->key(), ba->key());
        } else if (a.tau.disjoint(b.sigma) != b.tau.disjoint(a.sigma)) {
            EXPECT_NE(ab.has_value(), ba.has_value());
        }
    }
}

TEST(Properties, Multigrading)
{
    std::mt19937_64 rng(14);
    for (int n = 0; n < 20000; ++n) {
        const int m = 1 + static_cast<int>(rng() % 7);
        const Monomial a = random_monomial(rng, m);
        const Monomial b = random_monomial(rng, m);
        if (auto p = mul(a, b)) {
            EXPECT_EQ(p->omega(), a.omega() | b.omega());
            EXPECT_EQ(p->degree(), a.degree() + b.degree());
        }
        for (const auto& t : differential(a).monomials()) {
            EXPECT_EQ(t.omega(), a.omega());
            EXPECT_EQ(t.degree(), a.degree() + 1);
        }
    }
}

TEST(Cochain, ArithmeticDropsZeros)
{
    Cochain c(mono({1}, {2}));
    c -= Cochain(mono({1}, {2}));
    EXPECT_TRUE(c.is_zero());
    Cochain mixed = Cochain(mono({1}, {})) + Cochain(mono({}, {1}));
    EXPECT_FALSE(mixed.degree());
    EXPECT_EQ((Integer(3) * Cochain(mono({1}, {}))).coefficient({VertexSet::of({1}), VertexSet{}}), Integer(3));
}

TEST(Properties, DifferentialSquaresToZero)
{
    std::mt19937_64 rng(15);
    for (int n = 0; n < 10000; ++n) {
        const int m = 1 + static_cast<int>(rng() % 10);
        const auto k = random_complex(static_cast<std::size_t>(std::min(m, 7)), 0.6, rng());
        const Monomial a = random_monomial(rng, std::min(m, 7));
        ASSERT_TRUE(differential(differential(a)).is_zero()) << to_string(a);
        ASSERT_TRUE(differential(differential(a, &k), &k).is_zero()) << to_string(a);
    }
}

TEST(Properties, Leibniz)
{
    std::mt19937_64 rng(16);
    for (int n = 0; n < 10000; ++n) {
        const int m = 1 + static_cast<int>(rng() % 7);
        const Monomial a = random_monomial(rng, m);
        const Monomial b = random_monomial(rng, m);
        const Cochain lhs = differential(as_cochain(mul(a, b)));
        Cochain rhs = mul(differential(a), Cochain(b));
        const Cochain second = mul(Cochain(a), differential(b));
        if (a.degree() & 1) {
            rhs -= second;
        } else {
            rhs += second;
        }
        ASSERT_EQ(lhs, rhs) << to_string(a) << " * " << to_string(b);
    }
}

TEST(Properties, Associativity)
{
    std::mt19937_64 rng(17);
    for (int n = 0; n < 10000; ++n) {
        const int m = 1 + static_cast<int>(rng() % 7);
        const auto k = random_complex(static_cast<std::size_t>(m), 0.7, rng());
        const Cochain a(random_monomial(rng, m)), b(random_monomial(rng, m)), c(random_monomial(rng, m));
        ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        ASSERT_EQ(mul(mul(a, b, &k), c, &k), mul(a, mul(b, c, &k), &k));
    }
}
