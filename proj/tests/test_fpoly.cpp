#include <gtest/gtest.h>

#include <random>

#include "sqdyn/fpoly.hpp"

using namespace sqdyn;
using namespace sqdyn::ff;
using namespace sqdyn::fpoly;

namespace {

Poly P(const FieldPtr& F, std::vector<Code> c) { return Poly(F, std::move(c)); }

Poly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
    std::vector<Code> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<Code>(rng() % F->q());
    if (c.back() == 0) c.back() = 1;
    return Poly(F, c);
}

// Irreducibility oracle: no factor of degree <= deg/2 by trial division over
// every monic polynomial. Only for tiny q and degree.
bool irreducible_by_trial(const Poly& f) {
    const auto& F = f.field();
    for (int e = 1; 2 * e <= f.degree(); ++e) {
        std::uint64_t count = saturating_power(F->q(), static_cast<unsigned>(e));
        for (std::uint64_t i = 0; i < count; ++i) {
            std::vector<Code> c(static_cast<std::size_t>(e) + 1, 1);
            std::uint64_t v = i;
            for (int j = 0; j < e; ++j) {
                c[static_cast<std::size_t>(j)] = static_cast<Code>(v % F->q());
                v /= F->q();
            }
            if ((f % Poly(F, c)).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST(PolyArith, Examples) {
    auto F = Field::make(7);
    EXPECT_EQ(P(F, {1, 1}) * P(F, {6, 1}), P(F, {6, 0, 1}));
    auto [q, r] = divmod(P(F, {1, 0, 1}), P(F, {0, 1}));
    EXPECT_EQ(q, P(F, {0, 1}));
    EXPECT_EQ(r, P(F, {1}));
    auto f = P(F, {3, 4, 5});
    EXPECT_EQ(f + Poly(F), f);
    EXPECT_THROW(divmod(f, Poly(F)), Error);
    EXPECT_THROW(f + P(Field::make(5), {1}), Error);
}

TEST(PolyArith, DivmodIdentity) {
    auto F = Field::make(3, 2);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        auto f = random_poly(F, static_cast<int>(rng() % 10), rng);
        auto g = random_poly(F, static_cast<int>(rng() % 5), rng);
        auto [q, r] = divmod(f, g);
        EXPECT_EQ(q * g + r, f);
        EXPECT_LT(r.degree(), g.degree());
    }
}

TEST(Parse, RoundTrip) {
    auto F = Field::make(7);
    auto f = Poly::parse(F, "1,0,1");
    EXPECT_EQ(f, P(F, {1, 0, 1}));
    EXPECT_EQ(f.to_string(), "1,0,1");
    EXPECT_EQ(Poly::parse(F, "-1,1"), P(F, {6, 1}));
    EXPECT_THROW(Poly::parse(F, "1,,2"), Error);
    EXPECT_THROW(Poly::parse(F, "7"), Error);
}

TEST(Compose, Examples) {
    auto F = Field::make(3);
    auto f = P(F, {1, 0, 1});
    EXPECT_EQ(compose(f, Poly::x(F)), f);
    EXPECT_EQ(compose(f, f), P(F, {2, 0, 2, 0, 1}));
    EXPECT_EQ(compose(P(F, {0, 0, 1}), P(F, {0, 0, 0, 1})), P(F, {0, 0, 0, 0, 0, 0, 1}));
}

TEST(Iterate, Examples) {
    auto F = Field::make(3);
    auto f = P(F, {1, 0, 1});
    EXPECT_EQ(iterate(f, 0), Poly::x(F));
    EXPECT_EQ(iterate(P(F, {0, 0, 1}), 3), Poly::monomial(element(F, 1), 8));
    EXPECT_EQ(iterate(f, 2), P(F, {2, 0, 2, 0, 1}));
    try {
        iterate(f, 13);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegreeBudgetExceeded);
    }
    EXPECT_NO_THROW(iterate(f, 12));
}

TEST(Iterate, SemigroupAndEvaluation) {
    auto F = Field::make(5);
    auto f = P(F, {2, 1, 3});
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(iterate(f, m + n), compose(iterate(f, m), iterate(f, n)));
    auto g = P(F, {1, 4, 0, 1});
    for (Code a = 0; a < 5; ++a) EXPECT_EQ(compose(f, g).eval(a), f.eval(g.eval(a)));
}

TEST(Derivative, Examples) {
    auto F = Field::make(3);
    EXPECT_TRUE(derivative(P(F, {2})).is_zero());
    EXPECT_EQ(derivative(P(F, {0, 1, 0, 1})), P(F, {1}));
    EXPECT_EQ(derivative(P(F, {1, 0, 1})), P(F, {0, 2}));
}

TEST(Derivative, LinearAndLeibniz) {
    auto F = Field::make(5, 2);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
        auto f = random_poly(F, 6, rng), g = random_poly(F, 4, rng);
        EXPECT_EQ(derivative(f + g), derivative(f) + derivative(g));
        EXPECT_EQ(derivative(f * g), derivative(f) * g + f * derivative(g));
    }
}

TEST(Gcd, Examples) {
    auto F = Field::make(7);
    auto f = P(F, {3, 2});
    EXPECT_EQ(gcd(f, Poly(F)), f.monic());
    EXPECT_EQ(gcd(P(F, {6, 0, 1}), P(F, {6, 1})), P(F, {6, 1}));
    EXPECT_EQ(gcd(Poly::x(F), P(F, {1, 1})), P(F, {1}));
    EXPECT_THROW(gcd(Poly(F), Poly(F)), Error);
}

TEST(Factor, Examples) {
    auto F7 = Field::make(7);
    auto fa = factor(P(F7, {6, 0, 1}));
    EXPECT_EQ(fa.unit.code(), 1u);
    ASSERT_EQ(fa.factors.size(), 2u);
    EXPECT_EQ(fa.factors[0].poly, P(F7, {1, 1}));
    EXPECT_EQ(fa.factors[1].poly, P(F7, {6, 1}));
    auto F3 = Field::make(3);
    auto fb = factor(P(F3, {1, 0, 1}));
    ASSERT_EQ(fb.factors.size(), 1u);
    EXPECT_EQ(fb.factors[0].multiplicity, 1u);
    auto fc = factor(P(F7, {1, 2, 1}));
    ASSERT_EQ(fc.factors.size(), 1u);
    EXPECT_EQ(fc.factors[0].poly, P(F7, {1, 1}));
    EXPECT_EQ(fc.factors[0].multiplicity, 2u);
    EXPECT_THROW(factor(P(F7, {3})), Error);
}

TEST(Factor, PthPowers) {
    auto F = Field::make(3);
    // (x+1)^3 (x^2+1)^6 x
    auto f = P(F, {1, 1}) * P(F, {1, 1}) * P(F, {1, 1}) * Poly::x(F);
    auto s = P(F, {1, 0, 1});
    for (int i = 0; i < 6; ++i) f = f * s;
    auto fa = factor(f);
    ASSERT_EQ(fa.factors.size(), 3u);
    EXPECT_EQ(fa.factors[0].poly, Poly::x(F));
    EXPECT_EQ(fa.factors[0].multiplicity, 1u);
    EXPECT_EQ(fa.factors[1].multiplicity, 3u);
    EXPECT_EQ(fa.factors[2].multiplicity, 6u);
}

TEST(Factor, RoundTripRandom) {
    std::mt19937_64 rng(3);
    for (auto [p, k] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
        auto F = Field::make(p, k);
        for (int t = 0; t < 40; ++t) {
            auto f = random_poly(F, 1 + static_cast<int>(rng() % 12), rng);
            if (t % 4 == 0) f = f * f;
            auto fa = factor(f, t);
            EXPECT_EQ(fa.expand(), f);
            int total = 0;
            for (std::size_t i = 0; i < fa.factors.size(); ++i) {
                const auto& g = fa.factors[i].poly;
                EXPECT_TRUE(g.is_monic());
                if (g.degree() <= 4 && F->q() <= 9) EXPECT_TRUE(irreducible_by_trial(g));
                if (i) EXPECT_TRUE(canonical_less(fa.factors[i - 1].poly, g));
                total += g.degree() * static_cast<int>(fa.factors[i].multiplicity);
            }
            EXPECT_EQ(total, f.degree());
        }
    }
}

TEST(Factor, SeedIndependentResult) {
    auto F = Field::make(5, 2);
    std::mt19937_64 rng(4);
    auto f = random_poly(F, 10, rng);
    auto a = factor(f, 1), b = factor(f, 99);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].poly, b.factors[i].poly);
}

TEST(ConstantTimesSquare, Examples) {
    auto F = Field::make(7);
    auto w = constant_times_square(P(F, {3, 6, 3}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->c.code(), 3u);
    EXPECT_EQ(w->h, P(F, {1, 1}));
    EXPECT_FALSE(w->c_is_square);
    EXPECT_FALSE(constant_times_square(P(F, {1, 0, 1})));
    auto v = constant_times_square(P(F, {0, 0, 4}));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->c.code(), 4u);
    EXPECT_EQ(v->h, Poly::x(F));
    EXPECT_TRUE(v->c_is_square);
}

TEST(ConstantTimesSquare, MatchesFactorization) {
    std::mt19937_64 rng(5);
    auto F = Field::make(3, 2);
    for (int t = 0; t < 60; ++t) {
        auto f = random_poly(F, 1 + static_cast<int>(rng() % 5), rng);
        if (t % 2) f = f * f.monic();
        bool all_even = true;
        for (auto& fac : factor(f).factors) all_even &= fac.multiplicity % 2 == 0;
        auto w = constant_times_square(f);
        EXPECT_EQ(w.has_value(), all_even);
        if (w) EXPECT_EQ(Poly::constant(w->c) * w->h * w->h, f);
    }
}

TEST(Evaluate, Examples) {
    auto F = Field::make(7);
    auto a = element(F, 5);
    EXPECT_EQ(evaluate(Poly::x(F), a), a);
    EXPECT_EQ(evaluate(P(F, {1, 0, 1}), element(F, 3)).code(), 3u);
    EXPECT_EQ(evaluate(P(F, {4}), a).code(), 4u);
    EXPECT_THROW(evaluate(Poly::x(F), element(Field::make(5), 1)), Error);
}

TEST(Roots, MatchEvaluation) {
    auto F = Field::make(5, 2);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        auto f = random_poly(F, 1 + static_cast<int>(rng() % 8), rng);
        std::vector<Code> expect;
        for (Code a = 0; a < F->q(); ++a)
            if (f.eval(a) == 0) expect.push_back(a);
        std::vector<Code> got;
        for (auto& r : roots(f)) got.push_back(r.code());
        EXPECT_EQ(got, expect);
    }
}

TEST(Extension, EmbeddingIsAHomomorphism) {
    auto F = Field::make(3, 2);
    auto ext = extend(F, 3);
    EXPECT_EQ(ext.field->q(), 729u);
    for (Code a = 0; a < 9; ++a)
        for (Code b = 0; b < 9; ++b) {
            EXPECT_EQ(ext.image[F->add(a, b)], ext.field->add(ext.image[a], ext.image[b]));
            EXPECT_EQ(ext.image[F->mul(a, b)], ext.field->mul(ext.image[a], ext.image[b]));
        }
    // x^2 + 1 irreducible over F_3 acquires roots in F_9.
    auto F3 = Field::make(3);
    auto e2 = extend(F3, 2);
    EXPECT_EQ(roots(e2.map(P(F3, {1, 0, 1}))).size(), 2u);
}
