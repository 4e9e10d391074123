#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sqdyn/dynamics.hpp"

using namespace sqdyn;
using namespace sqdyn::ff;
using namespace sqdyn::fpoly;
using namespace sqdyn::dynamics;

namespace {

Poly P(const FieldPtr& F, std::vector<Code> c) { return Poly(F, std::move(c)); }

std::vector<Code> codes(const std::vector<Element>& v) {
    std::vector<Code> out;
    for (auto& e : v) out.push_back(e.code());
    return out;
}

}  // namespace

TEST(Orbit, Examples) {
    auto F7 = Field::make(7);
    auto o = forward_orbit(P(F7, {0, 0, 1}), element(F7, 3));
    EXPECT_EQ(o.tail, 1u);
    EXPECT_EQ(o.period, 2u);
    EXPECT_EQ(codes(o.elements), (std::vector<Code>{3, 2, 4}));
    auto id = forward_orbit(Poly::x(F7), element(F7, 5));
    EXPECT_EQ(id.tail, 0u);
    EXPECT_EQ(id.period, 1u);
    auto F3 = Field::make(3);
    auto o3 = forward_orbit(P(F3, {1, 0, 1}), element(F3, 0));
    EXPECT_EQ(o3.tail, 2u);
    EXPECT_EQ(o3.period, 1u);
    EXPECT_EQ(codes(o3.elements), (std::vector<Code>{0, 1, 2}));
    EXPECT_EQ(o3.contains_zero_at, 0u);
}

TEST(Orbit, MatchesListScan) {
    std::mt19937_64 rng(7);
    for (auto [p, k] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
        auto F = Field::make(p, k);
        for (int t = 0; t < 10; ++t) {
            std::vector<Code> c(2 + rng() % 3);
            for (auto& x : c) x = static_cast<Code>(rng() % F->q());
            if (c.back() == 0) c.back() = 1;
            Poly f(F, c);
            for (Code a = 0; a < F->q(); ++a) {
                std::vector<Code> seen;
                Code x = a;
                while (std::find(seen.begin(), seen.end(), x) == seen.end()) {
                    seen.push_back(x);
                    x = f.eval(x);
                }
                auto tail = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), x) - seen.begin());
                auto o = forward_orbit(f, Element(F, a));
                EXPECT_EQ(codes(o.elements), seen);
                EXPECT_EQ(o.tail, tail);
                EXPECT_EQ(o.period, seen.size() - tail);
                EXPECT_EQ(f.eval(o.elements.back().code()), o.elements[o.tail].code());
            }
        }
    }
}

TEST(Signs, Examples) {
    auto F7 = Field::make(7);
    auto s = sign_sequence(P(F7, {0, 0, 1}), element(F7, 3));
    EXPECT_EQ(s.at(0), -1);
    EXPECT_EQ(s.at(1), 1);
    EXPECT_EQ(s.at(5), 1);
    EXPECT_EQ(s.sign_tail, 1u);
    EXPECT_EQ(s.sign_period, 1u);
    EXPECT_FALSE(s.purely_periodic);
    auto fixed = sign_sequence(P(F7, {0, 0, 1}), element(F7, 1));
    EXPECT_EQ(fixed.at(3), 1);
    EXPECT_EQ(fixed.sign_period, 1u);
    auto zero = sign_sequence(P(F7, {0, 0, 1}), element(F7, 0));
    EXPECT_EQ(zero.at(2), 0);
    EXPECT_EQ(zero.sign_period, 1u);
}

TEST(Signs, AgreeWithPolynomialIteration) {
    auto F = Field::make(3, 2);
    auto f = P(F, {4, 1, 1});
    for (Code a = 0; a < F->q(); ++a) {
        auto s = sign_sequence(f, Element(F, a));
        EXPECT_EQ(s.orbit_period % s.sign_period, 0u);
        EXPECT_LE(s.sign_tail, s.orbit_tail);
        for (unsigned l = 0; l <= 10; ++l)
            EXPECT_EQ(s.at(l), quadratic_character(evaluate(iterate(f, l, 1u << 20), Element(F, a))));
        for (std::size_t l = s.sign_tail; l < 40; ++l) EXPECT_EQ(s.at(l), s.at(l + s.sign_period));
    }
}

TEST(Signs, MinimalPeriodAndTail) {
    // Exhaustive check of minimality against a brute-force search over (tail, period).
    auto F = Field::make(11);
    for (Code c = 0; c < 11; ++c) {
        auto f = P(F, {c, 0, 1});
        for (Code a = 0; a < 11; ++a) {
            auto s = sign_sequence(f, Element(F, a));
            std::size_t best_m = 0, best_t = 0;
            for (std::size_t m = 1; m <= 30 && !best_m; ++m)
                for (std::size_t t = 0; t <= 30; ++t) {
                    bool ok = true;
                    for (std::size_t l = t; l < 80 && ok; ++l) ok = s.at(l) == s.at(l + m);
                    if (ok) {
                        best_m = m;
                        best_t = t;
                        break;
                    }
                }
            EXPECT_EQ(s.sign_period, best_m);
            EXPECT_EQ(s.sign_tail, best_t);
        }
    }
}

TEST(Runs, Examples) {
    auto F7 = Field::make(7);
    auto r = longest_run(P(F7, {0, 0, 1}), element(F7, 3), +1);
    EXPECT_EQ(r.length, 2u);
    EXPECT_TRUE(r.cycle_constant);

    SignSequence cyc{{1, 1, 1}, 0, 3, 0, 1, true};
    auto rc = longest_run(cyc, +1);
    EXPECT_EQ(rc.length, 3u);
    EXPECT_TRUE(rc.cycle_constant);

    SignSequence zero_break{{1, 0, 1}, 0, 3, 0, 3, true};
    auto rz = longest_run(zero_break, +1);
    // Wrap-around joins the last and first +1.
    EXPECT_EQ(rz.length, 2u);
    SignSequence tail_break{{1, 0, 1, -1}, 3, 1, 3, 1, false};
    EXPECT_EQ(longest_run(tail_break, +1).length, 1u);
    EXPECT_FALSE(longest_run(tail_break, +1).cycle_constant);
}

TEST(Preimages, Examples) {
    auto F7 = Field::make(7);
    auto x2 = P(F7, {0, 0, 1});
    auto l0 = preimages(x2, element(F7, 4), 0);
    EXPECT_EQ(codes(l0.points), (std::vector<Code>{4}));
    auto l1 = preimages(x2, element(F7, 4), 1);
    EXPECT_EQ(codes(l1.points), (std::vector<Code>{2, 5}));
    auto l3 = preimages(x2, element(F7, 3), 1, 1);
    EXPECT_TRUE(l3.points.empty());
    EXPECT_EQ(l3.uncounted_factors.at(2), 1u);
    auto l3e = preimages(x2, element(F7, 3), 1, 2);
    ASSERT_EQ(l3e.extension_points.size(), 1u);
    EXPECT_EQ(l3e.extension_points[0].points.size(), 2u);
}

TEST(Preimages, DegreesSumToDn) {
    auto F = Field::make(5);
    auto f = P(F, {1, 3, 1});
    for (unsigned n = 0; n <= 4; ++n)
        for (Code a = 0; a < 5; ++a) {
            auto lvl = preimages(f, Element(F, a), n, 3);
            EXPECT_EQ(lvl.total_degree, saturating_power(2, n));
            for (auto& b : lvl.points) EXPECT_EQ(evaluate(iterate(f, n), b), Element(F, a));
        }
}

TEST(Tree, Examples) {
    auto F7 = Field::make(7);
    auto t = tree_is_repeating(P(F7, {0, 0, 1}), element(F7, 1), 3);
    EXPECT_TRUE(t.repeating);
    EXPECT_EQ(t.beta->code(), 1u);
    EXPECT_EQ(t.n, 0u);
    EXPECT_EQ(t.m, 1u);
    // x^2 + 1 over F_3: alpha = 2 is the fixed point 2 -> 2, alpha = 0 is strictly preperiodic.
    auto F3 = Field::make(3);
    auto g = P(F3, {1, 0, 1});
    EXPECT_FALSE(tree_is_repeating(g, element(F3, 0), 5).repeating);
    // x^2 - 1 over F_7: 0 <-> 6 is a 2-cycle, so alpha = f(0) = 6 repeats with m = 2.
    auto h = P(F7, {6, 0, 1});
    auto th = tree_is_repeating(h, element(F7, 6), 4);
    EXPECT_TRUE(th.repeating);
    EXPECT_EQ(th.m - th.n, 2u);
}

TEST(Tree, RepeatsExactlyForPeriodicAlpha) {
    auto F = Field::make(3, 2);
    auto f = P(F, {5, 2, 1});
    for (Code a = 0; a < F->q(); ++a) {
        auto o = forward_orbit(f, Element(F, a));
        auto t = tree_is_repeating(f, Element(F, a), 6, 2);
        const bool periodic = o.tail == 0 && o.period <= 6;
        EXPECT_EQ(t.repeating, periodic) << a;
    }
}
