#include <gtest/gtest.h>

#include <set>

#include "sqdyn/ff.hpp"

using namespace sqdyn;
using namespace sqdyn::ff;

namespace {

FieldPtr F7() { return Field::make(7); }

// Brute-force squares, independent of the field's own chi/sqrt.
std::set<Code> squares_by_enumeration(const Field& F) {
    std::set<Code> s;
    for (Code x = 1; x < F.q(); ++x) s.insert(F.mul(x, x));
    return s;
}

}  // namespace

TEST(Field, PrimeField) {
    auto F = F7();
    EXPECT_EQ(F->q(), 7u);
    EXPECT_EQ(F->k(), 1u);
    EXPECT_EQ(F->to_string(), "7^1");
}

TEST(Field, DefaultModulusF9IsXSquaredPlusOne) {
    auto F = Field::make(3, 2);
    EXPECT_EQ(F->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, DefaultModulusIsSmallestIrreducible) {
    // Oracle: scan monic cubics over F_3 in the documented order, root test.
    std::vector<std::uint32_t> first;
    for (std::uint32_t c0 = 0; c0 < 3 && first.empty(); ++c0)
        for (std::uint32_t c1 = 0; c1 < 3 && first.empty(); ++c1)
            for (std::uint32_t c2 = 0; c2 < 3 && first.empty(); ++c2) {
                bool root = false;
                for (std::uint32_t x = 0; x < 3; ++x) root |= (c0 + c1 * x + c2 * x * x + x * x * x) % 3 == 0;
                if (!root) first = {c0, c1, c2, 1};
            }
    EXPECT_EQ(Field::make(3, 3)->modulus(), first);
}

TEST(Field, ConstructionErrors) {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    EXPECT_EQ(kind([] { Field::make(9); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind([] { Field::make(2); }), ErrorKind::EvenCharacteristic);
    EXPECT_EQ(kind([] { Field::make(5, 1, std::vector<std::uint32_t>{1, 0, 1}); }), ErrorKind::ReducibleModulus);
    EXPECT_EQ(kind([] { Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }), ErrorKind::ReducibleModulus);
}

TEST(Field, Parse) {
    EXPECT_EQ(Field::parse("7")->q(), 7u);
    EXPECT_EQ(Field::parse("3^2")->q(), 9u);
    auto F = Field::parse("3^2/(2,2,1)");
    EXPECT_EQ(F->modulus(), (std::vector<std::uint32_t>{2, 2, 1}));
    EXPECT_TRUE(Field::parse(F->to_string())->same_as(*F));
    EXPECT_THROW(Field::parse("3^x"), Error);
}

TEST(Arith, Examples) {
    auto F = F7();
    EXPECT_EQ(arith(element(F, 3), element(F, 5), ArithOp::Mul).code(), 1u);
    EXPECT_THROW(arith(element(F, 1), element(F, 0), ArithOp::Div), Error);
    auto F9 = Field::make(3, 2);
    Element t(F9, 3);  // coordinates (0, 1)
    EXPECT_EQ((t * t).code(), 2u);
    EXPECT_THROW(element(F, 1) + element(F9, 1), Error);
}

TEST(Arith, FieldAxiomsSmallFields) {
    for (auto [p, k] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
        auto F = Field::make(p, k);
        for (Code a = 0; a < F->q(); ++a) {
            EXPECT_EQ(F->add(a, F->neg(a)), 0u);
            if (a) EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
            for (Code b = 0; b < F->q(); ++b) {
                EXPECT_EQ(F->mul(a, b), F->mul(b, a));
                EXPECT_EQ(F->sub(F->add(a, b), b), a);
                if (b) EXPECT_EQ(F->div(a, b), F->mul(a, F->inv(b)));
            }
        }
    }
}

TEST(Arith, Distributive) {
    auto F = Field::make(3, 3);
    for (Code a = 0; a < F->q(); ++a)
        for (Code b = 0; b < F->q(); b += 2)
            for (Code c = 0; c < F->q(); c += 3)
                EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
}

TEST(Arith, LargeFieldWithoutTables) {
    auto F = Field::make(3, 11);  // q = 177147, no log tables
    Code a = 12345, b = 99999;
    EXPECT_EQ(F->mul(F->div(a, b), b), a);
    EXPECT_EQ(F->pow(a, F->q() - 1), 1u);
}

TEST(Pow, Examples) {
    auto F = F7();
    EXPECT_EQ(pow(element(F, 3), 6).code(), 1u);
    EXPECT_EQ(pow(element(F, 3), 3).code(), 6u);
    EXPECT_EQ(pow(element(F, 0), 0).code(), 1u);
}

TEST(Character, Examples) {
    auto F = F7();
    EXPECT_EQ(quadratic_character(element(F, 0)), 0);
    EXPECT_EQ(quadratic_character(element(F, 3)), -1);
    auto F9 = Field::make(3, 2);
    EXPECT_EQ(quadratic_character(Element(F9, 3)), 1);
}

TEST(Character, AgreesWithEnumerationAndIsMultiplicative) {
    for (auto [p, k] : {std::pair{7u, 1u}, {3u, 2u}, {5u, 2u}, {3u, 3u}, {13u, 1u}}) {
        auto F = Field::make(p, k);
        auto sq = squares_by_enumeration(*F);
        int plus = 0, minus = 0;
        for (Code x = 0; x < F->q(); ++x) {
            int c = F->chi(x);
            EXPECT_EQ(c, x == 0 ? 0 : (sq.count(x) ? 1 : -1));
            plus += c == 1;
            minus += c == -1;
            for (Code y = 0; y < F->q(); ++y) EXPECT_EQ(F->chi(x) * F->chi(y), F->chi(F->mul(x, y)));
        }
        EXPECT_EQ(plus, static_cast<int>(F->q() - 1) / 2);
        EXPECT_EQ(minus, static_cast<int>(F->q() - 1) / 2);
    }
}

TEST(SquareRoot, Examples) {
    auto F = F7();
    EXPECT_EQ(square_root(element(F, 0)).code(), 0u);
    EXPECT_EQ(square_root(element(F, 2)).code(), 3u);
    try {
        square_root(element(F, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonSquare);
    }
}

TEST(SquareRoot, CanonicalAcrossFields) {
    // q = 13, 17, 25, 81 exercise the general branch (q = 1 mod 4).
    for (auto [p, k] : {std::pair{13u, 1u}, {17u, 1u}, {5u, 2u}, {3u, 4u}, {7u, 2u}, {11u, 1u}}) {
        auto F = Field::make(p, k);
        for (Code x = 0; x < F->q(); ++x) {
            auto r = F->sqrt(x);
            if (F->chi(x) == -1) {
                EXPECT_FALSE(r);
                continue;
            }
            ASSERT_TRUE(r);
            EXPECT_EQ(F->mul(*r, *r), x);
            EXPECT_LE(*r, F->neg(*r));
        }
    }
}

TEST(Frobenius, AdditiveAndInverse) {
    auto F = Field::make(5, 2);
    for (Code x = 0; x < F->q(); ++x) {
        EXPECT_EQ(F->pow(F->frobenius_inverse(x), 5), x);
        for (Code y = 0; y < F->q(); ++y) EXPECT_EQ(F->pow(F->add(x, y), 5), F->add(F->pow(x, 5), F->pow(y, 5)));
    }
}

TEST(Enumerate, OrderAndCount) {
    auto e3 = enumerate_elements(Field::make(3));
    ASSERT_EQ(e3.size(), 3u);
    EXPECT_EQ(e3[0].code(), 0u);
    EXPECT_EQ(e3[2].code(), 2u);
    auto e9 = enumerate_elements(Field::make(3, 2));
    ASSERT_EQ(e9.size(), 9u);
    EXPECT_TRUE(e9.front().is_zero());
    std::set<std::vector<std::uint32_t>> distinct;
    for (auto& e : e9) distinct.insert(e.coords());
    EXPECT_EQ(distinct.size(), 9u);
}

TEST(Coords, RoundTrip) {
    auto F = Field::make(5, 3);
    for (Code x = 0; x < F->q(); x += 7) EXPECT_EQ(F->from_coords(F->coords(x)), x);
}
